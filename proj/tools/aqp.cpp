// aqp: approximate covers, seeds and k-coverage from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <utility>
#include <vector>

#include "aqp/aqp.hpp"
#include "bench.hpp"

namespace {

using aqp::Cost;
using aqp::Metric;
using aqp::Text;

constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kValidation = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string distance = "hamming";
  long long k = 0;
  std::string penalty;
  std::string mode = "prefix";
  std::string variant = "exact-border";
  std::string format = "tsv";
  char wildcard = '?';
  std::size_t threads = 1;
  std::string input;
};

using Cell = std::variant<std::monostate, long long, std::string>;

// Column-oriented table printed either as TSV or JSON.
struct Report {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void print(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      nlohmann::ordered_json doc;
      doc["command"] = command;
      doc["columns"] = columns;
      doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < columns.size(); ++c) {
          if (std::holds_alternative<long long>(row[c])) obj[columns[c]] = std::get<long long>(row[c]);
          else if (std::holds_alternative<std::string>(row[c])) obj[columns[c]] = std::get<std::string>(row[c]);
          else obj[columns[c]] = nullptr;
        }
        doc["rows"].push_back(std::move(obj));
      }
      out << doc.dump(2) << "\n";
      return;
    }
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "\t" : "") << columns[c];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << "\t";
        if (std::holds_alternative<long long>(row[c])) out << std::get<long long>(row[c]);
        else if (std::holds_alternative<std::string>(row[c])) out << std::get<std::string>(row[c]);
        else out << "none";
      }
      out << "\n";
    }
  }
};

long long num(std::size_t v) { return static_cast<long long>(v); }

std::string read_first_line(const Config& cfg) {
  std::string line;
  if (cfg.input.empty() || cfg.input == "-") {
    std::getline(std::cin, line);
  } else {
    std::ifstream in(cfg.input);
    if (!in) throw InputError("cannot read input file " + cfg.input);
    std::getline(in, line);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

Metric parse_metric(const std::string& name) {
  if (name == "hamming") return Metric::hamming;
  if (name == "levenshtein") return Metric::levenshtein;
  return Metric::edit;
}

// Text, its alphabet and the penalty matrix when one applies.
struct Workload {
  std::string raw;
  aqp::Alphabet alphabet;
  Text text;
  std::optional<aqp::PenaltyMatrix> penalty;
};

Workload load(const Config& cfg) {
  std::string raw = read_first_line(cfg);
  const Metric metric = parse_metric(cfg.distance);
  if (metric == Metric::edit && cfg.penalty.empty()) throw UsageError("--distance edit requires --penalty");
  std::optional<aqp::PenaltySpec> spec;
  if (!cfg.penalty.empty() && cfg.penalty != "unit") {
    std::ifstream in(cfg.penalty);
    if (!in) throw InputError("cannot read penalty file " + cfg.penalty);
    spec = aqp::read_penalty(in, cfg.wildcard);
  }
  aqp::Alphabet alphabet = spec ? spec->alphabet : aqp::Alphabet::infer(raw, cfg.wildcard);
  Text text = alphabet.encode(raw);
  std::optional<aqp::PenaltyMatrix> penalty;
  if (spec) penalty = spec->matrix;
  else if (!cfg.penalty.empty()) penalty = aqp::PenaltyMatrix::unit(alphabet.size());
  return {raw, alphabet, text, penalty};
}

std::string factor_string(const Workload& w, std::size_t a, std::size_t b) {
  return w.raw.substr(a, b - a + 1);
}

Report cmd_coverage(const Config& cfg) {
  Workload w = load(cfg);
  const Metric metric = parse_metric(cfg.distance);
  const std::size_t n = w.text.size();
  Report r{"coverage", {}, {}};
  if (cfg.mode == "prefix") {
    r.columns = {"length", "coverage"};
    if (n == 0) return r;
    if (metric == Metric::hamming) {
      auto cov = aqp::prefix_coverage(w.text, static_cast<std::size_t>(std::min<long long>(cfg.k, num(n))));
      for (std::size_t len = 1; len <= n; ++len) r.rows.push_back({num(len), num(cov[len])});
      return r;
    }
    auto table = aqp::factor_coverage(w.text, metric, cfg.k, w.penalty ? &*w.penalty : nullptr, cfg.threads);
    for (std::size_t len = 1; len <= n; ++len) r.rows.push_back({num(len), num(table(0, len - 1))});
    return r;
  }
  r.columns = {"start", "end", "factor", "coverage"};
  if (n == 0) return r;
  auto table = aqp::factor_coverage(w.text, metric, cfg.k, w.penalty ? &*w.penalty : nullptr, cfg.threads);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) r.rows.push_back({num(a), num(b), factor_string(w, a, b), num(table(a, b))});
  }
  return r;
}

Report cmd_restricted(const Config& cfg, bool seeds) {
  Workload w = load(cfg);
  const Metric metric = parse_metric(cfg.distance);
  Report r{seeds ? "seeds" : "covers", {"start", "end", "factor", "threshold", "minimal"}, {}};
  if (metric == Metric::hamming) {
    const auto k = static_cast<std::size_t>(std::min<long long>(cfg.k, num(w.text.size())));
    auto entries = seeds ? aqp::k_restricted_seeds(w.text, k, cfg.threads) : aqp::k_restricted_covers(w.text, k, cfg.threads);
    std::optional<std::size_t> best;
    for (const auto& e : entries) {
      if (e.threshold && (!best || *e.threshold < *best)) best = e.threshold;
    }
    for (const auto& e : entries) {
      Cell threshold = e.threshold ? Cell(num(*e.threshold)) : Cell();
      r.rows.push_back({num(e.start), num(e.end), factor_string(w, e.start, e.end), threshold,
                        num(e.threshold && e.threshold == best)});
    }
    return r;
  }
  aqp::PenaltyMatrix p = w.penalty ? *w.penalty : aqp::PenaltyMatrix::unit(w.alphabet.size());
  auto report = seeds ? aqp::restricted_seeds_ed(w.text, p, cfg.threads) : aqp::restricted_covers_ed(w.text, p, cfg.threads);
  std::vector<bool> minimal(report.factors.size(), false);
  for (std::size_t x : report.argmin) minimal[x] = true;
  for (std::size_t x = 0; x < report.factors.size(); ++x) {
    const auto& f = report.factors[x];
    r.rows.push_back({num(f.start), num(f.end), factor_string(w, f.start, f.end), Cell(static_cast<long long>(f.threshold)),
                      num(minimal[x])});
  }
  return r;
}

Report cmd_enhanced(const Config& cfg) {
  if (cfg.distance != "hamming") throw UsageError("enhanced covers are defined for --distance hamming only");
  Workload w = load(cfg);
  const auto k = static_cast<std::size_t>(std::min<long long>(cfg.k, num(w.text.size())));
  Report r{"enhanced", {"variant", "start", "length", "factor", "coverage"}, {}};
  auto best = cfg.variant == "exact-border" ? aqp::enhanced_cover_exact_border(w.text, k)
                                            : aqp::enhanced_cover_approx_border(w.text, k, cfg.threads);
  if (!best) {
    r.rows.push_back({cfg.variant, Cell(), Cell(), Cell(), Cell()});
    return r;
  }
  r.rows.push_back({cfg.variant, num(best->start), num(best->length),
                    factor_string(w, best->start, best->start + best->length - 1), num(best->coverage)});
  return r;
}

aqp::gadget::ConsensusInstance load_instance(const Config& cfg) {
  try {
    if (cfg.input.empty() || cfg.input == "-") return aqp::gadget::read_instance(std::cin);
    std::ifstream in(cfg.input);
    if (!in) throw InputError("cannot read instance file " + cfg.input);
    return aqp::gadget::read_instance(in);
  } catch (const aqp::gadget::InstanceError& e) {
    throw InputError(e.what());
  }
}

Report cmd_gadget(const Config& cfg, const std::string& action, int& status) {
  auto inst = load_instance(cfg);
  if (action == "build-cover" || action == "build-seed") {
    auto e = action == "build-cover" ? aqp::gadget::build_cover_instance(inst) : aqp::gadget::build_seed_instance(inst);
    return {"gadget " + action, {"text", "length"}, {{e.text, num(e.length)}}};
  }
  Report r{"gadget verify", {"check", "status", "detail"}, {}};
  std::size_t windows = 0;
  for (const auto& s : inst.strings()) windows = std::max(windows, aqp::gadget::max_window_ones(aqp::gadget::phi(s, inst.k()), inst.k()));
  r.rows.push_back({std::string("window-ones"), std::string(windows <= 3 ? "pass" : "fail"), "max " + std::to_string(windows)});
  auto violations = aqp::gadget::check_prefix_suffix_property(inst);
  std::string detail = violations.empty() ? "no violations" : "";
  for (const auto& v : violations) {
    detail += (detail.empty() ? "" : "; ") + std::string("i=") + std::to_string(v.i) + " j=" + std::to_string(v.j) +
              " p=" + std::to_string(v.length);
  }
  r.rows.push_back({std::string("prefix-suffix"), std::string(violations.empty() ? "pass" : "fail"), detail});
  aqp::gadget::Verdict v;
  try {
    v = aqp::gadget::reduction_forward_check(inst);
  } catch (const aqp::oracle::BudgetExceeded& e) {
    throw InputError(e.what());
  }
  std::string fdetail = v.consensus ? "consensus " + *v.consensus : "no consensus";
  for (const auto& f : v.failures) fdetail += "; " + f;
  for (const auto& note : v.notices) fdetail += "; " + note;
  r.rows.push_back({std::string("reduction"), std::string(v.ok() ? "pass" : "fail"), fdetail});
  if (windows > 3 || !violations.empty() || !v.ok()) status = kValidation;
  return r;
}

Report cmd_bench(const Config& cfg, std::size_t scale) {
  (void)cfg;
  std::vector<aqp::bench::Measurement> runs;
  runs.push_back(aqp::bench::prefix_coverage_run((std::size_t{1} << 15) >> scale));
  runs.push_back(aqp::bench::hamming_factor_run(512 >> scale));
  runs.push_back(aqp::bench::levenshtein_factor_run(std::max<std::size_t>(40 >> scale, 4)));
  for (auto& m : aqp::bench::q_table_runs(std::max<std::size_t>(12 >> scale, 4))) runs.push_back(m);
  Report r{"bench", {"algorithm", "n", "2n", "seconds_n", "seconds_2n", "ratio", "exponent"}, {}};
  auto fixed = [](double v, int digits) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(digits);
    s << v;
    return s.str();
  };
  for (const auto& m : runs) {
    r.rows.push_back({m.name, num(m.n_small), num(m.n_large), fixed(m.seconds_small, 6), fixed(m.seconds_large, 6),
                      fixed(m.ratio(), 2), fixed(m.exponent(), 2)});
  }
  return r;
}

void add_common(CLI::App* sub, Config& cfg, bool text_input) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  sub->add_option("--input", cfg.input, text_input ? "Read the text from FILE (first line)" : "Read the instance from FILE");
  if (!text_input) return;
  sub->add_option("--distance", cfg.distance, "hamming | levenshtein | edit")
      ->check(CLI::IsMember({"hamming", "levenshtein", "edit"}));
  sub->add_option("--k", cfg.k, "Distance budget")->check(CLI::NonNegativeNumber);
  sub->add_option("--penalty", cfg.penalty, "Penalty matrix file, or 'unit'");
  sub->add_option("--wildcard", cfg.wildcard, "Byte standing for the wildcard");
  sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate covers, seeds and k-coverage"};
  app.require_subcommand(1);
  Config cfg;

  auto* coverage = app.add_subcommand("coverage", "k-coverage of every prefix or factor");
  add_common(coverage, cfg, true);
  coverage->add_option("--mode", cfg.mode, "prefix | factor")->check(CLI::IsMember({"prefix", "factor"}));

  auto* covers = app.add_subcommand("covers", "Restricted approximate covers");
  add_common(covers, cfg, true);
  auto* seeds = app.add_subcommand("seeds", "Restricted approximate seeds");
  add_common(seeds, cfg, true);

  auto* enhanced = app.add_subcommand("enhanced", "Enhanced covers under Hamming distance");
  add_common(enhanced, cfg, true);
  enhanced->add_option("--variant", cfg.variant, "exact-border | approx-border")
      ->check(CLI::IsMember({"exact-border", "approx-border"}));

  auto* gadget = app.add_subcommand("gadget", "Consensus reduction instances");
  gadget->require_subcommand(1);
  std::string gadget_action;
  const std::pair<const char*, const char*> actions[] = {
      {"build-cover", "Print the cover text T and the cover length"},
      {"build-seed", "Print the seed text T' and the seed length"},
      {"verify", "Check the encoding properties on one instance"},
  };
  for (const auto& [name, about] : actions) {
    auto* sub = gadget->add_subcommand(name, about);
    add_common(sub, cfg, false);
    sub->add_option("file", cfg.input, "Instance file (default stdin)");
    sub->callback([&gadget_action, name] { gadget_action = name; });
  }

  auto* bench = app.add_subcommand("bench", "Doubling-size timings");
  std::size_t scale = 0;
  bench->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  bench->add_option("--scale-down", scale, "Halve every size this many times")->check(CLI::Range(0, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  int status = 0;
  try {
    Report report;
    if (*coverage) report = cmd_coverage(cfg);
    else if (*covers) report = cmd_restricted(cfg, false);
    else if (*seeds) report = cmd_restricted(cfg, true);
    else if (*enhanced) report = cmd_enhanced(cfg);
    else if (*gadget) report = cmd_gadget(cfg, gadget_action, status);
    else report = cmd_bench(cfg, scale);
    report.print(std::cout, cfg.format);
  } catch (const UsageError& e) {
    std::cerr << "aqp: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "aqp: " << e.what() << "\n";
    return kInput;
  } catch (const aqp::PenaltyFormatError& e) {
    std::cerr << "aqp: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "aqp: " << e.what() << "\n";
    return kInput;
  }
  return status;
}
