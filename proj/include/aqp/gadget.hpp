#pragma once

// Encodings of Hamming string consensus as approximate cover and seed
// instances, the decoder psi, and checkers for their structural properties.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqp/oracle.hpp"
#include "aqp/text.hpp"

namespace aqp::gadget {

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary strings S_1..S_m of common length l and a budget k <= l.
class ConsensusInstance {
 public:
  ConsensusInstance(std::vector<std::string> strings, std::size_t k) : strings_(std::move(strings)), k_(k) {
    if (strings_.empty()) throw InstanceError("instance: at least one string is required");
    const std::size_t len = strings_.front().size();
    for (const auto& s : strings_) {
      if (s.size() != len) throw InstanceError("instance: strings differ in length");
      if (s.find_first_not_of("01") != std::string::npos) throw InstanceError("instance: non-binary string");
    }
    if (k_ > len) throw InstanceError("instance: k exceeds the string length");
  }

  const std::vector<std::string>& strings() const noexcept { return strings_; }
  std::size_t count() const noexcept { return strings_.size(); }
  std::size_t length() const noexcept { return strings_.front().size(); }
  std::size_t k() const noexcept { return k_; }

 private:
  std::vector<std::string> strings_;
  std::size_t k_;
};

/// "m l k" on the first line, then m lines of l binary digits.
inline ConsensusInstance read_instance(std::istream& in) {
  std::size_t m = 0, len = 0, k = 0;
  std::string header;
  if (!std::getline(in, header)) throw InstanceError("instance: missing header line");
  std::istringstream hs(header);
  if (!(hs >> m >> len >> k)) throw InstanceError("instance: header must be \"m l k\"");
  std::string extra;
  if (hs >> extra) throw InstanceError("instance: trailing data on header line");
  std::vector<std::string> strings;
  std::string line;
  while (strings.size() < m && std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != len) throw InstanceError("instance: line " + std::to_string(strings.size() + 2) + " has wrong length");
    strings.push_back(line);
  }
  if (strings.size() != m) throw InstanceError("instance: expected " + std::to_string(m) + " strings");
  return ConsensusInstance(std::move(strings), k);
}

inline ConsensusInstance parse_instance(const std::string& s) {
  std::istringstream in(s);
  return read_instance(in);
}

inline std::size_t pad_width(std::size_t k) { return 2 * k + 4; }
inline std::size_t block_width(std::size_t k) { return 4 * k + 12; }

inline std::string phi(const std::string& s, std::size_t k) {
  const std::string zeros(pad_width(k), '0');
  std::string out;
  out.reserve(s.size() * block_width(k));
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("phi: non-binary symbol");
    out += zeros;
    out += c == '0' ? "1010" : "1011";
    out += zeros;
  }
  return out;
}

/// 1^{2k+4} phi(s)
inline std::string encode(const std::string& s, std::size_t k) {
  return std::string(pad_width(k), '1') + phi(s, k);
}

struct Encoding {
  std::vector<std::string> gammas;
  std::string text;
  std::size_t length;  // target cover or seed length
};

inline Encoding build_cover_instance(const ConsensusInstance& inst) {
  Encoding e;
  for (const auto& s : inst.strings()) e.gammas.push_back(encode(s, inst.k()));
  for (const auto& g : e.gammas) e.text += g;
  e.length = e.gammas.front().size();
  return e;
}

/// T' = gamma_1 gamma_1 gamma_2 .. gamma_m 1^{2k+4} gamma_m 1^{2k+4}
inline Encoding build_seed_instance(const ConsensusInstance& inst) {
  Encoding e;
  for (const auto& s : inst.strings()) e.gammas.push_back(encode(s, inst.k()));
  const std::string ones(pad_width(inst.k()), '1');
  e.text = e.gammas.front();
  for (const auto& g : e.gammas) e.text += g;
  e.text += ones + e.gammas.back() + ones;
  e.length = e.gammas.front().size() + pad_width(inst.k());
  return e;
}

/// u[j(4k+12) - 1] for j = 1..l
inline std::string psi(const std::string& u, std::size_t k, std::size_t len) {
  const std::size_t w = block_width(k);
  if (u.size() < len * w) throw std::invalid_argument("psi: input shorter than l * (4k + 12)");
  std::string out;
  for (std::size_t j = 1; j <= len; ++j) out.push_back(u[j * w - 1]);
  return out;
}

/// Largest number of ones in any length-(2k+4) window of s.
inline std::size_t max_window_ones(const std::string& s, std::size_t k) {
  const std::size_t w = pad_width(k);
  if (s.size() < w) return static_cast<std::size_t>(std::count(s.begin(), s.end(), '1'));
  std::size_t ones = static_cast<std::size_t>(std::count(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(w), '1'));
  std::size_t best = ones;
  for (std::size_t i = w; i < s.size(); ++i) {
    ones += s[i] == '1';
    ones -= s[i - w] == '1';
    best = std::max(best, ones);
  }
  return best;
}

struct PrefixSuffixViolation {
  std::size_t i;
  std::size_t j;
  std::size_t length;
  std::size_t mismatches;
};

/// Pairs (i, j) and lengths p in [2k+4, |gamma| - 1] where the length-p prefix of
/// gamma_i and suffix of gamma_j are within Hamming distance 2k.
inline std::vector<PrefixSuffixViolation> check_prefix_suffix_property(const ConsensusInstance& inst) {
  const auto enc = build_cover_instance(inst);
  const std::size_t g = enc.length;
  const std::size_t k = inst.k();
  std::vector<PrefixSuffixViolation> out;
  for (std::size_t i = 0; i < inst.count(); ++i) {
    for (std::size_t j = 0; j < inst.count(); ++j) {
      for (std::size_t p = pad_width(k); p < g; ++p) {
        std::size_t mismatches = 0;
        for (std::size_t x = 0; x < p; ++x) mismatches += enc.gammas[i][x] != enc.gammas[j][g - p + x];
        if (mismatches <= 2 * k) out.push_back({i, j, p, mismatches});
      }
    }
  }
  return out;
}

namespace detail {

inline Text binary_text(const std::string& s) { return Alphabet("01").encode(s); }

// Hamming occurrences of c in t (wildcards match), as start positions.
inline std::vector<std::size_t> hamming_starts(const Text& c, const Text& t, std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + c.size() <= t.size(); ++i) {
    if (hamming_distance(c.view(), t.view().subspan(i, c.size())) <= k) out.push_back(i);
  }
  return out;
}

inline std::size_t hamming_cover_span(const Text& c, const Text& t, std::size_t k) {
  IntervalSet occ;
  for (std::size_t i : hamming_starts(c, t, k)) {
    occ.insert(static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(i + c.size()) - 1);
  }
  return interval_union_size(occ);
}

// Calls visit(candidate) for every binary string within Hamming distance k
// of center, in lexicographic order of the flipped position sets.
template <typename Visit>
void for_each_in_ball(const std::string& center, std::size_t k, Visit&& visit) {
  std::string s = center;
  std::vector<std::size_t> flips;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    visit(s);
    if (flips.size() == k) return;
    for (std::size_t x = from; x < s.size(); ++x) {
      s[x] = s[x] == '0' ? '1' : '0';
      flips.push_back(x);
      self(self, x + 1);
      flips.pop_back();
      s[x] = s[x] == '0' ? '1' : '0';
    }
  };
  rec(rec, 0);
}

inline std::uint64_t ball_size(std::size_t len, std::size_t k) {
  std::uint64_t total = 0, term = 1;
  for (std::size_t r = 0; r <= std::min(k, len); ++r) {
    if (r > 0) term = term * (len - r + 1) / r;
    total += term;
  }
  return total;
}

}  // namespace detail

struct Verdict {
  std::vector<std::string> failures;
  std::vector<std::string> notices;
  std::optional<std::string> consensus;
  bool ok() const noexcept { return failures.empty(); }
};

/*
 * Forward direction on one instance: a consensus S gives the cover
 * 1^{2k+4} phi(S) of T, occurring exactly at multiples of c, and the seed
 * 1^{2k+4} phi(S) 1^{2k+4} of T'. Every length-c cover of T that is found
 * decodes to a consensus, and with no consensus no such cover exists.
 *
 * Covers of T start with an occurrence at position 0, so candidates are
 * taken from the Hamming ball of radius k around T[0, c-1].
 */
inline Verdict reduction_forward_check(const ConsensusInstance& inst,
                                       std::uint64_t budget = oracle::kDefaultBudget) {
  Verdict v;
  const std::size_t k = inst.k();
  v.consensus = oracle::brute_consensus(inst.strings(), k, budget);
  const auto cover = build_cover_instance(inst);
  const auto seed = build_seed_instance(inst);
  const Text t = detail::binary_text(cover.text);
  const std::size_t c = cover.length;

  for (const auto& s : inst.strings()) {
    if (psi(encode(s, k), k, inst.length()) != s) v.failures.push_back("psi does not invert the encoding of " + s);
  }

  if (v.consensus) {
    const Text enc = detail::binary_text(encode(*v.consensus, k));
    if (detail::hamming_cover_span(enc, t, k) != t.size()) {
      v.failures.push_back("encoded consensus is not a k-approximate cover of T");
    }
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i < inst.count(); ++i) expected.push_back(i * c);
    if (detail::hamming_starts(enc, t, k) != expected) {
      v.failures.push_back("occurrence starts of the encoded cover are not {0, c, ..., (m-1)c}");
    }
    const Text seed_word = detail::binary_text(encode(*v.consensus, k) + std::string(pad_width(k), '1'));
    const Text padded = pad_for_seed(detail::binary_text(seed.text));
    if (detail::hamming_cover_span(seed_word, padded, k) != padded.size()) {
      v.failures.push_back("encoded seed is not a k-approximate seed of T'");
    }
  }

  const std::string prefix = cover.text.substr(0, c);
  if (detail::ball_size(c, k) > budget) {
    v.notices.push_back("converse skipped: candidate ball exceeds the enumeration budget");
    return v;
  }
  bool found = false;
  detail::for_each_in_ball(prefix, k, [&](const std::string& candidate) {
    const Text ct = detail::binary_text(candidate);
    if (detail::hamming_cover_span(ct, t, k) != t.size()) return;
    found = true;
    const std::string decoded = psi(candidate, k, inst.length());
    bool consensus = true;
    for (const auto& s : inst.strings()) {
      std::size_t mismatches = 0;
      for (std::size_t x = 0; x < s.size(); ++x) mismatches += s[x] != decoded[x];
      consensus = consensus && mismatches <= k;
    }
    if (!consensus) v.failures.push_back("cover " + candidate + " decodes to " + decoded + ", not a consensus");
  });
  if (!v.consensus && found) v.failures.push_back("a length-c cover exists although no consensus does");
  if (v.consensus && !found) v.failures.push_back("no length-c cover found although a consensus exists");
  return v;
}

}  // namespace aqp::gadget
