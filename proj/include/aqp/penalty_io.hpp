#pragma once

// Penalty matrix text format.
//
//   # comment until end of line
//   alphabet <letters>
//   sub <sigma*sigma costs, row-major: row = source letter>
//   ins <sigma costs>
//   del <sigma costs>
//
// Sections may appear in any order after `alphabet`; tokens are separated by
// arbitrary whitespace. Costs are nonnegative decimal integers.

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqp/edit_distance.hpp"
#include "aqp/text.hpp"

namespace aqp {

struct PenaltySpec {
  Alphabet alphabet;
  PenaltyMatrix matrix;
};

class PenaltyFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> tokenize_penalty(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  return tokens;
}

inline Cost parse_cost(const std::string& token) {
  Cost value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw PenaltyFormatError("penalty file: expected nonnegative integer cost, got '" + token + "'");
  }
  return value;
}

}  // namespace detail

inline PenaltySpec read_penalty(std::istream& in, char wildcard = '?') {
  auto tokens = detail::tokenize_penalty(in);
  if (tokens.size() < 2 || tokens[0] != "alphabet") {
    throw PenaltyFormatError("penalty file: must start with 'alphabet <letters>'");
  }
  Alphabet alphabet = [&] {
    try {
      return Alphabet(tokens[1], wildcard);
    } catch (const std::invalid_argument& e) {
      throw PenaltyFormatError(std::string("penalty file: ") + e.what());
    }
  }();
  const std::size_t sigma = alphabet.size();
  std::vector<Cost> sub, ins, del;
  bool seen_sub = false, seen_ins = false, seen_del = false;
  std::size_t pos = 2;
  auto take = [&](std::size_t count, const std::string& section) {
    if (pos + count > tokens.size()) {
      throw PenaltyFormatError("penalty file: section '" + section + "' needs " +
                               std::to_string(count) + " costs");
    }
    std::vector<Cost> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(detail::parse_cost(tokens[pos++]));
    return out;
  };
  while (pos < tokens.size()) {
    const std::string key = tokens[pos++];
    bool* seen = key == "sub" ? &seen_sub : key == "ins" ? &seen_ins : key == "del" ? &seen_del : nullptr;
    if (!seen) throw PenaltyFormatError("penalty file: unknown section '" + key + "'");
    if (*seen) throw PenaltyFormatError("penalty file: duplicate section '" + key + "'");
    *seen = true;
    if (key == "sub") sub = take(sigma * sigma, key);
    else if (key == "ins") ins = take(sigma, key);
    else del = take(sigma, key);
  }
  if (!seen_sub || !seen_ins || !seen_del) {
    throw PenaltyFormatError("penalty file: sections sub, ins and del are all required");
  }
  try {
    return {alphabet, PenaltyMatrix::checked(sigma, std::move(sub), std::move(ins), std::move(del))};
  } catch (const std::invalid_argument& e) {
    throw PenaltyFormatError(e.what());
  }
}

inline PenaltySpec parse_penalty(const std::string& text, char wildcard = '?') {
  std::istringstream in(text);
  return read_penalty(in, wildcard);
}

inline std::string format_penalty(const Alphabet& alphabet, const PenaltyMatrix& p) {
  const std::size_t sigma = p.alphabet_size();
  std::ostringstream out;
  out << "alphabet " << alphabet.letters() << "\nsub\n";
  for (std::size_t x = 0; x < sigma; ++x) {
    for (std::size_t y = 0; y < sigma; ++y) {
      out << (y ? " " : "") << p.substitution_table()[x * sigma + y];
    }
    out << "\n";
  }
  out << "ins";
  for (Cost c : p.insertion_costs()) out << " " << c;
  out << "\ndel";
  for (Cost c : p.deletion_costs()) out << " " << c;
  out << "\n";
  return out.str();
}

}  // namespace aqp
