#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "aqp/aqp.hpp"

namespace aqp::testing {

inline const Alphabet& letters() {
  static const Alphabet alphabet("abcdefgh");
  return alphabet;
}

/// Text over the fixed alphabet "abcdefgh" restricted to sigma letters.
inline Text text(std::string_view s, std::size_t sigma = 0) {
  Text t = letters().encode(s);
  if (sigma == 0) {
    for (Symbol x : t.symbols()) {
      if (!is_wildcard(x)) sigma = std::max<std::size_t>(sigma, x + 1u);
    }
    sigma = std::max<std::size_t>(sigma, 1);
  }
  return Text(t.symbols(), sigma);
}

inline std::string str(const Text& t) { return letters().decode(t); }

inline Text random_text(std::mt19937_64& rng, std::size_t n, std::size_t sigma, double wildcard_rate = 0.0) {
  std::uniform_int_distribution<int> letter(0, static_cast<int>(sigma) - 1);
  std::bernoulli_distribution hole(wildcard_rate);
  std::vector<Symbol> out(n);
  for (auto& s : out) s = hole(rng) ? kWildcard : static_cast<Symbol>(letter(rng));
  return Text(std::move(out), sigma);
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random integer metric: random positive edge costs on sigma letters plus the
/// empty string, closed under shortest paths.
inline PenaltyMatrix random_metric(std::mt19937_64& rng, std::size_t sigma, Cost max_cost = 6) {
  const std::size_t v = sigma + 1;  // index sigma is the empty string
  std::uniform_int_distribution<Cost> cost(1, max_cost);
  std::vector<std::vector<Cost>> d(v, std::vector<Cost>(v, 0));
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = x + 1; y < v; ++y) d[x][y] = d[y][x] = cost(rng);
  }
  for (std::size_t m = 0; m < v; ++m) {
    for (std::size_t x = 0; x < v; ++x) {
      for (std::size_t y = 0; y < v; ++y) d[x][y] = std::min(d[x][y], d[x][m] + d[m][y]);
    }
  }
  std::vector<Cost> sub(sigma * sigma), ins(sigma), del(sigma);
  for (std::size_t x = 0; x < sigma; ++x) {
    for (std::size_t y = 0; y < sigma; ++y) sub[x * sigma + y] = d[x][y];
    ins[x] = d[sigma][x];
    del[x] = d[x][sigma];
  }
  return PenaltyMatrix::checked(sigma, sub, ins, del);
}

}  // namespace aqp::testing
