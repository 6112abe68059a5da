#pragma once

// Doubling-size timing runs shared by the CLI and the acceptance suite.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "aqp/aqp.hpp"

namespace aqp::bench {

struct Measurement {
  std::string name;
  std::size_t n_small;
  std::size_t n_large;
  double seconds_small;
  double seconds_large;
  double ratio() const { return seconds_small > 0 ? seconds_large / seconds_small : 0.0; }
  double exponent() const { return ratio() > 0 ? std::log2(ratio()) : 0.0; }
};

inline Text random_text(std::size_t n, std::size_t sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(sigma) - 1);
  std::vector<Symbol> out(n);
  for (auto& s : out) s = static_cast<Symbol>(letter(rng));
  return Text(std::move(out), sigma);
}

// Median wall time of `reps` runs of work(n).
inline double time_median(std::size_t n, int reps, const std::function<void(std::size_t)>& work) {
  std::vector<double> runs;
  for (int r = 0; r < reps; ++r) {
    auto start = std::chrono::steady_clock::now();
    work(n);
    runs.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(runs.begin(), runs.end());
  return runs[runs.size() / 2];
}

inline Measurement measure(std::string name, std::size_t n, int reps,
                           const std::function<void(std::size_t)>& work) {
  Measurement m{std::move(name), n, 2 * n, 0, 0};
  m.seconds_small = time_median(n, reps, work);
  m.seconds_large = time_median(2 * n, reps, work);
  return m;
}

/// Prefix coverage with PREF_k precomputed outside the timed region.
inline Measurement prefix_coverage_run(std::size_t n = std::size_t{1} << 15, std::size_t k = 2, int reps = 7) {
  std::vector<std::vector<std::uint32_t>> prefs;
  std::vector<Text> texts;
  for (std::size_t size : {n, 2 * n}) {
    texts.push_back(random_text(size, 2, 1000 + size));
    prefs.push_back(pref_k(texts.back(), k));
  }
  volatile std::size_t sink = 0;
  return measure("prefix-coverage", n, reps, [&](std::size_t size) {
    const std::size_t slot = size == n ? 0 : 1;
    sink = sink + prefix_coverage(texts[slot], prefs[slot]).back();
  });
}

inline Measurement hamming_factor_run(std::size_t n = 512, std::size_t k = 2, int reps = 3) {
  volatile std::size_t sink = 0;
  return measure("hamming-factor-coverage", n, reps, [&](std::size_t size) {
    sink = sink + factor_coverage_all(random_text(size, 2, 2000 + size), k)(0, 0);
  });
}

inline Measurement levenshtein_factor_run(std::size_t n = 40, std::size_t k = 2, int reps = 3) {
  volatile std::size_t sink = 0;
  return measure("levenshtein-factor-coverage", n, reps, [&](std::size_t size) {
    sink = sink + factor_coverage_levenshtein(random_text(size, 2, 3000 + size), k)(0, 0);
  });
}

/// Total time for every factor's Q table by the quadratic and the fast route.
inline std::vector<Measurement> q_table_runs(std::size_t n = 12, int reps = 1) {
  volatile Cost sink = 0;
  auto quadratic = measure("q-table-quadratic", n, reps, [&](std::size_t size) {
    Text t = random_text(size, 2, 4000 + size);
    auto p = PenaltyMatrix::unit(2);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a; b < size; ++b) sink = sink + q_table_quadratic(t, a, b, p)[0];
    }
  });
  auto fast = measure("q-table-fast", n, reps, [&](std::size_t size) {
    Text t = random_text(size, 2, 4000 + size);
    SpecialPointIndex idx(t, PenaltyMatrix::unit(2));
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a; b < size; ++b) sink = sink + q_table_fast(idx, a, b)[0];
    }
  });
  return {quadratic, fast};
}

}  // namespace aqp::bench
