#pragma once

// Restricted approximate covers and seeds under weighted edit distance:
//   Q_{a,b}[i] = least threshold k such that T[a,b] k-covers T[i, n-1].

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "aqp/edit_coverage.hpp"
#include "aqp/edit_distance.hpp"
#include "aqp/parallel.hpp"
#include "aqp/text.hpp"

namespace aqp {

struct QTable {
  std::size_t start = 0;
  std::size_t end = 0;  // inclusive
  std::vector<Cost> values;  // size n + 1

  Cost operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const QTable&, const QTable&) = default;
};

/*
 * Sparse table over [0, size) filled right to left: RM[i][p] = min over
 * [i, i + 2^p - 1]. Each set(i, v) must target the index just below the
 * lowest materialized one.
 */
class OnlineRangeMin {
 public:
  explicit OnlineRangeMin(std::size_t size) : size_(size), lowest_(size) {
    std::size_t levels = 1;
    while ((std::size_t{1} << levels) <= size_) ++levels;
    levels_.assign(levels, std::vector<Cost>(size_, kInfiniteCost));
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t lowest() const noexcept { return lowest_; }

  void set(std::size_t i, Cost value) {
    if (i + 1 != lowest_) {
      throw std::logic_error("OnlineRangeMin::set: entries must arrive in decreasing index order");
    }
    levels_[0][i] = value;
    for (std::size_t p = 1; p < levels_.size() && i + (std::size_t{1} << p) <= size_; ++p) {
      levels_[p][i] = std::min(levels_[p - 1][i], levels_[p - 1][i + (std::size_t{1} << (p - 1))]);
    }
    lowest_ = i;
  }

  /// min over [lo, hi]; kInfiniteCost for an empty range.
  Cost query(std::size_t lo, std::size_t hi) const {
    if (hi < lo) return kInfiniteCost;
    if (lo < lowest_ || hi >= size_) {
      throw std::out_of_range("OnlineRangeMin::query: range touches unmaterialized entries");
    }
    const auto p = static_cast<std::size_t>(std::bit_width(hi - lo + 1) - 1);
    return std::min(levels_[p][lo], levels_[p][hi + 1 - (std::size_t{1} << p)]);
  }

 private:
  std::size_t size_;
  std::size_t lowest_;
  std::vector<std::vector<Cost>> levels_;
};

namespace detail {

// ed(C, T[i, j]) for j = i-1 .. n-1 by one DP pass over C.
inline std::vector<Cost> distance_row(const Text& t, std::size_t a, std::size_t b, std::size_t i,
                                      const PenaltyMatrix& p) {
  const std::size_t n = t.size();
  const std::size_t cols = n - i + 1;
  std::vector<Cost> row(cols), next(cols);
  row[0] = 0;
  for (std::size_t c = 1; c < cols; ++c) row[c] = row[c - 1] + p.insert(t[i + c - 1]);
  for (std::size_t r = a; r <= b; ++r) {
    const Symbol x = t[r];
    next[0] = row[0] + p.remove(x);
    for (std::size_t c = 1; c < cols; ++c) {
      const Symbol y = t[i + c - 1];
      next[c] = std::min({row[c - 1] + p.substitute(x, y), next[c - 1] + p.insert(y), row[c] + p.remove(x)});
    }
    std::swap(row, next);
  }
  return row;
}

inline void check_factor(std::size_t n, std::size_t a, std::size_t b) {
  if (a > b || b >= n) throw std::out_of_range("Q table: factor outside text");
}

}  // namespace detail

/// Q_{a,b} by the quadratic double loop.
inline QTable q_table_quadratic(const Text& t, std::size_t a, std::size_t b, const PenaltyMatrix& p) {
  const std::size_t n = t.size();
  detail::check_factor(n, a, b);
  require_covered(p, t.view());
  QTable q{a, b, std::vector<Cost>(n + 1, kInfiniteCost)};
  q.values[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    auto row = detail::distance_row(t, a, b, i, p);
    Cost min_q = kInfiniteCost;
    Cost best = kInfiniteCost;
    for (std::size_t j = i; j < n; ++j) {
      min_q = std::min(min_q, q.values[j + 1]);
      best = std::min(best, std::max(row[j - i + 1], min_q));
    }
    q.values[i] = best;
  }
  return q;
}

/*
 * Q_{a,b} from the special-point index. Along a Pareto list the distance
 * grows and the range minimum shrinks with j, so the best pair is the first
 * one where the minimum drops to the distance, or the one before it.
 */
inline QTable q_table_fast(const SpecialPointIndex& idx, std::size_t a, std::size_t b) {
  const std::size_t n = idx.size();
  const std::size_t m = idx.block_size();
  detail::check_factor(n, a, b);
  const auto sb = static_cast<std::ptrdiff_t>(b);
  QTable q{a, b, std::vector<Cost>(n + 1, kInfiniteCost)};
  q.values[n] = 0;
  OnlineRangeMin rm(n + 1);
  rm.set(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    Cost best = kInfiniteCost;
    if (b - a + 1 < m) {
      Cost min_q = kInfiniteCost;
      for (std::size_t j = i; j < std::min(i + m - 1, n); ++j) {
        min_q = std::min(min_q, q.values[j + 1]);
        best = std::min(best, std::max(idx.block(a, i, sb, static_cast<std::ptrdiff_t>(j)), min_q));
      }
    }
    auto value_at = [&](Cost offset, const ParetoEntry& e) {
      if (e.end < static_cast<std::ptrdiff_t>(i)) return kInfiniteCost;
      return std::max(offset + e.cost, rm.query(i + 1, static_cast<std::size_t>(e.end) + 1));
    };
    auto consider = [&](std::size_t c, std::size_t c2) {
      if (c > n || c2 > n || static_cast<std::ptrdiff_t>(c) - 1 > sb) return;
      const ParetoList& list = idx.list(c, c2, sb);
      if (list.empty()) return;
      const Cost offset = idx.block(a, i, static_cast<std::ptrdiff_t>(c) - 1, static_cast<std::ptrdiff_t>(c2) - 1);
      auto it = std::partition_point(list.begin(), list.end(), [&](const ParetoEntry& e) {
        if (e.end < static_cast<std::ptrdiff_t>(i)) return true;
        return rm.query(i + 1, static_cast<std::size_t>(e.end) + 1) > offset + e.cost;
      });
      if (it == list.end()) --it;
      best = std::min(best, value_at(offset, *it));
      if (it != list.begin()) best = std::min(best, value_at(offset, *std::prev(it)));
    };
    const std::size_t s = idx.next_special(a);
    const std::size_t s2 = idx.next_special(i);
    for (std::size_t c2 = i; c2 < i + m; ++c2) consider(s, c2);
    for (std::size_t c = a; c < a + m; ++c) consider(c, s2);
    q.values[i] = best;
    rm.set(i, best);
  }
  return q;
}

inline QTable q_table_fast(const Text& t, std::size_t a, std::size_t b, const PenaltyMatrix& p,
                           const SpecialPointIndex& idx) {
  if (!idx.built_for(t, p)) {
    throw std::invalid_argument("q_table_fast: index was built for a different text or penalty matrix");
  }
  return q_table_fast(idx, a, b);
}

struct FactorThreshold {
  std::size_t start;  // leftmost occurrence
  std::size_t end;    // inclusive
  std::vector<std::size_t> occurrences;
  Cost threshold;
};

struct RestrictedReport {
  std::vector<FactorThreshold> factors;  // ordered by (start, end)
  Cost minimum = kInfiniteCost;
  std::vector<std::size_t> argmin;  // indices into factors
};

namespace detail {

inline RestrictedReport restricted_ed_search(const SpecialPointIndex& idx, const Text& region,
                                             std::size_t offset, std::size_t max_len, std::size_t threads) {
  const std::size_t m = region.size();
  auto lcp = literal_lcp_table(region);
  auto canonical = leftmost_factor_mask(lcp);
  RestrictedReport report;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t len = 1; len <= std::min(max_len, m - a); ++len) {
      if (!canonical[a][len - 1]) continue;
      FactorThreshold f{a, a + len - 1, {}, kInfiniteCost};
      for (std::size_t s = 0; s < m; ++s) {
        if (lcp[a][s] >= len) f.occurrences.push_back(s);
      }
      report.factors.push_back(std::move(f));
    }
  }
  parallel_for(report.factors.size(), threads, [&](std::size_t x) {
    auto& f = report.factors[x];
    f.threshold = q_table_fast(idx, offset + f.start, offset + f.end)[0];
  });
  for (std::size_t x = 0; x < report.factors.size(); ++x) {
    const Cost v = report.factors[x].threshold;
    if (v < report.minimum) {
      report.minimum = v;
      report.argmin.clear();
    }
    if (v == report.minimum) report.argmin.push_back(x);
  }
  return report;
}

}  // namespace detail

/// Q_{a,b}[0] for every distinct proper factor, with the minimal ones.
inline RestrictedReport restricted_covers_ed(const Text& t, const PenaltyMatrix& p,
                                             std::size_t threads = 1) {
  if (t.size() < 2) return {};
  SpecialPointIndex idx(t, p);
  return detail::restricted_ed_search(idx, t, 0, t.size() - 1, threads);
}

/// Seed thresholds (2|C| <= |T|) via covers of the wildcard-padded text.
inline RestrictedReport restricted_seeds_ed(const Text& t, const PenaltyMatrix& p,
                                            std::size_t threads = 1) {
  if (t.size() < 2) return {};
  require_covered(p, t.view());
  SpecialPointIndex idx(pad_for_seed(t), p);
  return detail::restricted_ed_search(idx, t, t.size(), t.size() / 2, threads);
}

}  // namespace aqp
