#pragma once

// k-coverage of every factor under Levenshtein and weighted edit distance,
// through the longest-approximate-prefix table
//   P[a, b, a'] = max { b' >= a'-1 : d(T[a,b], T[a',b']) <= k }, or -1.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "aqp/edit_distance.hpp"
#include "aqp/hamming_coverage.hpp"
#include "aqp/lcpk.hpp"
#include "aqp/parallel.hpp"
#include "aqp/text.hpp"
#include "aqp/waves.hpp"

namespace aqp {

enum class Metric { hamming, levenshtein, edit };

/// Dense P[a, b, a'] for b >= a.
class PTable {
 public:
  PTable() = default;
  explicit PTable(std::size_t n) : n_(n), cells_(n * n * n, -1) {}

  std::size_t size() const noexcept { return n_; }

  std::ptrdiff_t operator()(std::size_t a, std::size_t b, std::size_t a2) const noexcept {
    return cells_[(a * n_ + b) * n_ + a2];
  }
  std::int32_t& at(std::size_t a, std::size_t b, std::size_t a2) noexcept {
    return cells_[(a * n_ + b) * n_ + a2];
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::int32_t> cells_;
};

/*
 * Levenshtein P table in O(n^3) for fixed k. For each a' the waves of
 * (T[a'..], T[a..]) are carried from a+1 to a by prepending T[a]; along each
 * (a, a') pair the best diagonal only moves one way as b grows.
 *
 * Waves are oriented with rows over T[a'..] and columns over T[a..]: for
 * j = b - a + 1 letters of the factor, the longest match of T[a'..] uses
 * i = j - d rows where d is the least diagonal whose k-wave reaches row i.
 */
inline PTable p_lev_table(const Text& t, std::size_t k) {
  if (t.has_wildcard()) {
    throw std::invalid_argument("p_lev_table: wildcards need the weighted edit route");
  }
  const std::size_t n = t.size();
  PTable table(n);
  if (n == 0) return table;
  k = std::min(k, n);
  const auto budget = static_cast<std::ptrdiff_t>(k);
  const LcpKTable exact = lcp_k_all_pairs(t, 0);
  std::vector<std::vector<std::ptrdiff_t>> waves;
  for (std::size_t a2 = n; a2-- > 0;) {
    for (std::size_t a = n; a-- > 0;) {
      // waves for T[a2..] (rows) against T[a..] (columns); the column string
      // grows by one letter at the front per step of a
      auto extend = [&](std::size_t r, std::size_t c) -> std::size_t { return exact(a2 + r, a + c); };
      detail::furthest_reaching(n - a2, n - a, k, extend, waves);
      const auto& last = waves[k];
      auto reach = [&](std::ptrdiff_t d) { return last[static_cast<std::size_t>(d + budget)]; };
      std::ptrdiff_t d = -budget;
      for (std::size_t b = a; b < n; ++b) {
        const auto j = static_cast<std::ptrdiff_t>(b - a + 1);
        while (d <= budget && (reach(d) == kBelowWave || reach(d) + d < j)) ++d;
        if (d > budget) {
          table.at(a, b, a2) = -1;
        } else {
          table.at(a, b, a2) = static_cast<std::int32_t>(static_cast<std::ptrdiff_t>(a2) + (j - d) - 1);
        }
      }
    }
  }
  return table;
}

struct ParetoEntry {
  Cost cost;
  std::ptrdiff_t end;
  friend bool operator==(const ParetoEntry&, const ParetoEntry&) = default;
};

/// Non-dominated (cost, end) pairs, both components strictly increasing.
using ParetoList = std::vector<ParetoEntry>;

/// Stack filter over row values for ends first_end, first_end+1, ...
inline ParetoList pareto_list_build(std::span<const Cost> row, std::ptrdiff_t first_end) {
  ParetoList stack;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] >= kInfiniteCost) continue;
    while (!stack.empty() && stack.back().cost >= row[i]) stack.pop_back();
    stack.push_back({row[i], first_end + static_cast<std::ptrdiff_t>(i)});
  }
  return stack;
}

/// Maximal entry with cost <= budget.
inline std::optional<ParetoEntry> pareto_predecessor(const ParetoList& list, Cost budget) {
  auto it = std::upper_bound(list.begin(), list.end(), budget,
                             [](Cost value, const ParetoEntry& e) { return value < e.cost; });
  if (it == list.begin()) return std::nullopt;
  return *std::prev(it);
}

/*
 * Precomputed structures for sub-quartic weighted queries. With block size
 * M = floor(sqrt(n / log2 n)) (at least 1), every multiple of M is special.
 *
 *  (a) L_{c,c'}[b] for every c, c' in [0, n] with c or c' special and every
 *      b in [c-1, n-1];
 *  (b) the M x M corner block of every D_{a,a'} for a, a' in [0, n].
 *
 * Lists with c = n or c' = n hold the natural pairs (pure insertions or pure
 * deletions); a split may end exactly at the text end.
 */
class SpecialPointIndex {
 public:
  SpecialPointIndex(const Text& t, const PenaltyMatrix& p,
                    std::optional<std::size_t> block_size = std::nullopt)
      : text_(t), penalties_(p), n_(t.size()), m_(block_size.value_or(default_block_size(t.size()))) {
    if (m_ == 0) throw std::invalid_argument("SpecialPointIndex: block size must be positive");
    require_covered(p, t.view());
    build_blocks();
    build_lists();
  }

  static std::size_t default_block_size(std::size_t n) {
    if (n <= 2) return 1;
    const double m = std::floor(std::sqrt(static_cast<double>(n) / std::log2(static_cast<double>(n))));
    return std::max<std::size_t>(1, static_cast<std::size_t>(m));
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t block_size() const noexcept { return m_; }
  const Text& text() const noexcept { return text_; }
  const PenaltyMatrix& penalties() const noexcept { return penalties_; }
  bool is_special(std::size_t i) const noexcept { return i % m_ == 0; }

  bool built_for(const Text& t, const PenaltyMatrix& p) const { return t == text_ && p == penalties_; }

  /// Closest special point at or after i.
  std::size_t next_special(std::size_t i) const noexcept { return i + (m_ - i % m_) % m_; }

  /// D_{a,a'}[b, b'] for -1 <= b - a, b' - a' < M - 1; kInfiniteCost past the text end.
  Cost block(std::size_t a, std::size_t a2, std::ptrdiff_t b, std::ptrdiff_t b2) const {
    const std::ptrdiff_t r = b - static_cast<std::ptrdiff_t>(a) + 1;
    const std::ptrdiff_t c = b2 - static_cast<std::ptrdiff_t>(a2) + 1;
    const auto m = static_cast<std::ptrdiff_t>(m_);
    if (a > n_ || a2 > n_ || r < 0 || c < 0 || r >= m || c >= m) {
      throw std::out_of_range("SpecialPointIndex::block: cell outside the corner block");
    }
    return blocks_[block_offset(a, a2) + static_cast<std::size_t>(r) * m_ + static_cast<std::size_t>(c)];
  }

  /// L_{c,c'}[b]; empty when b < c - 1 or any index is out of range.
  const ParetoList& list(std::size_t c, std::size_t c2, std::ptrdiff_t b) const {
    if (c > n_ || c2 > n_ || b < static_cast<std::ptrdiff_t>(c) - 1 ||
        b > static_cast<std::ptrdiff_t>(n_) - 1) {
      return empty_;
    }
    const std::int64_t slot = slots_[c * (n_ + 1) + c2];
    if (slot < 0) throw std::logic_error("SpecialPointIndex::list: pair has no special point");
    return lists_[static_cast<std::size_t>(slot)][static_cast<std::size_t>(b - static_cast<std::ptrdiff_t>(c) + 1)];
  }

  std::size_t stored_pairs() const noexcept { return lists_.size(); }

 private:
  std::size_t block_offset(std::size_t a, std::size_t a2) const noexcept {
    return (a * (n_ + 1) + a2) * m_ * m_;
  }

  void build_blocks() {
    blocks_.assign((n_ + 1) * (n_ + 1) * m_ * m_, kInfiniteCost);
    for (std::size_t a = 0; a <= n_; ++a) {
      for (std::size_t a2 = 0; a2 <= n_; ++a2) {
        Cost* cell = blocks_.data() + block_offset(a, a2);
        const std::size_t rows = std::min(m_, n_ - a + 1);
        const std::size_t cols = std::min(m_, n_ - a2 + 1);
        cell[0] = 0;
        for (std::size_t c = 1; c < cols; ++c) cell[c] = cell[c - 1] + penalties_.insert(text_[a2 + c - 1]);
        for (std::size_t r = 1; r < rows; ++r) {
          const Symbol x = text_[a + r - 1];
          cell[r * m_] = cell[(r - 1) * m_] + penalties_.remove(x);
          for (std::size_t c = 1; c < cols; ++c) {
            const Symbol y = text_[a2 + c - 1];
            cell[r * m_ + c] = std::min({cell[(r - 1) * m_ + c - 1] + penalties_.substitute(x, y),
                                         cell[r * m_ + c - 1] + penalties_.insert(y),
                                         cell[(r - 1) * m_ + c] + penalties_.remove(x)});
          }
        }
      }
    }
  }

  void build_lists() {
    slots_.assign((n_ + 1) * (n_ + 1), -1);
    for (std::size_t c = 0; c <= n_; ++c) {
      for (std::size_t c2 = 0; c2 <= n_; ++c2) {
        if (!is_special(c) && !is_special(c2)) continue;
        slots_[c * (n_ + 1) + c2] = static_cast<std::int64_t>(lists_.size());
        DTable table(text_, c, c2, penalties_);
        std::vector<ParetoList> per_row;
        per_row.reserve(n_ - c + 1);
        for (std::ptrdiff_t b = static_cast<std::ptrdiff_t>(c) - 1; b < static_cast<std::ptrdiff_t>(n_); ++b) {
          per_row.push_back(pareto_list_build(table.row(b), static_cast<std::ptrdiff_t>(c2) - 1));
        }
        lists_.push_back(std::move(per_row));
      }
    }
  }

  Text text_;
  PenaltyMatrix penalties_;
  std::size_t n_;
  std::size_t m_;
  std::vector<Cost> blocks_;
  std::vector<std::int64_t> slots_;
  std::vector<std::vector<ParetoList>> lists_;
  ParetoList empty_;
};

/*
 * P^ed[a, b, a'] in O(M log n): scan the corner block for short targets, then
 * for every split (c, c') with c = next special point >= a and c' in
 * [a', a'+M-1], or c' = next special point >= a' and c in [a, a+M-1], take
 * the predecessor of k - D_{a,a'}[c-1, c'-1] in L_{c,c'}[b].
 */
inline std::ptrdiff_t p_ed_entry(const SpecialPointIndex& idx, std::size_t a, std::size_t b,
                                 std::size_t a2, Cost k) {
  const std::size_t n = idx.size();
  const std::size_t m = idx.block_size();
  if (a > b || b >= n || a2 >= n) throw std::out_of_range("p_ed_entry: index outside text");
  const auto sb = static_cast<std::ptrdiff_t>(b);
  std::ptrdiff_t result = -1;
  if (b - a + 1 < m) {
    const std::size_t last = std::min(a2 + m - 1, n);  // exclusive bound on b' + 1
    for (std::size_t end = a2; end <= last; ++end) {
      const auto b2 = static_cast<std::ptrdiff_t>(end) - 1;
      if (idx.block(a, a2, sb, b2) <= k) result = b2;
    }
  }
  auto consider = [&](std::size_t c, std::size_t c2) {
    if (c > n || c2 > n || static_cast<std::ptrdiff_t>(c) - 1 > sb) return;
    const Cost offset = idx.block(a, a2, static_cast<std::ptrdiff_t>(c) - 1, static_cast<std::ptrdiff_t>(c2) - 1);
    if (offset > k) return;
    if (auto hit = pareto_predecessor(idx.list(c, c2, sb), k - offset)) result = std::max(result, hit->end);
  };
  const std::size_t s = idx.next_special(a);
  const std::size_t s2 = idx.next_special(a2);
  for (std::size_t c2 = a2; c2 < a2 + m; ++c2) consider(s, c2);
  for (std::size_t c = a; c < a + m; ++c) consider(c, s2);
  return result;
}

/// Checked variant: the index must have been built for this text and matrix.
inline std::ptrdiff_t p_ed_entry(const Text& t, const PenaltyMatrix& p, const SpecialPointIndex& idx,
                                 std::size_t a, std::size_t b, std::size_t a2, Cost k) {
  if (!idx.built_for(t, p)) {
    throw std::invalid_argument("p_ed_entry: index was built for a different text or penalty matrix");
  }
  return p_ed_entry(idx, a, b, a2, k);
}

inline PTable p_ed_table(const SpecialPointIndex& idx, Cost k) {
  const std::size_t n = idx.size();
  PTable table(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t a2 = 0; a2 < n; ++a2) table.at(a, b, a2) = static_cast<std::int32_t>(p_ed_entry(idx, a, b, a2, k));
    }
  }
  return table;
}

/// |union over a' of [a', P[a, b, a']]|.
template <typename Lookup>
std::size_t coverage_from_prefixes(std::size_t n, Lookup&& longest) {
  IntervalSet occurrences;
  for (std::size_t a2 = 0; a2 < n; ++a2) occurrences.insert(static_cast<std::ptrdiff_t>(a2), longest(a2));
  return interval_union_size(occurrences);
}

inline FactorCoverageTable factor_coverage_from(const PTable& p) {
  const std::size_t n = p.size();
  FactorCoverageTable table(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      table(a, b) = coverage_from_prefixes(n, [&](std::size_t a2) { return p(a, b, a2); });
    }
  }
  return table;
}

inline FactorCoverageTable factor_coverage_levenshtein(const Text& t, std::size_t k) {
  return factor_coverage_from(p_lev_table(t, k));
}

inline FactorCoverageTable factor_coverage_edit(const SpecialPointIndex& idx, Cost k,
                                                std::size_t threads = 1) {
  const std::size_t n = idx.size();
  FactorCoverageTable table(n);
  parallel_for(n, threads, [&](std::size_t a) {
    for (std::size_t b = a; b < n; ++b) {
      table(a, b) = coverage_from_prefixes(n, [&](std::size_t a2) { return p_ed_entry(idx, a, b, a2, k); });
    }
  });
  return table;
}

inline FactorCoverageTable factor_coverage_edit(const Text& t, const PenaltyMatrix& p, Cost k,
                                                std::size_t threads = 1) {
  return factor_coverage_edit(SpecialPointIndex(t, p), k, threads);
}

/// Coverage of every factor under the chosen metric. Levenshtein on partial
/// words is routed through unit penalties.
inline FactorCoverageTable factor_coverage(const Text& t, Metric metric, Cost k,
                                           const PenaltyMatrix* p = nullptr, std::size_t threads = 1) {
  if (k < 0) throw std::invalid_argument("factor_coverage: negative budget");
  switch (metric) {
    case Metric::hamming:
      return factor_coverage_all(t, static_cast<std::size_t>(std::min<Cost>(k, static_cast<Cost>(t.size()))), threads);
    case Metric::levenshtein:
      if (t.has_wildcard()) {
        return factor_coverage_edit(t, PenaltyMatrix::unit(t.alphabet_size()), k, threads);
      }
      return factor_coverage_levenshtein(t, static_cast<std::size_t>(std::min<Cost>(k, static_cast<Cost>(t.size()))));
    case Metric::edit:
      if (!p) throw std::invalid_argument("factor_coverage: edit distance needs a penalty matrix");
      return factor_coverage_edit(t, *p, k, threads);
  }
  throw std::logic_error("factor_coverage: unknown metric");
}

}  // namespace aqp
