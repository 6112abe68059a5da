#pragma once

// Longest common prefixes with at most k mismatches between suffixes of one
// text: the all-pairs table (per-diagonal sliding window), single queries by
// the kangaroo method over an exact LCE structure, and the PREF_k table.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "aqp/text.hpp"

namespace aqp {

/// n x n table of lcp_k(i, j).
class LcpKTable {
 public:
  LcpKTable() = default;
  LcpKTable(std::size_t n, std::size_t k) : n_(n), k_(k), cells_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t budget() const noexcept { return k_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept {
    return cells_[i * n_ + j];
  }
  std::uint32_t& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * n_ + j]; }

  /// [lcp_k(i, 0), ..., lcp_k(i, n-1)]
  std::span<const std::uint32_t> row(std::size_t i) const noexcept {
    return {cells_.data() + i * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<std::uint32_t> cells_;
};

/*
 * All-pairs lcp_k in O(n^2): along each diagonal j - i = delta the end of the
 * k-mismatch window only moves right as the start advances.
 */
inline LcpKTable lcp_k_all_pairs(const Text& t, std::size_t k) {
  const std::size_t n = t.size();
  LcpKTable table(n, k);
  for (std::size_t i = 0; i < n; ++i) table(i, i) = static_cast<std::uint32_t>(n - i);
  for (std::size_t delta = 1; delta < n; ++delta) {
    const std::size_t len = n - delta;  // positions t in [0, len) compare T[t], T[t+delta]
    std::size_t end = 0;                // window is [start, end)
    std::size_t mismatches = 0;
    for (std::size_t start = 0; start < len; ++start) {
      if (end < start) {
        end = start;
        mismatches = 0;
      }
      while (end < len) {
        bool mismatch = !symbols_match(t[end], t[end + delta]);
        if (mismatch && mismatches == k) break;
        mismatches += mismatch;
        ++end;
      }
      auto value = static_cast<std::uint32_t>(end - start);
      table(start, start + delta) = value;
      table(start + delta, start) = value;
      if (end > start && !symbols_match(t[start], t[start + delta])) --mismatches;
    }
  }
  return table;
}

namespace detail {

// Static sparse table for range minimum over a fixed array.
class StaticRangeMin {
 public:
  StaticRangeMin() = default;
  explicit StaticRangeMin(std::vector<std::uint32_t> values) {
    levels_.push_back(std::move(values));
    const std::size_t n = levels_[0].size();
    for (std::size_t width = 2; width <= n; width *= 2) {
      const auto& prev = levels_.back();
      std::vector<std::uint32_t> cur(n - width + 1);
      for (std::size_t i = 0; i + width <= n; ++i) {
        cur[i] = std::min(prev[i], prev[i + width / 2]);
      }
      levels_.push_back(std::move(cur));
    }
  }

  // minimum over [lo, hi], lo <= hi
  std::uint32_t query(std::size_t lo, std::size_t hi) const noexcept {
    const std::size_t p = std::bit_width(hi - lo + 1) - 1;
    return std::min(levels_[p][lo], levels_[p][hi + 1 - (std::size_t{1} << p)]);
  }

 private:
  std::vector<std::vector<std::uint32_t>> levels_;
};

}  // namespace detail

/*
 * Exact longest common extension of two suffixes in O(1) per query:
 * suffix array by prefix doubling, Kasai LCP, sparse-table RMQ. The wildcard
 * is treated as an ordinary distinct letter here; callers that need wildcard
 * matching resolve it at the stop position.
 */
class ExactLce {
 public:
  explicit ExactLce(const Text& t) : n_(t.size()) {
    if (n_ == 0) return;
    std::vector<std::uint32_t> rank(n_), tmp(n_);
    sa_.resize(n_);
    std::iota(sa_.begin(), sa_.end(), 0u);
    for (std::size_t i = 0; i < n_; ++i) {
      rank[i] = is_wildcard(t[i]) ? static_cast<std::uint32_t>(t.alphabet_size()) : t[i];
    }
    for (std::size_t h = 1;; h *= 2) {
      auto key = [&](std::uint32_t i) {
        std::int64_t second = i + h < n_ ? static_cast<std::int64_t>(rank[i + h]) : -1;
        return std::pair<std::int64_t, std::int64_t>(rank[i], second);
      };
      std::sort(sa_.begin(), sa_.end(), [&](std::uint32_t x, std::uint32_t y) { return key(x) < key(y); });
      tmp[sa_[0]] = 0;
      for (std::size_t r = 1; r < n_; ++r) {
        tmp[sa_[r]] = tmp[sa_[r - 1]] + (key(sa_[r - 1]) < key(sa_[r]) ? 1 : 0);
      }
      rank.swap(tmp);
      if (rank[sa_[n_ - 1]] == n_ - 1 || h >= n_) break;
    }
    inverse_.resize(n_);
    for (std::size_t r = 0; r < n_; ++r) inverse_[sa_[r]] = static_cast<std::uint32_t>(r);
    // Kasai; lcp[r] = LCP(sa[r-1], sa[r])
    std::vector<std::uint32_t> lcp(n_, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t r = inverse_[i];
      if (r == 0) {
        h = 0;
        continue;
      }
      const std::size_t j = sa_[r - 1];
      while (i + h < n_ && j + h < n_ && t[i + h] == t[j + h]) ++h;
      lcp[r] = static_cast<std::uint32_t>(h);
      if (h > 0) --h;
    }
    rmq_ = detail::StaticRangeMin(std::move(lcp));
  }

  std::size_t size() const noexcept { return n_; }

  /// Length of the longest common prefix of T[i..] and T[j..] (literal equality).
  std::size_t query(std::size_t i, std::size_t j) const noexcept {
    if (i >= n_ || j >= n_) return 0;
    if (i == j) return n_ - i;
    std::size_t ri = inverse_[i], rj = inverse_[j];
    if (ri > rj) std::swap(ri, rj);
    return rmq_.query(ri + 1, rj);
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> inverse_;
  detail::StaticRangeMin rmq_;
};

/// Result of one kangaroo query; `jumps` counts exact-LCE calls.
struct KangarooResult {
  std::size_t length;
  std::size_t jumps;
};

/*
 * lcp_k(i, j) by at most k+1 exact-LCE jumps (plus one extra jump per
 * wildcard stop on partial words).
 */
inline KangarooResult kangaroo_lcp_k(const Text& t, const ExactLce& lce, std::size_t i,
                                     std::size_t j, std::size_t k) {
  const std::size_t n = t.size();
  const std::size_t limit = n - std::max(i, j);
  std::size_t length = 0;
  std::size_t jumps = 0;
  std::size_t budget = k;
  while (length < limit) {
    ++jumps;
    length += lce.query(i + length, j + length);
    if (length >= limit) return {limit, jumps};
    if (!symbols_match(t[i + length], t[j + length])) {
      if (budget == 0) break;
      --budget;
    }
    ++length;
  }
  return {std::min(length, limit), jumps};
}

inline std::size_t kangaroo_lcp_k(const Text& t, std::size_t i, std::size_t j, std::size_t k) {
  ExactLce lce(t);
  return kangaroo_lcp_k(t, lce, i, j, k).length;
}

/// PREF_k[i] = lcp_k(0, i) in O(nk) after linear-ish preprocessing.
inline std::vector<std::uint32_t> pref_k(const Text& t, const ExactLce& lce, std::size_t k) {
  const std::size_t n = t.size();
  std::vector<std::uint32_t> pref(n);
  for (std::size_t i = 0; i < n; ++i) {
    pref[i] = static_cast<std::uint32_t>(kangaroo_lcp_k(t, lce, 0, i, k).length);
  }
  return pref;
}

inline std::vector<std::uint32_t> pref_k(const Text& t, std::size_t k) {
  return pref_k(t, ExactLce(t), k);
}

}  // namespace aqp
