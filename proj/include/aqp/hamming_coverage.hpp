#pragma once

// k-coverage under the Hamming distance: the linear-time prefix sweep, all
// factors via rows of the lcp_k table, k-restricted covers and seeds, and the
// two enhanced-cover variants.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "aqp/lcpk.hpp"
#include "aqp/parallel.hpp"
#include "aqp/text.hpp"

namespace aqp {

/*
 * Sweep over pattern lengths l = 1..max_length for a fixed anchor. The input
 * holds, for every text position i, the length lcp_k(anchor, i); position i
 * hosts an occurrence of the length-l prefix iff that value is >= l.
 *
 * Live positions form a doubly linked list with sentinel n. Adjacent pairs
 * (i, j) with j - i < l are overlapping and contribute j - i covered
 * positions; the others contribute l each and sit in buckets keyed by j - i.
 * Coverage = sum(overlapping gaps) + count(non-overlapping) * l.
 */
class CoverageSweep {
 public:
  CoverageSweep(std::span<const std::uint32_t> lengths, std::size_t max_length)
      : n_(lengths.size()), max_length_(max_length) {
    if (max_length_ > n_) throw std::invalid_argument("CoverageSweep: max length exceeds text");
    next_.resize(n_ + 1);
    prev_.resize(n_ + 1);
    alive_.assign(n_ + 1, true);
    in_bucket_.assign(n_ + 1, false);
    bucket_next_.assign(n_ + 1, kNil);
    bucket_prev_.assign(n_ + 1, kNil);
    bucket_head_.assign(n_ + 2, kNil);
    removal_head_.assign(max_length_ + 1, kNil);
    removal_next_.assign(n_, kNil);
    for (std::size_t i = 0; i <= n_; ++i) {
      next_[i] = i + 1;
      prev_[i] = i == 0 ? kNil : i - 1;
    }
    head_ = n_ > 0 ? 0 : n_;
    for (std::size_t i = n_; i-- > 0;) {
      std::size_t v = std::min<std::size_t>(lengths[i], max_length_);
      if (v < max_length_) {
        removal_next_[i] = removal_head_[v];
        removal_head_[v] = i;
      }
    }
    if (max_length_ == 0) return;
    length_ = 1;
    for (std::size_t i = 0; i < n_; ++i) insert_pair(i, i + 1);
    drain_removals(0);
  }

  std::size_t length() const noexcept { return length_; }
  std::size_t max_length() const noexcept { return max_length_; }
  std::size_t coverage() const noexcept { return overlap_sum_ + separate_count_ * length_; }
  std::size_t overlapping_sum() const noexcept { return overlap_sum_; }
  std::size_t non_overlapping_count() const noexcept { return separate_count_; }
  std::size_t pairs_processed() const noexcept { return pairs_created_; }

  /// Live occurrence starts (excluding the sentinel), in increasing order.
  std::vector<std::size_t> live_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = head_; i != n_; i = next_[i]) out.push_back(i);
    return out;
  }

  /// l -> l + 1; returns false once l == max_length.
  bool advance() {
    if (length_ >= max_length_) return false;
    drain_removals(length_);
    for (std::size_t i = bucket_head_[length_]; i != kNil;) {
      std::size_t following = bucket_next_[i];
      unlink_bucket(i);
      overlap_sum_ += length_;
      i = following;
    }
    bucket_head_[length_] = kNil;
    ++length_;
    return true;
  }

 private:
  static constexpr std::size_t kNil = static_cast<std::size_t>(-1);

  void insert_pair(std::size_t i, std::size_t j) {
    ++pairs_created_;
    const std::size_t gap = j - i;
    if (gap < length_) {
      overlap_sum_ += gap;
      return;
    }
    in_bucket_[i] = true;
    bucket_prev_[i] = kNil;
    bucket_next_[i] = bucket_head_[gap];
    if (bucket_head_[gap] != kNil) bucket_prev_[bucket_head_[gap]] = i;
    bucket_head_[gap] = i;
    ++separate_count_;
  }

  void unlink_bucket(std::size_t i) {
    const std::size_t gap = next_[i] - i;
    if (bucket_prev_[i] != kNil) bucket_next_[bucket_prev_[i]] = bucket_next_[i];
    else bucket_head_[gap] = bucket_next_[i];
    if (bucket_next_[i] != kNil) bucket_prev_[bucket_next_[i]] = bucket_prev_[i];
    in_bucket_[i] = false;
    --separate_count_;
  }

  void erase_pair(std::size_t i) {
    if (in_bucket_[i]) unlink_bucket(i);
    else overlap_sum_ -= next_[i] - i;
  }

  void remove_position(std::size_t q) {
    const std::size_t before = prev_[q];
    const std::size_t after = next_[q];
    if (before != kNil) erase_pair(before);
    erase_pair(q);
    alive_[q] = false;
    prev_[after] = before;
    if (before != kNil) {
      next_[before] = after;
      insert_pair(before, after);
    } else {
      head_ = after;
    }
  }

  void drain_removals(std::size_t v) {
    for (std::size_t i = removal_head_[v]; i != kNil; i = removal_next_[i]) remove_position(i);
  }

  std::size_t n_;
  std::size_t max_length_;
  std::size_t length_ = 0;
  std::size_t head_ = 0;
  std::size_t overlap_sum_ = 0;
  std::size_t separate_count_ = 0;
  std::size_t pairs_created_ = 0;
  std::vector<std::size_t> next_, prev_;
  std::vector<bool> alive_;
  std::vector<bool> in_bucket_;
  std::vector<std::size_t> bucket_next_, bucket_prev_, bucket_head_;
  std::vector<std::size_t> removal_head_, removal_next_;
};

/// Covered_k^Ham(T[0, l-1], T) for l = 0..n given PREF_k (entry 0 is 0).
inline std::vector<std::size_t> prefix_coverage(const Text& t,
                                                std::span<const std::uint32_t> pref) {
  if (pref.size() != t.size()) {
    throw std::invalid_argument("prefix_coverage: PREF_k length differs from text length");
  }
  const std::size_t n = t.size();
  std::vector<std::size_t> coverage(n + 1, 0);
  if (n == 0) return coverage;
  CoverageSweep sweep(pref, n);
  do {
    coverage[sweep.length()] = sweep.coverage();
  } while (sweep.advance());
  return coverage;
}

inline std::vector<std::size_t> prefix_coverage(const Text& t, std::size_t k) {
  auto pref = pref_k(t, k);
  return prefix_coverage(t, pref);
}

/// Coverage of T[a, b] for every factor; row a holds b = a..n-1.
class FactorCoverageTable {
 public:
  FactorCoverageTable() = default;
  explicit FactorCoverageTable(std::size_t n) : rows_(n) {
    for (std::size_t a = 0; a < n; ++a) rows_[a].assign(n - a, 0);
  }

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t operator()(std::size_t a, std::size_t b) const { return rows_[a][b - a]; }
  std::size_t& operator()(std::size_t a, std::size_t b) { return rows_[a][b - a]; }
  const std::vector<std::size_t>& row(std::size_t a) const { return rows_[a]; }
  std::vector<std::size_t>& row(std::size_t a) { return rows_[a]; }

 private:
  std::vector<std::vector<std::size_t>> rows_;
};

/// Coverages of T[a, a..n-1] from row a of an lcp_k table.
inline std::vector<std::size_t> factor_coverage_row(const LcpKTable& lcp, std::size_t a) {
  const std::size_t n = lcp.size();
  std::vector<std::size_t> out(n - a, 0);
  CoverageSweep sweep(lcp.row(a), n - a);
  do {
    out[sweep.length() - 1] = sweep.coverage();
  } while (sweep.advance());
  return out;
}

inline FactorCoverageTable factor_coverage_all(const LcpKTable& lcp, std::size_t threads = 1) {
  const std::size_t n = lcp.size();
  FactorCoverageTable table(n);
  parallel_for(n, threads, [&](std::size_t a) { table.row(a) = factor_coverage_row(lcp, a); });
  return table;
}

inline FactorCoverageTable factor_coverage_all(const Text& t, std::size_t k, std::size_t threads = 1) {
  return factor_coverage_all(lcp_k_all_pairs(t, k), threads);
}

/// A distinct factor string, identified by its leftmost occurrence.
struct RestrictedEntry {
  std::size_t start;
  std::size_t end;  // inclusive
  std::optional<std::size_t> threshold;
};

namespace detail {

// Minimal l <= k with coverage(a, b) == target over candidate factors of the
// region [offset, offset + m) of `text`; lengths limited to max_len.
inline std::vector<RestrictedEntry> k_restricted_search(const Text& text, const Text& region,
                                                        std::size_t offset, std::size_t max_len,
                                                        std::size_t k, std::size_t threads) {
  const std::size_t target = text.size();
  const std::size_t m = region.size();
  auto canonical = leftmost_factor_mask(region);
  std::vector<std::vector<std::optional<std::size_t>>> best(m);
  for (std::size_t a = 0; a < m; ++a) best[a].resize(std::min(max_len, m - a));
  for (std::size_t budget = 0; budget <= k; ++budget) {
    LcpKTable lcp = lcp_k_all_pairs(text, budget);
    parallel_for(m, threads, [&](std::size_t a) {
      if (best[a].empty()) return;
      const std::size_t anchor = offset + a;
      CoverageSweep sweep(lcp.row(anchor), std::min(best[a].size(), text.size() - anchor));
      do {
        auto& slot = best[a][sweep.length() - 1];
        if (!slot && sweep.coverage() == target) slot = budget;
      } while (sweep.advance());
    });
  }
  std::vector<RestrictedEntry> out;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t len = 1; len <= best[a].size(); ++len) {
      if (!canonical[a][len - 1]) continue;
      out.push_back({a, a + len - 1, best[a][len - 1]});
    }
  }
  std::sort(out.begin(), out.end(), [](const RestrictedEntry& x, const RestrictedEntry& y) {
    return std::pair(x.start, x.end) < std::pair(y.start, y.end);
  });
  return out;
}

}  // namespace detail

/// Every distinct proper factor with the least l <= k making it an
/// l-approximate cover, or none.
inline std::vector<RestrictedEntry> k_restricted_covers(const Text& t, std::size_t k,
                                                        std::size_t threads = 1) {
  if (t.size() < 2) return {};
  return detail::k_restricted_search(t, t, 0, t.size() - 1, k, threads);
}

/// Same for seeds (2|C| <= |T|): covers of the wildcard-padded text whose
/// candidates come from the original text.
inline std::vector<RestrictedEntry> k_restricted_seeds(const Text& t, std::size_t k,
                                                       std::size_t threads = 1) {
  if (t.size() < 2) return {};
  return detail::k_restricted_search(pad_for_seed(t), t, t.size(), t.size() / 2, k, threads);
}

struct EnhancedCover {
  std::size_t start;
  std::size_t length;
  std::size_t coverage;
};

/// Proper border lengths of t, ascending, via the failure function.
inline std::vector<std::size_t> border_lengths(const Text& t) {
  const std::size_t n = t.size();
  if (n == 0) return {};
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1, len = 0; i < n; ++i) {
    while (len > 0 && t[i] != t[len]) len = fail[len];
    if (t[i] == t[len]) ++len;
    fail[i + 1] = len;
  }
  std::vector<std::size_t> out;
  for (std::size_t len = fail[n]; len > 0; len = fail[len]) out.push_back(len);
  std::reverse(out.begin(), out.end());
  return out;
}

/*
 * Border of t maximizing Hamming k-coverage; ties go to the shorter border.
 * Border lengths come from literal equality.
 */
inline std::optional<EnhancedCover> enhanced_cover_exact_border(const Text& t, std::size_t k) {
  auto borders = border_lengths(t);
  if (borders.empty()) return std::nullopt;
  auto coverage = prefix_coverage(t, k);
  std::optional<EnhancedCover> best;
  for (std::size_t len : borders) {
    if (!best || coverage[len] > best->coverage) best = EnhancedCover{0, len, coverage[len]};
  }
  return best;
}

/*
 * Proper factor C with Ham(C, prefix) <= k and Ham(C, suffix) <= k
 * maximizing k-coverage; ties go to shorter, then leftmost.
 */
inline std::optional<EnhancedCover> enhanced_cover_approx_border(const Text& t, std::size_t k,
                                                                 std::size_t threads = 1) {
  const std::size_t n = t.size();
  if (n < 2) return std::nullopt;
  LcpKTable lcp = lcp_k_all_pairs(t, k);
  FactorCoverageTable coverage = factor_coverage_all(lcp, threads);
  std::optional<EnhancedCover> best;
  for (std::size_t len = 1; len < n; ++len) {
    for (std::size_t a = 0; a + len <= n; ++a) {
      if (lcp(a, 0) < len || lcp(a, n - len) < len) continue;
      std::size_t cov = coverage(a, a + len - 1);
      if (!best || cov > best->coverage) best = EnhancedCover{a, len, cov};
    }
  }
  return best;
}

}  // namespace aqp
