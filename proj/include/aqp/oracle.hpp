#pragma once

// Brute-force reference implementations, written straight from the
// definitions. Slow on purpose; used by tests and the gadget validator.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqp/edit_coverage.hpp"
#include "aqp/edit_distance.hpp"
#include "aqp/text.hpp"

namespace aqp::oracle {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Plain Levenshtein DP; a wildcard matches any letter and costs nothing to
/// insert or delete, the same convention as the unit penalty matrix.
inline Cost levenshtein(std::span<const Symbol> u, std::span<const Symbol> v) {
  std::vector<std::vector<Cost>> d(u.size() + 1, std::vector<Cost>(v.size() + 1, 0));
  for (std::size_t i = 1; i <= u.size(); ++i) d[i][0] = d[i - 1][0] + (is_wildcard(u[i - 1]) ? 0 : 1);
  for (std::size_t j = 1; j <= v.size(); ++j) d[0][j] = d[0][j - 1] + (is_wildcard(v[j - 1]) ? 0 : 1);
  for (std::size_t i = 1; i <= u.size(); ++i) {
    for (std::size_t j = 1; j <= v.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j - 1] + (symbols_match(u[i - 1], v[j - 1]) ? 0 : 1),
                          d[i - 1][j] + (is_wildcard(u[i - 1]) ? 0 : 1),
                          d[i][j - 1] + (is_wildcard(v[j - 1]) ? 0 : 1)});
    }
  }
  return d[u.size()][v.size()];
}

/// d(s, w) under the metric; nullopt when undefined (Hamming, unequal lengths).
inline std::optional<Cost> distance(std::span<const Symbol> s, std::span<const Symbol> w, Metric metric,
                                    const PenaltyMatrix* p) {
  switch (metric) {
    case Metric::hamming:
      if (s.size() != w.size()) return std::nullopt;
      return static_cast<Cost>(hamming_distance(s, w));
    case Metric::levenshtein:
      return levenshtein(s, w);
    case Metric::edit:
      if (!p) throw std::invalid_argument("oracle: edit distance needs a penalty matrix");
      return edit_distance(s, w, *p);
  }
  return std::nullopt;
}

/// All [i, j] (i <= j) with d(s, t[i, j]) <= k.
inline IntervalSet brute_occurrences(const Text& s, const Text& t, Metric metric, Cost k,
                                     const PenaltyMatrix* p = nullptr) {
  IntervalSet out;
  if (k < 0) return out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i; j < t.size(); ++j) {
      auto d = distance(s.view(), t.view().subspan(i, j - i + 1), metric, p);
      if (d && *d <= k) out.insert(static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j));
    }
  }
  return out;
}

inline std::size_t brute_coverage(const Text& s, const Text& t, Metric metric, Cost k,
                                  const PenaltyMatrix* p = nullptr) {
  std::vector<bool> covered(t.size(), false);
  const IntervalSet occ = brute_occurrences(s, t, metric, k, p);
  for (const auto& iv : occ.intervals()) {
    for (auto x = iv.first; x <= iv.last; ++x) covered[static_cast<std::size_t>(x)] = true;
  }
  return static_cast<std::size_t>(std::count(covered.begin(), covered.end(), true));
}

/// Least k with brute_coverage(s, t, k) == |t|; the candidates are the
/// distances of s to the factors of t. nullopt if no k works.
inline std::optional<Cost> brute_cover_threshold(const Text& s, const Text& t, Metric metric,
                                                 const PenaltyMatrix* p = nullptr) {
  if (t.empty()) return Cost{0};
  std::vector<Cost> candidates;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i; j < t.size(); ++j) {
      if (auto d = distance(s.view(), t.view().subspan(i, j - i + 1), metric, p)) candidates.push_back(*d);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (Cost k : candidates) {
    if (brute_coverage(s, t, metric, k, p) == t.size()) return k;
  }
  return std::nullopt;
}

struct FactorMinK {
  std::size_t start;  // leftmost occurrence in t
  std::size_t end;    // inclusive
  std::optional<Cost> threshold;
};

/*
 * Least threshold for every distinct factor of t: proper factors as covers
 * of t, or factors with 2|C| <= |t| as covers of the wildcard-padded text.
 */
inline std::vector<FactorMinK> brute_restricted_min_k(const Text& t, Metric metric, bool seeds,
                                                      const PenaltyMatrix* p = nullptr) {
  const std::size_t n = t.size();
  const Text target = seeds ? pad_for_seed(t) : t;
  const std::size_t max_len = seeds ? n / 2 : (n == 0 ? 0 : n - 1);
  std::vector<FactorMinK> out;
  std::vector<Text> seen;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t len = 1; len <= max_len && a + len <= n; ++len) {
      Text c = t.factor(a, static_cast<std::ptrdiff_t>(a + len) - 1);
      if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
      seen.push_back(c);
      out.push_back({a, a + len - 1, brute_cover_threshold(c, target, metric, p)});
    }
  }
  std::sort(out.begin(), out.end(), [](const FactorMinK& x, const FactorMinK& y) {
    return std::pair(x.start, x.end) < std::pair(y.start, y.end);
  });
  return out;
}

/// Indices into `entries` with the smallest defined threshold.
inline std::vector<std::size_t> argmin_factors(const std::vector<FactorMinK>& entries) {
  std::optional<Cost> best;
  for (const auto& e : entries) {
    if (e.threshold && (!best || *e.threshold < *best)) best = e.threshold;
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < entries.size(); ++x) {
    if (best && entries[x].threshold == best) out.push_back(x);
  }
  return out;
}

/// Lexicographically smallest C in Sigma^c with full k-coverage of t.
inline std::optional<Text> brute_general_cover_exists(const Text& t, std::size_t c, Metric metric, Cost k,
                                                      const PenaltyMatrix* p = nullptr,
                                                      std::uint64_t budget = kDefaultBudget) {
  const std::size_t sigma = t.alphabet_size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c; ++i) {
    if (sigma != 0 && total > budget / sigma) {
      throw BudgetExceeded("brute_general_cover_exists: sigma^c exceeds the enumeration budget");
    }
    total *= sigma;
  }
  if (sigma == 0) return c == 0 && t.empty() ? std::optional<Text>(Text({}, 0)) : std::nullopt;
  std::vector<Symbol> digits(c, 0);
  for (std::uint64_t x = 0; x < total; ++x) {
    Text candidate(digits, sigma);
    if (brute_coverage(candidate, t, metric, k, p) == t.size()) return candidate;
    for (std::size_t pos = c; pos-- > 0;) {
      if (++digits[pos] < sigma) break;
      digits[pos] = 0;
    }
  }
  return std::nullopt;
}

/// Lexicographically smallest binary S with Ham(S, S_i) <= k for all i.
inline std::optional<std::string> brute_consensus(const std::vector<std::string>& strings, std::size_t k,
                                                  std::uint64_t budget = kDefaultBudget) {
  if (strings.empty()) throw std::invalid_argument("brute_consensus: no strings");
  const std::size_t len = strings.front().size();
  if (len >= 63 || (std::uint64_t{1} << len) * strings.size() > budget) {
    throw BudgetExceeded("brute_consensus: m * 2^l exceeds the enumeration budget");
  }
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
    std::string s(len, '0');
    for (std::size_t i = 0; i < len; ++i) {
      if ((x >> (len - 1 - i)) & 1) s[i] = '1';
    }
    bool ok = true;
    for (const auto& si : strings) {
      std::size_t mismatches = 0;
      for (std::size_t i = 0; i < len; ++i) mismatches += s[i] != si[i];
      if (mismatches > k) {
        ok = false;
        break;
      }
    }
    if (ok) return s;
  }
  return std::nullopt;
}

/// Whether c is an exact cover of t: every position lies in a literal occurrence.
inline bool is_exact_cover(const Text& c, const Text& t) {
  if (c.empty()) return t.empty();
  std::vector<bool> covered(t.size(), false);
  for (std::size_t i = 0; i + c.size() <= t.size(); ++i) {
    bool match = true;
    for (std::size_t x = 0; x < c.size() && match; ++x) match = t[i + x] == c[x];
    if (!match) continue;
    for (std::size_t x = 0; x < c.size(); ++x) covered[i + x] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

/// Proper factors of t (leftmost occurrences) that are exact covers.
inline std::vector<std::pair<std::size_t, std::size_t>> exact_covers(const Text& t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<Text> seen;
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t len = 1; a + len <= t.size() && len < t.size(); ++len) {
      Text c = t.factor(a, static_cast<std::ptrdiff_t>(a + len) - 1);
      if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
      seen.push_back(c);
      if (is_exact_cover(c, t)) out.emplace_back(a, a + len - 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace aqp::oracle
