#pragma once

// Core string types: symbol texts over a finite alphabet with an optional
// wildcard, byte alphabets, inclusive interval sets and Hamming distance.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aqp {

using Symbol = std::uint16_t;

/// Reserved identifier for the wildcard symbol; it matches every symbol.
inline constexpr Symbol kWildcard = 0xFFFF;

inline constexpr bool is_wildcard(Symbol s) noexcept { return s == kWildcard; }

/// Symbol equality on partial words.
inline constexpr bool symbols_match(Symbol x, Symbol y) noexcept {
  return x == y || x == kWildcard || y == kWildcard;
}

/*
 * A sequence of dense symbol identifiers in [0, sigma) plus the wildcard.
 * Immutable after construction.
 */
class Text {
 public:
  Text() = default;

  Text(std::vector<Symbol> symbols, std::size_t sigma)
      : symbols_(std::move(symbols)), sigma_(sigma) {
    for (Symbol s : symbols_) {
      if (!is_wildcard(s) && s >= sigma_) {
        throw std::invalid_argument("Text: symbol identifier outside alphabet");
      }
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  std::size_t alphabet_size() const noexcept { return sigma_; }

  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

  std::span<const Symbol> view() const noexcept { return symbols_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  bool has_wildcard() const noexcept {
    return std::find(symbols_.begin(), symbols_.end(), kWildcard) != symbols_.end();
  }

  /// T[i, j] inclusive; j < i yields the empty text.
  Text factor(std::size_t i, std::ptrdiff_t j) const {
    if (j < static_cast<std::ptrdiff_t>(i)) return Text({}, sigma_);
    if (static_cast<std::size_t>(j) >= size()) {
      throw std::out_of_range("Text::factor: end beyond text");
    }
    return Text(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(i),
                                    symbols_.begin() + j + 1),
                sigma_);
  }

  Text suffix(std::size_t i) const {
    return factor(i, static_cast<std::ptrdiff_t>(size()) - 1);
  }

  /// rot_b(XY) = YX with |X| = b.
  Text rotate(std::size_t b) const {
    if (b > size()) throw std::out_of_range("Text::rotate: shift beyond length");
    std::vector<Symbol> out(symbols_.begin() + static_cast<std::ptrdiff_t>(b), symbols_.end());
    out.insert(out.end(), symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(b));
    return Text(std::move(out), sigma_);
  }

  Text concat(const Text& other) const {
    std::vector<Symbol> out = symbols_;
    out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
    return Text(std::move(out), std::max(sigma_, other.sigma_));
  }

  friend bool operator==(const Text&, const Text&) = default;

 private:
  std::vector<Symbol> symbols_;
  std::size_t sigma_ = 0;
};

/*
 * Maps bytes to dense symbol identifiers. One byte (default '?') is
 * reserved for the wildcard and may not appear in the alphabet.
 */
class Alphabet {
 public:
  explicit Alphabet(std::string_view letters, char wildcard = '?') : wildcard_(wildcard) {
    std::fill(std::begin(code_), std::end(code_), kUnmapped);
    for (char c : letters) {
      if (c == wildcard) {
        throw std::invalid_argument("Alphabet: wildcard byte declared as a letter");
      }
      auto u = static_cast<unsigned char>(c);
      if (code_[u] != kUnmapped) {
        throw std::invalid_argument("Alphabet: duplicate letter");
      }
      code_[u] = static_cast<Symbol>(letters_.size());
      letters_.push_back(c);
    }
  }

  /// Alphabet of the distinct non-wildcard bytes of `text`, in byte order.
  static Alphabet infer(std::string_view text, char wildcard = '?') {
    std::string letters;
    for (char c : text) {
      if (c != wildcard && letters.find(c) == std::string::npos) letters.push_back(c);
    }
    std::sort(letters.begin(), letters.end());
    return Alphabet(letters, wildcard);
  }

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& letters() const noexcept { return letters_; }
  char wildcard() const noexcept { return wildcard_; }

  bool contains(char c) const noexcept {
    return code_[static_cast<unsigned char>(c)] != kUnmapped;
  }

  Text encode(std::string_view s) const {
    std::vector<Symbol> out;
    out.reserve(s.size());
    for (char c : s) {
      if (c == wildcard_) {
        out.push_back(kWildcard);
        continue;
      }
      Symbol code = code_[static_cast<unsigned char>(c)];
      if (code == kUnmapped) {
        throw std::invalid_argument(std::string("Alphabet: byte '") + c + "' not in alphabet");
      }
      out.push_back(code);
    }
    return Text(std::move(out), letters_.size());
  }

  std::string decode(const Text& t) const {
    std::string out;
    out.reserve(t.size());
    for (Symbol s : t.symbols()) out.push_back(is_wildcard(s) ? wildcard_ : letters_.at(s));
    return out;
  }

 private:
  static constexpr Symbol kUnmapped = 0xFFFE;
  Symbol code_[256];
  std::string letters_;
  char wildcard_;
};

/// Hamming distance of equal-length partial words; wildcards match anything.
inline std::size_t hamming_distance(std::span<const Symbol> u, std::span<const Symbol> v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("hamming_distance: lengths differ, distance undefined");
  }
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < u.size(); ++i) mismatches += !symbols_match(u[i], v[i]);
  return mismatches;
}

inline std::size_t hamming_distance(const Text& u, const Text& v) {
  return hamming_distance(u.view(), v.view());
}

/// Inclusive interval [first, last].
struct Interval {
  std::ptrdiff_t first;
  std::ptrdiff_t last;
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/*
 * A family of inclusive intervals. Empty intervals (last < first) are
 * dropped at insertion.
 */
class IntervalSet {
 public:
  IntervalSet() = default;

  void insert(std::ptrdiff_t first, std::ptrdiff_t last) {
    if (last < first) return;
    sorted_ = sorted_ && (intervals_.empty() || intervals_.back().first <= first);
    intervals_.push_back({first, last});
  }

  std::size_t size() const noexcept { return intervals_.size(); }
  bool empty() const noexcept { return intervals_.empty(); }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool sorted_by_start() const noexcept { return sorted_; }

  std::vector<std::ptrdiff_t> starts() const {
    std::vector<std::ptrdiff_t> out;
    for (const auto& iv : intervals_) out.push_back(iv.first);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::vector<Interval> intervals_;
  bool sorted_ = true;
};

namespace detail {

// Intervals must be sorted by left endpoint.
inline std::size_t sorted_union_size(std::span<const Interval> intervals) {
  std::size_t total = 0;
  std::ptrdiff_t covered_to = 0;
  bool any = false;
  for (const auto& iv : intervals) {
    if (iv.last < iv.first) continue;
    std::ptrdiff_t from = any ? std::max(iv.first, covered_to + 1) : iv.first;
    if (iv.last >= from) total += static_cast<std::size_t>(iv.last - from + 1);
    covered_to = any ? std::max(covered_to, iv.last) : iv.last;
    any = true;
  }
  return total;
}

}  // namespace detail

/// |union of intervals|; linear when the intervals arrive in left-endpoint order.
inline std::size_t interval_union_size(const IntervalSet& s) {
  if (s.sorted_by_start()) return detail::sorted_union_size(s.intervals());
  std::vector<Interval> copy = s.intervals();
  std::sort(copy.begin(), copy.end());
  return detail::sorted_union_size(copy);
}

/// The partial word wildcard^n . t . wildcard^n used to reduce seeds to covers.
inline Text pad_for_seed(const Text& t) {
  const std::size_t n = t.size();
  std::vector<Symbol> out(3 * n, kWildcard);
  std::copy(t.symbols().begin(), t.symbols().end(), out.begin() + static_cast<std::ptrdiff_t>(n));
  return Text(std::move(out), t.alphabet_size());
}

/// lcp[i][j] = length of the longest common literal prefix of T[i..] and T[j..]
/// (wildcards compare equal only to wildcards); row and column n are zero.
inline std::vector<std::vector<std::uint32_t>> literal_lcp_table(const Text& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<std::uint32_t>> lcp(n + 1, std::vector<std::uint32_t>(n + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      lcp[i][j] = t[i] == t[j] ? lcp[i + 1][j + 1] + 1 : 0;
    }
  }
  return lcp;
}

/*
 * mask[a][len - 1] is true iff T[a, a+len-1] has no earlier literal
 * occurrence, i.e. a is the leftmost start of that string.
 */
inline std::vector<std::vector<bool>> leftmost_factor_mask(
    const std::vector<std::vector<std::uint32_t>>& lcp) {
  const std::size_t n = lcp.empty() ? 0 : lcp.size() - 1;
  std::vector<std::vector<bool>> mask(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint32_t seen = 0;
    for (std::size_t b = 0; b < a; ++b) seen = std::max(seen, lcp[b][a]);
    mask[a].assign(n - a, false);
    for (std::size_t len = seen + 1; len <= n - a; ++len) mask[a][len - 1] = true;
  }
  return mask;
}

inline std::vector<std::vector<bool>> leftmost_factor_mask(const Text& t) {
  return leftmost_factor_mask(literal_lcp_table(t));
}

}  // namespace aqp
