#pragma once

// h-waves of the Levenshtein table: for every diagonal d = col - row the last
// row whose cell holds a value <= h (rows and columns count consumed letters,
// so cell (0, 0) is the empty-prefix origin).

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "aqp/text.hpp"

namespace aqp {

/// Row value of a diagonal that holds no cell within the budget.
inline constexpr std::ptrdiff_t kBelowWave = -1;

namespace detail {

/*
 * Furthest-reaching rows for budgets 0..h on an m1 x m2 unit-cost table.
 * extend(r, c) returns how many letters match from row r / column c on.
 * waves[g][d + g] = L^g(d) for d in [-g, g].
 */
template <typename Extend>
void furthest_reaching(std::size_t m1, std::size_t m2, std::size_t h, Extend&& extend,
                       std::vector<std::vector<std::ptrdiff_t>>& waves) {
  const auto rows = static_cast<std::ptrdiff_t>(m1);
  const auto cols = static_cast<std::ptrdiff_t>(m2);
  waves.resize(h + 1);
  for (std::size_t g = 0; g <= h; ++g) {
    const auto budget = static_cast<std::ptrdiff_t>(g);
    auto& wave = waves[g];
    wave.assign(2 * g + 1, kBelowWave);
    const std::vector<std::ptrdiff_t>* prev = g > 0 ? &waves[g - 1] : nullptr;
    auto previous = [&](std::ptrdiff_t d) -> std::ptrdiff_t {
      if (!prev || d < -(budget - 1) || d > budget - 1) return kBelowWave;
      return (*prev)[static_cast<std::size_t>(d + budget - 1)];
    };
    for (std::ptrdiff_t d = -budget; d <= budget; ++d) {
      if (d > cols || -d > rows) continue;
      std::ptrdiff_t row = std::max<std::ptrdiff_t>(0, -d);
      if (std::ptrdiff_t r = previous(d); r != kBelowWave) row = std::max(row, r + 1);
      if (std::ptrdiff_t r = previous(d - 1); r != kBelowWave) row = std::max(row, r);
      if (std::ptrdiff_t r = previous(d + 1); r != kBelowWave) row = std::max(row, r + 1);
      row = std::min({row, rows, cols - d});
      if (row < rows && row + d < cols) {
        row += static_cast<std::ptrdiff_t>(
            extend(static_cast<std::size_t>(row), static_cast<std::size_t>(row + d)));
        row = std::min({row, rows, cols - d});
      }
      wave[static_cast<std::size_t>(d + budget)] = row;
    }
  }
}

}  // namespace detail

/*
 * Waves L^0..L^h for a pair of strings under the Levenshtein distance, with
 * support for prepending letters to the second string. Wildcards are not
 * supported here; weighted costs go through the penalty-matrix route.
 *
 * prepend() recomputes the waves for the extended pair by the furthest-reaching
 * recursion, O(h^2) recursion steps plus slides.
 */
class HWaves {
 public:
  HWaves(const Text& t1, const Text& t2, std::size_t h) : t1_(t1.symbols()), budget_(h) {
    if (t1.has_wildcard() || t2.has_wildcard()) {
      throw std::invalid_argument("HWaves: wildcards are not supported under Levenshtein waves");
    }
    reversed2_.assign(t2.symbols().rbegin(), t2.symbols().rend());
    recompute();
  }

  std::size_t budget() const noexcept { return budget_; }
  std::size_t rows() const noexcept { return t1_.size(); }
  std::size_t cols() const noexcept { return reversed2_.size(); }

  /// L^g(d); kBelowWave when no cell of diagonal d is within g.
  std::ptrdiff_t operator()(std::size_t g, std::ptrdiff_t d) const {
    const auto budget = static_cast<std::ptrdiff_t>(g);
    if (g > budget_ || d < -budget || d > budget) throw std::out_of_range("HWaves: index");
    return waves_[g][static_cast<std::size_t>(d + budget)];
  }

  std::span<const std::ptrdiff_t> wave(std::size_t g) const { return waves_.at(g); }

  /// Lev(t1, t2) if it is <= h.
  std::optional<std::size_t> distance() const {
    const auto d = static_cast<std::ptrdiff_t>(cols()) - static_cast<std::ptrdiff_t>(rows());
    for (std::size_t g = 0; g <= budget_; ++g) {
      if (std::abs(d) <= static_cast<std::ptrdiff_t>(g) &&
          (*this)(g, d) == static_cast<std::ptrdiff_t>(rows())) {
        return g;
      }
    }
    return std::nullopt;
  }

  /// t2 := x . t2
  void prepend(Symbol x) {
    if (is_wildcard(x)) throw std::invalid_argument("HWaves: wildcards are not supported");
    reversed2_.push_back(x);
    recompute();
  }

  Symbol second(std::size_t c) const noexcept { return reversed2_[reversed2_.size() - 1 - c]; }

  friend bool operator==(const HWaves& x, const HWaves& y) {
    return x.budget_ == y.budget_ && x.waves_ == y.waves_;
  }

 private:
  void recompute() {
    auto extend = [&](std::size_t r, std::size_t c) {
      std::size_t run = 0;
      while (r + run < t1_.size() && c + run < reversed2_.size() &&
             t1_[r + run] == second(c + run)) {
        ++run;
      }
      return run;
    };
    detail::furthest_reaching(t1_.size(), reversed2_.size(), budget_, extend, waves_);
  }

  std::vector<Symbol> t1_;
  std::vector<Symbol> reversed2_;
  std::size_t budget_;
  std::vector<std::vector<std::ptrdiff_t>> waves_;
};

inline HWaves build_waves(const Text& t1, const Text& t2, std::size_t h) {
  return HWaves(t1, t2, h);
}

}  // namespace aqp
