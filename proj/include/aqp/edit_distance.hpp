#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqp/text.hpp"

namespace aqp {

/// Exact integer edit costs.
using Cost = std::int64_t;

/// Larger than any cost reachable on the texts this library handles.
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max() / 4;

/*
 * Substitution, insertion and deletion costs over a sigma-letter alphabet.
 * The wildcard has implicit zero cost against every letter and against the
 * empty string.
 */
class PenaltyMatrix {
 public:
  PenaltyMatrix() = default;

  PenaltyMatrix(std::size_t sigma, std::vector<Cost> substitution, std::vector<Cost> insertion,
                std::vector<Cost> deletion)
      : sigma_(sigma),
        sub_(std::move(substitution)),
        ins_(std::move(insertion)),
        del_(std::move(deletion)) {
    if (sub_.size() != sigma_ * sigma_ || ins_.size() != sigma_ || del_.size() != sigma_) {
      throw std::invalid_argument("PenaltyMatrix: table dimensions do not match alphabet size");
    }
    for (const auto* v : {&sub_, &ins_, &del_}) {
      for (Cost c : *v) {
        if (c < 0) throw std::invalid_argument("PenaltyMatrix: negative cost");
      }
    }
  }

  /// Levenshtein costs.
  static PenaltyMatrix unit(std::size_t sigma) {
    std::vector<Cost> sub(sigma * sigma, 1);
    for (std::size_t x = 0; x < sigma; ++x) sub[x * sigma + x] = 0;
    return PenaltyMatrix(sigma, std::move(sub), std::vector<Cost>(sigma, 1),
                         std::vector<Cost>(sigma, 1));
  }

  /// Same as the constructor but rejects matrices that do not induce a metric.
  static PenaltyMatrix checked(std::size_t sigma, std::vector<Cost> substitution,
                               std::vector<Cost> insertion, std::vector<Cost> deletion);

  std::size_t alphabet_size() const noexcept { return sigma_; }

  Cost substitute(Symbol x, Symbol y) const noexcept {
    if (is_wildcard(x) || is_wildcard(y)) return 0;
    return sub_[static_cast<std::size_t>(x) * sigma_ + y];
  }
  Cost insert(Symbol x) const noexcept { return is_wildcard(x) ? 0 : ins_[x]; }
  Cost remove(Symbol x) const noexcept { return is_wildcard(x) ? 0 : del_[x]; }

  Cost max_operation_cost() const noexcept {
    Cost m = 0;
    for (const auto* v : {&sub_, &ins_, &del_}) {
      for (Cost c : *v) m = std::max(m, c);
    }
    return m;
  }

  bool covers(const Text& t) const noexcept {
    for (Symbol s : t.symbols()) {
      if (!is_wildcard(s) && s >= sigma_) return false;
    }
    return true;
  }

  const std::vector<Cost>& substitution_table() const noexcept { return sub_; }
  const std::vector<Cost>& insertion_costs() const noexcept { return ins_; }
  const std::vector<Cost>& deletion_costs() const noexcept { return del_; }

  friend bool operator==(const PenaltyMatrix&, const PenaltyMatrix&) = default;

 private:
  std::size_t sigma_ = 0;
  std::vector<Cost> sub_;
  std::vector<Cost> ins_;
  std::vector<Cost> del_;
};

enum class MetricAxiom { identity, symmetry, triangle };

/// One violated axiom. Points index the alphabet; std::nullopt stands for the empty string.
struct MetricViolation {
  MetricAxiom axiom;
  std::vector<std::optional<Symbol>> points;
  Cost lhs;
  Cost rhs;
};

struct PenaltyVerdict {
  std::vector<MetricViolation> violations;
  bool valid() const noexcept { return violations.empty(); }
  std::string describe() const;
};

/// Checks identity of indiscernibles, symmetry and the triangle inequality over
/// the alphabet extended by the empty string.
inline PenaltyVerdict validate_penalty_matrix(const PenaltyMatrix& p) {
  PenaltyVerdict verdict;
  const std::size_t sigma = p.alphabet_size();
  // point sigma is the empty string
  auto cost = [&](std::size_t x, std::size_t y) -> Cost {
    if (x == sigma && y == sigma) return 0;
    if (x == sigma) return p.insert(static_cast<Symbol>(y));
    if (y == sigma) return p.remove(static_cast<Symbol>(x));
    return p.substitute(static_cast<Symbol>(x), static_cast<Symbol>(y));
  };
  auto label = [&](std::size_t x) -> std::optional<Symbol> {
    if (x == sigma) return std::nullopt;
    return static_cast<Symbol>(x);
  };
  for (std::size_t x = 0; x <= sigma; ++x) {
    for (std::size_t y = 0; y <= sigma; ++y) {
      Cost c = cost(x, y);
      if ((x == y && c != 0) || (x != y && c <= 0)) {
        verdict.violations.push_back({MetricAxiom::identity, {label(x), label(y)}, c, 0});
      }
      if (x < y && c != cost(y, x)) {
        verdict.violations.push_back({MetricAxiom::symmetry, {label(x), label(y)}, c, cost(y, x)});
      }
    }
  }
  for (std::size_t x = 0; x <= sigma; ++x) {
    for (std::size_t y = 0; y <= sigma; ++y) {
      for (std::size_t z = 0; z <= sigma; ++z) {
        if (cost(x, z) > cost(x, y) + cost(y, z)) {
          verdict.violations.push_back({MetricAxiom::triangle,
                                        {label(x), label(y), label(z)},
                                        cost(x, z),
                                        cost(x, y) + cost(y, z)});
        }
      }
    }
  }
  return verdict;
}

inline std::string PenaltyVerdict::describe() const {
  if (valid()) return "valid";
  std::string out;
  for (const auto& v : violations) {
    switch (v.axiom) {
      case MetricAxiom::identity: out += "identity"; break;
      case MetricAxiom::symmetry: out += "symmetry"; break;
      case MetricAxiom::triangle: out += "triangle"; break;
    }
    out += " violated at (";
    for (std::size_t i = 0; i < v.points.size(); ++i) {
      if (i) out += ",";
      out += v.points[i] ? std::to_string(*v.points[i]) : std::string("eps");
    }
    out += "): " + std::to_string(v.lhs) + " vs " + std::to_string(v.rhs) + "\n";
  }
  return out;
}

inline PenaltyMatrix PenaltyMatrix::checked(std::size_t sigma, std::vector<Cost> substitution,
                                            std::vector<Cost> insertion,
                                            std::vector<Cost> deletion) {
  PenaltyMatrix p(sigma, std::move(substitution), std::move(insertion), std::move(deletion));
  auto verdict = validate_penalty_matrix(p);
  if (!verdict.valid()) {
    throw std::invalid_argument("PenaltyMatrix: not a metric: " + verdict.describe());
  }
  return p;
}

inline void require_covered(const PenaltyMatrix& p, std::span<const Symbol> s) {
  for (Symbol x : s) {
    if (!is_wildcard(x) && x >= p.alphabet_size()) {
      throw std::invalid_argument("edit distance: symbol outside penalty matrix alphabet");
    }
  }
}

/// Minimum cost of transforming u into v.
inline Cost edit_distance(std::span<const Symbol> u, std::span<const Symbol> v,
                          const PenaltyMatrix& p) {
  require_covered(p, u);
  require_covered(p, v);
  std::vector<Cost> prev(v.size() + 1), cur(v.size() + 1);
  prev[0] = 0;
  for (std::size_t j = 0; j < v.size(); ++j) prev[j + 1] = prev[j] + p.insert(v[j]);
  for (std::size_t i = 0; i < u.size(); ++i) {
    cur[0] = prev[0] + p.remove(u[i]);
    for (std::size_t j = 0; j < v.size(); ++j) {
      cur[j + 1] = std::min({prev[j] + p.substitute(u[i], v[j]), cur[j] + p.insert(v[j]),
                             prev[j + 1] + p.remove(u[i])});
    }
    std::swap(prev, cur);
  }
  return prev[v.size()];
}

inline Cost edit_distance(const Text& u, const Text& v, const PenaltyMatrix& p) {
  return edit_distance(u.view(), v.view(), p);
}

/*
 * D_{a,a'}: cell (b, b') holds ed(T[a,b], T[a',b']) for b in [a-1, n-1] and
 * b' in [a'-1, n-1]. Indices outside that range read as kInfiniteCost.
 */
class DTable {
 public:
  DTable(const Text& t, std::size_t a, std::size_t a2, const PenaltyMatrix& p)
      : n_(t.size()), a_(a), a2_(a2) {
    if (a > n_ || a2 > n_) throw std::out_of_range("DTable: origin outside [0, n]");
    require_covered(p, t.view());
    rows_ = n_ - a_ + 1;
    cols_ = n_ - a2_ + 1;
    cells_.assign(rows_ * cols_, 0);
    for (std::size_t c = 1; c < cols_; ++c) {
      cells_[c] = cells_[c - 1] + p.insert(t[a2_ + c - 1]);
    }
    for (std::size_t r = 1; r < rows_; ++r) {
      Symbol x = t[a_ + r - 1];
      Cost* row = &cells_[r * cols_];
      const Cost* up = &cells_[(r - 1) * cols_];
      row[0] = up[0] + p.remove(x);
      for (std::size_t c = 1; c < cols_; ++c) {
        Symbol y = t[a2_ + c - 1];
        row[c] = std::min({up[c - 1] + p.substitute(x, y), row[c - 1] + p.insert(y),
                           up[c] + p.remove(x)});
      }
    }
  }

  std::size_t origin_row() const noexcept { return a_; }
  std::size_t origin_col() const noexcept { return a2_; }

  Cost at(std::ptrdiff_t b, std::ptrdiff_t b2) const noexcept {
    auto r = b - static_cast<std::ptrdiff_t>(a_) + 1;
    auto c = b2 - static_cast<std::ptrdiff_t>(a2_) + 1;
    if (r < 0 || c < 0 || r >= static_cast<std::ptrdiff_t>(rows_) ||
        c >= static_cast<std::ptrdiff_t>(cols_)) {
      return kInfiniteCost;
    }
    return cells_[static_cast<std::size_t>(r) * cols_ + static_cast<std::size_t>(c)];
  }

  /// Row b as values for b' = a'-1 .. n-1.
  std::span<const Cost> row(std::ptrdiff_t b) const {
    auto r = b - static_cast<std::ptrdiff_t>(a_) + 1;
    if (r < 0 || r >= static_cast<std::ptrdiff_t>(rows_)) {
      throw std::out_of_range("DTable::row: row outside table");
    }
    return {cells_.data() + static_cast<std::size_t>(r) * cols_, cols_};
  }

 private:
  std::size_t n_, a_, a2_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Cost> cells_;
};

inline DTable build_dtable(const Text& t, std::size_t a, std::size_t a2, const PenaltyMatrix& p) {
  return DTable(t, a, a2, p);
}

}  // namespace aqp
