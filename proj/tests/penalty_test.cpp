#include <gtest/gtest.h>

#include "support.hpp"

using namespace aqp;
using aqp::testing::text;

namespace {

// Exhaustive alignment enumeration.
Cost alignment_min(std::span<const Symbol> u, std::span<const Symbol> v, const PenaltyMatrix& p) {
  if (u.empty() && v.empty()) return 0;
  Cost best = kInfiniteCost;
  if (!u.empty() && !v.empty()) best = std::min(best, p.substitute(u[0], v[0]) + alignment_min(u.subspan(1), v.subspan(1), p));
  if (!u.empty()) best = std::min(best, p.remove(u[0]) + alignment_min(u.subspan(1), v, p));
  if (!v.empty()) best = std::min(best, p.insert(v[0]) + alignment_min(u, v.subspan(1), p));
  return best;
}

}  // namespace

TEST(EditDistance, UnitExamples) {
  auto unit = PenaltyMatrix::unit(2);
  EXPECT_EQ(edit_distance(text("ab"), text("ab"), unit), 0);
  EXPECT_EQ(edit_distance(text("ab", 2), Text({}, 2), unit), 2);
  EXPECT_EQ(edit_distance(text("aa", 2), text("b", 2), unit), 2);
}

TEST(EditDistance, MatchesAlignmentEnumeration) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 200; ++rep) {
    auto p = rep % 2 ? PenaltyMatrix::unit(3) : aqp::testing::random_metric(rng, 3);
    Text u = aqp::testing::random_text(rng, aqp::testing::uniform(rng, 0, 5), 3, 0.15);
    Text v = aqp::testing::random_text(rng, aqp::testing::uniform(rng, 0, 5), 3, 0.15);
    EXPECT_EQ(edit_distance(u, v, p), alignment_min(u.view(), v.view(), p));
  }
}

TEST(EditDistance, UnitEqualsLevenshteinReference) {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 300; ++rep) {
    Text u = aqp::testing::random_text(rng, aqp::testing::uniform(rng, 0, 12), 3);
    Text v = aqp::testing::random_text(rng, aqp::testing::uniform(rng, 0, 12), 3);
    EXPECT_EQ(edit_distance(u, v, PenaltyMatrix::unit(3)), oracle::levenshtein(u.view(), v.view()));
  }
}

TEST(EditDistance, WildcardsAreFree) {
  auto unit = PenaltyMatrix::unit(2);
  EXPECT_EQ(edit_distance(text("a?b", 2), text("ab", 2), unit), 0);
  EXPECT_EQ(edit_distance(text("??", 2), Text({}, 2), unit), 0);
  EXPECT_EQ(edit_distance(text("?", 2), text("b", 2), unit), 0);
}

TEST(PenaltyMatrix, Validation) {
  EXPECT_TRUE(validate_penalty_matrix(PenaltyMatrix::unit(4)).valid());
  // c(a,b) = 5 > c(a,eps) + c(eps,b) = 2
  PenaltyMatrix tri(2, {0, 5, 5, 0}, {1, 1}, {1, 1});
  auto verdict = validate_penalty_matrix(tri);
  ASSERT_FALSE(verdict.valid());
  EXPECT_TRUE(std::any_of(verdict.violations.begin(), verdict.violations.end(),
                          [](const MetricViolation& v) { return v.axiom == MetricAxiom::triangle; }));
  PenaltyMatrix asym(2, {0, 1, 2, 0}, {2, 2}, {2, 2});
  auto v2 = validate_penalty_matrix(asym);
  ASSERT_FALSE(v2.valid());
  EXPECT_EQ(v2.violations.front().axiom, MetricAxiom::symmetry);
  PenaltyMatrix zero(2, {0, 0, 0, 0}, {1, 1}, {1, 1});
  EXPECT_FALSE(validate_penalty_matrix(zero).valid());
  EXPECT_THROW(PenaltyMatrix::checked(2, {0, 5, 5, 0}, {1, 1}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(PenaltyMatrix(2, {0, 1, 1}, {1, 1}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(PenaltyMatrix(1, {0}, {-1}, {1}), std::invalid_argument);
  EXPECT_FALSE(verdict.describe().empty());
}

TEST(PenaltyMatrix, RandomMetricsAreValid) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    EXPECT_TRUE(validate_penalty_matrix(aqp::testing::random_metric(rng, 1 + rep % 4)).valid());
  }
}

TEST(DTable, Examples) {
  auto unit = PenaltyMatrix::unit(2);
  DTable d(text("ab"), 0, 1, unit);
  EXPECT_EQ(d.at(-1, 0), 0);
  EXPECT_EQ(d.at(0, 1), 1);
  EXPECT_EQ(d.at(1, 1), 1);
  EXPECT_EQ(d.at(5, 1), kInfiniteCost);
  Text t = text("abcab");
  DTable same(t, 1, 1, PenaltyMatrix::unit(3));
  for (std::ptrdiff_t b = 0; b < 5; ++b) EXPECT_EQ(same.at(b, b), 0);
  EXPECT_THROW(DTable(t, 6, 0, unit), std::out_of_range);
}

TEST(DTable, CellsEqualEditDistance) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    std::size_t n = aqp::testing::uniform(rng, 1, 12);
    Text t = aqp::testing::random_text(rng, n, 3, 0.1);
    auto p = aqp::testing::random_metric(rng, 3);
    std::size_t a = aqp::testing::uniform(rng, 0, n), a2 = aqp::testing::uniform(rng, 0, n);
    DTable d(t, a, a2, p);
    for (auto b = static_cast<std::ptrdiff_t>(a) - 1; b < static_cast<std::ptrdiff_t>(n); ++b) {
      for (auto b2 = static_cast<std::ptrdiff_t>(a2) - 1; b2 < static_cast<std::ptrdiff_t>(n); ++b2) {
        EXPECT_EQ(d.at(b, b2), edit_distance(t.factor(a, b), t.factor(a2, b2), p));
      }
    }
  }
}

TEST(PenaltyIo, ParsesAndRoundTrips) {
  auto spec = parse_penalty(
      "# two letters\n"
      "alphabet ab\n"
      "ins 1 2\n"
      "sub 0 2\n    2 0\n"
      "del 1 2  # trailing\n");
  EXPECT_EQ(spec.alphabet.letters(), "ab");
  EXPECT_EQ(spec.matrix.substitute(0, 1), 2);
  EXPECT_EQ(spec.matrix.insert(1), 2);
  auto again = parse_penalty(format_penalty(spec.alphabet, spec.matrix));
  EXPECT_EQ(again.matrix, spec.matrix);
  EXPECT_EQ(again.alphabet.letters(), "ab");
}

TEST(PenaltyIo, RejectsMalformedFiles) {
  EXPECT_THROW(parse_penalty("sub 0\n"), PenaltyFormatError);
  EXPECT_THROW(parse_penalty("alphabet ab\nsub 0 1 1\nins 1 1\ndel 1 1\n"), PenaltyFormatError);
  EXPECT_THROW(parse_penalty("alphabet ab\nsub 0 1 1 0\nins 1 x\ndel 1 1\n"), PenaltyFormatError);
  EXPECT_THROW(parse_penalty("alphabet ab\nsub 0 1 1 0\nins 1 1\n"), PenaltyFormatError);
  EXPECT_THROW(parse_penalty("alphabet a?\nsub 0\nins 1\ndel 1\n"), PenaltyFormatError);
}
