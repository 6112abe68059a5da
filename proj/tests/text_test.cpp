#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace aqp;
using aqp::testing::text;

TEST(Alphabet, EncodesAndDecodes) {
  Alphabet al("xyz");
  Text t = al.encode("zx?y");
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t[0], 2);
  EXPECT_TRUE(is_wildcard(t[2]));
  EXPECT_EQ(al.decode(t), "zx?y");
  EXPECT_THROW(al.encode("xq"), std::invalid_argument);
}

TEST(Alphabet, RejectsWildcardLetterAndDuplicates) {
  EXPECT_THROW(Alphabet("a?"), std::invalid_argument);
  EXPECT_THROW(Alphabet("aba"), std::invalid_argument);
  EXPECT_EQ(Alphabet::infer("cab?ca").letters(), "abc");
  EXPECT_EQ(Alphabet("ab", '*').encode("a*")[1], kWildcard);
}

TEST(Text, RejectsSymbolsOutsideAlphabet) {
  EXPECT_THROW(Text({0, 3}, 3), std::invalid_argument);
  EXPECT_NO_THROW(Text({0, kWildcard}, 1));
}

TEST(Text, FactorRotateConcat) {
  Text t = text("abcd");
  EXPECT_EQ(aqp::testing::str(t.factor(1, 2)), "bc");
  EXPECT_TRUE(t.factor(2, 1).empty());
  EXPECT_THROW(t.factor(1, 4), std::out_of_range);
  EXPECT_EQ(aqp::testing::str(t.rotate(1)), "bcda");
  EXPECT_EQ(aqp::testing::str(t.rotate(4)), "abcd");
  EXPECT_EQ(aqp::testing::str(t.suffix(3)), "d");
  EXPECT_EQ(aqp::testing::str(text("ab").concat(text("cd"))), "abcd");
}

TEST(Hamming, Examples) {
  EXPECT_EQ(hamming_distance(text("abc"), text("abc")), 0u);
  EXPECT_EQ(hamming_distance(text("abc"), text("adc")), 1u);
  EXPECT_EQ(hamming_distance(text("?b"), text("ab")), 0u);
  EXPECT_THROW(hamming_distance(text("ab"), text("abc")), std::invalid_argument);
}

TEST(Hamming, MetricOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    std::size_t n = aqp::testing::uniform(rng, 0, 10);
    Text u = aqp::testing::random_text(rng, n, 3), v = aqp::testing::random_text(rng, n, 3),
         w = aqp::testing::random_text(rng, n, 3);
    EXPECT_EQ(hamming_distance(u, v), hamming_distance(v, u));
    EXPECT_LE(hamming_distance(u, w), hamming_distance(u, v) + hamming_distance(v, w));
  }
}

TEST(IntervalUnion, Examples) {
  IntervalSet a;
  a.insert(0, 1);
  a.insert(3, 4);
  EXPECT_EQ(interval_union_size(a), 4u);
  IntervalSet b;
  b.insert(0, 2);
  b.insert(1, 3);
  EXPECT_EQ(interval_union_size(b), 4u);
  IntervalSet c;
  c.insert(2, 1);
  EXPECT_TRUE(c.empty());
  EXPECT_EQ(interval_union_size(c), 0u);
}

TEST(IntervalUnion, MatchesMaterializedSet) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 500; ++rep) {
    IntervalSet s;
    std::set<std::ptrdiff_t> points;
    std::size_t count = aqp::testing::uniform(rng, 0, 8);
    for (std::size_t x = 0; x < count; ++x) {
      auto i = static_cast<std::ptrdiff_t>(aqp::testing::uniform(rng, 0, 30));
      auto j = static_cast<std::ptrdiff_t>(aqp::testing::uniform(rng, 0, 30));
      s.insert(i, j);
      for (auto p = i; p <= j; ++p) points.insert(p);
    }
    EXPECT_EQ(interval_union_size(s), points.size());
  }
}

TEST(PadForSeed, Shape) {
  Text p = pad_for_seed(text("ab"));
  EXPECT_EQ(aqp::testing::str(p), "??ab??");
  EXPECT_TRUE(pad_for_seed(Text()).empty());
  EXPECT_EQ(pad_for_seed(text("abcab")).size(), 15u);
}

TEST(LeftmostFactorMask, MarksFirstOccurrences) {
  auto mask = leftmost_factor_mask(text("abab"));
  EXPECT_TRUE(mask[0][1]);   // "ab" at 0
  EXPECT_FALSE(mask[2][1]);  // "ab" again at 2
  EXPECT_FALSE(mask[2][0]);  // "a" again
  EXPECT_TRUE(mask[1][2]);   // "bab"
  EXPECT_FALSE(mask[3][0]);  // "b" seen at 1
}
