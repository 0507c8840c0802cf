#include <gtest/gtest.h>

#include "mfk/mfk.hpp"

using namespace mfk;

TEST(Bits, LabelsAreOneBased) {
  EXPECT_EQ(label(0b01011), "124");
  EXPECT_EQ(label(0), "{}");
  EXPECT_EQ(to_one_based(0b101), (std::vector<int>{1, 3}));
}

TEST(Bits, KSubsetEnumerationCounts) {
  int count = 0;
  for_each_k_subset(full_set(6), 3, [&](ElementSet s) {
    EXPECT_EQ(cardinality(s), 3);
    ++count;
  });
  EXPECT_EQ(count, 20);
  int all = 0;
  for_each_subset(full_set(5), [&](ElementSet) { ++all; });
  EXPECT_EQ(all, 32);
}

TEST(Bits, LexOrderOnSortedLists) {
  // 12 < 123 < 13 < 14 < 23
  EXPECT_TRUE(lex_less(0b0011, 0b0111));
  EXPECT_TRUE(lex_less(0b0111, 0b0101));
  EXPECT_TRUE(lex_less(0b0101, 0b1001));
  EXPECT_TRUE(lex_less(0b1001, 0b0110));
  EXPECT_FALSE(lex_less(0b0110, 0b0110));
}

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_THROW(parse_rational("0.5"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Rational, PrimitiveIntegerScaling) {
  RationalVector v{Rational(1, 2), Rational(-3, 4), Rational(0)};
  EXPECT_EQ(primitive_integer(v), (IntegerVector{2, -3, 0}));
  EXPECT_EQ(primitive_integer(IntegerVector{4, 6}), (IntegerVector{2, 3}));
}

TEST(Linalg, RankKernelSolve) {
  auto a = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  EXPECT_EQ(rank(a), 2u);
  auto k = kernel_basis(a);
  ASSERT_EQ(k.rows(), 1u);
  for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(dot(a.row(r), k.row(0)), 0);
  auto x = solve(a, RationalVector{1, 2, 1});
  ASSERT_TRUE(x.has_value());
  EXPECT_FALSE(solve(a, RationalVector{1, 0, 0}).has_value());
}

TEST(Linalg, ColumnOrderChangesPivots) {
  auto a = RationalMatrix::from_rows({{1, 1}, {0, 1}}, 2);
  std::vector<std::size_t> order{1, 0};
  auto e = row_reduce(a, order);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{1, 0}));
}

TEST(Lp, FindsNonnegativeSolutions) {
  auto a = RationalMatrix::from_rows({{1, 1, 0}, {0, 1, 1}}, 3);
  auto x = nonnegative_solution(a, {2, 3});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] + (*x)[1], 2);
  EXPECT_EQ((*x)[1] + (*x)[2], 3);
  for (const auto& v : *x) EXPECT_GE(v, 0);
  // x1 + x2 = -1 has no nonnegative solution.
  EXPECT_FALSE(nonnegative_solution(RationalMatrix::from_rows({{1, 1}}, 2), {-1}).has_value());
}

TEST(Errors, CodesHaveNames) {
  Error e(ErrorCode::kNotAFace, "x");
  EXPECT_EQ(e.code(), ErrorCode::kNotAFace);
  EXPECT_EQ(to_string(ErrorCode::kNotAFace), "NotAFace");
  EXPECT_EQ(to_string(ErrorCode::kUnknownName), "UnknownName");
}

TEST(Simplicial, HomologyOfCircleAndPoint) {
  SimplicialComplex circle(3, {{0, 1}, {1, 2}, {0, 2}});
  auto h = reduced_homology_ranks(circle);
  EXPECT_EQ(h.betti, (std::vector<long>{0, 1}));
  SimplicialComplex point(1, {{0}});
  EXPECT_EQ(reduced_homology_ranks(point).betti, (std::vector<long>{0}));
  SimplicialComplex two_points(2, {{0}, {1}});
  EXPECT_EQ(reduced_homology_ranks(two_points).betti, (std::vector<long>{1}));
}

TEST(Simplicial, FacetsDropContainedGenerators) {
  SimplicialComplex c(3, {{0, 1}, {0}, {1, 0}, {2}});
  EXPECT_EQ(c.facets().size(), 2u);
  EXPECT_EQ(c.f_vector(), (std::vector<std::size_t>{3, 1}));
  EXPECT_TRUE(c.contains_face({1}));
  EXPECT_FALSE(c.contains_face({1, 2}));
}
