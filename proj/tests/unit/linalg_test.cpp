#include <gtest/gtest.h>

#include "spinor_s3/linalg.hpp"

namespace spinor_s3 {
namespace {

ExactMatrix make(std::size_t n, std::initializer_list<long> values) {
  ExactMatrix m(n, n);
  std::size_t i = 0;
  for (long v : values) {
    m(i / n, i % n) = GaussianRational(v);
    ++i;
  }
  return m;
}

TEST(ExactMatrix, ProductAndIdentity) {
  const ExactMatrix a = make(2, {1, 2, 3, 4});
  const ExactMatrix b = make(2, {0, 1, 1, 0});
  EXPECT_EQ(a * b, make(2, {2, 1, 4, 3}));
  EXPECT_EQ(a * ExactMatrix::identity(2), a);
  EXPECT_EQ(commutator(a, a).is_zero(), true);
  EXPECT_EQ(a.trace(), GaussianRational(5));
}

TEST(ExactMatrix, Structure) {
  EXPECT_TRUE(make(3, {1, 0, 0, 0, 2, 0, 0, 0, 3}).is_diagonal());
  EXPECT_EQ(make(3, {1, 1, 0, 1, 2, 1, 0, 1, 3}).bandwidth(), 1u);
  EXPECT_EQ(make(3, {1, 0, 1, 0, 2, 0, 0, 0, 3}).bandwidth(), 2u);
  EXPECT_EQ(ExactMatrix(3, 3).bandwidth(), 0u);
}

TEST(ExactMatrix, Rank) {
  EXPECT_EQ(rank(make(3, {1, 2, 3, 2, 4, 6, 1, 0, 1})), 2u);
  EXPECT_EQ(rank(ExactMatrix::identity(4)), 4u);
  EXPECT_EQ(rank(ExactMatrix(3, 3)), 0u);
  ExactMatrix c(2, 2);
  c(0, 0) = GaussianRational::i();
  c(0, 1) = GaussianRational(1);
  c(1, 0) = GaussianRational(-1);
  c(1, 1) = GaussianRational::i();
  EXPECT_EQ(rank(c), 1u);  // second row is i times the first
}

TEST(ExactMatrix, FromColumns) {
  const ExactMatrix m = from_columns({{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m(1, 2), GaussianRational(6));
}

TEST(CharacteristicPolynomial, SmallCases) {
  // det(t - A) for A = [[2,1],[1,2]] is t^2 - 4t + 3
  const auto p = characteristic_polynomial(make(2, {2, 1, 1, 2}));
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], GaussianRational(3));
  EXPECT_EQ(p[1], GaussianRational(-4));
  EXPECT_EQ(p[2], GaussianRational(1));

  // upper triangular: roots are the diagonal 1, 2, 3: t^3 - 6t^2 + 11t - 6
  const auto q = characteristic_polynomial(make(3, {1, 5, 7, 0, 2, 9, 0, 0, 3}));
  ASSERT_EQ(q.size(), 4u);
  EXPECT_EQ(q[0], GaussianRational(-6));
  EXPECT_EQ(q[1], GaussianRational(11));
  EXPECT_EQ(q[2], GaussianRational(-6));
  EXPECT_EQ(q[3], GaussianRational(1));
}

TEST(IntegerSpectrum, DiagonalizableAndJordan) {
  const IntegerSpectrum s = integer_spectrum(make(2, {2, 1, 1, 2}));
  ASSERT_TRUE(s.splits);
  EXPECT_TRUE(s.diagonalizable());
  EXPECT_EQ(s.eigenvalues.at(1).algebraic, 1u);
  EXPECT_EQ(s.eigenvalues.at(3).algebraic, 1u);

  const IntegerSpectrum j = integer_spectrum(make(2, {5, 1, 0, 5}));
  ASSERT_TRUE(j.splits);
  EXPECT_EQ(j.eigenvalues.at(5).algebraic, 2u);
  EXPECT_EQ(j.eigenvalues.at(5).geometric, 1u);
  EXPECT_FALSE(j.diagonalizable());
}

TEST(IntegerSpectrum, NonIntegerRootsDoNotSplit) {
  // t^2 - 2 has no integer roots
  EXPECT_FALSE(integer_spectrum(make(2, {0, 2, 1, 0})).splits);
  // rotation by 90 degrees: roots +-i
  EXPECT_FALSE(integer_spectrum(make(2, {0, -1, 1, 0})).splits);
}

}  // namespace
}  // namespace spinor_s3
