#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "spinor_s3/abstract_dirac.hpp"

namespace spinor_s3 {
namespace {

Rational plus_eigenvalue(int k) { return Rational(2 * k + 1, 2); }
Rational minus_eigenvalue(int k) { return Rational(-2 * k - 3, 2); }

TEST(ShiftedDirac, ClosedFormMatchesQuaternionAction) {
  for (int k = 0; k <= 8; ++k)
    for (int q = 0; q <= k; ++q)
      for (int r : {0, 2})
        for (int p = 0; p <= k; ++p) {
          const SpinorVector v = SpinorVector::basis(k, q, r, p);
          ASSERT_EQ(dbar_apply(v), dbar_apply_from_action(v)) << k << " " << q << " " << r << " " << p;
        }
}

TEST(ShiftedDirac, FrozenImagesAtKTwo) {
  // D(e0|1>) = 0 e0|1> - 2 e2|0>;  D(e2|1>) = 0 e2|1> - 2 e0|2>
  SpinorVector a(2, 0);
  a.add(2, 0, -2);
  EXPECT_EQ(dbar_apply(SpinorVector::basis(2, 0, 0, 1)), a);
  SpinorVector b(2, 0);
  b.add(0, 2, -2);
  EXPECT_EQ(dbar_apply(SpinorVector::basis(2, 0, 2, 1)), b);
  // D(e0|0>) = -2 e0|0>
  EXPECT_EQ(dbar_apply(SpinorVector::basis(2, 1, 0, 0)), GaussianRational(-2) * SpinorVector::basis(2, 1, 0, 0));
}

TEST(ShiftedDirac, QuadraticRelation) {
  for (int k = 0; k <= 12; ++k) ASSERT_TRUE(quadratic_check(k)) << k;
}

TEST(ShiftedDirac, KZeroIsMinusThreeHalvesOnConstants) {
  for (int r : {0, 2}) {
    const SpinorVector v = SpinorVector::basis(0, 0, r, 0);
    EXPECT_TRUE(dbar_apply(v).is_zero());  // Dirac = shifted - 3/2
  }
}

TEST(Families, SizesAndEigenEquations) {
  for (int k = 0; k <= 8; ++k) {
    const EigenFamilies f = eigenbasis_abstract(k);
    ASSERT_EQ(f.plus.members.size(), static_cast<std::size_t>(k * (k + 1)));
    ASSERT_EQ(f.minus.members.size(), static_cast<std::size_t>((k + 1) * (k + 2)));
    ASSERT_EQ(f.plus.dirac_eigenvalue, plus_eigenvalue(k));
    ASSERT_EQ(f.minus.dirac_eigenvalue, minus_eigenvalue(k));
    for (const EigenFamily* fam : {&f.plus, &f.minus})
      for (const auto& m : fam->members)
        ASSERT_EQ(dbar_apply(m.vector), GaussianRational(fam->shifted_eigenvalue()) * m.vector);
  }
}

TEST(Families, FrozenKOne) {
  const EigenFamilies f = eigenbasis_abstract(1);
  // e0|1>|q> - e2|0>|q>
  SpinorVector plus(1, 0);
  plus.add(0, 1, 1);
  plus.add(2, 0, -1);
  EXPECT_EQ(f.plus.members.front().vector, plus);
  EXPECT_EQ(f.plus.members.front().p, 1);
  // p = 1 minus vector: (1-1-1) e0|1> - 1 e2|0> = -e0|1> - e2|0>
  SpinorVector minus(1, 0);
  minus.add(0, 1, -1);
  minus.add(2, 0, -1);
  const auto it = std::find_if(f.minus.members.begin(), f.minus.members.end(),
                               [](const FamilyMember& m) { return m.p == 1 && m.vector.q() == 0; });
  ASSERT_NE(it, f.minus.members.end());
  EXPECT_EQ(it->vector, minus);
}

TEST(Families, OrderedByQThenP) {
  const EigenFamilies f = eigenbasis_abstract(3);
  for (const EigenFamily* fam : {&f.plus, &f.minus})
    for (std::size_t i = 1; i < fam->members.size(); ++i) {
      const auto& a = fam->members[i - 1];
      const auto& b = fam->members[i];
      ASSERT_TRUE(std::pair(a.vector.q(), a.p) < std::pair(b.vector.q(), b.p));
    }
}

TEST(Spectrum, TableFromFamilyCounts) {
  const std::vector<SpectrumRow> expected{
      {0, Rational(-3, 2), 2}, {1, Rational(3, 2), 2}, {1, Rational(-5, 2), 6},
      {2, Rational(5, 2), 6},  {2, Rational(-7, 2), 12},
  };
  EXPECT_EQ(spectrum_table(2), expected);
  long total = 0;
  for (const auto& row : spectrum_table(8)) total += row.multiplicity;
  long dims = 0;
  for (int k = 0; k <= 8; ++k) dims += 2 * (k + 1) * (k + 1);
  EXPECT_EQ(total, dims);
}

TEST(Spectrum, BruteForceMatchesFamilies) {
  for (int k = 0; k <= 8; ++k) {
    std::map<Rational, long> expected{{minus_eigenvalue(k), (k + 1) * (k + 2)}};
    if (k > 0) expected[plus_eigenvalue(k)] = k * (k + 1);
    ASSERT_EQ(spectrum_bruteforce(k), expected) << k;
  }
}

// Floating-point oracle: eigenvalues of the block matrix from a general
// complex eigensolver.
TEST(Spectrum, NumericEigenvaluesOfBlock) {
  for (int k = 0; k <= 8; ++k) {
    const ExactMatrix m = dbar_block_matrix(k);
    const auto n = static_cast<Eigen::Index>(m.rows());
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) {
        const auto& z = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        a(r, c) = {z.re().to_double(), z.im().to_double()};
      }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a);
    ASSERT_EQ(solver.info(), Eigen::Success);
    int at_plus = 0;
    int at_minus = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const std::complex<double> lambda = solver.eigenvalues()(i) - 1.5;
      if (std::abs(lambda - plus_eigenvalue(k).to_double()) < 1e-6) ++at_plus;
      else if (std::abs(lambda - minus_eigenvalue(k).to_double()) < 1e-6) ++at_minus;
    }
    // per q-block: k of the first kind, k + 2 of the second
    EXPECT_EQ(at_plus, k) << k;
    EXPECT_EQ(at_minus, k + 2) << k;
  }
}

TEST(SpinorVector, Basics) {
  SpinorVector v(2, 1);
  v.add(0, 3, 5);  // outside 0..k, dropped
  EXPECT_TRUE(v.is_zero());
  v.add(2, 1, GaussianRational::i());
  EXPECT_EQ(v.flatten()[4], GaussianRational::i());
  EXPECT_THROW(SpinorVector(2, 3), std::out_of_range);
  EXPECT_THROW(SpinorVector::basis(2, 0, 1, 0), std::invalid_argument);
  EXPECT_THROW(SpinorVector(2, 0) + SpinorVector(2, 1), std::invalid_argument);
}

}  // namespace
}  // namespace spinor_s3
