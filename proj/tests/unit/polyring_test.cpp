#include <gtest/gtest.h>

#include <cmath>

#include "random_values.hpp"
#include "spinor_s3/polyring.hpp"

namespace spinor_s3 {
namespace {

const GaussianRational I = GaussianRational::i();

Polynomial x(std::size_t j) { return Polynomial::x(j); }

TEST(Polynomial, ComplexCoordinatesInXView) {
  EXPECT_EQ(change_view(Polynomial::g2(), View::x), x(2) + I * x(3));
  EXPECT_EQ(change_view(Polynomial::g2bar(), View::x), x(2) - I * x(3));
  EXPECT_EQ(change_view(Polynomial::gm1(), View::x), -(x(0) + I * x(1)));
  EXPECT_EQ(change_view(Polynomial::g1bar(), View::x), x(0) - I * x(1));
}

TEST(Polynomial, RealCoordinatesInZView) {
  const GaussianRational half(Rational(1, 2));
  EXPECT_EQ(change_view(x(0), View::z), half * (Polynomial::g1bar() - Polynomial::gm1()));
  EXPECT_EQ(change_view(x(1), View::z), half * I * (Polynomial::gm1() + Polynomial::g1bar()));
  EXPECT_EQ(change_view(x(2), View::z), half * (Polynomial::g2() + Polynomial::g2bar()));
  EXPECT_EQ(change_view(x(3), View::z), -half * I * (Polynomial::g2() - Polynomial::g2bar()));
}

TEST(Polynomial, EqualityAcrossViews) {
  EXPECT_EQ(Polynomial::g2() * Polynomial::g2bar(), x(2) * x(2) + x(3) * x(3));
  EXPECT_EQ(-(Polynomial::gm1() * Polynomial::g1bar()), x(0) * x(0) + x(1) * x(1));
  EXPECT_FALSE(Polynomial::g2() == Polynomial::g2bar());
}

TEST(Polynomial, ViewRoundTrip) {
  testing::RandomValues rv(21);
  for (int n = 0; n < 60; ++n) {
    const Polynomial p = rv.polynomial(View::x, 5, 6);
    const Polynomial z = change_view(p, View::z);
    ASSERT_EQ(z.view(), View::z);
    ASSERT_EQ(change_view(z, View::x).terms(), p.terms());
    const Polynomial q = rv.polynomial(View::z, 5, 6);
    ASSERT_EQ(change_view(change_view(q, View::x), View::z).terms(), q.terms());
  }
}

TEST(Polynomial, RingAxioms) {
  testing::RandomValues rv(22);
  for (int n = 0; n < 60; ++n) {
    const View v = n % 2 == 0 ? View::x : View::z;
    const Polynomial a = rv.polynomial(v, 3, 4);
    const Polynomial b = rv.polynomial(View::x, 3, 4);
    const Polynomial c = rv.polynomial(View::z, 3, 4);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(poly_arith(a, b, PolyOp::mul), a * b);
    ASSERT_EQ(poly_arith(a, b, PolyOp::add), a + b);
  }
}

TEST(Polynomial, EvaluationIsAHomomorphism) {
  testing::RandomValues rv(23);
  for (int n = 0; n < 60; ++n) {
    const Polynomial a = rv.polynomial(View::x, 4, 5);
    const Polynomial b = rv.polynomial(View::z, 4, 5);
    const RationalPoint pt = rv.point();
    ASSERT_EQ(evaluate(a * b, pt), evaluate(a, pt) * evaluate(b, pt));
    ASSERT_EQ(evaluate(a + b, pt), evaluate(a, pt) + evaluate(b, pt));
    ASSERT_EQ(evaluate(change_view(b, View::x), pt), evaluate(b, pt));
  }
}

TEST(Polynomial, NumericEvaluationAgrees) {
  testing::RandomValues rv(24);
  for (int n = 0; n < 40; ++n) {
    const Polynomial p = rv.polynomial(View::z, 4, 5);
    const RationalPoint pt = rv.point();
    const GaussianRational exact = evaluate(p, pt);
    const auto approx = evaluate_numeric(p, {pt[0].to_double(), pt[1].to_double(), pt[2].to_double(), pt[3].to_double()});
    const double scale = 1.0 + std::abs(exact.re().to_double()) + std::abs(exact.im().to_double());
    ASSERT_NEAR(approx.real(), exact.re().to_double(), 1e-10 * scale);
    ASSERT_NEAR(approx.imag(), exact.im().to_double(), 1e-10 * scale);
  }
}

TEST(Polynomial, HomogeneityScaling) {
  testing::RandomValues rv(25);
  for (unsigned d = 0; d <= 5; ++d) {
    Polynomial p(View::z);
    for (int t = 0; t < 5; ++t) {
      const Polynomial q = rv.polynomial(View::z, d, 1);
      for (const auto& [e, c] : q.terms().terms()) {
        Exponents f = e;
        f[3] += d - total_degree(e);
        p.add_term(f, c);
      }
    }
    ASSERT_TRUE(p.is_zero() || p.is_homogeneous_of_degree(d));
    const RationalPoint pt = rv.point();
    const Rational t(3, 2);
    const RationalPoint scaled{t * pt[0], t * pt[1], t * pt[2], t * pt[3]};
    Rational td(1);
    for (unsigned j = 0; j < d; ++j) td *= t;
    ASSERT_EQ(evaluate(p, scaled), GaussianRational(td) * evaluate(p, pt));
  }
}

TEST(Polynomial, Laplacian) {
  const Polynomial r2 = x(0) * x(0) + x(1) * x(1) + x(2) * x(2) + x(3) * x(3);
  EXPECT_EQ(laplacian_r4(r2), Polynomial::constant(8));
  // Laplacian of r^(2m) in four dimensions is 2m (2m + 2) r^(2m-2)
  for (unsigned m = 1; m <= 4; ++m) {
    const Rational c(static_cast<long>(2 * m * (2 * m + 2)));
    EXPECT_EQ(laplacian_r4(r2.pow(m)), GaussianRational(c) * r2.pow(m - 1));
    EXPECT_EQ(laplacian_r4(change_view(r2.pow(m), View::z)), GaussianRational(c) * r2.pow(m - 1));
  }
  for (unsigned k = 0; k <= 6; ++k) {
    EXPECT_TRUE(laplacian_r4(Polynomial::g2().pow(k)).is_zero());
    EXPECT_TRUE(laplacian_r4(Polynomial::g2().pow(k) * Polynomial::g1bar().pow(k)).is_zero());
  }
  EXPECT_FALSE(laplacian_r4(Polynomial::g2() * Polynomial::g2bar()).is_zero());
}

TEST(Polynomial, Conjugation) {
  EXPECT_EQ(conjugate(Polynomial::g2()), Polynomial::g2bar());
  EXPECT_EQ(conjugate(Polynomial::gm1()), -Polynomial::g1bar());
  EXPECT_EQ(conjugate(I * x(0)), -I * x(0));
  testing::RandomValues rv(26);
  for (int n = 0; n < 40; ++n) {
    const Polynomial p = rv.polynomial(View::z, 4, 5);
    const RationalPoint pt = rv.point();
    ASSERT_EQ(conjugate(conjugate(p)), p);
    ASSERT_EQ(evaluate(conjugate(p), pt), evaluate(p, pt).conj());
  }
}

TEST(Polynomial, PowAndDegrees) {
  const Polynomial p = Polynomial::g2() + Polynomial::constant(1, View::z);
  EXPECT_EQ(p.pow(0), Polynomial::constant(1));
  EXPECT_EQ(p.pow(3), p * p * p);
  EXPECT_EQ(p.pow(3).degree(), 3u);
  EXPECT_FALSE(p.pow(3).homogeneous_degree().has_value());
  EXPECT_EQ(Polynomial::g2().pow(4).homogeneous_degree(), 4u);
  EXPECT_FALSE(Polynomial(View::z).degree().has_value());
}

TEST(Polynomial, ViewNames) {
  EXPECT_EQ(to_string(View::z), "z");
  EXPECT_EQ(view_from_string("x"), View::x);
  EXPECT_THROW(view_from_string("w"), std::invalid_argument);
  EXPECT_THROW(Polynomial::x(4), std::out_of_range);
}

TEST(SpinorSection, AssembleSplitRoundTrip) {
  testing::RandomValues rv(27);
  for (int n = 0; n < 30; ++n) {
    const SpinorSection s{3, rv.polynomial(View::z, 3, 4), rv.polynomial(View::z, 3, 4)};
    const SpinorSection back = split(assemble(s), s.k, View::z);
    ASSERT_EQ(back, s);
    const RationalPoint pt = rv.point();
    ASSERT_EQ(evaluate(s, pt), complex_assemble(evaluate(s.f, pt), evaluate(s.g, pt)));
  }
}

TEST(SpinorSection, Homogeneity) {
  const SpinorSection s{2, Polynomial::g2().pow(2), Polynomial::gm1() * Polynomial::g1bar()};
  EXPECT_TRUE(s.is_homogeneous());
  const SpinorSection t{2, Polynomial::g2().pow(2), Polynomial::gm1()};
  EXPECT_FALSE(t.is_homogeneous());
  const SpinorSection zero_g{1, Polynomial::g2(), Polynomial(View::z)};
  EXPECT_TRUE(zero_g.is_homogeneous());
}

}  // namespace
}  // namespace spinor_s3
