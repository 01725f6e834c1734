#include "spinor_s3/geometry.hpp"

#include <stdexcept>

namespace spinor_s3 {

namespace {

void check_axis(int axis, const char* what) {
  if (axis < 1 || axis > 3) throw std::invalid_argument(std::string(what) + ": axis must be 1, 2 or 3");
}

}  // namespace

KillingPair KillingPair::left_invariant(int axis) {
  check_axis(axis, "KillingPair::left_invariant");
  return {Quaternion::basis(axis), Quaternion{}};
}

KillingPair KillingPair::right_invariant(int axis) {
  check_axis(axis, "KillingPair::right_invariant");
  return {Quaternion{}, Quaternion::basis(axis)};
}

Quaternion KillingPair::at(const Quaternion& x) const { return x * S - T * x; }

LinearField KillingPair::field() const {
  LinearField a;
  for (int m = 0; m < 4; ++m) {
    const Quaternion image = at(Quaternion::basis(m));
    for (int j = 0; j < 4; ++j) a[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = image[j];
  }
  return a;
}

Polynomial killing_derivative(const Polynomial& f, const KillingPair& pair) {
  const Polynomial fx = change_view(f, View::x);
  return change_view(Polynomial(View::x, derivative_along(fx.terms(), pair.field())), f.view());
}

SpinorSection killing_derivative(const SpinorSection& s, const KillingPair& pair) {
  return {s.k, killing_derivative(s.f, pair), killing_derivative(s.g, pair)};
}

QuaternionPolynomial killing_derivative(const QuaternionPolynomial& q, const KillingPair& pair) {
  return derivative_along(q, pair.field());
}

namespace {

QuaternionPolynomial right_multiply(const QuaternionPolynomial& q, const Quaternion& e) {
  return q.map_coefficients([&](const Quaternion& c) { return c * e; });
}

QuaternionPolynomial dbar_assembled(const QuaternionPolynomial& q) {
  QuaternionPolynomial out;
  for (int axis = 1; axis <= 3; ++axis)
    out -= right_multiply(killing_derivative(q, KillingPair::left_invariant(axis)), Quaternion::basis(axis));
  return out;
}

}  // namespace

SpinorSection dbar_section(const SpinorSection& s) { return split(dbar_assembled(assemble(s)), s.k, s.f.view()); }

SpinorSection dirac_section(const SpinorSection& s) {
  const QuaternionPolynomial q = assemble(s);
  QuaternionPolynomial out = dbar_assembled(q);
  out -= q.map_coefficients([](const Quaternion& c) { return c * Rational(3, 2); });
  return split(out, s.k, s.f.view());
}

SpinorSection laplace_section(const SpinorSection& s) {
  SpinorSection out{s.k, Polynomial(s.f.view()), Polynomial(s.g.view())};
  for (int axis = 1; axis <= 3; ++axis) {
    const KillingPair pair = KillingPair::left_invariant(axis);
    out += killing_derivative(killing_derivative(s, pair), pair);
  }
  return out;
}

Quaternion levi_civita(int i, int j) {
  check_axis(i, "levi_civita");
  check_axis(j, "levi_civita");
  if (i == j) return {};
  return Quaternion::basis(i) * Quaternion::basis(j);
}

SpinorSection hessian_entry(const SpinorSection& s, int a, int b) {
  SpinorSection out =
      killing_derivative(killing_derivative(s, KillingPair::left_invariant(b)), KillingPair::left_invariant(a));
  const Quaternion nabla = levi_civita(a, b);
  if (!nabla.is_zero()) out -= killing_derivative(s, KillingPair{nabla, Quaternion{}});
  return out;
}

SpinorSection laplace_section_hessian(const SpinorSection& s) {
  // orthonormal frame: metric coefficients are delta_ab, so only a == b survives
  SpinorSection out{s.k, Polynomial(s.f.view()), Polynomial(s.g.view())};
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      if (a == b) out += hessian_entry(s, a, b);
  return out;
}

Quaternion spin_connection(int i) {
  check_axis(i, "spin_connection");
  return Quaternion::basis(i) * Rational(-1, 2);
}

}  // namespace spinor_s3
