#include "spinor_s3/polyring.hpp"

#include <stdexcept>
#include <vector>

namespace spinor_s3 {

std::string to_string(View view) { return view == View::x ? "x" : "z"; }

View view_from_string(const std::string& name) {
  if (name == "x") return View::x;
  if (name == "z") return View::z;
  throw std::invalid_argument("unknown polynomial view '" + name + "'");
}

Polynomial Polynomial::constant(const GaussianRational& c, View view) {
  return monomial({0, 0, 0, 0}, c, view);
}

Polynomial Polynomial::monomial(const Exponents& e, const GaussianRational& c, View view) {
  return {view, Terms::monomial(e, c)};
}

Polynomial Polynomial::x(std::size_t index) {
  if (index > 3) throw std::out_of_range("Polynomial::x: index must be 0..3");
  Exponents e{0, 0, 0, 0};
  e[index] = 1;
  return monomial(e, 1, View::x);
}

Polynomial Polynomial::g2() { return monomial({1, 0, 0, 0}, 1, View::z); }
Polynomial Polynomial::g2bar() { return monomial({0, 1, 0, 0}, 1, View::z); }
Polynomial Polynomial::gm1() { return monomial({0, 0, 1, 0}, 1, View::z); }
Polynomial Polynomial::g1bar() { return monomial({0, 0, 0, 1}, 1, View::z); }

bool Polynomial::is_homogeneous_of_degree(unsigned k) const {
  if (is_zero()) return true;
  const auto d = homogeneous_degree();
  return d && *d == k;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ += (o.view_ == view_ ? o : change_view(o, view_)).terms_;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ -= (o.view_ == view_ ? o : change_view(o, view_)).terms_;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  terms_ = terms_ * (o.view_ == view_ ? o : change_view(o, view_)).terms_;
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_ = Terms{};
    return *this;
  }
  terms_ = terms_.map_coefficients([&](const GaussianRational& c) { return c * s; });
  return *this;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial out = constant(1, view_);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) out *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.view_ == b.view_) return a.terms_ == b.terms_;
  return a.terms_ == change_view(b, a.view_).terms_;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  return op == PolyOp::add ? a + b : a * b;
}

Polynomial poly_scale(const Polynomial& a, const GaussianRational& s) { return a * s; }

namespace {

// Images of the source variables as linear forms in the target view.
std::array<Polynomial::Terms, 4> substitution(View source) {
  using T = Polynomial::Terms;
  const GaussianRational half(Rational(1, 2));
  const GaussianRational i_half(Rational(0), Rational(1, 2));
  const auto var = [](std::size_t j, const GaussianRational& c) {
    Exponents e{0, 0, 0, 0};
    e[j] = 1;
    return T::monomial(e, c);
  };
  if (source == View::x) {
    // x0 = (-g_{-1} + conj g1)/2, x1 = (i/2)(g_{-1} + conj g1),
    // x2 = (g2 + conj g2)/2,      x3 = (-i/2)(g2 - conj g2)
    return {var(2, -half) + var(3, half),  //
            var(2, i_half) + var(3, i_half),  //
            var(0, half) + var(1, half),  //
            var(0, -i_half) + var(1, i_half)};
  }
  // g2 = x2 + i x3, conj g2 = x2 - i x3, g_{-1} = -x0 - i x1, conj g1 = x0 - i x1
  const GaussianRational i = GaussianRational::i();
  return {var(2, 1) + var(3, i),  //
          var(2, 1) + var(3, -i),  //
          var(0, -1) + var(1, -i),  //
          var(0, 1) + var(1, -i)};
}

}  // namespace

Polynomial change_view(const Polynomial& p, View target) {
  if (p.view() == target) return p;
  const auto images = substitution(p.view());
  std::array<std::vector<Polynomial::Terms>, 4> powers;
  for (std::size_t j = 0; j < 4; ++j) powers[j].push_back(Polynomial::Terms::monomial({0, 0, 0, 0}, 1));
  const auto power = [&](std::size_t j, unsigned n) -> const Polynomial::Terms& {
    while (powers[j].size() <= n) powers[j].push_back(powers[j].back() * images[j]);
    return powers[j][n];
  };

  Polynomial::Terms out;
  for (const auto& [e, c] : p.terms().terms()) {
    Polynomial::Terms term = Polynomial::Terms::monomial({0, 0, 0, 0}, c);
    for (std::size_t j = 0; j < 4; ++j)
      if (e[j] > 0) term = term * power(j, e[j]);
    out += term;
  }
  return {target, std::move(out)};
}

Polynomial laplacian_r4(const Polynomial& p) {
  const Polynomial px = change_view(p, View::x);
  Polynomial::Terms out;
  for (std::size_t j = 0; j < 4; ++j) out += px.terms().partial(j).partial(j);
  return change_view(Polynomial(View::x, std::move(out)), p.view());
}

namespace {

std::array<GaussianRational, 4> variable_values(View view, const RationalPoint& x) {
  if (view == View::x) return {x[0], x[1], x[2], x[3]};
  return {GaussianRational(x[2], x[3]), GaussianRational(x[2], -x[3]), GaussianRational(-x[0], -x[1]),
          GaussianRational(x[0], -x[1])};
}

GaussianRational ipow(const GaussianRational& base, unsigned n) {
  GaussianRational out(1);
  for (unsigned i = 0; i < n; ++i) out *= base;
  return out;
}

}  // namespace

GaussianRational evaluate(const Polynomial& p, const RationalPoint& x) {
  const auto vals = variable_values(p.view(), x);
  GaussianRational out;
  for (const auto& [e, c] : p.terms().terms()) {
    GaussianRational term = c;
    for (std::size_t j = 0; j < 4; ++j)
      if (e[j] > 0) term *= ipow(vals[j], e[j]);
    out += term;
  }
  return out;
}

std::complex<double> evaluate_numeric(const Polynomial& p, const std::array<double, 4>& x) {
  using C = std::complex<double>;
  std::array<C, 4> vals;
  if (p.view() == View::x) {
    vals = {C(x[0]), C(x[1]), C(x[2]), C(x[3])};
  } else {
    vals = {C(x[2], x[3]), C(x[2], -x[3]), C(-x[0], -x[1]), C(x[0], -x[1])};
  }
  C out{};
  for (const auto& [e, c] : p.terms().terms()) {
    C term(c.re().to_double(), c.im().to_double());
    for (std::size_t j = 0; j < 4; ++j)
      for (unsigned n = 0; n < e[j]; ++n) term *= vals[j];
    out += term;
  }
  return out;
}

Polynomial conjugate(const Polynomial& p) {
  Polynomial::Terms out;
  if (p.view() == View::x) {
    out = p.terms().map_coefficients([](const GaussianRational& c) { return c.conj(); });
    return {View::x, std::move(out)};
  }
  // conj g2 <-> g2bar; conj g_{-1} = -conj z1 = -g1bar; conj g1bar = z1 = -g_{-1}
  for (const auto& [e, c] : p.terms().terms()) {
    const bool negate = (e[2] + e[3]) % 2 == 1;
    out.add_term({e[1], e[0], e[3], e[2]}, negate ? -c.conj() : c.conj());
  }
  return {View::z, std::move(out)};
}

bool SpinorSection::is_homogeneous() const {
  return k >= 0 && f.is_homogeneous_of_degree(static_cast<unsigned>(k)) &&
         g.is_homogeneous_of_degree(static_cast<unsigned>(k));
}

SpinorSection& SpinorSection::operator+=(const SpinorSection& o) {
  f += o.f;
  g += o.g;
  return *this;
}

SpinorSection& SpinorSection::operator-=(const SpinorSection& o) {
  f -= o.f;
  g -= o.g;
  return *this;
}

SpinorSection& SpinorSection::operator*=(const GaussianRational& s) {
  f *= s;
  g *= s;
  return *this;
}

SpinorSection change_view(const SpinorSection& s, View target) {
  return {s.k, change_view(s.f, target), change_view(s.g, target)};
}

Quaternion evaluate(const SpinorSection& s, const RationalPoint& x) {
  return complex_assemble(evaluate(s.f, x), evaluate(s.g, x));
}

QuaternionPolynomial assemble(const SpinorSection& s) {
  QuaternionPolynomial out;
  const Polynomial f = change_view(s.f, View::x);
  const Polynomial g = change_view(s.g, View::x);
  for (const auto& [e, c] : f.terms().terms()) out.add_term(e, complex_assemble(c, 0));
  for (const auto& [e, c] : g.terms().terms()) out.add_term(e, complex_assemble(0, c));
  return out;
}

SpinorSection split(const QuaternionPolynomial& q, int k, View view) {
  Polynomial::Terms f;
  Polynomial::Terms g;
  for (const auto& [e, c] : q.terms()) {
    const ComplexPair pair = complex_split(c);
    f.add_term(e, pair.f);
    g.add_term(e, pair.g);
  }
  return {k, change_view(Polynomial(View::x, std::move(f)), view),
          change_view(Polynomial(View::x, std::move(g)), view)};
}

}  // namespace spinor_s3
