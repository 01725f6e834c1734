#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "spinor_s3/exactnum.hpp"

namespace spinor_s3 {

using Exponents = std::array<unsigned, 4>;

inline unsigned total_degree(const Exponents& e) { return e[0] + e[1] + e[2] + e[3]; }

/// Graded lexicographic order: lower total degree first, ties broken
/// lexicographically on the exponent tuple.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    return da != db ? da < db : a < b;
  }
};

/// Sparse polynomial in four commuting variables. No zero coefficient is
/// ever stored, so two polynomials are equal iff their term maps are.
template <class Coeff>
class SparsePoly {
 public:
  using TermMap = std::map<Exponents, Coeff, GradedLex>;

  SparsePoly() = default;

  static SparsePoly monomial(const Exponents& e, Coeff c) {
    SparsePoly p;
    p.add_term(e, std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::optional<unsigned> degree() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.rbegin()->first);
  }

  /// Degree if every term has the same total degree; nullopt otherwise.
  /// The zero polynomial is not considered homogeneous of any degree.
  std::optional<unsigned> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const unsigned lo = total_degree(terms_.begin()->first);
    return lo == total_degree(terms_.rbegin()->first) ? std::optional<unsigned>(lo) : std::nullopt;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  SparsePoly operator-() const {
    SparsePoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    return out;
  }

  /// Coefficient-wise map c |-> f(c).
  template <class F>
  SparsePoly map_coefficients(F&& f) const {
    SparsePoly out;
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  SparsePoly partial(std::size_t var) const {
    SparsePoly out;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      --d[var];
      out.add_term(d, c * Rational(e[var]));
    }
    return out;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

/// 4x4 rational matrix describing the linear vector field V(x)_j = sum_m A[j][m] x_m.
using LinearField = std::array<std::array<Rational, 4>, 4>;

/// Directional derivative p |-> sum_j (d p / d x_j) V_j along a linear field.
/// The polynomial must be written in the same coordinates as the field.
template <class Coeff>
SparsePoly<Coeff> derivative_along(const SparsePoly<Coeff>& p, const LinearField& field) {
  SparsePoly<Coeff> out;
  for (std::size_t j = 0; j < 4; ++j) {
    const SparsePoly<Coeff> dj = p.partial(j);
    if (dj.is_zero()) continue;
    for (const auto& [e, c] : dj.terms())
      for (std::size_t m = 0; m < 4; ++m) {
        if (field[j][m].is_zero()) continue;
        Exponents shifted = e;
        ++shifted[m];
        out.add_term(shifted, c * field[j][m]);
      }
  }
  return out;
}

/// Coordinate system of a Polynomial.
///  - x: real coordinates x0..x3 of R^4 = H.
///  - z: generator functions (g2, conj g2, g_{-1}, conj g1) = (z2, conj z2, -z1, conj z1)
///       with z1 = x0 + i x1 and z2 = x2 + i x3.
enum class View { x, z };

std::string to_string(View view);
View view_from_string(const std::string& name);

/// Polynomial on R^4 with Gaussian-rational coefficients, tagged by view.
class Polynomial {
 public:
  using Terms = SparsePoly<GaussianRational>;

  explicit Polynomial(View view = View::x) : view_(view) {}
  Polynomial(View view, Terms terms) : view_(view), terms_(std::move(terms)) {}

  static Polynomial constant(const GaussianRational& c, View view = View::x);
  static Polynomial monomial(const Exponents& e, const GaussianRational& c, View view);
  /// Coordinate x_index in x-view.
  static Polynomial x(std::size_t index);
  /// z-view generators.
  static Polynomial g2();
  static Polynomial g2bar();
  static Polynomial gm1();
  static Polynomial g1bar();

  View view() const { return view_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  std::optional<unsigned> degree() const { return terms_.degree(); }
  std::optional<unsigned> homogeneous_degree() const { return terms_.homogeneous_degree(); }
  /// True for the zero polynomial and for polynomials homogeneous of degree k.
  bool is_homogeneous_of_degree(unsigned k) const;

  void add_term(const Exponents& e, const GaussianRational& c) { terms_.add_term(e, c); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const GaussianRational& s) { return a *= s; }
  friend Polynomial operator*(const GaussianRational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const { return {view_, -terms_}; }

  Polynomial pow(unsigned n) const;

  /// Views may differ; the right-hand side is converted before comparing.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  View view_;
  Terms terms_;
};

enum class PolyOp { add, mul };

/// Exact ring operation; b is converted to a's view when the views differ.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);
Polynomial poly_scale(const Polynomial& a, const GaussianRational& s);

/// Exact change of coordinates between the x- and z-views.
Polynomial change_view(const Polynomial& p, View target);

/// Euclidean Laplacian sum_j d^2 p / d x_j^2 on R^4. The result is returned
/// in the input's view.
Polynomial laplacian_r4(const Polynomial& p);

using RationalPoint = std::array<Rational, 4>;

/// Exact value at a point of R^4 given in x-coordinates.
GaussianRational evaluate(const Polynomial& p, const RationalPoint& x);

/// Floating-point value at a point of R^4 given in x-coordinates.
std::complex<double> evaluate_numeric(const Polynomial& p, const std::array<double, 4>& x);

/// Complex conjugate function conj(p(x)), in the input's view.
Polynomial conjugate(const Polynomial& p);

/// Quaternion-valued section S^3 -> H stored as f e0 + g e2, where f and g
/// are complex polynomials and complex scalars act by left multiplication
/// with a + b e1.
struct SpinorSection {
  int k = 0;
  Polynomial f{View::z};
  Polynomial g{View::z};

  /// Both components homogeneous of degree k (zero components allowed).
  bool is_homogeneous() const;
  bool is_zero() const { return f.is_zero() && g.is_zero(); }

  SpinorSection& operator+=(const SpinorSection& o);
  SpinorSection& operator-=(const SpinorSection& o);
  SpinorSection& operator*=(const GaussianRational& s);
  friend SpinorSection operator+(SpinorSection a, const SpinorSection& b) { return a += b; }
  friend SpinorSection operator-(SpinorSection a, const SpinorSection& b) { return a -= b; }
  friend SpinorSection operator*(const GaussianRational& s, SpinorSection a) { return a *= s; }

  friend bool operator==(const SpinorSection& a, const SpinorSection& b) { return a.f == b.f && a.g == b.g; }
};

SpinorSection change_view(const SpinorSection& s, View target);

/// Value sigma(x) as a quaternion.
Quaternion evaluate(const SpinorSection& s, const RationalPoint& x);

/// Quaternion-valued polynomial in x-coordinates.
using QuaternionPolynomial = SparsePoly<Quaternion>;

/// sigma = f e0 + g e2 written as one quaternion-valued polynomial in x.
QuaternionPolynomial assemble(const SpinorSection& s);
/// Inverse of assemble; components are returned in the requested view.
SpinorSection split(const QuaternionPolynomial& q, int k, View view = View::z);

}  // namespace spinor_s3
