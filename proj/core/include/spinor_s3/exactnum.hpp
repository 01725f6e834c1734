#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace spinor_s3 {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Parses "n" or "n/d" (d != 0). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// "n" for integers, otherwise "n/d".
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_{0};
};

/// n! as an exact integer.
mpz_class factorial(unsigned n);
/// Binomial coefficient C(n, k); zero when k > n.
mpz_class binomial(unsigned n, unsigned k);

/// Complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  GaussianRational(T re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

 private:
  Rational re_;
  Rational im_;
};

/// Quaternion c0 e0 + c1 e1 + c2 e2 + c3 e3 over the rationals, with
/// e1 e2 = e3, e2 e3 = e1, e3 e1 = e2 and e_i^2 = -1.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  /// Basis element e_index, index in 0..3.
  static Quaternion basis(int index);

  const Rational& operator[](int index) const { return c_.at(static_cast<std::size_t>(index)); }
  const std::array<Rational, 4>& coefficients() const { return c_; }

  bool is_zero() const;
  Quaternion conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  /// c0^2 + c1^2 + c2^2 + c3^2.
  Rational norm() const;

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Rational& s);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(Quaternion a, const Rational& s) { return a *= s; }
  friend Quaternion operator*(const Rational& s, Quaternion a) { return a *= s; }
  Quaternion operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q);

 private:
  std::array<Rational, 4> c_{};
};

/// Hamilton product.
Quaternion quat_multiply(const Quaternion& a, const Quaternion& b);
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return quat_multiply(a, b); }

/// The embedding of a complex scalar a + b i into H as a + b e1.
Quaternion embed_complex(const GaussianRational& z);

/// H viewed as C^2 over the basis e0, e2 with i acting by left
/// multiplication by e1: q = f e0 + g e2.
struct ComplexPair {
  GaussianRational f;
  GaussianRational g;

  friend bool operator==(const ComplexPair&, const ComplexPair&) = default;
};

ComplexPair complex_split(const Quaternion& q);
Quaternion complex_assemble(const ComplexPair& pair);
inline Quaternion complex_assemble(const GaussianRational& f, const GaussianRational& g) {
  return complex_assemble(ComplexPair{f, g});
}

/// Clifford action of e_axis on the trivialised spinor bundle: q |-> q (-e_axis).
/// Throws std::invalid_argument unless axis is 1, 2 or 3.
Quaternion clifford_multiply(const Quaternion& q, int axis);

}  // namespace spinor_s3
