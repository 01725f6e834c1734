#include "spinor_s3/exactnum.hpp"

#include <ostream>
#include <stdexcept>

namespace spinor_s3 {

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto bad = [&] { return std::invalid_argument("Rational: cannot parse '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  const auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (start >= t.size()) return false;
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  const mpz_class d(den);
  if (d == 0) throw bad();
  return Rational(mpz_class(num), d);
}

std::string Rational::str() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  if (z.im().is_zero()) return os << z.re();
  if (z.re().is_zero()) return os << z.im() << "i";
  os << "(" << z.re() << (z.im().sign() < 0 ? "-" : "+");
  return os << (z.im().sign() < 0 ? -z.im() : z.im()) << "i)";
}

Quaternion Quaternion::basis(int index) {
  if (index < 0 || index > 3) throw std::invalid_argument("Quaternion::basis: index must be 0..3");
  Quaternion q;
  q.c_[static_cast<std::size_t>(index)] = 1;
  return q;
}

bool Quaternion::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Rational Quaternion::norm() const {
  Rational out;
  for (const auto& c : c_) out += c * c;
  return out;
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Quaternion& Quaternion::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "[" << q[0] << ", " << q[1] << ", " << q[2] << ", " << q[3] << "]";
}

Quaternion quat_multiply(const Quaternion& a, const Quaternion& b) {
  const auto& [a0, a1, a2, a3] = a.coefficients();
  const auto& [b0, b1, b2, b3] = b.coefficients();
  return {a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,  //
          a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,  //
          a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,  //
          a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0};
}

Quaternion embed_complex(const GaussianRational& z) { return {z.re(), z.im(), 0, 0}; }

ComplexPair complex_split(const Quaternion& q) {
  // (a + b e1) e0 + (c + d e1) e2 = a + b e1 + c e2 + d e3
  return {{q[0], q[1]}, {q[2], q[3]}};
}

Quaternion complex_assemble(const ComplexPair& pair) {
  return {pair.f.re(), pair.f.im(), pair.g.re(), pair.g.im()};
}

Quaternion clifford_multiply(const Quaternion& q, int axis) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("clifford_multiply: axis must be 1, 2 or 3");
  return q * (-Quaternion::basis(axis));
}

}  // namespace spinor_s3
