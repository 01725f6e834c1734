#include "spinor_s3/repspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinor_s3 {

KetVector::KetVector(int k) : k_(k) {
  if (k < 0) throw std::invalid_argument("KetVector: degree must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(k) + 1);
}

KetVector KetVector::basis(int k, int p) {
  if (p < 0 || p > k) throw std::out_of_range("KetVector::basis: p outside 0..k");
  KetVector v(k);
  v.coeffs_[static_cast<std::size_t>(p)] = 1;
  return v;
}

GaussianRational KetVector::at(int p) const {
  if (p < 0 || p > k_) return {};
  return coeffs_[static_cast<std::size_t>(p)];
}

void KetVector::add(int p, const GaussianRational& c) {
  if (p < 0 || p > k_) return;
  coeffs_[static_cast<std::size_t>(p)] += c;
}

bool KetVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

KetVector& KetVector::operator+=(const KetVector& o) {
  if (o.k_ != k_) throw std::invalid_argument("KetVector: degree mismatch");
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] += o.coeffs_[p];
  return *this;
}

KetVector& KetVector::operator-=(const KetVector& o) {
  if (o.k_ != k_) throw std::invalid_argument("KetVector: degree mismatch");
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] -= o.coeffs_[p];
  return *this;
}

KetVector& KetVector::operator*=(const GaussianRational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

KetVector apply_l(int axis, const KetVector& v) {
  const int k = v.k();
  const GaussianRational i = GaussianRational::i();
  KetVector out(k);
  for (int p = 0; p <= k; ++p) {
    const GaussianRational& c = v.coefficients()[static_cast<std::size_t>(p)];
    if (c.is_zero()) continue;
    switch (axis) {
      case 1:
        out.add(p, c * i * (2 * p - k));
        break;
      case 2:
        out.add(p + 1, c * (p - k));
        out.add(p - 1, c * p);
        break;
      case 3:
        out.add(p + 1, c * i * (p - k));
        out.add(p - 1, -(c * i * p));
        break;
      default:
        throw std::invalid_argument("apply_l: axis must be 1, 2 or 3");
    }
  }
  return out;
}

namespace {

template <class Apply>
RepMatrix matrix_of(int k, Apply&& apply) {
  const auto n = static_cast<std::size_t>(k) + 1;
  RepMatrix m{k, ExactMatrix(n, n)};
  for (int p = 0; p <= k; ++p) {
    const KetVector image = apply(KetVector::basis(k, p));
    for (std::size_t r = 0; r < n; ++r) m.entries(r, static_cast<std::size_t>(p)) = image.coefficients()[r];
  }
  return m;
}

}  // namespace

RepMatrix l_matrix(int axis, int k) {
  return matrix_of(k, [axis](const KetVector& v) { return apply_l(axis, v); });
}

RepMatrix l_matrix(const Quaternion& imaginary, int k) {
  const auto n = static_cast<std::size_t>(k) + 1;
  RepMatrix out{k, ExactMatrix(n, n)};
  for (int axis = 1; axis <= 3; ++axis)
    if (!imaginary[axis].is_zero()) out.entries += l_matrix(axis, k).entries * GaussianRational(imaginary[axis]);
  return out;
}

KetVector apply_sl2(Sl2 which, const KetVector& v) {
  const GaussianRational i = GaussianRational::i();
  const GaussianRational half(Rational(1, 2));
  const GaussianRational i_half(Rational(0), Rational(1, 2));
  switch (which) {
    case Sl2::H:
      return i * apply_l(1, v);
    case Sl2::X:
      return half * apply_l(2, v) + i_half * apply_l(3, v);
    case Sl2::Y:
      return (-half) * apply_l(2, v) + i_half * apply_l(3, v);
  }
  throw std::invalid_argument("apply_sl2: unknown generator");
}

RepMatrix sl2_matrix(Sl2 which, int k) {
  return matrix_of(k, [which](const KetVector& v) { return apply_sl2(which, v); });
}

RepMatrix casimir(int k) {
  if (k < 0) throw std::invalid_argument("casimir: degree must be non-negative");
  const auto n = static_cast<std::size_t>(k) + 1;
  ExactMatrix sum(n, n);
  for (int axis = 1; axis <= 3; ++axis) {
    const ExactMatrix m = l_matrix(axis, k).entries;
    sum -= m * m;
  }
  return {k, std::move(sum)};
}

}  // namespace spinor_s3
