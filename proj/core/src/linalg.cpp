#include "spinor_s3/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinor_s3 {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& z) { return z.is_zero(); });
}

bool ExactMatrix::is_diagonal() const { return bandwidth() == 0; }

std::size_t ExactMatrix::bandwidth() const {
  std::size_t band = 0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) band = std::max(band, r > c ? r - c : c - r);
  return band;
}

GaussianRational ExactMatrix::trace() const {
  GaussianRational t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& lhs = a(r, k);
      if (lhs.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const auto& rhs = b(k, c);
        if (!rhs.is_zero()) out(r, c) += lhs * rhs;
      }
    }
  return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

std::size_t rank(ExactMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
    const GaussianRational inv = GaussianRational(1) / m(rank, col);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const GaussianRational factor = m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

ExactMatrix from_columns(const std::vector<std::vector<GaussianRational>>& columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns.front().size();
  ExactMatrix m(n, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != n) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<GaussianRational> characteristic_polynomial(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  const std::size_t n = a.rows();
  std::vector<GaussianRational> coeffs(n + 1);
  coeffs[n] = 1;
  const ExactMatrix id = ExactMatrix::identity(n);
  ExactMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id * coeffs[n - k + 1];
    coeffs[n - k] = -(a * m).trace() / GaussianRational(static_cast<long>(k));
  }
  return coeffs;
}

bool IntegerSpectrum::diagonalizable() const {
  return splits && std::all_of(eigenvalues.begin(), eigenvalues.end(),
                               [](const auto& kv) { return kv.second.algebraic == kv.second.geometric; });
}

namespace {

GaussianRational horner(const std::vector<GaussianRational>& poly, const GaussianRational& x) {
  GaussianRational acc;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (x - root); assumes root is a root.
std::vector<GaussianRational> deflate(const std::vector<GaussianRational>& poly, const GaussianRational& root) {
  const std::size_t n = poly.size() - 1;
  std::vector<GaussianRational> out(n);
  GaussianRational carry;
  for (std::size_t i = n; i-- > 0;) {
    carry = poly[i + 1] + carry * root;
    out[i] = carry;
  }
  return out;
}

}  // namespace

IntegerSpectrum integer_spectrum(const ExactMatrix& a) {
  IntegerSpectrum out;
  auto poly = characteristic_polynomial(a);
  const bool integral = std::all_of(poly.begin(), poly.end(), [](const GaussianRational& z) {
    return z.is_real() && z.re().is_integer();
  });

  // Gershgorin: every eigenvalue satisfies |lambda| <= max row sum of |a_ij|.
  double bound = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) row += std::sqrt(a(r, c).norm().to_double());
    bound = std::max(bound, row);
  }
  const long limit = static_cast<long>(std::ceil(bound)) + 1;

  const std::size_t n = a.rows();
  for (long lambda = -limit; lambda <= limit && poly.size() > 1; ++lambda) {
    const GaussianRational root(lambda);
    std::size_t algebraic = 0;
    while (poly.size() > 1 && horner(poly, root).is_zero()) {
      poly = deflate(poly, root);
      ++algebraic;
    }
    if (algebraic == 0) continue;
    ExactMatrix shifted = a - ExactMatrix::identity(n) * root;
    out.eigenvalues[lambda] = {algebraic, n - rank(std::move(shifted))};
  }
  out.splits = integral && poly.size() == 1;
  return out;
}

}  // namespace spinor_s3
