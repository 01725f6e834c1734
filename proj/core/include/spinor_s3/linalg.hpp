#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "spinor_s3/exactnum.hpp"

namespace spinor_s3 {

/// Dense row-major matrix over the Gaussian rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_diagonal() const;
  /// Largest |i - j| over nonzero entries; 0 for diagonal or zero matrices.
  std::size_t bandwidth() const;
  GaussianRational trace() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussianRational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// Commutator AB - BA.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Rank by fraction-exact Gaussian elimination.
std::size_t rank(ExactMatrix m);

/// Matrix whose columns are the given vectors (all of equal length).
ExactMatrix from_columns(const std::vector<std::vector<GaussianRational>>& columns);

/// Coefficients of det(x I - A), lowest degree first (monic, size n + 1),
/// via the Faddeev-LeVerrier recursion.
std::vector<GaussianRational> characteristic_polynomial(const ExactMatrix& a);

struct EigenvalueMultiplicity {
  std::size_t algebraic = 0;
  std::size_t geometric = 0;
};

/// Exact spectrum of a square matrix whose characteristic polynomial has
/// integer coefficients and splits over the integers.
struct IntegerSpectrum {
  /// False when the characteristic polynomial is not integral or has a
  /// non-integer root; `eigenvalues` then holds whatever roots were found.
  bool splits = false;
  std::map<long, EigenvalueMultiplicity> eigenvalues;

  bool diagonalizable() const;
};

/// Integer roots are searched inside the Gershgorin bound; multiplicities by
/// synthetic division, geometric multiplicities by rank of A - lambda I.
IntegerSpectrum integer_spectrum(const ExactMatrix& a);

}  // namespace spinor_s3
