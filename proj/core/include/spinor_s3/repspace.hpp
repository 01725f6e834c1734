#pragma once

#include <vector>

#include "spinor_s3/exactnum.hpp"
#include "spinor_s3/linalg.hpp"

namespace spinor_s3 {

/// Element of the irreducible representation H_k, the k-th complex symmetric
/// power of H = C^2, in the basis |p>, p = 0..k, where |p> carries p factors
/// e2 and k - p factors e0. Kets outside 0..k are zero.
class KetVector {
 public:
  explicit KetVector(int k);
  /// The basis ket |p>. Throws std::out_of_range unless 0 <= p <= k.
  static KetVector basis(int k, int p);

  int k() const { return k_; }
  /// Coefficient of |p>; zero for p outside 0..k.
  GaussianRational at(int p) const;
  /// Adds c to the coefficient of |p>; silently dropped for p outside 0..k.
  void add(int p, const GaussianRational& c);
  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }

  bool is_zero() const;

  KetVector& operator+=(const KetVector& o);
  KetVector& operator-=(const KetVector& o);
  KetVector& operator*=(const GaussianRational& s);
  friend KetVector operator+(KetVector a, const KetVector& b) { return a += b; }
  friend KetVector operator-(KetVector a, const KetVector& b) { return a -= b; }
  friend KetVector operator*(const GaussianRational& s, KetVector a) { return a *= s; }

  friend bool operator==(const KetVector& a, const KetVector& b) { return a.k_ == b.k_ && a.coeffs_ == b.coeffs_; }

 private:
  int k_;
  std::vector<GaussianRational> coeffs_;
};

/// Matrix of an operator on H_k in the |p> basis; column p is the image of |p>.
struct RepMatrix {
  int k = 0;
  ExactMatrix entries;

  friend bool operator==(const RepMatrix&, const RepMatrix&) = default;
};

/// Infinitesimal action of e_axis (axis 1..3):
///   l1 |p> = (2p - k) i |p>
///   l2 |p> = (p - k) |p+1> + p |p-1>
///   l3 |p> = (p - k) i |p+1> - p i |p-1>
/// Throws std::invalid_argument for other axes.
KetVector apply_l(int axis, const KetVector& v);

/// Matrix of apply_l(axis, .) on H_k.
RepMatrix l_matrix(int axis, int k);

/// Action of the infinitesimal generator of an arbitrary element
/// c1 e1 + c2 e2 + c3 e3 of sp(1) (real part of q is ignored).
RepMatrix l_matrix(const Quaternion& imaginary, int k);

/// Complexified sl(2, C) basis with H = i e1, X = (e2 + i e3)/2, Y = (-e2 + i e3)/2:
///   H |p> = (k - 2p) |p>,  X |p> = p |p-1>,  Y |p> = (k - p) |p+1>.
enum class Sl2 { H, X, Y };

KetVector apply_sl2(Sl2 which, const KetVector& v);
RepMatrix sl2_matrix(Sl2 which, int k);

/// -(M1^2 + M2^2 + M3^2) for the matrices of l1, l2, l3 on H_k; equals
/// k(k+2) times the identity.
RepMatrix casimir(int k);

}  // namespace spinor_s3
