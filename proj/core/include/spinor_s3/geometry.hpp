#pragma once

#include "spinor_s3/exactnum.hpp"
#include "spinor_s3/polyring.hpp"

namespace spinor_s3 {

/// Infinitesimal generator of x |-> t^-1 x s: the linear vector field
/// x |-> x S - T x on R^4 = H. For imaginary S, T it is a Killing field of
/// R^4 tangent to S^3.
struct KillingPair {
  Quaternion S;
  Quaternion T;

  /// (e_axis, 0): the left-invariant field e_axis on Sp(1).
  static KillingPair left_invariant(int axis);
  /// (0, e_axis).
  static KillingPair right_invariant(int axis);

  /// Value x S - T x of the field at x.
  Quaternion at(const Quaternion& x) const;
  /// Matrix of the field in x-coordinates.
  LinearField field() const;
};

/// x |-> d sigma_x(x S - T x), exact.
Polynomial killing_derivative(const Polynomial& f, const KillingPair& pair);
SpinorSection killing_derivative(const SpinorSection& s, const KillingPair& pair);
QuaternionPolynomial killing_derivative(const QuaternionPolynomial& q, const KillingPair& pair);

/// Shifted Dirac operator -sum_i (l_{e_i} sigma) e_i with literal
/// quaternion right multiplication.
SpinorSection dbar_section(const SpinorSection& s);

/// Dirac operator on the trivialised spinor bundle: dbar_section(s) - 3/2 s.
SpinorSection dirac_section(const SpinorSection& s);

/// Laplacian sum_i l_{e_i} l_{e_i} sigma. Sign convention: eigenvalue
/// 1 - (k+1)^2 on degree-k harmonic sections (non-positive).
SpinorSection laplace_section(const SpinorSection& s);

/// Laplacian from the full Hessian sum_{a,b} delta_ab (l_a l_b s - l_{nabla_a e_b} s)
/// including the Levi-Civita correction terms.
SpinorSection laplace_section_hessian(const SpinorSection& s);

/// Hessian entry l_a l_b s - l_{nabla_{e_a} e_b} s (a, b in 1..3).
SpinorSection hessian_entry(const SpinorSection& s, int a, int b);

/// nabla_{e_i} e_j for the left-invariant frame: 0 if i == j, else e_i e_j.
Quaternion levi_civita(int i, int j);

/// Spin connection on the constant spinor: nabla~_{e_i} e0 = -1/2 e_i.
Quaternion spin_connection(int i);

}  // namespace spinor_s3
