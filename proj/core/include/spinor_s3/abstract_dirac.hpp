#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinor_s3/exactnum.hpp"
#include "spinor_s3/linalg.hpp"

namespace spinor_s3 {

/// Element of H (x)_C (H_k (x) span{|q>}) in the complex basis e_r (x) |p>,
/// r in {0, 2}. The second-factor index q is carried along untouched since
/// the shifted Dirac operator never mixes q.
class SpinorVector {
 public:
  SpinorVector(int k, int q);
  /// e_r (x) |p> (x) |q>. Throws std::out_of_range on bad indices.
  static SpinorVector basis(int k, int q, int r, int p);

  int k() const { return k_; }
  int q() const { return q_; }

  /// Coefficient of e_r (x) |p>; zero for p outside 0..k. r must be 0 or 2.
  GaussianRational at(int r, int p) const;
  void add(int r, int p, const GaussianRational& c);

  bool is_zero() const;
  /// Coefficients ordered e0|0>..e0|k>, e2|0>..e2|k>.
  std::vector<GaussianRational> flatten() const;

  SpinorVector& operator+=(const SpinorVector& o);
  SpinorVector& operator-=(const SpinorVector& o);
  SpinorVector& operator*=(const GaussianRational& s);
  friend SpinorVector operator+(SpinorVector a, const SpinorVector& b) { return a += b; }
  friend SpinorVector operator-(SpinorVector a, const SpinorVector& b) { return a -= b; }
  friend SpinorVector operator*(const GaussianRational& s, SpinorVector a) { return a *= s; }

  friend bool operator==(const SpinorVector&, const SpinorVector&) = default;

 private:
  int k_;
  int q_;
  std::vector<GaussianRational> e0_;
  std::vector<GaussianRational> e2_;
};

/// Shifted Dirac operator from the closed formulas
///   D(e0 (x) |p>) = (2p - k) e0 (x) |p> - 2p e2 (x) |p-1>
///   D(e2 (x) |p>) = -(2p - k) e2 (x) |p> - 2(k - p) e0 (x) |p+1>.
SpinorVector dbar_apply(const SpinorVector& v);

/// The same operator evaluated as -sum_i (l_{e_i} v) e_i, with l_{e_i}
/// acting on H_k through complex scalars (left multiplication by a + b e1)
/// and e_i acting by quaternion right multiplication on the H factor.
SpinorVector dbar_apply_from_action(const SpinorVector& v);

/// 2(k+1) x 2(k+1) matrix of the shifted operator on one q-block, in the
/// basis order of SpinorVector::flatten.
ExactMatrix dbar_block_matrix(int k);

/// (M + k I)(M - (k+2) I) == 0 exactly.
bool quadratic_check(int k);

enum class FamilyLabel { plus, minus };

std::string to_string(FamilyLabel label);

/// One eigenvector together with the index p of the invariant subspace
/// span{e0 (x) |p>, e2 (x) |p-1>} it lives in (p = 0..k+1).
struct FamilyMember {
  int p = 0;
  SpinorVector vector;
};

/// Eigenvectors sharing one Dirac eigenvalue (Dirac = shifted - 3/2).
struct EigenFamily {
  int k = 0;
  FamilyLabel label = FamilyLabel::plus;
  Rational dirac_eigenvalue;
  /// Ordered by (q, p).
  std::vector<FamilyMember> members;

  Rational shifted_eigenvalue() const { return dirac_eigenvalue + Rational(3, 2); }
};

struct EigenFamilies {
  EigenFamily plus;   // Dirac eigenvalue k + 1/2, k(k+1) vectors
  EigenFamily minus;  // Dirac eigenvalue -k - 3/2, (k+1)(k+2) vectors
};

/// Explicit eigenvectors:
///   k + 1/2:    e0 |p>|q> - e2 |p-1>|q>,               p = 1..k
///   -k - 3/2:   (p-k-1) e0 |p>|q> - p e2 |p-1>|q>,     p = 1..k
///               e0 |0>|q>  (p = 0),  e2 |k>|q>  (p = k+1)
/// for q = 0..k. Each vector is checked against dbar_apply; a failing
/// vector throws std::logic_error.
EigenFamilies eigenbasis_abstract(int k);

struct SpectrumRow {
  int k = 0;
  Rational eigenvalue;
  long multiplicity = 0;

  friend bool operator==(const SpectrumRow&, const SpectrumRow&) = default;
};

/// Rows for k = 0..k_max, built from the family sizes. The k + 1/2 row is
/// omitted at k = 0 where that family is empty.
std::vector<SpectrumRow> spectrum_table(int k_max);

/// Dirac eigenvalues and complex multiplicities on V_k obtained by exact
/// diagonalisation of the q-blocks (characteristic polynomial + ranks), with
/// no reference to the family lists. Empty map if some block fails to split.
std::map<Rational, long> spectrum_bruteforce(int k);

}  // namespace spinor_s3
