#pragma once

#include <vector>

#include "spinor_s3/abstract_dirac.hpp"
#include "spinor_s3/polyring.hpp"

namespace spinor_s3 {

/// Image of |p>|q> under the equivariant isomorphism H_k (x) H_k -> W_k.
///
/// `poly` omits the irrational global factor sqrt((k+1) / 2 pi^2); that
/// factor is recorded as norm_factor_squared = k + 1 against the 2 pi^2
/// volume unit, so multiplying ||poly||^2 (in 2 pi^2 units) by
/// norm_factor_squared gives the norm of the properly scaled image.
struct TransferImage {
  int k = 0;
  int p = 0;
  int q = 0;
  Polynomial poly{View::z};
  Rational norm_factor_squared;
};

/// Closed form
///   C(k,p)^-1 C(k,q)^-1 sum_i k! / ((k-q-i)! (p-i)! i! (q-p+i)!)
///       g2^(k-q-i) conj(g2)^(p-i) g_{-1}^i conj(g1)^(q-p+i)
/// summed over max(0, p-q) <= i <= min(p, k-q). Throws std::out_of_range
/// unless 0 <= p, q <= k.
TransferImage iso_closed_form(int k, int p, int q);

/// Which sl(2) factor a lowering operator acts on: left is x |-> x S
/// (the first H_k factor), right is x |-> -T x (the second).
enum class Side { left, right };

/// Complexified action of Y = (-e2 + i e3)/2 on the chosen side:
///   left:  f |-> -1/2 df(x e2) + i/2 df(x e3)
///   right: f |-> -1/2 df(-e2 x) + i/2 df(-e3 x)
/// Result is in the input's view.
Polynomial beta_lower(Side side, const Polynomial& f);

enum class LoweringOrder { left_first, right_first };

/// Builds the image of |p>|q> from g2^k by p left and q right lowerings,
/// dividing by (k)(k-1)...(k-p+1) and (k)(k-1)...(k-q+1).
TransferImage iso_recursive(int k, int p, int q, LoweringOrder order = LoweringOrder::left_first);

/// One transferred eigensection with its provenance.
struct TransferredSection {
  SpinorSection section;
  Rational eigenvalue;
  FamilyLabel family = FamilyLabel::plus;
  int p = 0;
  int q = 0;
};

/// Maps every abstract eigenvector sum c_{r,p} e_r |p>|q> to the section
/// f = sum c_{0,p} I(|p>|q>), g = sum c_{2,p} I(|p>|q>) (unnormalised).
/// Ordered by (family: plus then minus, q, p); 2(k+1)^2 sections in total.
std::vector<TransferredSection> transfer_eigenbasis(int k);

}  // namespace spinor_s3
