#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "spinor_s3/exactnum.hpp"
#include "spinor_s3/linalg.hpp"
#include "spinor_s3/polyring.hpp"

namespace spinor_s3 {

/// Volume of the unit 3-sphere.
inline constexpr double kTwoPiSquared = 19.739208802178716;

/// Exact integral over S^3 in units of 2 pi^2 (so the volume is 1).
struct IntegralValue {
  GaussianRational coefficient;

  std::complex<double> to_complex() const {
    return {coefficient.re().to_double() * kTwoPiSquared, coefficient.im().to_double() * kTwoPiSquared};
  }

  friend bool operator==(const IntegralValue&, const IntegralValue&) = default;
};

/// Integral of g2^l1 conj(g2)^l2 g_{-1}^l3 conj(g1)^l4 over S^3:
/// (-1)^l4 l1! l3! / (l1 + l3 + 1)! when l1 == l2 and l3 == l4, else 0.
IntegralValue monomial_integral(unsigned l1, unsigned l2, unsigned l3, unsigned l4);

/// Exact integral of a polynomial over S^3 (expanded in the z-view).
IntegralValue integrate(const Polynomial& f);

/// <a, b> = integral of conj(a) b over S^3.
IntegralValue l2_inner_product(const Polynomial& a, const Polynomial& b);

/// Trapezoid rule in both angles of eta(t, s, rho) = (e^{it} sqrt(rho), e^{is} sqrt(1-rho))
/// times Gauss-Legendre in rho, with the volume form 1/2 dt ds drho.
struct TensorRule {
  int n_angular = 0;
  int n_radial = 0;
};

/// Uniform sampling of (t, s, rho), which is uniform on S^3. Samples are
/// drawn in fixed-size chunks; chunk c uses an mt19937_64 stream seeded with
/// seed_seq{seed, c}, so the estimate does not depend on the thread count.
struct MonteCarloRule {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

using QuadratureSpec = std::variant<TensorRule, MonteCarloRule>;

inline constexpr std::uint64_t kMonteCarloChunk = 1u << 16;

struct QuadratureResult {
  std::complex<double> value;
  /// Componentwise standard error of the Monte Carlo mean (scaled by the volume).
  std::optional<std::complex<double>> standard_error;
  std::uint64_t evaluations = 0;
};

/// Numerical integral of f over S^3. Throws std::invalid_argument for
/// non-positive node or sample counts.
QuadratureResult eta_quadrature(const Polynomial& f, const QuadratureSpec& spec);

/// Tensor rule that integrates every polynomial of total degree <= d exactly
/// (up to round-off): d + 1 angular and ceil((d + 2) / 2) radial nodes.
TensorRule tensor_rule_for_degree(unsigned d);

/// (k+1)^2 x (k+1)^2 Gram matrix of the unnormalised images I(|p>|q>),
/// indexed by p (k+1) + q, in 2 pi^2 units.
ExactMatrix gram_matrix(int k);

/// Squared norm pattern 1 / (C(k,p) C(k,q)) of |p>|q> for the averaged
/// symmetric-tensor convention, indexed like gram_matrix.
std::vector<Rational> gram_prediction(int k);

/// If diag(gram) = c * prediction for a single scalar c, returns c.
std::optional<Rational> gram_proportionality(const ExactMatrix& gram, const std::vector<Rational>& prediction);

}  // namespace spinor_s3
