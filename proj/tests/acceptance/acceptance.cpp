// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "spinor_s3/abstract_dirac.hpp"
#include "spinor_s3/geometry.hpp"
#include "spinor_s3/integration.hpp"
#include "spinor_s3/repspace.hpp"
#include "spinor_s3/transfer.hpp"

namespace {

using namespace spinor_s3;

constexpr int kRepMaxK = 12;
constexpr int kSpectrumMaxK = 8;
constexpr int kTransferMaxK = 8;
constexpr int kSectionMaxK = 6;
constexpr int kGramMaxK = 5;
constexpr int kNormMaxK = 12;
constexpr unsigned kTensorMaxDegree = 8;
constexpr double kTensorRelTol = 1e-8;
constexpr double kTensorAbsTolForZero = 1e-8;
constexpr std::uint64_t kMcSamples = 1'000'000;
constexpr std::uint64_t kMcSeed = 20240601;
constexpr double kMcSigmas = 3.0;

struct Outcome {
  bool passed = true;
  std::string note;
};

Outcome check_casimir() {
  for (int k = 0; k <= kRepMaxK; ++k) {
    const auto n = static_cast<std::size_t>(k + 1);
    ExactMatrix sum(n, n);
    for (int i = 1; i <= 3; ++i) {
      const ExactMatrix l = l_matrix(i, k).entries;
      sum -= l * l;
    }
    if (!(sum == ExactMatrix::identity(n) * GaussianRational(k * (k + 2)))) return {false, "k = " + std::to_string(k)};
  }
  return {true, "-(l1^2 + l2^2 + l3^2) = k(k+2) Id, k = 0..12"};
}

Outcome check_commutators() {
  for (int k = 0; k <= kRepMaxK; ++k)
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        const ExactMatrix lhs = commutator(l_matrix(i, k).entries, l_matrix(j, k).entries);
        const Quaternion two_eiej = Quaternion::basis(i) * Quaternion::basis(j) * Rational(2);
        if (!(lhs == l_matrix(two_eiej, k).entries))
          return {false, "k = " + std::to_string(k) + ", (i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")"};
      }
  return {true, "[l_i, l_j] = 2 l_{e_i e_j}, k = 0..12"};
}

Outcome check_quadratic() {
  for (int k = 0; k <= kRepMaxK; ++k) {
    const ExactMatrix m = dbar_block_matrix(k);
    const auto n = m.rows();
    const ExactMatrix product = (m + ExactMatrix::identity(n) * GaussianRational(k)) *
                                (m - ExactMatrix::identity(n) * GaussianRational(k + 2));
    if (!product.is_zero()) return {false, "k = " + std::to_string(k)};
  }
  return {true, "(D + k)(D - (k+2)) = 0 as exact matrices, k = 0..12"};
}

Outcome check_spectrum() {
  for (int k = 0; k <= kSpectrumMaxK; ++k) {
    const Rational up(2 * k + 1, 2);
    const Rational down(-2 * k - 3, 2);
    const long up_mult = static_cast<long>(k) * (k + 1);
    const long down_mult = static_cast<long>(k + 1) * (k + 2);

    const EigenFamilies fam = eigenbasis_abstract(k);
    const bool lists = fam.plus.dirac_eigenvalue == up && fam.minus.dirac_eigenvalue == down &&
                       static_cast<long>(fam.plus.members.size()) == up_mult &&
                       static_cast<long>(fam.minus.members.size()) == down_mult;
    if (!lists) return {false, "family lists at k = " + std::to_string(k)};

    std::map<Rational, long> expected{{down, down_mult}};
    if (up_mult > 0) expected[up] = up_mult;
    if (spectrum_bruteforce(k) != expected) return {false, "diagonalisation at k = " + std::to_string(k)};
  }
  return {true, "k+1/2 x k(k+1) and -k-3/2 x (k+1)(k+2), lists and diagonalisation agree, k = 0..8"};
}

Outcome check_transfer() {
  for (int k = 0; k <= kTransferMaxK; ++k)
    for (int p = 0; p <= k; ++p)
      for (int q = 0; q <= k; ++q) {
        const Polynomial closed = iso_closed_form(k, p, q).poly;
        if (!(iso_recursive(k, p, q, LoweringOrder::left_first).poly == closed) ||
            !(iso_recursive(k, p, q, LoweringOrder::right_first).poly == closed))
          return {false, "closed form vs recursion at (k,p,q) = " + std::to_string(k) + std::to_string(p) + std::to_string(q)};
        const Polynomial left = p < k ? GaussianRational(k - p) * iso_closed_form(k, p + 1, q).poly : Polynomial(View::z);
        const Polynomial right = q < k ? GaussianRational(k - q) * iso_closed_form(k, p, q + 1).poly : Polynomial(View::z);
        if (!(beta_lower(Side::left, closed) == left) || !(beta_lower(Side::right, closed) == right))
          return {false, "equivariance at (k,p,q) = " + std::to_string(k) + std::to_string(p) + std::to_string(q)};
      }
  return {true, "closed form = recursion (both orders), lowering equivariance, k = 0..8"};
}

Outcome check_harmonicity() {
  for (int k = 0; k <= kTransferMaxK; ++k)
    for (int p = 0; p <= k; ++p)
      for (int q = 0; q <= k; ++q)
        if (!laplacian_r4(iso_closed_form(k, p, q).poly).is_zero())
          return {false, "(k,p,q) = " + std::to_string(k) + std::to_string(p) + std::to_string(q)};
  return {true, "Laplacian of every image vanishes, k = 0..8"};
}

Outcome check_eigen_identity() {
  const SpinorSection e0{0, Polynomial::constant(1, View::z), Polynomial(View::z)};
  if (!(dirac_section(e0) == GaussianRational(Rational(-3, 2)) * e0)) return {false, "D e0 != -3/2 e0"};
  std::size_t total = 0;
  for (int k = 0; k <= kSectionMaxK; ++k) {
    const auto sections = transfer_eigenbasis(k);
    if (sections.size() != static_cast<std::size_t>(2 * (k + 1) * (k + 1)))
      return {false, "section count at k = " + std::to_string(k)};
    for (const auto& s : sections) {
      if (s.section.is_zero() || !(dirac_section(s.section) == GaussianRational(s.eigenvalue) * s.section))
        return {false, "k = " + std::to_string(k) + ", p = " + std::to_string(s.p) + ", q = " + std::to_string(s.q)};
      ++total;
    }
  }
  return {true, std::to_string(total) + " exact eigen-identities, k = 0..6, including D e0 = -3/2 e0"};
}

Outcome check_laplace() {
  for (int k = 0; k <= kSectionMaxK; ++k) {
    const GaussianRational lambda(1 - (k + 1) * (k + 1));
    for (const auto& s : transfer_eigenbasis(k)) {
      const SpinorSection lap = laplace_section(s.section);
      if (!(lap == lambda * s.section)) return {false, "eigenvalue at k = " + std::to_string(k)};
      if (!(laplace_section(dirac_section(s.section)) == dirac_section(lap)))
        return {false, "commutation at k = " + std::to_string(k)};
    }
  }
  return {true, "Laplace = 1-(k+1)^2 and Laplace D = D Laplace, k = 0..6"};
}

Rational beta_moment(unsigned l1, unsigned l2, unsigned l3, unsigned l4) {
  if (l1 != l2 || l3 != l4) return Rational(0);
  mpz_class num = 1;
  for (unsigned j = 2; j <= l1; ++j) num *= j;
  for (unsigned j = 2; j <= l3; ++j) num *= j;
  mpz_class den = 1;
  for (unsigned j = 2; j <= l1 + l3 + 1; ++j) den *= j;
  const Rational v(num, den);
  return l4 % 2 == 0 ? v : -v;
}

Outcome check_integration() {
  std::ostringstream note;
  note.precision(3);
  double worst = 0.0;
  std::size_t monomials = 0;
  const TensorRule rule = tensor_rule_for_degree(kTensorMaxDegree);
  for (unsigned a = 0; a <= kTensorMaxDegree; ++a)
    for (unsigned b = 0; a + b <= kTensorMaxDegree; ++b)
      for (unsigned c = 0; a + b + c <= kTensorMaxDegree; ++c)
        for (unsigned d = 0; a + b + c + d <= kTensorMaxDegree; ++d) {
          const IntegralValue exact = monomial_integral(a, b, c, d);
          if (!(exact.coefficient == GaussianRational(beta_moment(a, b, c, d))))
            return {false, "exact monomial integral mismatch"};
          const auto numeric = eta_quadrature(Polynomial::monomial({a, b, c, d}, 1, View::z), rule).value;
          const auto target = exact.to_complex();
          const double err = std::abs(numeric - target);
          if (std::abs(target) > 0) {
            worst = std::max(worst, err / std::abs(target));
            if (err > kTensorRelTol * std::abs(target)) return {false, "tensor rule relative error"};
          } else if (err > kTensorAbsTolForZero) {
            return {false, "tensor rule on a vanishing integral"};
          }
          ++monomials;
        }

  for (int k = 0; k <= kNormMaxK; ++k) {
    const Polynomial g = Polynomial::g2().pow(static_cast<unsigned>(k));
    if (!(l2_inner_product(g, g).coefficient == GaussianRational(Rational(1, k + 1))))
      return {false, "<g2^k, g2^k> at k = " + std::to_string(k)};
  }

  const std::vector<Polynomial> integrands{
      Polynomial::g2() * Polynomial::g2bar(),
      (Polynomial::g2() * Polynomial::g2bar()).pow(2),
      Polynomial::g2() * Polynomial::g2bar() * Polynomial::gm1() * Polynomial::g1bar(),
      Polynomial::g2().pow(2) * Polynomial::g1bar(),
      Polynomial::x(0).pow(4) + Polynomial::x(1) * Polynomial::x(2),
  };
  double worst_sigma = 0.0;
  for (const auto& f : integrands) {
    const auto exact = integrate(f).to_complex();
    const QuadratureResult r = eta_quadrature(f, MonteCarloRule{kMcSamples, kMcSeed, 1});
    const auto se = *r.standard_error;
    for (const auto& [got, want, err] :
         {std::tuple(r.value.real(), exact.real(), se.real()), std::tuple(r.value.imag(), exact.imag(), se.imag())}) {
      const double dev = std::abs(got - want);
      if (err > 0) worst_sigma = std::max(worst_sigma, dev / err);
      if (dev > kMcSigmas * err + 1e-12) return {false, "Monte Carlo outside 3 standard errors"};
    }
  }
  note << monomials << " monomials exact; tensor rule max rel. error " << worst << "; <g2^k,g2^k> = 1/(k+1) for k <= 12; "
       << "Monte Carlo max deviation " << worst_sigma << " s.e.";
  return {true, note.str()};
}

Outcome check_gram() {
  std::string scales;
  for (int k = 0; k <= kGramMaxK; ++k) {
    const ExactMatrix g = gram_matrix(k);
    if (!g.is_diagonal()) return {false, "off-diagonal entry at k = " + std::to_string(k)};
    const auto scale = gram_proportionality(g, gram_prediction(k));
    if (!scale) return {false, "diagonal not proportional at k = " + std::to_string(k)};
    scales += (k == 0 ? "" : ", ") + scale->str();
  }
  return {true, "diagonal, scale per k = " + scales};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Casimir identity", check_casimir},
      {"commutators", check_commutators},
      {"quadratic relation", check_quadratic},
      {"spectrum", check_spectrum},
      {"transfer", check_transfer},
      {"harmonicity", check_harmonicity},
      {"Dirac eigen-identity", check_eigen_identity},
      {"Laplace eigenvalue", check_laplace},
      {"integration", check_integration},
      {"Gram structure", check_gram},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %2d (%s): %s [%.2f s]\n", o.passed ? "PASS" : "FAIL", index, name.c_str(), o.note.c_str(),
                secs);
    std::fflush(stdout);
    if (!o.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
