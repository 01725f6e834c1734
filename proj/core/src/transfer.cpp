#include "spinor_s3/transfer.hpp"

#include <algorithm>
#include <stdexcept>

#include "spinor_s3/geometry.hpp"

namespace spinor_s3 {

namespace {

void check_indices(int k, int p, int q, const char* what) {
  if (k < 0 || p < 0 || q < 0 || p > k || q > k)
    throw std::out_of_range(std::string(what) + ": need 0 <= p, q <= k");
}

}  // namespace

TransferImage iso_closed_form(int k, int p, int q) {
  check_indices(k, p, q, "iso_closed_form");
  const auto uk = static_cast<unsigned>(k);
  const Rational prefactor(mpz_class(1), binomial(uk, static_cast<unsigned>(p)) * binomial(uk, static_cast<unsigned>(q)));
  Polynomial poly(View::z);
  for (int i = std::max(0, p - q); i <= std::min(p, k - q); ++i) {
    const Exponents e{static_cast<unsigned>(k - q - i), static_cast<unsigned>(p - i), static_cast<unsigned>(i),
                      static_cast<unsigned>(q - p + i)};
    const mpz_class denom = factorial(e[0]) * factorial(e[1]) * factorial(e[2]) * factorial(e[3]);
    poly.add_term(e, prefactor * Rational(factorial(uk), denom));
  }
  return {k, p, q, std::move(poly), Rational(k + 1)};
}

Polynomial beta_lower(Side side, const Polynomial& f) {
  const KillingPair along_e2 = side == Side::left ? KillingPair::left_invariant(2) : KillingPair::right_invariant(2);
  const KillingPair along_e3 = side == Side::left ? KillingPair::left_invariant(3) : KillingPair::right_invariant(3);
  const GaussianRational half(Rational(1, 2));
  const GaussianRational i_half(Rational(0), Rational(1, 2));
  return (-half) * killing_derivative(f, along_e2) + i_half * killing_derivative(f, along_e3);
}

TransferImage iso_recursive(int k, int p, int q, LoweringOrder order) {
  check_indices(k, p, q, "iso_recursive");
  Polynomial poly = Polynomial::g2().pow(static_cast<unsigned>(k));
  const auto lower = [&](Side side, int steps) {
    for (int j = 0; j < steps; ++j) poly = beta_lower(side, poly) * GaussianRational(Rational(1, k - j));
  };
  if (order == LoweringOrder::left_first) {
    lower(Side::left, p);
    lower(Side::right, q);
  } else {
    lower(Side::right, q);
    lower(Side::left, p);
  }
  return {k, p, q, std::move(poly), Rational(k + 1)};
}

std::vector<TransferredSection> transfer_eigenbasis(int k) {
  const EigenFamilies families = eigenbasis_abstract(k);
  std::vector<std::vector<Polynomial>> images(static_cast<std::size_t>(k) + 1);
  for (int p = 0; p <= k; ++p)
    for (int q = 0; q <= k; ++q) images[static_cast<std::size_t>(p)].push_back(iso_closed_form(k, p, q).poly);

  std::vector<TransferredSection> out;
  out.reserve(2 * static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(k + 1));
  for (const EigenFamily* family : {&families.plus, &families.minus}) {
    for (const auto& member : family->members) {
      const SpinorVector& v = member.vector;
      SpinorSection section{k, Polynomial(View::z), Polynomial(View::z)};
      for (int p = 0; p <= k; ++p) {
        const Polynomial& image = images[static_cast<std::size_t>(p)][static_cast<std::size_t>(v.q())];
        if (const auto c = v.at(0, p); !c.is_zero()) section.f += c * image;
        if (const auto c = v.at(2, p); !c.is_zero()) section.g += c * image;
      }
      out.push_back({std::move(section), family->dirac_eigenvalue, family->label, member.p, v.q()});
    }
  }
  return out;
}

}  // namespace spinor_s3
