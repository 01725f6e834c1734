#include "spinor_s3/integration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include <gsl/gsl_integration.h>

#include "spinor_s3/transfer.hpp"

namespace spinor_s3 {

IntegralValue monomial_integral(unsigned l1, unsigned l2, unsigned l3, unsigned l4) {
  if (l1 != l2 || l3 != l4) return {};
  Rational value(factorial(l1) * factorial(l3), factorial(l1 + l3 + 1));
  if (l4 % 2 == 1) value = -value;
  return {GaussianRational(value)};
}

IntegralValue integrate(const Polynomial& f) {
  GaussianRational total;
  const Polynomial fz = change_view(f, View::z);
  for (const auto& [e, c] : fz.terms().terms()) {
    const IntegralValue m = monomial_integral(e[0], e[1], e[2], e[3]);
    if (!m.coefficient.is_zero()) total += c * m.coefficient;
  }
  return {total};
}

IntegralValue l2_inner_product(const Polynomial& a, const Polynomial& b) {
  return integrate(conjugate(change_view(a, View::z)) * change_view(b, View::z));
}

namespace {

// z-view polynomial with double coefficients, evaluated from (z1, z2).
class NumericPoly {
 public:
  explicit NumericPoly(const Polynomial& f) {
    const Polynomial fz = change_view(f, View::z);
    for (const auto& [e, c] : fz.terms().terms())
      terms_.push_back({e, {c.re().to_double(), c.im().to_double()}});
    for (const auto& t : terms_)
      for (std::size_t j = 0; j < 4; ++j) max_exp_ = std::max(max_exp_, t.exponents[j]);
  }

  std::complex<double> operator()(std::complex<double> z1, std::complex<double> z2) const {
    const std::array<std::complex<double>, 4> base{z2, std::conj(z2), -z1, std::conj(z1)};
    std::array<std::vector<std::complex<double>>, 4> pw;
    for (std::size_t j = 0; j < 4; ++j) {
      pw[j].resize(max_exp_ + 1);
      pw[j][0] = 1.0;
      for (unsigned n = 1; n <= max_exp_; ++n) pw[j][n] = pw[j][n - 1] * base[j];
    }
    std::complex<double> out{};
    for (const auto& t : terms_) {
      std::complex<double> term = t.coeff;
      for (std::size_t j = 0; j < 4; ++j) term *= pw[j][t.exponents[j]];
      out += term;
    }
    return out;
  }

 private:
  struct Term {
    Exponents exponents;
    std::complex<double> coeff;
  };
  std::vector<Term> terms_;
  unsigned max_exp_ = 0;
};

std::complex<double> eta(double t, double rho_sqrt) { return std::polar(rho_sqrt, t); }

QuadratureResult tensor_quadrature(const NumericPoly& f, const TensorRule& rule) {
  if (rule.n_angular < 1 || rule.n_radial < 1)
    throw std::invalid_argument("eta_quadrature: tensor rule needs n_angular >= 1 and n_radial >= 1");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double h = two_pi / rule.n_angular;

  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(rule.n_radial));
  if (table == nullptr) throw std::runtime_error("eta_quadrature: cannot allocate Gauss-Legendre table");
  std::vector<std::pair<double, double>> radial(static_cast<std::size_t>(rule.n_radial));
  for (std::size_t i = 0; i < radial.size(); ++i)
    gsl_integration_glfixed_point(0.0, 1.0, i, &radial[i].first, &radial[i].second, table);
  gsl_integration_glfixed_table_free(table);

  std::complex<double> sum{};
  for (const auto& [rho, w_rho] : radial) {
    const double r1 = std::sqrt(rho);
    const double r2 = std::sqrt(1.0 - rho);
    std::complex<double> ring{};
    for (int a = 0; a < rule.n_angular; ++a) {
      const std::complex<double> z1 = eta(a * h, r1);
      for (int b = 0; b < rule.n_angular; ++b) ring += f(z1, eta(b * h, r2));
    }
    sum += w_rho * ring;
  }
  const auto evaluations = static_cast<std::uint64_t>(rule.n_radial) * rule.n_angular * rule.n_angular;
  return {0.5 * h * h * sum, std::nullopt, evaluations};
}

struct ChunkSums {
  double re = 0, im = 0, re2 = 0, im2 = 0;
  std::uint64_t n = 0;
};

ChunkSums sample_chunk(const NumericPoly& f, std::uint64_t seed, std::uint64_t chunk, std::uint64_t count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ChunkSums s;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double t = angle(rng);
    const double u = angle(rng);
    const double rho = unit(rng);
    const std::complex<double> v = f(eta(t, std::sqrt(rho)), eta(u, std::sqrt(1.0 - rho)));
    s.re += v.real();
    s.im += v.imag();
    s.re2 += v.real() * v.real();
    s.im2 += v.imag() * v.imag();
  }
  s.n = count;
  return s;
}

QuadratureResult monte_carlo(const NumericPoly& f, const MonteCarloRule& rule) {
  if (rule.samples < 2) throw std::invalid_argument("eta_quadrature: Monte Carlo needs at least 2 samples");
  const std::uint64_t chunks = (rule.samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<ChunkSums> partial(chunks);
  const auto run = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t c = first; c < chunks; c += stride) {
      const std::uint64_t count = std::min(kMonteCarloChunk, rule.samples - c * kMonteCarloChunk);
      partial[c] = sample_chunk(f, rule.seed, c, count);
    }
  };
  const unsigned threads = static_cast<unsigned>(std::clamp<std::uint64_t>(rule.threads, 1, chunks));
  if (threads == 1) {
    run(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t, threads);
  }

  ChunkSums total;
  for (const auto& s : partial) {
    total.re += s.re;
    total.im += s.im;
    total.re2 += s.re2;
    total.im2 += s.im2;
    total.n += s.n;
  }
  const auto n = static_cast<double>(total.n);
  const std::complex<double> mean(total.re / n, total.im / n);
  const auto std_error = [n](double sum, double sum2) {
    const double var = std::max(0.0, (sum2 - sum * sum / n) / (n - 1.0));
    return std::sqrt(var / n);
  };
  const std::complex<double> se(std_error(total.re, total.re2), std_error(total.im, total.im2));
  return {kTwoPiSquared * mean, kTwoPiSquared * se, total.n};
}

}  // namespace

QuadratureResult eta_quadrature(const Polynomial& f, const QuadratureSpec& spec) {
  const NumericPoly numeric(f);
  return std::visit(
      [&](const auto& rule) -> QuadratureResult {
        if constexpr (std::is_same_v<std::decay_t<decltype(rule)>, TensorRule>)
          return tensor_quadrature(numeric, rule);
        else
          return monte_carlo(numeric, rule);
      },
      spec);
}

TensorRule tensor_rule_for_degree(unsigned d) {
  return {static_cast<int>(d) + 1, static_cast<int>((d + 3) / 2)};
}

ExactMatrix gram_matrix(int k) {
  if (k < 0) throw std::invalid_argument("gram_matrix: degree must be non-negative");
  std::vector<Polynomial> images;
  for (int p = 0; p <= k; ++p)
    for (int q = 0; q <= k; ++q) images.push_back(iso_closed_form(k, p, q).poly);
  std::vector<Polynomial> conjugated;
  for (const auto& img : images) conjugated.push_back(conjugate(img));

  const std::size_t n = images.size();
  ExactMatrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gram(a, b) = integrate(conjugated[a] * images[b]).coefficient;
  return gram;
}

std::vector<Rational> gram_prediction(int k) {
  const auto uk = static_cast<unsigned>(k);
  std::vector<Rational> out;
  for (unsigned p = 0; p <= uk; ++p)
    for (unsigned q = 0; q <= uk; ++q) out.emplace_back(mpz_class(1), binomial(uk, p) * binomial(uk, q));
  return out;
}

std::optional<Rational> gram_proportionality(const ExactMatrix& gram, const std::vector<Rational>& prediction) {
  if (gram.rows() != prediction.size() || gram.cols() != prediction.size() || prediction.empty())
    return std::nullopt;
  std::optional<Rational> scale;
  for (std::size_t i = 0; i < prediction.size(); ++i) {
    const GaussianRational& d = gram(i, i);
    if (!d.is_real()) return std::nullopt;
    const Rational ratio = d.re() / prediction[i];
    if (!scale) scale = ratio;
    else if (!(*scale == ratio)) return std::nullopt;
  }
  return scale;
}

}  // namespace spinor_s3
