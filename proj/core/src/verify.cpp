#include "spinor_s3/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "spinor_s3/abstract_dirac.hpp"
#include "spinor_s3/geometry.hpp"
#include "spinor_s3/integration.hpp"
#include "spinor_s3/repspace.hpp"
#include "spinor_s3/transfer.hpp"

namespace spinor_s3 {

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{Suite::casimir,  Suite::quadratic, Suite::spectrum, Suite::transfer,
                                         Suite::dirac,    Suite::laplace,   Suite::integral, Suite::gram};
  return suites;
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::casimir: return "casimir";
    case Suite::quadratic: return "quadratic";
    case Suite::spectrum: return "spectrum";
    case Suite::transfer: return "transfer";
    case Suite::dirac: return "dirac";
    case Suite::laplace: return "laplace";
    case Suite::integral: return "integral";
    case Suite::gram: return "gram";
  }
  return "?";
}

std::optional<Suite> suite_from_string(const std::string& name) {
  for (Suite s : all_suites())
    if (to_string(s) == name) return s;
  return std::nullopt;
}

int default_k_max(Suite suite) {
  switch (suite) {
    case Suite::casimir:
    case Suite::quadratic: return 12;
    case Suite::spectrum:
    case Suite::transfer:
    case Suite::integral: return 8;
    case Suite::dirac:
    case Suite::laplace: return 6;
    case Suite::gram: return 5;
  }
  return 0;
}

namespace {

class Recorder {
 public:
  Recorder(Suite suite, int k) : suite_(suite), k_(k) {}

  void check(std::string name, bool passed, std::string detail = {}) {
    out_.push_back({suite_, k_, std::move(name), passed, std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  Suite suite_;
  int k_;
  std::vector<CheckResult> out_;
};

std::string fraction(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

void casimir_item(int k, Recorder& rec) {
  const auto n = static_cast<std::size_t>(k) + 1;
  const RepMatrix c = casimir(k);
  rec.check("casimir = k(k+2) Id", c.entries == ExactMatrix::identity(n) * GaussianRational(k * (k + 2)),
            "k(k+2) = " + std::to_string(k * (k + 2)));

  bool commutators = true;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const ExactMatrix lhs = commutator(l_matrix(i, k).entries, l_matrix(j, k).entries);
      const Quaternion two_eiej = (Quaternion::basis(i) * Quaternion::basis(j)) * Rational(2);
      // [l_i, l_j] = l_{2 e_i e_j}; for i == j both sides vanish (e_i^2 is real)
      commutators = commutators && lhs == l_matrix(two_eiej, k).entries;
    }
  rec.check("[l_i, l_j] = 2 l_{e_i e_j}", commutators);

  bool banded = true;
  for (int i = 1; i <= 3; ++i) banded = banded && l_matrix(i, k).entries.bandwidth() <= 1;
  rec.check("l_i banded (bandwidth <= 1)", banded);

  const ExactMatrix h = sl2_matrix(Sl2::H, k).entries;
  const ExactMatrix x = sl2_matrix(Sl2::X, k).entries;
  const ExactMatrix y = sl2_matrix(Sl2::Y, k).entries;
  const bool sl2 = commutator(h, x) == x * GaussianRational(2) && commutator(h, y) == y * GaussianRational(-2) &&
                   commutator(x, y) == h && h.is_diagonal();
  rec.check("sl2 relations [H,X]=2X, [H,Y]=-2Y, [X,Y]=H", sl2);
}

void quadratic_item(int k, Recorder& rec) {
  rec.check("(D + k)(D - (k+2)) = 0", quadratic_check(k));
  std::size_t agree = 0;
  std::size_t total = 0;
  for (int r : {0, 2})
    for (int p = 0; p <= k; ++p) {
      const SpinorVector v = SpinorVector::basis(k, 0, r, p);
      ++total;
      if (dbar_apply(v) == dbar_apply_from_action(v)) ++agree;
    }
  rec.check("closed-form D = -sum (l_i v) e_i", agree == total, fraction(agree, total) + " basis vectors");
}

void spectrum_item(int k, Recorder& rec) {
  const EigenFamilies fam = eigenbasis_abstract(k);
  const long plus = static_cast<long>(fam.plus.members.size());
  const long minus = static_cast<long>(fam.minus.members.size());
  rec.check("family sizes k(k+1), (k+1)(k+2)", plus == k * (k + 1) && minus == (k + 1) * (k + 2),
            std::to_string(plus) + ", " + std::to_string(minus));

  bool independent = true;
  for (int q = 0; q <= k; ++q) {
    std::vector<std::vector<GaussianRational>> cols;
    for (const EigenFamily* f : {&fam.plus, &fam.minus})
      for (const auto& m : f->members)
        if (m.vector.q() == q) cols.push_back(m.vector.flatten());
    independent = independent && cols.size() == 2 * static_cast<std::size_t>(k + 1) &&
                  rank(from_columns(cols)) == cols.size();
  }
  rec.check("families form a basis of every q-block", independent);

  std::map<Rational, long> expected;
  if (plus > 0) expected[fam.plus.dirac_eigenvalue] = plus;
  expected[fam.minus.dirac_eigenvalue] = minus;
  const auto brute = spectrum_bruteforce(k);
  std::ostringstream detail;
  for (const auto& [lambda, mult] : brute) detail << lambda << ":" << mult << " ";
  rec.check("exact diagonalisation matches families", brute == expected, detail.str());
}

void transfer_item(int k, Recorder& rec) {
  std::size_t closed_eq_recursive = 0;
  std::size_t order_independent = 0;
  std::size_t harmonic = 0;
  std::size_t bookkeeping = 0;
  std::size_t equivariant = 0;
  std::size_t equivariance_total = 0;
  const std::size_t total = static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(k + 1);

  std::vector<std::vector<Polynomial>> images(static_cast<std::size_t>(k) + 1);
  for (int p = 0; p <= k; ++p)
    for (int q = 0; q <= k; ++q) images[static_cast<std::size_t>(p)].push_back(iso_closed_form(k, p, q).poly);
  const auto image = [&](int p, int q) -> const Polynomial& {
    return images[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  };

  std::set<Exponents, GradedLex> support;
  for (int p = 0; p <= k; ++p)
    for (int q = 0; q <= k; ++q) {
      const Polynomial& img = image(p, q);
      const Polynomial rec_left = iso_recursive(k, p, q, LoweringOrder::left_first).poly;
      const Polynomial rec_right = iso_recursive(k, p, q, LoweringOrder::right_first).poly;
      if (img == rec_left) ++closed_eq_recursive;
      if (rec_left == rec_right) ++order_independent;
      if (laplacian_r4(img).is_zero() && img.is_homogeneous_of_degree(static_cast<unsigned>(k))) ++harmonic;
      bool exps_ok = img.view() == View::z && !img.is_zero();
      for (const auto& [e, c] : img.terms().terms()) {
        exps_ok = exps_ok && total_degree(e) == static_cast<unsigned>(k);
        support.insert(e);
      }
      if (exps_ok) ++bookkeeping;
      if (p < k) {
        ++equivariance_total;
        if (beta_lower(Side::left, img) == GaussianRational(k - p) * image(p + 1, q)) ++equivariant;
      }
      if (q < k) {
        ++equivariance_total;
        if (beta_lower(Side::right, img) == GaussianRational(k - q) * image(p, q + 1)) ++equivariant;
      }
    }
  rec.check("closed form = recursive lowering", closed_eq_recursive == total, fraction(closed_eq_recursive, total));
  rec.check("left/right lowering order irrelevant", order_independent == total, fraction(order_independent, total));
  rec.check("images harmonic, homogeneous of degree k", harmonic == total, fraction(harmonic, total));
  rec.check("exponents non-negative, summing to k", bookkeeping == total, fraction(bookkeeping, total));
  rec.check("equivariance under both lowering operators", equivariant == equivariance_total,
            fraction(equivariant, equivariance_total));

  std::vector<std::vector<GaussianRational>> cols;
  for (int p = 0; p <= k; ++p)
    for (int q = 0; q <= k; ++q) {
      std::vector<GaussianRational> col;
      for (const auto& e : support) {
        const auto& terms = image(p, q).terms().terms();
        const auto it = terms.find(e);
        col.push_back(it == terms.end() ? GaussianRational{} : it->second);
      }
      cols.push_back(std::move(col));
    }
  const std::size_t r = rank(from_columns(cols));
  rec.check("images linearly independent (rank (k+1)^2)", r == total, "rank " + std::to_string(r));
}

void dirac_item(int k, Recorder& rec) {
  const auto sections = transfer_eigenbasis(k);
  std::size_t good = 0;
  std::size_t homogeneous = 0;
  for (const auto& s : sections) {
    if (dirac_section(s.section) == GaussianRational(s.eigenvalue) * s.section && !s.section.is_zero()) ++good;
    if (s.section.is_homogeneous()) ++homogeneous;
  }
  const std::size_t expected = 2 * static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(k + 1);
  rec.check("D sigma = lambda sigma for every transferred section", good == expected && sections.size() == expected,
            fraction(good, expected));
  rec.check("sections homogeneous of degree k", homogeneous == sections.size(), fraction(homogeneous, sections.size()));
}

void laplace_item(int k, Recorder& rec) {
  const auto sections = transfer_eigenbasis(k);
  const GaussianRational lambda(1 - (k + 1) * (k + 1));
  std::size_t eigen = 0;
  std::size_t commute = 0;
  std::size_t hessian = 0;
  for (const auto& s : sections) {
    const SpinorSection lap = laplace_section(s.section);
    if (lap == lambda * s.section) ++eigen;
    if (laplace_section_hessian(s.section) == lap) ++hessian;
    if (laplace_section(dirac_section(s.section)) == dirac_section(lap)) ++commute;
  }
  rec.check("Laplace sigma = (1-(k+1)^2) sigma", eigen == sections.size(),
            fraction(eigen, sections.size()) + ", lambda = " + std::to_string(1 - (k + 1) * (k + 1)));
  rec.check("Laplace D = D Laplace", commute == sections.size(), fraction(commute, sections.size()));
  rec.check("trace of the Hessian agrees", hessian == sections.size(), fraction(hessian, sections.size()));
}

void gram_item(int k, Recorder& rec) {
  const ExactMatrix g = gram_matrix(k);
  rec.check("Gram matrix diagonal", g.is_diagonal());
  const auto scale = gram_proportionality(g, gram_prediction(k));
  rec.check("diagonal proportional to 1/(C(k,p) C(k,q))", scale.has_value(),
            scale ? "scale " + scale->str() : "no single scale");
}

void integral_item(int k_max, const VerifyOptions& options, Recorder& rec) {
  bool norms = true;
  for (int k = 0; k <= k_max; ++k) {
    const Polynomial g = Polynomial::g2().pow(static_cast<unsigned>(k));
    norms = norms && l2_inner_product(g, g).coefficient == GaussianRational(Rational(1, k + 1));
  }
  rec.check("<g2^k, g2^k> = 2 pi^2 / (k+1)", norms, "k = 0.." + std::to_string(k_max));

  constexpr unsigned kMaxDegree = 8;
  const TensorRule rule = tensor_rule_for_degree(kMaxDegree);
  double worst = 0.0;
  std::size_t count = 0;
  for (unsigned a = 0; a <= kMaxDegree; ++a)
    for (unsigned b = 0; a + b <= kMaxDegree; ++b)
      for (unsigned c = 0; a + b + c <= kMaxDegree; ++c)
        for (unsigned d = 0; a + b + c + d <= kMaxDegree; ++d) {
          const auto exact = monomial_integral(a, b, c, d).to_complex();
          const auto numeric = eta_quadrature(Polynomial::monomial({a, b, c, d}, 1, View::z), rule).value;
          worst = std::max(worst, std::abs(numeric - exact) / (1.0 + std::abs(exact)));
          ++count;
        }
  std::ostringstream detail;
  detail << count << " monomials, max rel. error " << worst;
  rec.check("tensor rule matches exact integrals (rel 1e-8)", worst <= 1e-8, detail.str());

  const std::vector<std::pair<std::string, Polynomial>> integrands{
      {"1", Polynomial::constant(1, View::z)},
      {"g2", Polynomial::g2()},
      {"|g2|^2", Polynomial::g2() * Polynomial::g2bar()},
      {"|g2|^4", (Polynomial::g2() * Polynomial::g2bar()).pow(2)},
      {"g2 conj(g2) g_-1 conj(g1)", Polynomial::g2() * Polynomial::g2bar() * Polynomial::gm1() * Polynomial::g1bar()},
      {"|I(1,1)|^2 at k=2", conjugate(iso_closed_form(2, 1, 1).poly) * iso_closed_form(2, 1, 1).poly},
  };
  const MonteCarloRule mc{options.mc_samples, options.mc_seed, options.threads};
  for (const auto& [label, f] : integrands) {
    const auto exact = integrate(f).to_complex();
    const QuadratureResult r = eta_quadrature(f, mc);
    const auto se = r.standard_error.value_or(std::complex<double>{});
    const double slack = 1e-12 * (1.0 + std::abs(exact));
    const bool ok = std::abs(r.value.real() - exact.real()) <= 3.0 * se.real() + slack &&
                    std::abs(r.value.imag() - exact.imag()) <= 3.0 * se.imag() + slack;
    std::ostringstream d;
    d.precision(12);
    d << "estimate " << r.value.real() << ", exact " << exact.real() << ", se " << se.real();
    rec.check("Monte Carlo within 3 s.e.: " + label, ok, d.str());
  }
}

}  // namespace

std::vector<CheckResult> run_suite_item(Suite suite, int k, const VerifyOptions& options) {
  Recorder rec(suite, suite == Suite::integral ? -1 : k);
  switch (suite) {
    case Suite::casimir: casimir_item(k, rec); break;
    case Suite::quadratic: quadratic_item(k, rec); break;
    case Suite::spectrum: spectrum_item(k, rec); break;
    case Suite::transfer: transfer_item(k, rec); break;
    case Suite::dirac: dirac_item(k, rec); break;
    case Suite::laplace: laplace_item(k, rec); break;
    case Suite::gram: gram_item(k, rec); break;
    case Suite::integral: integral_item(options.k_max.value_or(default_k_max(Suite::integral)), options, rec); break;
  }
  return rec.take();
}

std::vector<CheckResult> run_suites(const std::vector<Suite>& suites, const VerifyOptions& options) {
  struct Item {
    Suite suite;
    int k;
  };
  std::vector<Item> items;
  for (Suite s : all_suites()) {
    if (std::find(suites.begin(), suites.end(), s) == suites.end()) continue;
    if (s == Suite::integral) {
      items.push_back({s, -1});
      continue;
    }
    const int k_max = options.k_max.value_or(default_k_max(s));
    for (int k = 0; k <= k_max; ++k) items.push_back({s, k});
  }

  std::vector<std::vector<CheckResult>> results(items.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      VerifyOptions item_options = options;
      item_options.threads = 1;
      try {
        results[i] = run_suite_item(items[i].suite, items[i].k, item_options);
      } catch (const std::exception& e) {
        results[i] = {{items[i].suite, items[i].k, "exception", false, e.what()}};
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(items.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::vector<CheckResult> flat;
  for (auto& r : results) flat.insert(flat.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  return flat;
}

}  // namespace spinor_s3
