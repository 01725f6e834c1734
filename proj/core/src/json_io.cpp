#include "spinor_s3/json_io.hpp"

#include <stdexcept>

namespace spinor_s3 {

void to_json(Json& j, const Rational& r) { j = r.str(); }

void from_json(const Json& j, Rational& r) {
  if (!j.is_string()) throw std::invalid_argument("rational must be encoded as a string");
  r = Rational::parse(j.get<std::string>());
}

void to_json(Json& j, const GaussianRational& z) { j = Json{{"re", z.re()}, {"im", z.im()}}; }

void from_json(const Json& j, GaussianRational& z) {
  z = GaussianRational(j.at("re").get<Rational>(), j.at("im").get<Rational>());
}

void to_json(Json& j, const Quaternion& q) { j = Json::array({q[0], q[1], q[2], q[3]}); }

void from_json(const Json& j, Quaternion& q) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("quaternion must be a 4-array");
  q = Quaternion(j[0].get<Rational>(), j[1].get<Rational>(), j[2].get<Rational>(), j[3].get<Rational>());
}

void to_json(Json& j, const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms().terms()) terms.push_back(Json{{"exp", e}, {"coeff", c}});
  j = Json{{"view", to_string(p.view())}, {"terms", std::move(terms)}};
}

void from_json(const Json& j, Polynomial& p) {
  Polynomial out(view_from_string(j.at("view").get<std::string>()));
  for (const auto& term : j.at("terms")) {
    const auto e = term.at("exp").get<Exponents>();
    out.add_term(e, term.at("coeff").get<GaussianRational>());
  }
  p = std::move(out);
}

void to_json(Json& j, const SpinorSection& s) { j = Json{{"k", s.k}, {"f", s.f}, {"g", s.g}}; }

void from_json(const Json& j, SpinorSection& s) {
  s = SpinorSection{j.at("k").get<int>(), j.at("f").get<Polynomial>(), j.at("g").get<Polynomial>()};
}

void to_json(Json& j, const RepMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.entries.cols(); ++c) row.push_back(m.entries(r, c));
    rows.push_back(std::move(row));
  }
  j = Json{{"k", m.k}, {"entries", std::move(rows)}};
}

RepMatrix rep_matrix_from_json(const Json& j) {
  const int k = j.at("k").get<int>();
  const auto n = static_cast<std::size_t>(k) + 1;
  const Json& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != n) throw std::invalid_argument("RepMatrix: expected k+1 rows");
  RepMatrix m{k, ExactMatrix(n, n)};
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) throw std::invalid_argument("RepMatrix: expected k+1 columns");
    for (std::size_t c = 0; c < n; ++c) m.entries(r, c) = rows[r][c].get<GaussianRational>();
  }
  return m;
}

void to_json(Json& j, const KetVector& v) { j = Json{{"k", v.k()}, {"coeffs", v.coefficients()}}; }

KetVector ket_vector_from_json(const Json& j) {
  KetVector v(j.at("k").get<int>());
  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.size() != v.coefficients().size())
    throw std::invalid_argument("KetVector: expected k+1 coefficients");
  for (std::size_t p = 0; p < coeffs.size(); ++p) v.add(static_cast<int>(p), coeffs[p].get<GaussianRational>());
  return v;
}

void to_json(Json& j, const SpinorVector& v) {
  Json coeffs = Json::array();
  for (int r : {0, 2})
    for (int p = 0; p <= v.k(); ++p)
      if (const auto c = v.at(r, p); !c.is_zero()) coeffs.push_back(Json{{"r", r}, {"p", p}, {"c", c}});
  j = Json{{"k", v.k()}, {"q", v.q()}, {"coeffs", std::move(coeffs)}};
}

SpinorVector spinor_vector_from_json(const Json& j) {
  SpinorVector v(j.at("k").get<int>(), j.at("q").get<int>());
  for (const auto& entry : j.at("coeffs")) {
    const int p = entry.at("p").get<int>();
    if (p < 0 || p > v.k()) throw std::invalid_argument("SpinorVector: p outside 0..k");
    v.add(entry.at("r").get<int>(), p, entry.at("c").get<GaussianRational>());
  }
  return v;
}

void to_json(Json& j, const TransferImage& t) {
  j = Json(t.poly);
  j["k"] = t.k;
  j["p"] = t.p;
  j["q"] = t.q;
  j["norm_factor_squared"] = t.norm_factor_squared;
}

void from_json(const Json& j, TransferImage& t) {
  t = TransferImage{j.at("k").get<int>(), j.at("p").get<int>(), j.at("q").get<int>(), j.get<Polynomial>(),
                    j.at("norm_factor_squared").get<Rational>()};
}

void to_json(Json& j, const IntegralValue& v) { j = Json{{"unit", "2pi^2"}, {"value", v.coefficient}}; }

void from_json(const Json& j, IntegralValue& v) {
  if (j.at("unit").get<std::string>() != "2pi^2") throw std::invalid_argument("IntegralValue: unit must be 2pi^2");
  v = IntegralValue{j.at("value").get<GaussianRational>()};
}

void to_json(Json& j, const QuadratureSpec& spec) {
  if (const auto* t = std::get_if<TensorRule>(&spec)) {
    j = Json{{"rule", "tensor"}, {"n_angular", t->n_angular}, {"n_radial", t->n_radial}};
  } else {
    const auto& mc = std::get<MonteCarloRule>(spec);
    j = Json{{"rule", "mc"}, {"samples", mc.samples}, {"seed", mc.seed}};
  }
}

void from_json(const Json& j, QuadratureSpec& spec) {
  const auto rule = j.at("rule").get<std::string>();
  if (rule == "tensor") {
    spec = TensorRule{j.at("n_angular").get<int>(), j.at("n_radial").get<int>()};
  } else if (rule == "mc") {
    spec = MonteCarloRule{j.at("samples").get<std::uint64_t>(), j.at("seed").get<std::uint64_t>(), 1};
  } else {
    throw std::invalid_argument("quadrature rule must be 'tensor' or 'mc'");
  }
}

void to_json(Json& j, const SpectrumRow& row) {
  j = Json{{"k", row.k}, {"eigenvalue", row.eigenvalue}, {"multiplicity", row.multiplicity}};
}

void from_json(const Json& j, SpectrumRow& row) {
  row = SpectrumRow{j.at("k").get<int>(), j.at("eigenvalue").get<Rational>(), j.at("multiplicity").get<long>()};
}

void to_json(Json& j, const TransferredSection& s) {
  j = Json{{"family", to_string(s.family)}, {"q", s.q},           {"p", s.p},
           {"eigenvalue", s.eigenvalue},    {"section", s.section}};
}

void from_json(const Json& j, TransferredSection& s) {
  const auto family = j.at("family").get<std::string>();
  if (family != "plus" && family != "minus") throw std::invalid_argument("family must be 'plus' or 'minus'");
  s = TransferredSection{j.at("section").get<SpinorSection>(), j.at("eigenvalue").get<Rational>(),
                         family == "plus" ? FamilyLabel::plus : FamilyLabel::minus, j.at("p").get<int>(),
                         j.at("q").get<int>()};
}

}  // namespace spinor_s3
