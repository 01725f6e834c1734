#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "spinor_s3/abstract_dirac.hpp"
#include "spinor_s3/geometry.hpp"
#include "spinor_s3/integration.hpp"
#include "spinor_s3/json_io.hpp"
#include "spinor_s3/transfer.hpp"
#include "spinor_s3/verify.hpp"

namespace {

using namespace spinor_s3;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultCap = 12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<int> k;
  std::optional<int> k_max;
  std::string format = "table";
  std::string out;
  std::string suites = "all";
  std::string rule = "tensor";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20240601;
  bool unsafe_k = false;
};

unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("SPINOR_S3_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw UsageError("SPINOR_S3_THREADS must be a positive integer");
  return static_cast<unsigned>(n);
}

int checked_k(int value, const RunConfig& cfg, const char* flag) {
  if (value < 0) throw UsageError(std::string(flag) + " must be non-negative");
  if (value > kDefaultCap && !cfg.unsafe_k)
    throw UsageError(std::string(flag) + " " + std::to_string(value) + " exceeds the cap of " +
                     std::to_string(kDefaultCap) + "; pass --unsafe-k to override");
  return value;
}

// Shortest decimal that survives a round trip through 12 significant digits.
double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(const RunConfig& cfg, const Json& j) {
  Output out(cfg.out);
  out.stream() << j.dump(2) << '\n';
}

int cmd_spectrum(const RunConfig& cfg) {
  const int k_max = checked_k(cfg.k_max.value_or(cfg.k.value_or(4)), cfg, "--k-max");
  const auto rows = spectrum_table(k_max);
  if (cfg.format == "json") {
    emit_json(cfg, Json(rows));
    return kExitOk;
  }
  Output out(cfg.out);
  auto& os = out.stream();
  os << std::setw(4) << "k" << std::setw(14) << "eigenvalue" << std::setw(14) << "multiplicity" << '\n';
  for (const auto& r : rows)
    os << std::setw(4) << r.k << std::setw(14) << r.eigenvalue.str() << std::setw(14) << r.multiplicity << '\n';
  return kExitOk;
}

int cmd_eigenbasis(const RunConfig& cfg) {
  if (!cfg.k) throw UsageError("eigenbasis needs --k");
  const int k = checked_k(*cfg.k, cfg, "--k");
  const auto sections = transfer_eigenbasis(k);
  std::size_t failures = 0;
  for (const auto& s : sections)
    if (!(dirac_section(s.section) == GaussianRational(s.eigenvalue) * s.section)) ++failures;

  if (cfg.format == "json") {
    emit_json(cfg, Json{{"k", k}, {"sections", sections}});
  } else {
    Output out(cfg.out);
    auto& os = out.stream();
    os << std::setw(7) << "family" << std::setw(4) << "q" << std::setw(4) << "p" << std::setw(12) << "eigenvalue"
       << std::setw(10) << "f terms" << std::setw(10) << "g terms" << '\n';
    for (const auto& s : sections)
      os << std::setw(7) << to_string(s.family) << std::setw(4) << s.q << std::setw(4) << s.p << std::setw(12)
         << s.eigenvalue.str() << std::setw(10) << s.section.f.terms().terms().size() << std::setw(10)
         << s.section.g.terms().terms().size() << '\n';
  }
  if (failures != 0) {
    std::cerr << "eigenbasis: " << failures << " section(s) failed the eigen-equation\n";
    return kExitFailed;
  }
  return kExitOk;
}

std::vector<Suite> parse_suites(const std::string& list) {
  std::vector<Suite> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name == "all") return all_suites();
    const auto s = suite_from_string(name);
    if (!s) throw UsageError("unknown suite '" + name + "'");
    out.push_back(*s);
  }
  if (out.empty()) throw UsageError("--suite needs at least one name");
  return out;
}

int cmd_verify(const RunConfig& cfg) {
  const auto suites = parse_suites(cfg.suites);
  VerifyOptions options;
  if (cfg.k_max) options.k_max = checked_k(*cfg.k_max, cfg, "--k-max");
  options.threads = thread_budget();
  options.mc_samples = cfg.samples;
  options.mc_seed = cfg.seed;
  const auto results = run_suites(suites, options);

  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  const bool ok = passed == results.size();

  if (cfg.format == "json") {
    Json checks = Json::array();
    for (const auto& r : results) {
      Json c{{"suite", to_string(r.suite)}};
      if (r.k >= 0) c["k"] = r.k;
      c["check"] = r.name;
      c["passed"] = r.passed;
      if (!r.detail.empty()) c["detail"] = r.detail;
      checks.push_back(std::move(c));
    }
    emit_json(cfg, Json{{"passed", ok}, {"checks", std::move(checks)}});
  } else {
    Output out(cfg.out);
    auto& os = out.stream();
    for (const auto& r : results) {
      os << (r.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(10) << to_string(r.suite) << std::right;
      if (r.k >= 0) os << "k=" << std::setw(2) << r.k << "  ";
      else os << "      ";
      os << r.name;
      if (!r.detail.empty()) os << "  [" << r.detail << "]";
      os << '\n';
    }
    os << passed << "/" << results.size() << " checks passed\n";
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_gram(const RunConfig& cfg) {
  if (!cfg.k) throw UsageError("gram needs --k");
  const int k = checked_k(*cfg.k, cfg, "--k");
  const ExactMatrix g = gram_matrix(k);
  const auto prediction = gram_prediction(k);
  const auto scale = gram_proportionality(g, prediction);
  const bool diagonal = g.is_diagonal();

  if (cfg.format == "json") {
    Json entries = Json::array();
    for (int p = 0; p <= k; ++p)
      for (int q = 0; q <= k; ++q) {
        const auto i = static_cast<std::size_t>(p * (k + 1) + q);
        entries.push_back({{"p", p}, {"q", q}, {"norm_squared", g(i, i)}, {"prediction", prediction[i]}});
      }
    Json j{{"k", k}, {"unit", "2pi^2"}, {"diagonal", diagonal}};
    j["scale"] = scale ? Json(*scale) : Json(nullptr);
    j["entries"] = std::move(entries);
    emit_json(cfg, j);
  } else {
    Output out(cfg.out);
    auto& os = out.stream();
    os << "k = " << k << ", values in units of 2pi^2\n";
    os << std::setw(4) << "p" << std::setw(4) << "q" << std::setw(16) << "<I,I>" << std::setw(16) << "1/(C C)" << '\n';
    for (int p = 0; p <= k; ++p)
      for (int q = 0; q <= k; ++q) {
        const auto i = static_cast<std::size_t>(p * (k + 1) + q);
        os << std::setw(4) << p << std::setw(4) << q << std::setw(16) << g(i, i).re().str() << std::setw(16)
           << prediction[i].str() << '\n';
      }
    os << "off-diagonal entries " << (diagonal ? "all zero" : "NOT all zero") << '\n';
    os << "scale " << (scale ? scale->str() : "none") << '\n';
  }
  return diagonal && scale ? kExitOk : kExitFailed;
}

int cmd_quadrature(const RunConfig& cfg) {
  if (!cfg.k) throw UsageError("quadrature needs --k");
  const int k = checked_k(*cfg.k, cfg, "--k");
  QuadratureSpec spec;
  if (cfg.rule == "tensor") {
    spec = tensor_rule_for_degree(static_cast<unsigned>(2 * k));
  } else {
    if (cfg.samples < 2) throw UsageError("--samples must be at least 2");
    spec = MonteCarloRule{cfg.samples, cfg.seed, thread_budget()};
  }
  constexpr double kTensorTolerance = 1e-8;

  struct Row {
    int p, q;
    IntegralValue exact;
    QuadratureResult numeric;
  };
  std::vector<Row> rows;
  bool ok = true;
  for (int p = 0; p <= k; ++p)
    for (int q = 0; q <= k; ++q) {
      const Polynomial img = iso_closed_form(k, p, q).poly;
      const Polynomial integrand = conjugate(img) * img;
      Row r{p, q, integrate(integrand), eta_quadrature(integrand, spec)};
      const auto exact = r.exact.to_complex();
      if (!r.numeric.standard_error && std::abs(r.numeric.value - exact) > kTensorTolerance * std::abs(exact))
        ok = false;
      rows.push_back(std::move(r));
    }

  if (cfg.format == "json") {
    Json entries = Json::array();
    for (const auto& r : rows) {
      Json e{{"p", r.p}, {"q", r.q}, {"exact", r.exact}};
      e["exact_float"] = round12(r.exact.to_complex().real());
      e["estimate"] = round12(r.numeric.value.real());
      if (r.numeric.standard_error) e["standard_error"] = round12(r.numeric.standard_error->real());
      e["evaluations"] = r.numeric.evaluations;
      entries.push_back(std::move(e));
    }
    emit_json(cfg, Json{{"k", k}, {"integrand", "|I(p,q)|^2"}, {"rule", spec}, {"entries", std::move(entries)}});
  } else {
    Output out(cfg.out);
    auto& os = out.stream();
    os << "k = " << k << ", integrand |I(p,q)|^2, rule " << cfg.rule << '\n';
    os << std::setw(4) << "p" << std::setw(4) << "q" << std::setw(20) << "exact" << std::setw(20) << "estimate";
    if (cfg.rule == "mc") os << std::setw(20) << "std. error";
    os << '\n';
    for (const auto& r : rows) {
      os << std::setw(4) << r.p << std::setw(4) << r.q << std::setw(20) << fmt12(r.exact.to_complex().real())
         << std::setw(20) << fmt12(r.numeric.value.real());
      if (r.numeric.standard_error) os << std::setw(20) << fmt12(r.numeric.standard_error->real());
      os << '\n';
    }
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrum and polynomial eigenbasis of the Dirac operator on the round 3-sphere"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--out", cfg.out, "Write output to FILE instead of stdout");
    sub->add_flag("--unsafe-k", cfg.unsafe_k, "Allow k above the cap of 12");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Dirac eigenvalues and multiplicities for k = 0..k_max");
  spectrum->add_option("--k-max", cfg.k_max, "Largest k");
  spectrum->add_option("--k", cfg.k, "Alias for --k-max");
  common(spectrum);

  auto* eigen = app.add_subcommand("eigenbasis", "Explicit polynomial eigensections on V_k");
  eigen->add_option("--k", cfg.k, "Degree k")->required();
  common(eigen);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", cfg.suites, "Comma-separated suites or 'all'");
  verify->add_option("--k-max", cfg.k_max, "Largest k for every selected suite");
  verify->add_option("--samples", cfg.samples, "Monte Carlo samples for the integral suite");
  verify->add_option("--seed", cfg.seed, "Monte Carlo seed for the integral suite");
  common(verify);

  auto* gram = app.add_subcommand("gram", "Gram matrix of the transfer images");
  gram->add_option("--k", cfg.k, "Degree k")->required();
  common(gram);

  auto* quad = app.add_subcommand("quadrature", "Numerical vs exact norms of the transfer images");
  quad->add_option("--k", cfg.k, "Degree k")->required();
  quad->add_option("--rule", cfg.rule, "Quadrature rule")->check(CLI::IsMember({"tensor", "mc"}));
  quad->add_option("--samples", cfg.samples, "Monte Carlo samples");
  quad->add_option("--seed", cfg.seed, "Monte Carlo seed");
  common(quad);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    thread_budget();
    if (*spectrum) return cmd_spectrum(cfg);
    if (*eigen) return cmd_eigenbasis(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*gram) return cmd_gram(cfg);
    if (*quad) return cmd_quadrature(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
