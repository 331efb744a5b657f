// Command-line front end: identity verification suites, vanishing-theorem
// threshold tables, and spectral positivity certificates for curvature
// models. Exit codes: 0 pass, 1 identity/certificate failure, 2 usage.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "dforms/io.hpp"
#include "dforms/models.hpp"
#include "dforms/spectral.hpp"
#include "dforms/suites.hpp"

namespace {

using namespace dforms;

std::pair<int, int> parse_range(const std::string& text) {
  auto sep = text.find("..");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = text.find('-', 1);
    skip = 1;
  }
  std::pair<int, int> out;
  if (sep == std::string::npos) {
    out.first = out.second = std::stoi(text);
  } else {
    out = {std::stoi(text.substr(0, sep)),
           std::stoi(text.substr(sep + skip))};
  }
  if (out.first > out.second)
    throw CLI::ValidationError("empty range '" + text + "'");
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

// Model specs: sphere:<n>[:<kappa>], cp:<m>, flat:<n>, or a file path.
CurvatureModel resolve_model(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts[0] == "sphere" && parts.size() >= 2) {
    Scalar kappa = parts.size() >= 3
                       ? Scalar::parse(parts[2], ScalarMode::Exact)
                       : Scalar::exact(1);
    return sphere_curvature(std::stoi(parts[1]), kappa);
  }
  if (parts[0] == "cp" && parts.size() == 2)
    return cpn_curvature(std::stoi(parts[1]));
  if (parts[0] == "flat" && parts.size() == 2)
    return flat_curvature(std::stoi(parts[1]));
  return load_curvature(spec);
}

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
  SuiteReport rep = run_suite(suite, cfg);
  std::cout << format_report(rep, cfg);
  return rep.passed() ? 0 : 1;
}

int cmd_thresholds(int n, std::pair<int, int> ps, std::pair<int, int> rs,
                   int j) {
  std::cout << "# vanishing thresholds, n = " << n << '\n';
  std::cout << "p\tr\tA\tmaillot p(n-p)\tpetersen-wink n-p\tcw0\n";
  for (int p = ps.first; p <= ps.second; ++p) {
    if (2 * p > n) continue;
    for (int r = rs.first; r <= rs.second; ++r) {
      auto a = theorem_a_threshold(n, p, r);
      auto maillot = theorem_a_threshold(n, p, 1);
      auto pw = theorem_a_threshold(n, p, std::max(p, r));
      auto cw = cw0_threshold(n, p, r);
      std::cout << p << '\t' << r << '\t' << a.threshold << '\t'
                << maillot.threshold << '\t' << pw.threshold << '\t'
                << cw.threshold << '\n';
    }
  }
  if (j > 0) {
    auto b = theorem_b_threshold(n, j);
    std::cout << "B(n=" << n << ", j=" << j << ")\t" << b.threshold << '\n';
  }
  std::cout << "# C column: k(n-2k+1)/min(2k,r) for admissible k\n";
  for (int k = 1; 4 * k <= n; ++k)
    for (int r = rs.first; r <= rs.second; ++r) {
      auto cthr = corollary_c_threshold(n, k, r);
      std::cout << "C(k=" << k << ", r=" << r << ")\t" << cthr.threshold
                << '\n';
    }
  return 0;
}

int cmd_certify(const std::string& model_spec, const std::string& omega_spec,
                int r, std::uint64_t seed) {
  CurvatureModel model = resolve_model(model_spec);
  const CurvatureInput& R = model.curvature;
  std::cout << "model " << model.name << " (n = " << model.n
            << ", normalization: " << model.normalization << ")\n";
  std::cout << "flags: symmetric = " << (R.symmetric() ? "yes" : "no")
            << ", first bianchi = " << (R.first_bianchi() ? "yes" : "no")
            << '\n';

  SpectralData spec = curvature_spectrum(R);
  std::cout << "spectrum (" << spec.eigenvalues.size() << " eigenvalues):";
  for (double l : spec.eigenvalues) std::printf(" %.6g", l);
  std::cout << "\nranks:";
  for (int rk : spec.ranks) std::cout << ' ' << rk;
  std::cout << '\n';

  PuritySearchOptions opts;
  opts.seed = seed;
  PurityCertificate cert = purity_rank_certificate(spec, r, opts);
  std::cout << to_report(cert);

  // The test form: a file, or random:<p>,<q> with q = 0 or q = p.
  Rng rng(seed);
  DoubleForm omega(model.n, 0, 0, ScalarMode::Float64);
  auto parts = split(omega_spec, ':');
  if (parts[0] == "random" && parts.size() == 2) {
    auto pq = split(parts[1], ',');
    int p = std::stoi(pq[0]);
    int q = pq.size() > 1 ? std::stoi(pq[1]) : 0;
    if (q != 0 && q != p)
      throw CLI::ValidationError(
          "--omega random: q must be 0 or equal to p");
    omega = q == 0
                ? random_form(rng, model.n, p, 0, ScalarMode::Float64)
                : random_trace_free_bianchi(rng, model.n, p,
                                            ScalarMode::Float64);
  } else {
    omega = load_double_form(omega_spec);
    if (omega.mode() == ScalarMode::Exact) omega = omega.to_float();
  }
  std::cout << "omega: (" << omega.left_degree() << ','
            << omega.right_degree() << ") with |omega|^2 = "
            << norm_sq(omega).to_double() << '\n';

  CertificateResult res = positivity_certificate(spec, omega, r);
  std::cout << "positivity certificate: " << to_string(res.verdict)
            << " (k = " << res.k_used
            << ", sum of k lowest eigenvalues = " << res.eigen_sum << ")\n";

  CurvatureInput Rf(R.tensor().to_float());
  double direct =
      inner(ric_l_term(Rf, omega, WeitMethod::Spectral, &spec), omega)
          .to_double();
  std::cout << "direct <Ric_L omega, omega> = " << direct << '\n';

  bool sound = true;
  if (res.verdict == CertificateResult::Verdict::Positive)
    sound = direct > -1e-9;
  else if (res.verdict == CertificateResult::Verdict::Nonnegative)
    sound = direct >= -1e-9 * std::max(1.0, std::abs(direct));
  std::cout << "cross-check: " << (sound ? "consistent" : "CONTRADICTION")
            << '\n';
  return sound ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) try {
  CLI::App app{"double form algebra: identity suites, curvature thresholds, "
               "positivity certificates"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run an identity suite");
  std::string suite = "all";
  std::string dim = "3..6";
  std::string mode_word = "exact";
  RunConfig cfg;
  verify->add_option("--suite", suite,
                     "hodge|composition|greub_vanstone|two_identities|sharp|"
                     "weitzenbock|ric_l|lemmas|all");
  verify->add_option("--dim", dim, "dimension or range, e.g. 4 or 3..6");
  verify->add_option("--p", cfg.max_p, "max left degree");
  verify->add_option("--q", cfg.max_q, "max right degree");
  verify->add_option("--trials", cfg.trials, "trials per identity and dim");
  verify->add_option("--seed", cfg.seed, "prng seed (mt19937_64)");
  verify->add_option("--mode", mode_word, "exact|float");
  verify->add_option("--tolerance", cfg.tolerance,
                     "comparison tolerance in float mode");

  // thresholds
  auto* thresholds =
      app.add_subcommand("thresholds", "vanishing-theorem threshold table");
  int tn = 8, tj = 0;
  std::string tp = "1..4", tr = "1..4";
  thresholds->add_option("--n", tn, "dimension")->required();
  thresholds->add_option("--p", tp, "degree range");
  thresholds->add_option("--r", tr, "purity parameter range");
  thresholds->add_option("--j", tj, "contraction order for the B threshold");

  // certify
  auto* certify = app.add_subcommand(
      "certify", "spectrum, purity and positivity certificate for a model");
  std::string model_spec, omega_spec = "random:2,0";
  int cr = 1;
  std::uint64_t cseed = 1;
  certify->add_option("--model", model_spec,
                      "sphere:<n>[:<kappa>] | cp:<m> | flat:<n> | file path")
      ->required();
  certify->add_option("--omega", omega_spec,
                      "file path or random:<p>[,<q>] (q = 0 or q = p)");
  certify->add_option("--r", cr, "purity bound r (ranks <= 2r)");
  certify->add_option("--seed", cseed, "prng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      auto [lo, hi] = parse_range(dim);
      cfg.dim_min = lo;
      cfg.dim_max = hi;
      if (mode_word == "float")
        cfg.mode = ScalarMode::Float64;
      else if (mode_word != "exact")
        throw CLI::ValidationError("--mode must be exact or float");
      bool known = suite == "all";
      for (const auto& name : suite_names()) known = known || name == suite;
      if (!known) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return 2;
      }
      return cmd_verify(suite, cfg);
    }
    if (*thresholds)
      return cmd_thresholds(tn, parse_range(tp), parse_range(tr), tj);
    if (*certify) return cmd_certify(model_spec, omega_spec, cr, cseed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
} catch (const std::exception& e) {
  std::cerr << "error: " << e.what() << '\n';
  return 2;
}
