// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here; the exact-arithmetic criteria compare with
// zero tolerance.

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "dforms/models.hpp"
#include "dforms/rng.hpp"
#include "dforms/spectral.hpp"
#include "dforms/suites.hpp"

using namespace dforms;

namespace {

const ScalarMode EX = ScalarMode::Exact;
int failures = 0;

void report(int index, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::printf("criterion %d: %-58s %s%s\n", index, what.c_str(),
              ok ? "PASS" : "FAIL",
              detail.empty() ? "" : ("  (" + detail + ")").c_str());
  if (!ok) ++failures;
}

// ---- criterion 1: the exact identity suite at the pinned envelope ----
void criterion_identity_suite() {
  RunConfig cfg;
  cfg.seed = 2024;
  cfg.dim_min = 3;
  cfg.dim_max = 5;
  cfg.max_p = 3;
  cfg.max_q = 3;
  cfg.trials = 100;
  cfg.mode = EX;
  auto start = std::chrono::steady_clock::now();
  SuiteReport rep = run_suite("all", cfg);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  long tested = 0;
  for (const auto& line : rep.lines) tested += line.trials;
  report(1, "exact identity suite (n=3..5, p,q<=3, 100 trials)",
         rep.passed() && secs <= 120.0,
         std::to_string(rep.lines.size()) + " identities, " +
             std::to_string(tested) + " trials, " +
             std::to_string(secs).substr(0, 4) + " s");
}

// ---- criterion 2: Weitzenbock method agreement ----
void criterion_method_agreement() {
  Rng rng(9001);
  bool exact_ok = true, spectral_ok = true;
  for (int t = 0; t < 100; ++t) {
    int p = static_cast<int>(rng.int_in(0, 2));
    int q = static_cast<int>(rng.int_in(0, 2));
    CurvatureInput R = random_bianchi_curvature(rng, 4, EX);
    DoubleForm w = random_form(rng, 4, p, q, EX);
    DoubleForm free_form = weitzenbock_term(R, w, WeitMethod::IndexFree);
    exact_ok = exact_ok &&
               weitzenbock_term(R, w, WeitMethod::IndexSum) == free_form;
    CurvatureInput Rf(R.tensor().to_float());
    DoubleForm spectral =
        weitzenbock_term(Rf, w.to_float(), WeitMethod::Spectral);
    double scale = std::sqrt(std::max(1.0, norm_sq(free_form).to_double()));
    spectral_ok = spectral_ok &&
                  spectral.approx_equal(free_form.to_float(), 1e-8 * scale);
  }
  report(2, "curvature term methods (index sum = index free, spectral 1e-8)",
         exact_ok && spectral_ok);
}

// ---- criterion 3: sphere closed forms ----
void criterion_sphere_forms() {
  Rng rng(42);
  bool ok = true;
  for (int n = 3; n <= 6 && ok; ++n) {
    CurvatureInput R(metric_power(n, 2, EX) * Scalar::exact(1, 2));
    for (int p = 0; p <= std::min(3, n) && ok; ++p) {
      if (p >= 1) {
        ok = ok && n_operator(R, p) ==
                       metric_identity(n, p, EX) * Scalar::exact(p * (n - p));
        DoubleForm idp = metric_identity(n, p, EX);
        ok = ok && weitzenbock_term(R, idp, WeitMethod::IndexFree).is_zero();
        DoubleForm wpp = random_form(rng, n, p, p, EX);
        ok = ok && inner(weitzenbock_term(R, wpp, WeitMethod::IndexFree),
                         idp)
                       .is_zero();
      }
      for (int q = 0; q <= std::min(3, n) && ok; ++q) {
        DoubleForm w = random_form(rng, n, p, q, EX);
        DoubleForm weit_expect =
            w * Scalar::exact(p * (n - p) + q) -
            wedge(metric(n, EX), contract(w)) -
            adjoint_bianchi_sum(bianchi_sum(w));
        ok = ok &&
             weitzenbock_term(R, w, WeitMethod::IndexFree) == weit_expect;
        DoubleForm ric_expect =
            w * Scalar::exact(p * (n - p) + q * (n - q) + p + q, 2) -
            wedge(metric(n, EX), contract(w)) -
            (adjoint_bianchi_sum(bianchi_sum(w)) +
             bianchi_sum(adjoint_bianchi_sum(w))) *
                Scalar::exact(1, 2);
        ok = ok && ric_l_term(R, w) == ric_expect;
      }
    }
  }
  report(3, "constant-curvature closed forms (n=3..6, p,q<=3, exact)", ok);
}

// ---- criterion 4: lemma suite ----
void criterion_lemmas() {
  Rng rng(7);
  bool weighted_ok = true;
  for (int t = 0; t < 1000; ++t) {
    int count = static_cast<int>(rng.int_in(1, 14));
    std::vector<double> lam(count), wts(count);
    for (int i = 0; i < count; ++i) {
      lam[i] = rng.uniform(-4.0, 4.0);
      wts[i] = rng.uniform(0.0, 2.0);
    }
    std::sort(lam.begin(), lam.end());
    if (*std::max_element(wts.begin(), wts.end()) <= 0.0) wts[0] = 1.0;
    weighted_ok = weighted_ok && weighted_sum_bound(lam, wts).holds;
  }
  {
    std::vector<double> lam{-1.5, 0.0, 0.5, 2.0};
    auto b = weighted_sum_bound(lam, std::vector<double>(4, 1.0));
    double total = std::accumulate(lam.begin(), lam.end(), 0.0);
    weighted_ok =
        weighted_ok && b.k == 4 && std::abs(b.lower_bound - total) < 1e-12;
  }

  bool eigen_ok = true;
  for (int r = 1; r <= 3 && eigen_ok; ++r) {
    for (int t = 0; t < 100 && eigen_ok; ++t) {
      DoubleForm E = random_two_form_of_rank(rng, 6, r);
      for (int p = 1; p <= 3 && eigen_ok; ++p) {
        auto eig = operator_eigenvalues(b_alpha_operator(E, p));
        eigen_ok = eig.front() >= -1e-9 &&
                   eig.back() <= std::min(p, r) + 1e-9;
      }
    }
  }

  bool sum_ok = true;
  for (int n = 3; n <= 6 && sum_ok; ++n)
    for (int p = 1; p <= std::min(3, n) && sum_ok; ++p) {
      DoubleForm acc(n, p, p, EX);
      for (IndexMask mk : basis_masks(n, 2))
        acc += b_alpha_operator(
            DoubleForm::basis_element(n, mk, 0, Scalar::exact(1)), p);
      sum_ok = acc == metric_identity(n, p, EX) * Scalar::exact(p * (n - p));
    }

  report(4, "lemma suite (weighted sum x1000, B_E bounds x100/rank, B sum)",
         weighted_ok && eigen_ok && sum_ok);
}

// ---- criterion 5: orthogonal decomposition ----
void criterion_decomposition() {
  Rng rng(12);
  bool ok = true;
  for (int n : {4, 5}) {
    for (int t = 0; t < 100 && ok; ++t) {
      DoubleForm raw = random_form(rng, n, 2, 2, EX);
      DoubleForm w = raw + transpose(raw);  // symmetric (2,2)
      auto dec = orthogonal_decompose(w);
      ok = ok && dec.reconstruction == w;
      for (int i = 1; i <= 2; ++i)
        ok = ok && contract(dec.components[i]).is_zero();
    }
  }
  for (int t = 0; t < 50 && ok; ++t) {
    CurvatureInput R = random_bianchi_curvature(rng, 4, EX);
    auto dec = orthogonal_decompose(R.tensor());
    for (const auto& comp : dec.components)
      ok = ok && bianchi_sum(comp).is_zero();
  }
  for (int t = 0; t < 100 && ok; ++t) {
    int n = t % 2 ? 4 : 5;
    int p = static_cast<int>(rng.int_in(0, 2));
    int q = static_cast<int>(rng.int_in(0, 2));
    int k = static_cast<int>(rng.int_in(1, 2));
    DoubleForm w = random_form(rng, n, p, q, EX);
    auto fact = [](int j) {
      long f = 1;
      for (int i = 2; i <= j; ++i) f *= i;
      return Scalar::exact(f);
    };
    Scalar lhs = norm_sq(wedge(metric_power(n, k, EX), w)) / fact(k);
    Scalar rhs = norm_sq(contract_power(w, k)) / fact(k);
    for (int r = 1; r <= k; ++r) {
      long binom = 1;
      for (int i = 1; i <= r; ++i) binom = binom * (k - i + 1) / i;
      Scalar coeff = Scalar::exact(binom);
      for (int i = 0; i < r; ++i) coeff *= Scalar::exact(n - p - q - i);
      rhs += coeff * norm_sq(contract_power(w, k - r)) / fact(k - r);
    }
    ok = ok && lhs == rhs;
  }
  report(5, "decomposition (100 symmetric forms at n=4,5; norm identity)",
         ok);
}

// ---- criterion 6: vanishing-theorem thresholds ----
void criterion_thresholds() {
  bool ok = true;
  for (int n = 3; n <= 10 && ok; ++n)
    for (int p = 1; 2 * p <= n && ok; ++p) {
      ok = theorem_a_threshold(n, p, 1).threshold ==
           static_cast<long>(p) * (n - p);
      for (int r = p; r <= n && ok; ++r)
        ok = theorem_a_threshold(n, p, r).threshold == n - p;
    }
  for (int n = 3; n <= 10 && ok; ++n)
    for (int j = 1; 2 * j <= n && ok; ++j)
      ok = theorem_b_threshold(n, j).threshold == (n - j + 1) / 2;
  for (int n = 4; n <= 12 && ok; ++n)
    for (int k = 1; 4 * k <= n && ok; ++k)
      for (int r = 1; 2 * r <= n && ok; ++r) {
        long bound = corollary_c_threshold(n, k, r).threshold;
        ok = bound == static_cast<long>(k) * (n - 2 * k + 1) /
                          std::min(2 * k, r) &&
             (n - 2 * k + 1) / 2 <= bound;
      }
  report(6, "threshold reductions (A r=1 / r>=p, B, C with its lower bound)",
         ok);
}

// ---- criterion 7: model spaces and certificate soundness ----

DoubleForm outer_square(const std::vector<double>& lambdas,
                        const std::vector<DoubleForm>& eigenforms) {
  int n = eigenforms.front().dim();
  DoubleForm R(n, 2, 2, ScalarMode::Float64);
  for (std::size_t a = 0; a < lambdas.size(); ++a)
    for (const auto& [k1, v1] : eigenforms[a].entries())
      for (const auto& [k2, v2] : eigenforms[a].entries())
        R.add_entry(k1.left, k2.left,
                    Scalar::real(lambdas[a] * v1.to_double() * v2.to_double()));
  return R;
}

std::vector<DoubleForm> rotated_decomposable_basis(Rng& rng, int n) {
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = rng.gauss();
  Eigen::MatrixXd Q = Eigen::HouseholderQR<Eigen::MatrixXd>(G).householderQ();
  std::vector<DoubleForm> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      DoubleForm E(n, 2, 0, ScalarMode::Float64);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          E.add_entry(bit_of(i) | bit_of(j), 0,
                      Scalar::real(Q(i - 1, a) * Q(j - 1, b) -
                                   Q(i - 1, b) * Q(j - 1, a)));
      out.push_back(E);
    }
  return out;
}

void criterion_models() {
  bool sphere_ok = true;
  for (int n = 3; n <= 6 && sphere_ok; ++n)
    for (long kappa : {1L, 2L, -3L}) {
      SpectralData spec = curvature_spectrum(
          sphere_curvature(n, Scalar::exact(kappa)).curvature);
      for (double l : spec.eigenvalues)
        sphere_ok = sphere_ok && std::abs(l - kappa) <= 1e-10;
    }

  CurvatureModel cp2 = cpn_curvature(2);
  bool cp_ok =
      contract(contract(cp2.curvature.tensor())) ==
      DoubleForm::constant(4, Scalar::exact(24));
  SpectralData cp2_spec = curvature_spectrum(cp2.curvature);
  cp_ok = cp_ok && purity_rank_certificate(cp2_spec, 2).status ==
                       PurityCertificate::Status::Certified;

  CurvatureModel s2s2 =
      product_curvature(sphere_curvature(2, Scalar::exact(1)),
                        sphere_curvature(2, Scalar::exact(1)));
  SpectralData prod_spec = curvature_spectrum(s2s2.curvature);
  int zero_count = 0;
  for (double l : prod_spec.eigenvalues)
    if (std::abs(l) <= 1e-10) ++zero_count;
  bool product_ok = zero_count == 4;

  Rng rng(77);
  bool sound = true;
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = trial % 2 ? 4 : 5;
    auto forms = rotated_decomposable_basis(rng, n);
    std::vector<double> lambdas(forms.size());
    for (auto& l : lambdas) l = rng.uniform(-0.25, 2.0);
    std::sort(lambdas.begin(), lambdas.end());
    SpectralData spec;
    spec.eigenvalues = lambdas;
    spec.eigenforms = forms;
    spec.ranks.assign(forms.size(), 2);
    CurvatureInput Rf(outer_square(lambdas, forms));

    DoubleForm w =
        trial % 3 == 0
            ? random_trace_free_bianchi(rng, n, 2, ScalarMode::Float64)
            : random_form(rng, n, 2, 0, ScalarMode::Float64);
    if (norm_sq(w).to_double() < 1e-12) continue;
    auto res = positivity_certificate(spec, w, 1);
    double direct =
        inner(ric_l_term(Rf, w, WeitMethod::Spectral, &spec), w).to_double();
    double scale = std::max(1.0, std::abs(direct));
    if (res.verdict == CertificateResult::Verdict::Positive)
      sound = sound && direct > -1e-9 * scale;
    else if (res.verdict == CertificateResult::Verdict::Nonnegative)
      sound = sound && direct >= -1e-9 * scale;
    ++checked;
  }
  sound = sound && checked >= 490;

  report(7, "model spaces (sphere spectra, cp2, s2xs2, 500-fold soundness)",
         sphere_ok && cp_ok && product_ok && sound);
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_identity_suite();
  criterion_method_agreement();
  criterion_sphere_forms();
  criterion_lemmas();
  criterion_decomposition();
  criterion_thresholds();
  criterion_models();
  std::printf("%s: %d/7 criteria passed\n",
              failures == 0 ? "PASS" : "FAIL", 7 - failures);
  return failures;
}
