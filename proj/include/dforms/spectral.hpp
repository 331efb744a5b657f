#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dforms/weitzenbock.hpp"

namespace dforms {

// Eigen-decomposition of the curvature operator on 2-forms, in the
// orthonormal basis {e^i ^ e^j : i < j}. Eigenvalues ascend; eigenforms are
// float-mode (2,0) double forms; ranks[a] is the (even) rank of eigenforms[a].
struct SpectralData {
  std::vector<double> eigenvalues;
  std::vector<DoubleForm> eigenforms;
  std::vector<int> ranks;

  int dim() const { return eigenforms.empty() ? 0 : eigenforms.front().dim(); }
};

// Throws unless R is symmetric. The reconstruction sum lambda_a E_a (x) E_a
// is checked against R to 1e-8 relative before returning.
SpectralData curvature_spectrum(const CurvatureInput& R);

// Rank of a 2-form = matrix rank of rho(E); exact mode uses exact Gaussian
// elimination, float mode counts singular values above tol * max.
int two_form_rank(const DoubleForm& two_form, double tol = 1e-9);

// Ascending eigenvalues of a symmetric (p,p) double form acting on p-forms.
std::vector<double> operator_eigenvalues(const DoubleForm& square_form);

// Purity-rank certification: search each eigenvalue cluster for an
// orthonormal basis of 2-forms of rank <= 2r. Certifying succeeds or reports
// Unknown; a failed search never refutes purity.
struct PurityClusterReport {
  double eigenvalue = 0.0;
  int multiplicity = 0;
  int best_max_rank = 0;  // smallest maximal rank achieved by any basis tried
  bool ok = false;
};

struct PurityCertificate {
  enum class Status { Certified, Unknown };
  Status status = Status::Unknown;
  int r_bound = 0;
  std::vector<DoubleForm> basis;  // full orthonormal basis when certified
  std::vector<PurityClusterReport> clusters;
  double diagonalization_residual = 0.0;
};

struct PuritySearchOptions {
  double cluster_tol = 1e-7;      // relative eigenvalue gap within a cluster
  double rank_tol = 1e-9;
  int rotation_budget = 200;      // random-rotation retries per cluster
  std::uint64_t seed = 1;
};

PurityCertificate purity_rank_certificate(const SpectralData& spec, int r,
                                          const PuritySearchOptions& opts = {});

enum class Positivity { Positive, Nonnegative, Negative };

// Sign of the sum of the k lowest eigenvalues.
Positivity k_positivity(const SpectralData& spec, int k, double tol = 1e-9);

// Weighted-sum bound: with S = sum w_i, M = max w_i > 0 and k = floor(S/M),
//   sum lambda_i w_i >= (S/k) * (sum of the k lowest lambda_i).
struct WeightedSumBound {
  int k = 0;
  double lower_bound = 0.0;
  bool holds = false;
};

WeightedSumBound weighted_sum_bound(const std::vector<double>& lambdas,
                                    const std::vector<double>& weights);

// The nonnegative operator B = -(g^{p-1} rho(E)/(p-1)!) o (same), scaled so
// that E has unit norm. Symmetric, PSD, eigenvalues <= min{p, r} with
// 2r = rank(E); summed over an orthonormal 2-form basis it is p(n-p) g^p/p!.
DoubleForm b_alpha_operator(const DoubleForm& two_form, int p);

// Positivity threshold attached to a nonzero (p,q) double form:
//   [p(n-p+1)+q(n-q+1) - 2|cw|^2/|w|^2 - (|Sw|^2+|adj Sw|^2)/|w|^2]
//     / (2 (min{p,r} + min{q,r})).
// Exact input gives an exact rational.
Scalar k_g_threshold(const DoubleForm& omega, int r);

enum class VanishingTheorem { A, B, C, CW0 };

struct ThresholdReport {
  VanishingTheorem theorem;
  int n = 0, p = 0, r = 0, j = 0, k = 0;
  long threshold = 0;
};

// Largest admissible positivity order k for each vanishing statement:
//   A:   floor(p(n-p) / min{p,r}),        needs n >= 3, p >= 1, 2p <= n
//   B:   floor((n-j+1)/2),                needs n >= 3, 1 <= j <= n/2
//   C:   floor(k(n-2k+1) / min{2k,r}),    needs n >= 3, 2 <= 2k <= n/2
//   CW0: floor(p(n-p+1) / (2 min{p,r})),  needs n >= 3, 1 <= p <= n/2
ThresholdReport theorem_a_threshold(int n, int p, int r);
ThresholdReport theorem_b_threshold(int n, int j);
ThresholdReport corollary_c_threshold(int n, int k, int r);
ThresholdReport cw0_threshold(int n, int p, int r);

// Spectral positivity certificate for the Lichnerowicz curvature term on a
// (p,0) form or a symmetric trace-free first-Bianchi (p,p) form. Checks that
// every eigenform rank is <= 2r, derives k from the matching lemma, and
// classifies the sum of the k lowest eigenvalues. A Positive/Nonnegative
// verdict is sound for the sign of <Ric_L w, w>; Inconclusive claims nothing.
struct CertificateResult {
  enum class Verdict { Positive, Nonnegative, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  int k_used = 0;
  double eigen_sum = 0.0;
};

CertificateResult positivity_certificate(const SpectralData& spec,
                                         const DoubleForm& omega, int r,
                                         double tol = 1e-9);

std::string to_string(Positivity p);
std::string to_string(CertificateResult::Verdict v);

// Line-oriented report forms consumed by the command-line tool.
std::string to_report(const ThresholdReport& rep);
std::string to_report(const PurityCertificate& cert);

}  // namespace dforms
