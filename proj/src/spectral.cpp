#include "dforms/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "dforms/rng.hpp"

namespace dforms {

namespace {

std::vector<IndexMask> two_form_basis(int n) { return basis_masks(n, 2); }

std::unordered_map<IndexMask, int> basis_positions(
    const std::vector<IndexMask>& basis) {
  std::unordered_map<IndexMask, int> pos;
  for (int a = 0; a < static_cast<int>(basis.size()); ++a) pos[basis[a]] = a;
  return pos;
}

Eigen::MatrixXd curvature_matrix(const DoubleForm& R) {
  int n = R.dim();
  auto basis = two_form_basis(n);
  auto pos = basis_positions(basis);
  int N = static_cast<int>(basis.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
  for (const auto& [k, v] : R.entries())
    M(pos.at(k.left), pos.at(k.right)) = v.to_double();
  return M;
}

DoubleForm column_to_two_form(const std::vector<IndexMask>& basis,
                              const Eigen::VectorXd& col, int n) {
  DoubleForm E(n, 2, 0, ScalarMode::Float64);
  for (int a = 0; a < col.size(); ++a)
    E.add_entry(basis[a], 0, Scalar::real(col(a)));
  return E;
}

Eigen::MatrixXd rho_matrix(const DoubleForm& two_form) {
  int n = two_form.dim();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [k, v] : two_form.entries()) {
    auto ij = mask_indices(k.left);
    double x = v.to_double();
    A(ij[0] - 1, ij[1] - 1) = x;
    A(ij[1] - 1, ij[0] - 1) = -x;
  }
  return A;
}

}  // namespace

SpectralData curvature_spectrum(const CurvatureInput& R) {
  if (!R.symmetric())
    throw std::invalid_argument(
        "curvature_spectrum needs a symmetric (2,2) double form");
  int n = R.dim();
  auto basis = two_form_basis(n);
  Eigen::MatrixXd M = curvature_matrix(R.tensor());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("curvature eigensolver failed to converge");

  SpectralData spec;
  int N = static_cast<int>(basis.size());
  spec.eigenvalues.assign(es.eigenvalues().data(),
                          es.eigenvalues().data() + N);
  spec.eigenforms.reserve(N);
  spec.ranks.reserve(N);
  for (int a = 0; a < N; ++a) {
    spec.eigenforms.push_back(column_to_two_form(basis, es.eigenvectors().col(a), n));
    spec.ranks.push_back(two_form_rank(spec.eigenforms.back()));
  }

  Eigen::MatrixXd rec =
      es.eigenvectors() * es.eigenvalues().asDiagonal() *
      es.eigenvectors().transpose();
  double scale = std::max(1.0, M.norm());
  if ((rec - M).norm() > 1e-8 * scale)
    throw std::runtime_error("curvature spectrum reconstruction residual " +
                             std::to_string((rec - M).norm()) +
                             " exceeds tolerance");
  return spec;
}

std::vector<double> operator_eigenvalues(const DoubleForm& square_form) {
  if (!square_form.square())
    throw DegreeError("operator_eigenvalues needs a (p,p) double form");
  int n = square_form.dim(), p = square_form.left_degree();
  auto basis = basis_masks(n, p);
  auto pos = basis_positions(basis);
  int N = static_cast<int>(basis.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
  for (const auto& [k, v] : square_form.entries())
    M(pos.at(k.left), pos.at(k.right)) = v.to_double();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("operator eigensolver failed");
  return {es.eigenvalues().data(), es.eigenvalues().data() + N};
}

int two_form_rank(const DoubleForm& two_form, double tol) {
  if (!two_form.is_zero() &&
      (two_form.left_degree() != 2 || two_form.right_degree() != 0))
    throw DegreeError("two_form_rank expects a (2,0) double form");
  if (two_form.is_zero()) return 0;
  int n = two_form.dim();
  if (two_form.mode() == ScalarMode::Exact) {
    // Exact Gaussian elimination on the skew matrix rho(E).
    std::vector<std::vector<Scalar>> A(
        n, std::vector<Scalar>(n, Scalar::zero(ScalarMode::Exact)));
    for (const auto& [k, v] : two_form.entries()) {
      auto ij = mask_indices(k.left);
      A[ij[0] - 1][ij[1] - 1] = v;
      A[ij[1] - 1][ij[0] - 1] = -v;
    }
    int rank = 0;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
      int pivot = -1;
      for (int r = row; r < n; ++r)
        if (!A[r][col].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(A[row], A[pivot]);
      for (int r = row + 1; r < n; ++r) {
        if (A[r][col].is_zero()) continue;
        Scalar f = A[r][col] / A[row][col];
        for (int c = col; c < n; ++c) A[r][c] -= f * A[row][c];
      }
      ++row;
      ++rank;
    }
    return rank;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rho_matrix(two_form));
  double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  if (smax == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol * std::max(1.0, smax)) ++rank;
  // Skew singular values come in equal pairs; a stray odd count is a
  // borderline numerical artifact.
  if (rank & 1) --rank;
  return rank;
}

namespace {

struct Cluster {
  int begin = 0, end = 0;  // [begin, end) into ascending eigenvalues
  double value = 0.0;
};

std::vector<Cluster> cluster_eigenvalues(const std::vector<double>& lam,
                                         double rel_tol) {
  std::vector<Cluster> out;
  int N = static_cast<int>(lam.size());
  int i = 0;
  while (i < N) {
    int j = i + 1;
    while (j < N) {
      double gap = std::abs(lam[j] - lam[j - 1]);
      double scale = std::max({1.0, std::abs(lam[j]), std::abs(lam[j - 1])});
      if (gap > rel_tol * scale) break;
      ++j;
    }
    out.push_back({i, j, lam[(i + j - 1) / 2]});
    i = j;
  }
  return out;
}

}  // namespace

PurityCertificate purity_rank_certificate(const SpectralData& spec, int r,
                                          const PuritySearchOptions& opts) {
  if (r < 1) throw std::invalid_argument("purity bound r must be >= 1");
  PurityCertificate cert;
  cert.r_bound = r;
  int n = spec.dim();
  auto basis = two_form_basis(n);
  int N = static_cast<int>(basis.size());

  auto pos = basis_positions(basis);
  Eigen::MatrixXd V(N, N);
  for (int a = 0; a < N; ++a) {
    Eigen::VectorXd col = Eigen::VectorXd::Zero(N);
    for (const auto& [k, v] : spec.eigenforms[a].entries())
      col(pos.at(k.left)) = v.to_double();
    V.col(a) = col;
  }

  Rng rng(opts.seed);
  auto rank_of = [&](const Eigen::VectorXd& col) {
    return two_form_rank(column_to_two_form(basis, col, n), opts.rank_tol);
  };

  bool all_ok = true;
  std::vector<Eigen::VectorXd> chosen;
  for (const Cluster& cl : cluster_eigenvalues(spec.eigenvalues,
                                               opts.cluster_tol)) {
    int m = cl.end - cl.begin;
    Eigen::MatrixXd sub = V.middleCols(cl.begin, m);
    PurityClusterReport rep;
    rep.eigenvalue = cl.value;
    rep.multiplicity = m;

    auto basis_max_rank = [&](const Eigen::MatrixXd& cols) {
      int worst = 0;
      for (int c = 0; c < cols.cols(); ++c)
        worst = std::max(worst, rank_of(cols.col(c)));
      return worst;
    };

    // Pass 1: project the decomposable candidates e^i ^ e^j into the
    // eigenspace, keep rank-admissible directions, orthonormalize greedily.
    Eigen::MatrixXd picked(N, m);
    int got = 0;
    for (int cand = 0; cand < N && got < m; ++cand) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(N);
      v(cand) = 1.0;
      Eigen::VectorXd u = sub * (sub.transpose() * v);
      for (int c = 0; c < got; ++c) u -= picked.col(c).dot(u) * picked.col(c);
      if (u.norm() < 1e-8) continue;
      u.normalize();
      if (rank_of(u) > 2 * r) continue;
      picked.col(got++) = u;
    }

    int best = 0;
    bool ok = false;
    if (got == m) {
      best = basis_max_rank(picked.leftCols(m));
      ok = best <= 2 * r;
    }
    if (!ok) {
      // Pass 2: seeded random rotations of the eigenbasis.
      Eigen::MatrixXd best_cols = got == m ? picked : sub;
      best = basis_max_rank(best_cols);
      for (int it = 0; it < opts.rotation_budget && best > 2 * r; ++it) {
        Eigen::MatrixXd G(m, m);
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) G(a, b) = rng.gauss();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
        Eigen::MatrixXd Q = qr.householderQ();
        Eigen::MatrixXd cols = sub * Q;
        int worst = basis_max_rank(cols);
        if (worst < best) {
          best = worst;
          best_cols = cols;
        }
      }
      ok = best <= 2 * r;
      picked = best_cols;
    }

    rep.best_max_rank = best;
    rep.ok = ok;
    cert.clusters.push_back(rep);
    all_ok = all_ok && ok;
    for (int c = 0; c < picked.cols(); ++c) chosen.push_back(picked.col(c));
  }

  if (all_ok) {
    cert.status = PurityCertificate::Status::Certified;
    for (const auto& col : chosen)
      cert.basis.push_back(column_to_two_form(basis, col, n));
    // Residual of sum lambda_cluster E (x) E against the input operator.
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
    int idx = 0;
    for (const Cluster& cl : cluster_eigenvalues(spec.eigenvalues,
                                                 opts.cluster_tol))
      for (int c = cl.begin; c < cl.end; ++c, ++idx)
        M += cl.value * chosen[idx] * chosen[idx].transpose();
    Eigen::MatrixXd orig = Eigen::MatrixXd::Zero(N, N);
    for (int a = 0; a < N; ++a)
      orig += spec.eigenvalues[a] * V.col(a) * V.col(a).transpose();
    cert.diagonalization_residual =
        (M - orig).norm() / std::max(1.0, orig.norm());
  }
  return cert;
}

Positivity k_positivity(const SpectralData& spec, int k, double tol) {
  int N = static_cast<int>(spec.eigenvalues.size());
  if (k < 1 || k > N)
    throw std::invalid_argument("k_positivity order out of range 1..N");
  double sum = std::accumulate(spec.eigenvalues.begin(),
                               spec.eigenvalues.begin() + k, 0.0);
  double scale = 1.0;
  for (double l : spec.eigenvalues) scale = std::max(scale, std::abs(l));
  if (sum > tol * scale) return Positivity::Positive;
  if (sum >= -tol * scale) return Positivity::Nonnegative;
  return Positivity::Negative;
}

WeightedSumBound weighted_sum_bound(const std::vector<double>& lambdas,
                                    const std::vector<double>& weights) {
  if (lambdas.size() != weights.size())
    throw std::invalid_argument("weighted_sum_bound: size mismatch");
  if (!std::is_sorted(lambdas.begin(), lambdas.end()))
    throw std::invalid_argument("weighted_sum_bound: eigenvalues not ascending");
  double S = 0.0, M = 0.0;
  for (double w : weights) {
    if (w < 0.0)
      throw std::invalid_argument("weighted_sum_bound: negative weight");
    S += w;
    M = std::max(M, w);
  }
  if (M <= 0.0)
    throw std::invalid_argument("weighted_sum_bound: all weights zero");
  WeightedSumBound out;
  out.k = static_cast<int>(std::floor(S / M + 1e-12));
  double partial = std::accumulate(lambdas.begin(), lambdas.begin() + out.k,
                                   0.0);
  out.lower_bound = S / out.k * partial;
  double dot = 0.0;
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    dot += lambdas[i] * weights[i];
  double scale = std::max({1.0, std::abs(dot), std::abs(out.lower_bound)});
  out.holds = dot >= out.lower_bound - 1e-9 * scale;
  return out;
}

DoubleForm b_alpha_operator(const DoubleForm& two_form, int p) {
  if (p < 1) throw std::invalid_argument("b_alpha_operator needs p >= 1");
  Scalar nsq = norm_sq(two_form);
  if (nsq.is_zero())
    throw std::invalid_argument("b_alpha_operator: zero 2-form");
  int n = two_form.dim();
  DoubleForm A = wedge(metric_identity(n, p - 1, two_form.mode()),
                       rho(two_form));
  // B is quadratic in E, so unit normalization divides by |E|^2.
  return -compose(A, A) * nsq.inv();
}

Scalar k_g_threshold(const DoubleForm& omega, int r) {
  if (omega.is_zero())
    throw std::invalid_argument("k_g threshold of the zero form");
  int p = omega.left_degree(), q = omega.right_degree();
  if (p + q < 1)
    throw std::invalid_argument("k_g threshold needs p + q >= 1");
  if (r < 1) throw std::invalid_argument("k_g threshold needs r >= 1");
  int n = omega.dim();
  ScalarMode m = omega.mode();
  Scalar nsq = norm_sq(omega);
  Scalar num = Scalar::of_int(
      static_cast<long>(p) * (n - p + 1) + static_cast<long>(q) * (n - q + 1),
      m);
  num -= Scalar::of_int(2, m) * norm_sq(contract(omega)) / nsq;
  num -= (norm_sq(bianchi_sum(omega)) + norm_sq(adjoint_bianchi_sum(omega))) /
         nsq;
  Scalar den =
      Scalar::of_int(2L * (std::min(p, r) + std::min(q, r)), m);
  return num / den;
}

namespace {

long floor_div(long a, long b) { return a / b; }  // operands nonnegative here

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument("threshold hypothesis violated: " + what);
}

}  // namespace

ThresholdReport theorem_a_threshold(int n, int p, int r) {
  require(n >= 3, "n >= 3");
  require(p >= 1, "p >= 1");
  require(2 * p <= n, "2p <= n");
  require(r >= 1, "r >= 1");
  ThresholdReport rep{VanishingTheorem::A, n, p, r, 0, 0, 0};
  rep.threshold = floor_div(static_cast<long>(p) * (n - p), std::min(p, r));
  return rep;
}

ThresholdReport theorem_b_threshold(int n, int j) {
  require(n >= 3, "n >= 3");
  require(j >= 1, "j >= 1");
  require(2 * j <= n, "j <= p <= n/2");
  ThresholdReport rep{VanishingTheorem::B, n, 0, 0, j, 0, 0};
  rep.threshold = floor_div(n - j + 1, 2);
  return rep;
}

ThresholdReport corollary_c_threshold(int n, int k, int r) {
  require(n >= 3, "n >= 3");
  require(k >= 1, "k >= 1");
  require(4 * k <= n, "2 <= 2k <= n/2");
  require(r >= 1, "r >= 1");
  ThresholdReport rep{VanishingTheorem::C, n, 0, r, 0, k, 0};
  rep.threshold =
      floor_div(static_cast<long>(k) * (n - 2 * k + 1), std::min(2 * k, r));
  return rep;
}

ThresholdReport cw0_threshold(int n, int p, int r) {
  require(n >= 3, "n >= 3");
  require(p >= 1, "p >= 1");
  require(2 * p <= n, "2p <= n");
  require(r >= 1, "r >= 1");
  ThresholdReport rep{VanishingTheorem::CW0, n, p, r, 0, 0, 0};
  rep.threshold =
      floor_div(static_cast<long>(p) * (n - p + 1), 2L * std::min(p, r));
  return rep;
}

CertificateResult positivity_certificate(const SpectralData& spec,
                                         const DoubleForm& omega, int r,
                                         double tol) {
  if (r < 1) throw std::invalid_argument("positivity certificate needs r >= 1");
  if (omega.is_zero())
    throw std::invalid_argument("positivity certificate of the zero form");
  if (spec.dim() != omega.dim())
    throw DimensionError(
        "certificate spectrum and test form live in different dimensions");
  for (int rk : spec.ranks)
    if (rk > 2 * r)
      throw std::invalid_argument(
          "eigenform rank " + std::to_string(rk) +
          " exceeds the purity bound 2r = " + std::to_string(2 * r));

  int p = omega.left_degree(), q = omega.right_degree();
  int n = omega.dim();
  // Structural flags compare exactly in exact mode and against a scaled
  // tolerance in float mode.
  double scale = std::sqrt(std::max(norm_sq(omega).to_double(), 1.0));
  auto vanishes = [&](const DoubleForm& f) {
    if (f.mode() == ScalarMode::Exact) return f.is_zero();
    return f.approx_equal(DoubleForm(f.dim(), f.left_degree(),
                                     f.right_degree(), f.mode()),
                          tol * scale);
  };
  long k = 0;
  if (q == 0) {
    k = floor_div(static_cast<long>(p) * (n - p), std::min(p, r));
  } else {
    std::string failed;
    if (p != q) failed += " square-bidegree";
    else {
      if (!vanishes(transpose(omega) - omega)) failed += " symmetric";
      if (!vanishes(contract(omega))) failed += " trace-free";
      if (!vanishes(bianchi_sum(omega))) failed += " first-bianchi";
    }
    if (!failed.empty())
      throw std::invalid_argument(
          "positivity certificate input fails structural flags:" + failed);
    k = static_cast<long>(std::floor(k_g_threshold(omega, r).to_double() +
                                     1e-12));
  }
  CertificateResult out;
  long N = static_cast<long>(spec.eigenvalues.size());
  if (k < 1) return out;  // no admissible positivity order: inconclusive
  out.k_used = static_cast<int>(std::min(k, N));
  switch (k_positivity(spec, out.k_used, tol)) {
    case Positivity::Positive:
      out.verdict = CertificateResult::Verdict::Positive;
      break;
    case Positivity::Nonnegative:
      out.verdict = CertificateResult::Verdict::Nonnegative;
      break;
    case Positivity::Negative:
      out.verdict = CertificateResult::Verdict::Inconclusive;
      break;
  }
  out.eigen_sum = std::accumulate(spec.eigenvalues.begin(),
                                  spec.eigenvalues.begin() + out.k_used, 0.0);
  return out;
}

std::string to_report(const ThresholdReport& rep) {
  std::ostringstream os;
  switch (rep.theorem) {
    case VanishingTheorem::A:
      os << "threshold A n=" << rep.n << " p=" << rep.p << " r=" << rep.r;
      break;
    case VanishingTheorem::B:
      os << "threshold B n=" << rep.n << " j=" << rep.j;
      break;
    case VanishingTheorem::C:
      os << "threshold C n=" << rep.n << " k=" << rep.k << " r=" << rep.r;
      break;
    case VanishingTheorem::CW0:
      os << "threshold CW0 n=" << rep.n << " p=" << rep.p << " r=" << rep.r;
      break;
  }
  os << " -> " << rep.threshold << '\n';
  return os.str();
}

std::string to_report(const PurityCertificate& cert) {
  std::ostringstream os;
  os << "purity r=" << cert.r_bound << " status "
     << (cert.status == PurityCertificate::Status::Certified ? "certified"
                                                             : "unknown")
     << '\n';
  char line[128];
  for (const auto& cl : cert.clusters) {
    std::snprintf(line, sizeof line,
                  "cluster lambda=%.6g multiplicity=%d best_max_rank=%d %s\n",
                  cl.eigenvalue, cl.multiplicity, cl.best_max_rank,
                  cl.ok ? "ok" : "exceeds-bound");
    os << line;
  }
  if (cert.status == PurityCertificate::Status::Certified) {
    std::snprintf(line, sizeof line, "diagonalization residual %.3g\n",
                  cert.diagonalization_residual);
    os << line;
  }
  return os.str();
}

std::string to_string(Positivity p) {
  switch (p) {
    case Positivity::Positive: return "positive";
    case Positivity::Nonnegative: return "nonnegative";
    case Positivity::Negative: return "negative";
  }
  return "?";
}

std::string to_string(CertificateResult::Verdict v) {
  switch (v) {
    case CertificateResult::Verdict::Positive: return "positive";
    case CertificateResult::Verdict::Nonnegative: return "nonnegative";
    case CertificateResult::Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace dforms
