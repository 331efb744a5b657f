#include "dforms/rng.hpp"

#include <Eigen/Dense>

namespace dforms {

DoubleForm random_form(Rng& rng, int n, int p, int q, ScalarMode mode,
                       double density) {
  DoubleForm f(n, p, q, mode);
  if (p < 0 || q < 0 || p > n || q > n) return f;
  for (IndexMask left : basis_masks(n, p))
    for (IndexMask right : basis_masks(n, q))
      if (rng.chance(density)) f.add_entry(left, right, rng.small_scalar(mode));
  return f;
}

DoubleForm random_symmetric_one_one(Rng& rng, int n, ScalarMode mode) {
  DoubleForm h(n, 1, 1, mode);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      Scalar v = rng.small_scalar(mode);
      h.add_entry(bit_of(i), bit_of(j), v);
      if (i != j) h.add_entry(bit_of(j), bit_of(i), v);
    }
  }
  return h;
}

DoubleForm random_two_form(Rng& rng, int n, ScalarMode mode) {
  return random_form(rng, n, 2, 0, mode);
}

CurvatureInput random_bianchi_curvature(Rng& rng, int n, ScalarMode mode) {
  // Built exactly so the structural invariants can be asserted; a float
  // request converts afterwards (where the Bianchi sum only cancels to
  // rounding, so its flag reads false by honest recomputation).
  DoubleForm R(n, 2, 2, ScalarMode::Exact);
  for (int t = 0; t < 3; ++t) {
    DoubleForm h = random_symmetric_one_one(rng, n, ScalarMode::Exact);
    R += wedge(h, h) * Scalar::exact(rng.int_in(-3, 3));
  }
  CurvatureInput input(std::move(R));
  if (!input.symmetric() || !input.first_bianchi())
    throw std::logic_error("random curvature generator broke its invariants");
  if (mode == ScalarMode::Exact) return input;
  return CurvatureInput(input.tensor().to_float());
}

DoubleForm random_trace_free_bianchi(Rng& rng, int n, int p, ScalarMode mode) {
  if (p < 1 || 2 * p > n)
    throw DegreeError("trace-free generator needs 1 <= p <= n/2");
  for (int attempt = 0; attempt < 32; ++attempt) {
    // Exterior products of symmetric (1,1) forms are symmetric + Bianchi;
    // the top decomposition component is then trace-free with both
    // properties.
    DoubleForm w = random_symmetric_one_one(rng, n, ScalarMode::Exact);
    for (int k = 1; k < p; ++k)
      w = wedge(w, random_symmetric_one_one(rng, n, ScalarMode::Exact));
    DoubleForm top = orthogonal_decompose(w).components[p];
    if (top.is_zero()) continue;
    return mode == ScalarMode::Exact ? top : top.to_float();
  }
  throw std::logic_error("trace-free generator kept producing zero forms");
}

DoubleForm random_two_form_of_rank(Rng& rng, int n, int r) {
  if (r < 1 || 2 * r > n)
    throw std::invalid_argument("rank 2r out of range for the dimension");
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = rng.gauss();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  Eigen::MatrixXd Q = qr.householderQ();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int b = 0; b < r; ++b) {
    double lam = rng.uniform(0.2, 1.0);
    int row = 2 * b;
    A(row, row + 1) = lam;
    A(row + 1, row) = -lam;
  }
  A = Q * A * Q.transpose();
  DoubleForm E(n, 2, 0, ScalarMode::Float64);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      E.add_entry(bit_of(i) | bit_of(j), 0, Scalar::real(A(i - 1, j - 1)));
  double norm = std::sqrt(norm_sq(E).to_double());
  return E * Scalar::real(1.0 / norm);
}

}  // namespace dforms
