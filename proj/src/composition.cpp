#include "dforms/composition.hpp"

#include <string>
#include <unordered_map>

namespace dforms {

DoubleForm compose(const DoubleForm& a, const DoubleForm& b) {
  check_same_space(a, b);
  DoubleForm out(a.dim(), b.left_degree(), a.right_degree(), a.mode());
  if (a.left_degree() != b.right_degree() || a.is_zero() || b.is_zero())
    return out;
  // result(K, J) = sum_I a(I, J) b(K, I)
  std::unordered_map<IndexMask, std::vector<const std::pair<const FormKey, Scalar>*>>
      by_right;
  for (const auto& e : b.entries()) by_right[e.first.right].push_back(&e);
  for (const auto& [ka, va] : a.entries()) {
    auto it = by_right.find(ka.left);
    if (it == by_right.end()) continue;
    for (const auto* eb : it->second)
      out.add_entry(eb->first.left, ka.right, va * eb->second);
  }
  return out;
}

DoubleForm bianchi_sum(const DoubleForm& omega) {
  int p = omega.left_degree(), q = omega.right_degree();
  if (q < 1 || p >= omega.dim())
    return DoubleForm(omega.dim(), 0, 0, omega.mode());
  DoubleForm out(omega.dim(), p + 1, q - 1, omega.mode());
  for (const auto& [k, v] : omega.entries()) {
    IndexMask movable = k.right & ~k.left;
    while (movable) {
      int idx = std::countr_zero(movable) + 1;
      movable &= movable - 1;
      int s = removal_sign(idx, k.right) * wedge_sign(bit_of(idx), k.left);
      Scalar w = v;
      if (s < 0) w = -w;
      out.add_entry(k.left | bit_of(idx), k.right & ~bit_of(idx), w);
    }
  }
  return out;
}

DoubleForm adjoint_bianchi_sum(const DoubleForm& omega) {
  int p = omega.left_degree(), q = omega.right_degree();
  if (p < 1 || q >= omega.dim())
    return DoubleForm(omega.dim(), 0, 0, omega.mode());
  DoubleForm out(omega.dim(), p - 1, q + 1, omega.mode());
  for (const auto& [k, v] : omega.entries()) {
    IndexMask movable = k.left & ~k.right;
    while (movable) {
      int idx = std::countr_zero(movable) + 1;
      movable &= movable - 1;
      int s = removal_sign(idx, k.left) * wedge_sign(bit_of(idx), k.right);
      Scalar w = v;
      if (s < 0) w = -w;
      out.add_entry(k.left & ~bit_of(idx), k.right | bit_of(idx), w);
    }
  }
  return out;
}

namespace {

// Coefficient A(j, i) in c^j(g^{p-i} w_i) = A(j, i) g^{p-i-j} w_i for a
// trace-free (i,i) form w_i, from iterating the contraction rule.
Scalar contraction_coeff(int n, int p, int j, int i, ScalarMode mode) {
  Scalar a = Scalar::one(mode);
  int m = p - i;
  for (int t = 0; t < j; ++t)
    a *= Scalar::of_int(static_cast<long>(m - t) * (n - 2 * i - m + t + 1),
                        mode);
  return a;
}

}  // namespace

DecompositionResult orthogonal_decompose(const DoubleForm& omega) {
  if (omega.mode() != ScalarMode::Exact)
    throw ModeError("orthogonal decomposition runs in exact mode only");
  if (!omega.square())
    throw DegreeError("orthogonal decomposition needs a (p,p) double form");
  int n = omega.dim(), p = omega.left_degree();
  if (p > n) throw DegreeError("bidegree exceeds ambient dimension");
  ScalarMode mode = omega.mode();

  std::vector<DoubleForm> contractions;  // c^j w for j = 0..p
  contractions.push_back(omega);
  for (int j = 0; j < p; ++j)
    contractions.push_back(contract(contractions.back()));

  // For n < 2p the components with index above n-p vanish identically, and
  // the diagonal coefficient degenerates there; solve only the live range and
  // let the reconstruction check reject inputs outside the structural image.
  int top = std::min(p, n - p < 0 ? 0 : n - p);
  std::vector<DoubleForm> comps;
  comps.reserve(p + 1);
  for (int i = 0; i <= p; ++i) comps.emplace_back(n, i, i, mode);

  for (int i = 0; i <= top; ++i) {
    DoubleForm rhs = contractions[p - i];
    for (int k = 0; k < i; ++k) {
      if (comps[k].is_zero()) continue;
      Scalar a = contraction_coeff(n, p, p - i, k, mode);
      rhs -= wedge(metric_power(n, i - k, mode), comps[k]) * a;
    }
    Scalar diag = contraction_coeff(n, p, p - i, i, mode);
    if (diag.is_zero())
      throw std::logic_error("degenerate diagonal in decomposition solve");
    comps[i] = rhs * diag.inv();
  }

  DoubleForm rec(n, p, p, mode);
  for (int i = 0; i <= p; ++i)
    rec += wedge(metric_power(n, p - i, mode), comps[i]);
  if (rec != omega)
    throw std::invalid_argument(
        "decomposition reconstruction failed: input violates the structural "
        "constraints forced by n < 2p");
  return DecompositionResult{std::move(comps), std::move(rec)};
}

GkKernelReport gk_kernel_check(const DoubleForm& omega, int k) {
  int n = omega.dim(), p = omega.left_degree(), q = omega.right_degree();
  if (p + q > n) throw DegreeError("gk_kernel_check needs p + q <= n");
  GkKernelReport r;
  DoubleForm prod = wedge(metric_power(n, k, omega.mode()), omega);
  r.product_vanishes = prod.is_zero();
  if (!r.product_vanishes) return r;
  if (p + q + k < n + 1) {
    r.is_zero_forced = true;
    r.consistent = omega.is_zero();
  } else {
    r.contraction_order_forced = p + q + k - n;
    r.consistent = contract_power(omega, *r.contraction_order_forced).is_zero();
  }
  return r;
}

}  // namespace dforms
