#include "dforms/exterior.hpp"

#include <string>

namespace dforms {

namespace {

Scalar factorial_scalar(int k, ScalarMode mode) {
  Scalar f = Scalar::one(mode);
  for (int i = 2; i <= k; ++i) f *= Scalar::of_int(i, mode);
  return f;
}

}  // namespace

DoubleForm wedge(const DoubleForm& a, const DoubleForm& b) {
  check_same_space(a, b);
  DoubleForm out(a.dim(), a.left_degree() + b.left_degree(),
                 a.right_degree() + b.right_degree(), a.mode());
  if (out.left_degree() > a.dim() || out.right_degree() > a.dim())
    return DoubleForm(a.dim(), 0, 0, a.mode());
  for (const auto& [ka, va] : a.entries()) {
    for (const auto& [kb, vb] : b.entries()) {
      int sl = wedge_sign(ka.left, kb.left);
      if (sl == 0) continue;
      int sr = wedge_sign(ka.right, kb.right);
      if (sr == 0) continue;
      Scalar v = va * vb;
      if (sl * sr < 0) v = -v;
      out.add_entry(ka.left | kb.left, ka.right | kb.right, v);
    }
  }
  return out;
}

Scalar inner(const DoubleForm& a, const DoubleForm& b) {
  check_same_space(a, b);
  Scalar acc = Scalar::zero(a.mode());
  if (a.left_degree() != b.left_degree() ||
      a.right_degree() != b.right_degree())
    return acc;
  for (const auto& [k, v] : a.entries()) {
    Scalar w = b.coefficient(k.left, k.right);
    if (!w.is_zero()) acc += v * w;
  }
  return acc;
}

Scalar norm_sq(const DoubleForm& a) { return inner(a, a); }

DoubleForm interior(const DoubleForm& alpha, const DoubleForm& omega) {
  check_same_space(alpha, omega);
  int p = omega.left_degree() - alpha.left_degree();
  int q = omega.right_degree() - alpha.right_degree();
  if (p < 0 || q < 0) return DoubleForm(omega.dim(), 0, 0, omega.mode());
  DoubleForm out(omega.dim(), p, q, omega.mode());
  for (const auto& [ka, va] : alpha.entries()) {
    for (const auto& [ko, vo] : omega.entries()) {
      if (ka.left & ~ko.left) continue;
      if (ka.right & ~ko.right) continue;
      IndexMask left = ko.left & ~ka.left;
      IndexMask right = ko.right & ~ka.right;
      int s = wedge_sign(ka.left, left) * wedge_sign(ka.right, right);
      Scalar v = va * vo;
      if (s < 0) v = -v;
      out.add_entry(left, right, v);
    }
  }
  return out;
}

DoubleForm contract(const DoubleForm& omega) {
  int p = omega.left_degree(), q = omega.right_degree();
  if (p < 1 || q < 1) return DoubleForm(omega.dim(), 0, 0, omega.mode());
  DoubleForm out(omega.dim(), p - 1, q - 1, omega.mode());
  for (const auto& [k, v] : omega.entries()) {
    IndexMask common = k.left & k.right;
    while (common) {
      int idx = std::countr_zero(common) + 1;
      common &= common - 1;
      int s = removal_sign(idx, k.left) * removal_sign(idx, k.right);
      Scalar w = v;
      if (s < 0) w = -w;
      out.add_entry(k.left & ~bit_of(idx), k.right & ~bit_of(idx), w);
    }
  }
  return out;
}

DoubleForm contract_power(DoubleForm omega, int times) {
  for (int i = 0; i < times && !omega.is_zero(); ++i) omega = contract(omega);
  return omega;
}

DoubleForm hodge_star(const DoubleForm& omega) {
  int n = omega.dim();
  IndexMask full = (IndexMask{1} << n) - 1;
  DoubleForm out(n, n - omega.left_degree(), n - omega.right_degree(),
                 omega.mode());
  for (const auto& [k, v] : omega.entries()) {
    IndexMask left = full & ~k.left;
    IndexMask right = full & ~k.right;
    int s = wedge_sign(k.left, left) * wedge_sign(k.right, right);
    Scalar w = v;
    if (s < 0) w = -w;
    out.add_entry(left, right, w);
  }
  return out;
}

DoubleForm transpose(const DoubleForm& omega) {
  DoubleForm out(omega.dim(), omega.right_degree(), omega.left_degree(),
                 omega.mode());
  for (const auto& [k, v] : omega.entries()) out.add_entry(k.right, k.left, v);
  return out;
}

DoubleForm metric_power(int n, int k, ScalarMode mode) {
  if (k < 0 || k > n) return DoubleForm(n, 0, 0, mode);
  DoubleForm out(n, k, k, mode);
  Scalar fk = factorial_scalar(k, mode);
  for (IndexMask m : basis_masks(n, k)) out.add_entry(m, m, fk);
  return out;
}

DoubleForm metric_identity(int n, int p, ScalarMode mode) {
  return metric_power(n, p, mode) * factorial_scalar(p, mode).inv();
}

DoubleForm rho(const DoubleForm& two_form) {
  if (!two_form.is_zero() &&
      (two_form.left_degree() != 2 || two_form.right_degree() != 0))
    throw DegreeError("rho expects a 2-form stored as a (2,0) double form");
  DoubleForm out(two_form.dim(), 1, 1, two_form.mode());
  for (const auto& [k, v] : two_form.entries()) {
    auto ij = mask_indices(k.left);
    out.add_entry(bit_of(ij[0]), bit_of(ij[1]), v);
    out.add_entry(bit_of(ij[1]), bit_of(ij[0]), -v);
  }
  return out;
}

DoubleForm rho_inverse(const DoubleForm& skew) {
  if (!skew.is_zero() &&
      (skew.left_degree() != 1 || skew.right_degree() != 1))
    throw DegreeError("rho_inverse expects a (1,1) double form");
  DoubleForm out(skew.dim(), 2, 0, skew.mode());
  for (const auto& [k, v] : skew.entries()) {
    if (k.left == k.right)
      throw std::invalid_argument("rho_inverse: diagonal entry, not skew");
    if ((skew.coefficient(k.right, k.left) + v) != Scalar::zero(skew.mode()))
      throw std::invalid_argument("rho_inverse: form is not skew-symmetric");
    if (k.left < k.right) out.add_entry(k.left | k.right, 0, v);
  }
  return out;
}

DoubleForm rho_ij(int n, int i, int j, ScalarMode mode) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw DimensionError("rho_ij index out of range");
  DoubleForm out(n, 1, 1, mode);
  if (i == j) return out;
  out.add_entry(bit_of(i), bit_of(j), Scalar::one(mode));
  out.add_entry(bit_of(j), bit_of(i), -Scalar::one(mode));
  return out;
}

}  // namespace dforms
