#include "dforms/extensions.hpp"

namespace dforms {

namespace {

void require_one_one(const DoubleForm& h, const char* who) {
  if (h.is_zero()) return;
  if (h.left_degree() != 1 || h.right_degree() != 1)
    throw DegreeError(std::string(who) + " expects a (1,1) double form");
}

}  // namespace

DoubleForm comp_left(const DoubleForm& h, const DoubleForm& omega) {
  int q = omega.right_degree();
  if (q == 0) return DoubleForm(omega.dim(), 0, 0, omega.mode());
  return compose(wedge(metric_identity(omega.dim(), q - 1, omega.mode()), h),
                 omega);
}

DoubleForm comp_right(const DoubleForm& omega, const DoubleForm& h) {
  int p = omega.left_degree();
  if (p == 0) return DoubleForm(omega.dim(), 0, 0, omega.mode());
  return compose(omega,
                 wedge(metric_identity(omega.dim(), p - 1, omega.mode()), h));
}

DoubleForm extend(const DoubleForm& h, const DoubleForm& omega,
                  ExtensionMode mode) {
  require_one_one(h, "extend");
  check_same_space(h, omega);
  switch (mode) {
    case ExtensionMode::Left:
      return comp_right(omega, transpose(h));
    case ExtensionMode::Right:
      return comp_left(h, omega);
    case ExtensionMode::Derivation:
      return comp_right(omega, transpose(h)) + comp_left(h, omega);
    case ExtensionMode::Diagonal:
      return comp_left(h, comp_right(omega, transpose(h)));
  }
  throw std::logic_error("unreachable extension mode");
}

DoubleForm rho_ij_action(int i, int j, const DoubleForm& omega, RhoSide side) {
  int n = omega.dim();
  if (i < 1 || j < 1 || i > n || j > n)
    throw DimensionError("rho_ij_action index out of range");
  if (i == j) return DoubleForm(n, omega.left_degree(), omega.right_degree(),
                                omega.mode());
  DoubleForm r = rho_ij(n, i, j, omega.mode());
  switch (side) {
    case RhoSide::Left:
      return -comp_right(omega, r);
    case RhoSide::Right:
      return comp_left(r, omega);
    case RhoSide::Derivation:
      return comp_left(r, omega) - comp_right(omega, r);
  }
  throw std::logic_error("unreachable rho side");
}

DoubleForm curvature_transformation(const DoubleForm& R, int i, int j) {
  if (!R.is_zero() && (R.left_degree() != 2 || R.right_degree() != 2))
    throw DegreeError("curvature_transformation expects a (2,2) double form");
  int n = R.dim();
  if (i < 1 || j < 1 || i > n || j > n)
    throw DimensionError("curvature_transformation index out of range");
  DoubleForm h(n, 1, 1, R.mode());
  if (i == j) return h;
  int flip = i < j ? 1 : -1;
  IndexMask pair = bit_of(i) | bit_of(j);
  for (const auto& [k, v] : R.entries()) {
    if (k.left != pair) continue;
    auto kl = mask_indices(k.right);
    Scalar w = flip < 0 ? -v : v;
    h.add_entry(bit_of(kl[0]), bit_of(kl[1]), w);
    h.add_entry(bit_of(kl[1]), bit_of(kl[0]), -w);
  }
  return h;
}

DoubleForm curvature_image(const DoubleForm& R, const DoubleForm& two_form) {
  check_same_space(R, two_form);
  DoubleForm out(R.dim(), 2, 0, R.mode());
  if (two_form.is_zero()) return out;
  if (two_form.left_degree() != 2 || two_form.right_degree() != 0)
    throw DegreeError("curvature_image expects a (2,0) double form");
  for (const auto& [k, v] : R.entries()) {
    Scalar c = two_form.coefficient(k.left, 0);
    if (!c.is_zero()) out.add_entry(k.right, 0, v * c);
  }
  return out;
}

DoubleForm lambda_h(const DoubleForm& h, const DoubleForm& omega) {
  require_one_one(h, "lambda_h");
  if (!omega.square())
    throw DegreeError("lambda_h acts on square double forms");
  // Right extension with the degree read off the left factor; on (p,p) forms
  // both readings coincide.
  return comp_left(h, omega);
}

DoubleForm rho_h(const DoubleForm& h, const DoubleForm& omega) {
  require_one_one(h, "rho_h");
  if (!omega.square()) throw DegreeError("rho_h acts on square double forms");
  return comp_right(omega, h);
}

DoubleForm f_h(const DoubleForm& h, const DoubleForm& omega) {
  return lambda_h(h, omega) + rho_h(h, omega);
}

}  // namespace dforms
