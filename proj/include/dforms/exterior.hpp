#pragma once

#include "dforms/double_form.hpp"

namespace dforms {

// Exterior product of double forms: factor-wise wedge,
// (a1 (x) a2)(b1 (x) b2) = (a1 ^ b1) (x) (a2 ^ b2). Bidegrees add; the result
// is the zero form when either side overflows the ambient dimension.
DoubleForm wedge(const DoubleForm& a, const DoubleForm& b);

// Orthonormal-basis inner product. Forms of different bidegree are orthogonal
// and pair to zero.
Scalar inner(const DoubleForm& a, const DoubleForm& b);
Scalar norm_sq(const DoubleForm& a);

// Interior product: the adjoint of wedge-multiplication by alpha,
// <interior(alpha, w), t> = <w, wedge(alpha, t)>. Factors slot-wise on simple
// forms. Degrees below zero give the zero form.
DoubleForm interior(const DoubleForm& alpha, const DoubleForm& omega);

// Contraction c = interior by the metric: inserts e_i into the first left and
// first right slot and sums over i.
DoubleForm contract(const DoubleForm& omega);
DoubleForm contract_power(DoubleForm omega, int times);

// Double Hodge star with the orientation e^1 ^ ... ^ e^n. Factor-wise star;
// involutive up to the sign (-1)^{p(n-p)+q(n-q)}.
DoubleForm hodge_star(const DoubleForm& omega);

DoubleForm transpose(const DoubleForm& omega);

// k-th exterior power of the metric g = sum_i e^i (x) e^i; g^0 = 1 and the
// conventional zero form for k < 0 or k > n.
DoubleForm metric_power(int n, int k, ScalarMode mode);
inline DoubleForm metric(int n, ScalarMode mode) {
  return metric_power(n, 1, mode);
}
// g^p / p!, the identity of the composition product on (p,p) forms.
DoubleForm metric_identity(int n, int p, ScalarMode mode);

// Inclusion of 2-forms into skew (1,1) double forms,
// rho(e^i ^ e^j) = e^i (x) e^j - e^j (x) e^i; rho_inverse is its left inverse
// on skew-symmetric (1,1) forms and rejects anything else.
DoubleForm rho(const DoubleForm& two_form);
DoubleForm rho_inverse(const DoubleForm& skew);

// rho(e^i ^ e^j) without building the 2-form first.
DoubleForm rho_ij(int n, int i, int j, ScalarMode mode);

}  // namespace dforms
