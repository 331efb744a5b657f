#pragma once

#include <optional>
#include <vector>

#include "dforms/exterior.hpp"

namespace dforms {

// Composition product of double forms. On simple forms
// (a1 (x) a2) o (b1 (x) b2) = <a1, b2> b1 (x) a2, so a (p,q) form composed
// with an (r,s) form is zero unless p = s, and the result has bidegree (r,q).
// It generalizes the product of bilinear forms; g^p/p! is its identity in
// bidegree (p,p).
DoubleForm compose(const DoubleForm& a, const DoubleForm& b);

// First Bianchi sum: moves one right slot into the left factor,
// S(w) = sum_i (e^i (x) 1) . interior(1 (x) e_i, w). A (p,p) form with
// bianchi_sum(w) = 0 satisfies the first Bianchi identity.
DoubleForm bianchi_sum(const DoubleForm& omega);

// Adjoint of the first Bianchi sum with respect to the inner product;
// equals transpose(bianchi_sum(transpose(w))).
DoubleForm adjoint_bianchi_sum(const DoubleForm& omega);

// Orthogonal decomposition of a (p,p) double form into
// w = sum_i g^{p-i} w_i with every w_i a trace-free (i,i) form. Components
// are recovered top-down from the contractions c^j w, which form a triangular
// linear system once each c^j(g^m w_i) is expanded through
// c(g^r w) = g^r c(w) + r(n-p-q-r+1) g^{r-1} w. Exact arithmetic only.
struct DecompositionResult {
  std::vector<DoubleForm> components;  // components[i] has bidegree (i,i)
  DoubleForm reconstruction;
};

DecompositionResult orthogonal_decompose(const DoubleForm& omega);

// Consequence of g^k w = 0: below the critical degree the form itself must
// vanish, above it only the iterated contraction c^{p+q+k-n} w must.
struct GkKernelReport {
  bool product_vanishes = false;
  bool is_zero_forced = false;
  std::optional<int> contraction_order_forced;
  bool consistent = true;
};

GkKernelReport gk_kernel_check(const DoubleForm& omega, int k);

}  // namespace dforms
