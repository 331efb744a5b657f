#pragma once

#include <map>

#include "dforms/exterior.hpp"

namespace dforms {

// Element of the Clifford algebra Cl(V, g) carried on the exterior algebra:
// a sparse, possibly mixed-degree form. The product is generated by the
// covector rule e . a = e ^ a - interior(e, a), so e . e = -|e|^2.
class CliffordElement {
 public:
  CliffordElement(int n, ScalarMode mode) : n_(n), mode_(mode) {}

  static CliffordElement from_form(const DoubleForm& form);

  int dim() const { return n_; }
  ScalarMode mode() const { return mode_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexMask, Scalar>& terms() const { return terms_; }

  void add_term(IndexMask m, const Scalar& v);

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const Scalar& c);
  friend CliffordElement operator+(CliffordElement a,
                                   const CliffordElement& b) {
    return a += b;
  }
  friend CliffordElement operator-(CliffordElement a,
                                   const CliffordElement& b) {
    return a -= b;
  }
  bool operator==(const CliffordElement& o) const;

  // The degree-k part as a (k,0) double form.
  DoubleForm grade(int k) const;
  // Whole element as a (p,0) double form; throws if mixed-degree.
  DoubleForm to_form() const;

 private:
  int n_;
  ScalarMode mode_;
  std::map<IndexMask, Scalar> terms_;
};

CliffordElement clifford_mul(const CliffordElement& a,
                             const CliffordElement& b);
CliffordElement clifford_commutator(const CliffordElement& a,
                                    const CliffordElement& b);

// Adjoint action of a 2-form on a p-form through the Clifford commutator;
// degree-preserving, and equal to twice the derivation action of rho(alpha).
DoubleForm ad(const DoubleForm& alpha, const DoubleForm& omega);

// Lie bracket on 2-forms pulled back from the composition commutator of the
// associated skew (1,1) forms; the Clifford commutator is 4 times it.
DoubleForm compose_bracket(const DoubleForm& a, const DoubleForm& b);

// Sharp product of double forms: factor-wise Clifford commutators,
// (a1 (x) a2) # (b1 (x) b2) = [a1, b1] (x) [a2, b2], extended bilinearly.
// Symmetric, and zero as soon as one side has a trivial factor. Throws if a
// non-bihomogeneous combination ever arises (it cannot for the (2,2) and
// (1,1) first factors used by the curvature formulas).
DoubleForm sharp(const DoubleForm& a, const DoubleForm& b);

}  // namespace dforms
