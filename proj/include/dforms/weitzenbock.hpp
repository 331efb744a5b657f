#pragma once

#include <optional>

#include "dforms/clifford.hpp"
#include "dforms/extensions.hpp"

namespace dforms {

struct SpectralData;  // spectral.hpp

// Algebraic curvature tensor: a (2,2) double form with its structural flags
// computed (never trusted) at construction. The algebra below is defined for
// any (2,2) input; the flags report whether it actually is a curvature-type
// tensor (symmetric, first Bianchi identity).
class CurvatureInput {
 public:
  explicit CurvatureInput(DoubleForm R);

  const DoubleForm& tensor() const { return R_; }
  const DoubleForm& ricci() const { return ricci_; }  // c(R)
  int dim() const { return R_.dim(); }
  ScalarMode mode() const { return R_.mode(); }
  bool symmetric() const { return symmetric_; }
  bool first_bianchi() const { return first_bianchi_; }

 private:
  DoubleForm R_;
  DoubleForm ricci_;
  bool symmetric_;
  bool first_bianchi_;
};

// The (p,p) curvature form N_p = g^{p-1} Ric / (p-1)! - 2 g^{p-2} R / (p-2)!
// with g^{-1} = 0; N_1 = Ric and N_0 = 0.
DoubleForm n_operator(const CurvatureInput& R, int p);

enum class WeitMethod { IndexSum, Spectral, IndexFree };

// Zero-order curvature term of the Hodge-de Rham Laplacian on double forms.
// Three equivalent routes:
//   IndexSum:  sum over i<j of curvature transformations against the
//              rotation generators; O(n^2) compositions against w,
//   IndexFree: w o N_p - (1/4) R # w,
//   Spectral:  eigen-expansion over a diagonalizing 2-form basis (float),
//              n(n-1)/2 composition passes.
DoubleForm weitzenbock_term(const CurvatureInput& R, const DoubleForm& omega,
                            WeitMethod method,
                            const SpectralData* spectrum = nullptr);

enum class WeitSpecialCase { OneOne, TwoTwo, PForms };

// Closed forms for the classical special cases; each equals the general term
// on its bidegree.
DoubleForm weitzenbock_special(const CurvatureInput& R, const DoubleForm& omega,
                               WeitSpecialCase which);

// Zero-order curvature term of the Lichnerowicz Laplacian:
//   (1/2)(w o N_p + N_q o w) - (1/4) R # w
// which is the transpose-symmetrized average of the Hodge-de Rham term and
// the eigen-expansion -(1/2) sum_a lambda_a (rho(E_a))_d o (rho(E_a))_d.
DoubleForm ric_l_term(const CurvatureInput& R, const DoubleForm& omega,
                      WeitMethod method = WeitMethod::IndexFree,
                      const SpectralData* spectrum = nullptr);

// The Hodge-de Rham term preserves symmetric (p,p) forms exactly when N_p is
// a multiple of the composition identity g^p/p!. When it is not, a symmetric
// witness with non-symmetric image is produced.
struct SymmetryReport {
  bool preserves = false;
  std::optional<DoubleForm> witness;
};

SymmetryReport symmetry_preservation_check(const CurvatureInput& R, int p);

}  // namespace dforms
