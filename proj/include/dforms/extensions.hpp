#pragma once

#include "dforms/composition.hpp"

namespace dforms {

// Extension of a (1,1) endomorphism h to double forms. The left/right modes
// act by derivations on one tensor factor, the derivation mode on both, and
// the diagonal mode applies the factor extension to each side:
//   left:       w o (g^{p-1} h^t / (p-1)!)
//   right:      (g^{q-1} h / (q-1)!) o w
//   derivation: left + right
//   diagonal:   (g^{q-1} h / (q-1)!) o w o (g^{p-1} h^t / (p-1)!)
// with the g^{-1} = 0 convention when a factor has degree 0.
enum class ExtensionMode { Left, Right, Derivation, Diagonal };

DoubleForm extend(const DoubleForm& h, const DoubleForm& omega,
                  ExtensionMode mode);

// Building blocks used throughout the curvature formulas: composition with
// g^{k-1} h / (k-1)! on the matching side, k the relevant degree of omega.
DoubleForm comp_left(const DoubleForm& h, const DoubleForm& omega);
DoubleForm comp_right(const DoubleForm& omega, const DoubleForm& h);

enum class RhoSide { Left, Right, Derivation };

// Action of the rotation generator rho(e^i ^ e^j) extended to double forms;
// i == j gives the zero operator.
DoubleForm rho_ij_action(int i, int j, const DoubleForm& omega, RhoSide side);

// Curvature transformation R_ij = R(e_i, e_j, ., .) of a (2,2) double form,
// as a skew (1,1) double form.
DoubleForm curvature_transformation(const DoubleForm& R, int i, int j);

// Image of a 2-form under the curvature operator on 2-forms induced by a
// (2,2) double form.
DoubleForm curvature_image(const DoubleForm& R, const DoubleForm& two_form);

// Left/right composition multiplication extended by derivations to square
// double forms, and their sum F_h.
DoubleForm lambda_h(const DoubleForm& h, const DoubleForm& omega);
DoubleForm rho_h(const DoubleForm& h, const DoubleForm& omega);
DoubleForm f_h(const DoubleForm& h, const DoubleForm& omega);

}  // namespace dforms
