#pragma once

#include <iosfwd>
#include <string>

#include "dforms/weitzenbock.hpp"

namespace dforms {

// Named benchmark curvature tensor with its normalization spelled out.
// Structural flags live on the CurvatureInput and are always recomputed,
// never read from a file.
struct CurvatureModel {
  std::string name;
  int n = 0;
  CurvatureInput curvature;
  std::string normalization;
};

// Constant sectional curvature kappa: R = kappa g^2 / 2, Ric = kappa (n-1) g.
CurvatureModel sphere_curvature(int n, const Scalar& kappa);

// Complex projective space of complex dimension m (real dimension 2m) with
// the Fubini-Study metric normalized to holomorphic sectional curvature 4,
// complex structure pairing e_{2i-1} -> e_{2i}. Under this normalization
// CP^1 is the kappa = 4 sphere and the scalar curvature is 4m(m+1);
// eigenvalues scale with the normalization, purity ranks do not.
CurvatureModel cpn_curvature(int m);

CurvatureModel flat_curvature(int n);

// Block embedding of two curvature tensors into dimension n_a + n_b; mixed
// planes are flat.
CurvatureModel product_curvature(const CurvatureModel& a,
                                 const CurvatureModel& b);

void save_curvature(const CurvatureModel& model, const std::string& path);
CurvatureModel load_curvature(const std::string& path);

void write_curvature(std::ostream& os, const CurvatureModel& model);
CurvatureModel read_curvature(std::istream& is);

}  // namespace dforms
