#include "dforms/weitzenbock.hpp"

#include <string>

#include "dforms/spectral.hpp"

namespace dforms {

CurvatureInput::CurvatureInput(DoubleForm R)
    : R_(std::move(R)),
      ricci_(contract(R_)),
      symmetric_(transpose(R_) == R_),
      first_bianchi_(bianchi_sum(R_).is_zero()) {
  if (!R_.is_zero() && (R_.left_degree() != 2 || R_.right_degree() != 2))
    throw DegreeError("curvature input must be a (2,2) double form");
}

DoubleForm n_operator(const CurvatureInput& R, int p) {
  int n = R.dim();
  if (p <= 0 || p > n) return DoubleForm(n, 0, 0, R.mode());
  DoubleForm out =
      wedge(metric_identity(n, p - 1, R.mode()), R.ricci());
  if (p >= 2)
    out -= wedge(metric_identity(n, p - 2, R.mode()), R.tensor()) *
           Scalar::of_int(2, R.mode());
  return out;
}

namespace {

DoubleForm weit_index_sum(const CurvatureInput& R, const DoubleForm& omega) {
  int n = omega.dim();
  DoubleForm acc(n, omega.left_degree(), omega.right_degree(), omega.mode());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      DoubleForm rij = rho_ij(n, i, j, omega.mode());
      DoubleForm Rij = curvature_transformation(R.tensor(), i, j);
      if (Rij.is_zero()) continue;
      acc += comp_right(comp_left(Rij, omega), rij);
      acc -= comp_right(comp_right(omega, Rij), rij);
    }
  }
  return acc;
}

DoubleForm weit_index_free(const CurvatureInput& R, const DoubleForm& omega) {
  DoubleForm out(omega.dim(), omega.left_degree(), omega.right_degree(),
                 omega.mode());
  if (omega.left_degree() > 0)
    out += compose(omega, n_operator(R, omega.left_degree()));
  out -= sharp(R.tensor(), omega) * Scalar::of_int(4, omega.mode()).inv();
  return out;
}

DoubleForm weit_spectral(const CurvatureInput& R, const DoubleForm& omega,
                         const SpectralData* spectrum) {
  if (omega.mode() == ScalarMode::Exact)
    throw ModeError("spectral Weitzenbock term is float-mode only");
  SpectralData local;
  if (spectrum == nullptr) {
    local = curvature_spectrum(R);
    spectrum = &local;
  }
  int n = omega.dim();
  DoubleForm acc(n, omega.left_degree(), omega.right_degree(), omega.mode());
  for (std::size_t a = 0; a < spectrum->eigenvalues.size(); ++a) {
    double lam = spectrum->eigenvalues[a];
    if (lam == 0.0) continue;
    DoubleForm rE = rho(spectrum->eigenforms[a]);
    DoubleForm term = comp_right(comp_left(rE, omega), rE) -
                      comp_right(comp_right(omega, rE), rE);
    acc += term * Scalar::real(lam);
  }
  return acc;
}

}  // namespace

DoubleForm weitzenbock_term(const CurvatureInput& R, const DoubleForm& omega,
                            WeitMethod method, const SpectralData* spectrum) {
  check_same_space(R.tensor(), omega);
  switch (method) {
    case WeitMethod::IndexSum:
      return weit_index_sum(R, omega);
    case WeitMethod::IndexFree:
      return weit_index_free(R, omega);
    case WeitMethod::Spectral:
      return weit_spectral(R, omega, spectrum);
  }
  throw std::logic_error("unreachable weitzenbock method");
}

DoubleForm weitzenbock_special(const CurvatureInput& R, const DoubleForm& omega,
                               WeitSpecialCase which) {
  int p = omega.left_degree(), q = omega.right_degree();
  switch (which) {
    case WeitSpecialCase::OneOne: {
      if (p != 1 || q != 1)
        throw DegreeError("one_one case needs a (1,1) double form");
      return compose(omega, R.ricci()) - interior(omega, R.tensor());
    }
    case WeitSpecialCase::TwoTwo: {
      if (p != 2 || q != 2)
        throw DegreeError("two_two case needs a (2,2) double form");
      DoubleForm gric = wedge(metric(omega.dim(), omega.mode()), R.ricci());
      DoubleForm out = compose(
          omega, gric - R.tensor() * Scalar::of_int(2, omega.mode()));
      out -= sharp(R.tensor(), omega) * Scalar::of_int(4, omega.mode()).inv();
      return out;
    }
    case WeitSpecialCase::PForms: {
      if (q != 0) throw DegreeError("p_forms case needs a (p,0) double form");
      if (p == 0) return DoubleForm(omega.dim(), 0, 0, omega.mode());
      return compose(omega, n_operator(R, p));
    }
  }
  throw std::logic_error("unreachable special case");
}

DoubleForm ric_l_term(const CurvatureInput& R, const DoubleForm& omega,
                      WeitMethod method, const SpectralData* spectrum) {
  if (method == WeitMethod::Spectral) {
    // -(1/2) sum_a lambda_a (rho(E_a))_d o (rho(E_a))_d (w)
    if (omega.mode() == ScalarMode::Exact)
      throw ModeError("spectral Lichnerowicz term is float-mode only");
    SpectralData local;
    if (spectrum == nullptr) {
      local = curvature_spectrum(R);
      spectrum = &local;
    }
    DoubleForm acc(omega.dim(), omega.left_degree(), omega.right_degree(),
                   omega.mode());
    for (std::size_t a = 0; a < spectrum->eigenvalues.size(); ++a) {
      double lam = spectrum->eigenvalues[a];
      if (lam == 0.0) continue;
      DoubleForm rE = rho(spectrum->eigenforms[a]);
      auto act = [&](const DoubleForm& w) {
        return comp_left(rE, w) - comp_right(w, rE);
      };
      acc += act(act(omega)) * Scalar::real(-0.5 * lam);
    }
    return acc;
  }
  DoubleForm w = weitzenbock_term(R, omega, method, spectrum);
  DoubleForm wt = transpose(
      weitzenbock_term(R, transpose(omega), method, spectrum));
  return (w + wt) * Scalar::of_int(2, omega.mode()).inv();
}

SymmetryReport symmetry_preservation_check(const CurvatureInput& R, int p) {
  int n = R.dim();
  if (p < 1 || p > n)
    throw DegreeError("symmetry check needs 1 <= p <= n");
  SymmetryReport rep;
  DoubleForm np = n_operator(R, p);
  DoubleForm idp = metric_identity(n, p, R.mode());
  Scalar mu = inner(np, idp) / inner(idp, idp);
  rep.preserves = (np == idp * mu);
  if (rep.preserves) return rep;
  // The proof's criterion fails, so some symmetric form does not commute
  // with N_p; scan symmetrized basis pairs for a witness.
  auto masks = basis_masks(n, p);
  for (std::size_t a = 0; a < masks.size() && !rep.witness; ++a) {
    for (std::size_t b = a; b < masks.size(); ++b) {
      DoubleForm w =
          DoubleForm::basis_element(n, masks[a], masks[b],
                                    Scalar::one(R.mode()));
      if (a != b)
        w += DoubleForm::basis_element(n, masks[b], masks[a],
                                       Scalar::one(R.mode()));
      DoubleForm img = weitzenbock_term(R, w, WeitMethod::IndexFree);
      if (transpose(img) != img) {
        rep.witness = w;
        break;
      }
    }
  }
  return rep;
}

}  // namespace dforms
