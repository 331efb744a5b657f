#include "dforms/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "dforms/models.hpp"
#include "dforms/spectral.hpp"
#include "dforms/testing.hpp"

namespace dforms {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

struct Ctx {
  const RunConfig& cfg;
  SuiteReport& rep;

  bool eq(const DoubleForm& a, const DoubleForm& b) const {
    return cfg.mode == ScalarMode::Exact ? a == b
                                         : a.approx_equal(b, cfg.tolerance);
  }
  bool eq(const Scalar& a, const Scalar& b) const {
    return cfg.mode == ScalarMode::Exact ? a == b
                                         : a.approx_equal(b, cfg.tolerance);
  }

  // Runs `trial` cfg.trials times per dimension; any false counts a failure.
  void check(const std::string& identity, const std::string& anchor,
             const std::function<bool(Rng&, int)>& trial) {
    SuiteLine line{identity, anchor, 0, 0};
    Rng base(cfg.seed);
    for (int n = cfg.dim_min; n <= cfg.dim_max; ++n) {
      for (int t = 0; t < cfg.trials; ++t) {
        Rng rng = base.fork(fnv1a(rep.suite + '/' + identity) * 1315423911ULL +
                            static_cast<std::uint64_t>(n) * 2654435761ULL + t);
        ++line.trials;
        if (!trial(rng, n)) ++line.failures;
      }
    }
    rep.lines.push_back(std::move(line));
  }

  int rand_p(Rng& rng, int n) const {
    return static_cast<int>(rng.int_in(0, std::min(cfg.max_p, n)));
  }
  int rand_q(Rng& rng, int n) const {
    return static_cast<int>(rng.int_in(0, std::min(cfg.max_q, n)));
  }
};

int sign_pow(int e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

void suite_hodge(Ctx& c) {
  const ScalarMode m = c.cfg.mode;
  c.check("double star involution",
          "star(star w) = (-1)^{p(n-p)+q(n-q)} w", [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            DoubleForm w = random_form(rng, n, p, q, m);
            Scalar s = Scalar::of_int(
                sign_pow(p * (n - p) + q * (n - q)), m);
            return c.eq(hodge_star(hodge_star(w)), w * s);
          });
  c.check("star of product",
          "t.(star w) = (-1)^{p(r+1)+q(s+1)} star(i_t w)",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            int r = c.rand_p(rng, n), s = c.rand_q(rng, n);
            DoubleForm t = random_form(rng, n, p, q, m);
            DoubleForm w = random_form(rng, n, r, s, m);
            Scalar sg =
                Scalar::of_int(sign_pow(p * (r + 1) + q * (s + 1)), m);
            return c.eq(wedge(t, hodge_star(w)),
                        hodge_star(interior(t, w)) * sg);
          });
  c.check("star-conjugated interior",
          "star(t.(star w)) = (-1)^{n(r+s-p-q)+r(p+1)+s(q+1)} i_t w",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            int r = c.rand_p(rng, n), s = c.rand_q(rng, n);
            DoubleForm t = random_form(rng, n, p, q, m);
            DoubleForm w = random_form(rng, n, r, s, m);
            Scalar sg = Scalar::of_int(
                sign_pow(n * (r + s - p - q) + r * (p + 1) + s * (q + 1)), m);
            return c.eq(hodge_star(wedge(t, hodge_star(w))),
                        interior(t, w) * sg);
          });
  c.check("inner product via star", "<w1,w2> = star(w1.(star w2))",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            DoubleForm a = random_form(rng, n, p, q, m);
            DoubleForm b = random_form(rng, n, p, q, m);
            return c.eq(hodge_star(wedge(a, hodge_star(b))).scalar_value(),
                        inner(a, b));
          });
  c.check("interior adjoint to product", "<i_a w, t> = <w, a.t>",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            int ap = static_cast<int>(rng.int_in(0, std::min(1, p)));
            int aq = static_cast<int>(rng.int_in(0, std::min(1, q)));
            DoubleForm a = random_form(rng, n, ap, aq, m);
            DoubleForm w = random_form(rng, n, p, q, m);
            DoubleForm t = random_form(rng, n, p - ap, q - aq, m);
            return c.eq(inner(interior(a, w), t), inner(w, wedge(a, t)));
          });
  c.check("left insertion exchange",
          "i_{e_i x 1}((e^j x 1).w) = d_ij w - (e^j x 1).i_{e_i x 1}(w)",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            DoubleForm w = random_form(rng, n, p, q, m);
            for (int i = 1; i <= n; ++i)
              for (int j = 1; j <= n; ++j) {
                DoubleForm ei =
                    DoubleForm::basis_element(n, bit_of(i), 0, Scalar::one(m));
                DoubleForm ej =
                    DoubleForm::basis_element(n, bit_of(j), 0, Scalar::one(m));
                DoubleForm lhs = interior(ei, wedge(ej, w));
                DoubleForm rhs = -wedge(ej, interior(ei, w));
                if (i == j) rhs += w;
                if (!c.eq(lhs, rhs)) return false;
              }
            return true;
          });
  c.check("right insertion exchange",
          "i_{1 x e_i}((1 x e^j).w) = d_ij w - (1 x e^j).i_{1 x e_i}(w)",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            DoubleForm w = random_form(rng, n, p, q, m);
            for (int i = 1; i <= n; ++i)
              for (int j = 1; j <= n; ++j) {
                DoubleForm ei =
                    DoubleForm::basis_element(n, 0, bit_of(i), Scalar::one(m));
                DoubleForm ej =
                    DoubleForm::basis_element(n, 0, bit_of(j), Scalar::one(m));
                DoubleForm lhs = interior(ei, wedge(ej, w));
                DoubleForm rhs = -wedge(ej, interior(ei, w));
                if (i == j) rhs += w;
                if (!c.eq(lhs, rhs)) return false;
              }
            return true;
          });
  c.check("contraction exchange",
          "c((e^i x 1).w) = i_{1 x e_i}(w) - (e^i x 1).c(w)",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            DoubleForm w = random_form(rng, n, p, q, m);
            for (int i = 1; i <= n; ++i) {
              DoubleForm left_i =
                  DoubleForm::basis_element(n, bit_of(i), 0, Scalar::one(m));
              DoubleForm right_i =
                  DoubleForm::basis_element(n, 0, bit_of(i), Scalar::one(m));
              DoubleForm lhs = contract(wedge(left_i, w));
              DoubleForm rhs = interior(right_i, w) -
                               wedge(left_i, contract(w));
              if (!c.eq(lhs, rhs)) return false;
            }
            return true;
          });
  c.check("graded commutativity", "w1.w2 = (-1)^{pr+qs} w2.w1",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            int r = c.rand_p(rng, n), s = c.rand_q(rng, n);
            DoubleForm a = random_form(rng, n, p, q, m);
            DoubleForm b = random_form(rng, n, r, s, m);
            Scalar sg = Scalar::of_int(sign_pow(p * r + q * s), m);
            return c.eq(wedge(a, b), wedge(b, a) * sg);
          });
  c.check("contraction is interior by g", "c(w) = i_g w",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            DoubleForm w = random_form(rng, n, p, q, m);
            return c.eq(contract(w), interior(metric(n, m), w));
          });
}

void suite_composition(Ctx& c) {
  const ScalarMode m = c.cfg.mode;
  c.check("transpose anti-automorphism", "(w1 o w2)^t = w2^t o w1^t",
          [&](Rng& rng, int n) {
            DoubleForm a = random_form(rng, n, c.rand_p(rng, n),
                                       c.rand_q(rng, n), m);
            DoubleForm b = random_form(rng, n, c.rand_p(rng, n),
                                       a.left_degree(), m);
            return c.eq(transpose(compose(a, b)),
                        compose(transpose(b), transpose(a)));
          });
  c.check("transpose of products", "(w1.w2)^t = w1^t.w2^t",
          [&](Rng& rng, int n) {
            DoubleForm a = random_form(rng, n, c.rand_p(rng, n),
                                       c.rand_q(rng, n), m);
            DoubleForm b = random_form(rng, n, c.rand_p(rng, n),
                                       c.rand_q(rng, n), m);
            return c.eq(transpose(wedge(a, b)),
                        wedge(transpose(a), transpose(b)));
          });
  c.check("composition adjunction (left)", "<w1 o w2, w3> = <w2, w1^t o w3>",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            int r = c.rand_p(rng, n);
            DoubleForm a = random_form(rng, n, p, q, m);
            DoubleForm b = random_form(rng, n, r, p, m);
            DoubleForm t = random_form(rng, n, r, q, m);
            return c.eq(inner(compose(a, b), t),
                        inner(b, compose(transpose(a), t)));
          });
  c.check("composition adjunction (right)", "<w1 o w2, w3> = <w1, w3 o w2^t>",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            int r = c.rand_p(rng, n);
            DoubleForm a = random_form(rng, n, p, q, m);
            DoubleForm b = random_form(rng, n, r, p, m);
            DoubleForm t = random_form(rng, n, r, q, m);
            return c.eq(inner(compose(a, b), t),
                        inner(a, compose(t, transpose(b))));
          });
  c.check("composition associativity", "(w1 o w2) o w3 = w1 o (w2 o w3)",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            int r = c.rand_p(rng, n), s = c.rand_q(rng, n);
            DoubleForm a = random_form(rng, n, p, q, m);
            DoubleForm b = random_form(rng, n, r, p, m);
            DoubleForm d = random_form(rng, n, s, r, m);
            return c.eq(compose(compose(a, b), d), compose(a, compose(b, d)));
          });
  c.check("composition identity", "(g^p/p!) o w = w o (g^p/p!) = w",
          [&](Rng& rng, int n) {
            int p = static_cast<int>(rng.int_in(0, std::min(c.cfg.max_p, n)));
            DoubleForm w = random_form(rng, n, p, p, m);
            DoubleForm idp = metric_identity(n, p, m);
            return c.eq(compose(idp, w), w) && c.eq(compose(w, idp), w);
          });
  c.check("bianchi sum vs metric", "S(g^r w) = g^r S(w)",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = std::max(1, c.rand_q(rng, n));
            int r = static_cast<int>(rng.int_in(1, 2));
            DoubleForm w = random_form(rng, n, p, q, m);
            DoubleForm gr = metric_power(n, r, m);
            return c.eq(bianchi_sum(wedge(gr, w)), wedge(gr, bianchi_sum(w)));
          });
  c.check("bianchi sum vs contraction", "S(c w) = c S(w)",
          [&](Rng& rng, int n) {
            int p = std::max(1, c.rand_p(rng, n));
            int q = std::max(1, c.rand_q(rng, n));
            DoubleForm w = random_form(rng, n, p, q, m);
            return c.eq(bianchi_sum(contract(w)), contract(bianchi_sum(w)));
          });
  c.check("bianchi adjointness", "<S w, t> = <w, adj S t>",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = std::max(1, c.rand_q(rng, n));
            DoubleForm w = random_form(rng, n, p, q, m);
            DoubleForm t = random_form(rng, n, p + 1, q - 1, m);
            return c.eq(inner(bianchi_sum(w), t),
                        inner(w, adjoint_bianchi_sum(t)));
          });
  c.check("adjoint bianchi via transpose", "adj S w = (S(w^t))^t",
          [&](Rng& rng, int n) {
            int p = std::max(1, c.rand_p(rng, n));
            int q = c.rand_q(rng, n);
            DoubleForm w = random_form(rng, n, p, q, m);
            return c.eq(adjoint_bianchi_sum(w),
                        transpose(bianchi_sum(transpose(w))));
          });
}

void suite_greub_vanstone(Ctx& c) {
  const ScalarMode m = c.cfg.mode;
  c.check("greub-vanstone composition identity",
          "(g^{p-1}h/(p-1)!) o (g^{p-1}k/(p-1)!) = "
          "g^{p-1}(h o k)/(p-1)! + g^{p-2}hk/(p-2)!",
          [&](Rng& rng, int n) {
            int p = static_cast<int>(
                rng.int_in(2, std::max(2, std::min(c.cfg.max_p, n))));
            DoubleForm h = random_form(rng, n, 1, 1, m);
            DoubleForm k = random_form(rng, n, 1, 1, m);
            DoubleForm lhs =
                compose(wedge(metric_identity(n, p - 1, m), h),
                        wedge(metric_identity(n, p - 1, m), k));
            DoubleForm rhs =
                wedge(metric_identity(n, p - 1, m), compose(h, k)) +
                wedge(metric_identity(n, p - 2, m), wedge(h, k));
            return c.eq(lhs, rhs);
          });
}

void suite_two_identities(Ctx& c) {
  const ScalarMode m = c.cfg.mode;
  c.check("curvature eigen-sum, composition form",
          "sum_a rho(R(E_a)) o rho(E_a) = -c(R)", [&](Rng& rng, int n) {
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            DoubleForm acc(n, 1, 1, m);
            for (IndexMask mk : basis_masks(n, 2)) {
              DoubleForm E =
                  DoubleForm::basis_element(n, mk, 0, Scalar::one(m));
              acc += compose(rho(curvature_image(R.tensor(), E)), rho(E));
            }
            return c.eq(acc, -R.ricci());
          });
  c.check("curvature eigen-sum, product form",
          "sum_a rho(R(E_a)) . rho(E_a) = 2R", [&](Rng& rng, int n) {
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            DoubleForm acc(n, 2, 2, m);
            for (IndexMask mk : basis_masks(n, 2)) {
              DoubleForm E =
                  DoubleForm::basis_element(n, mk, 0, Scalar::one(m));
              acc += wedge(rho(curvature_image(R.tensor(), E)), rho(E));
            }
            return c.eq(acc, R.tensor() * Scalar::of_int(2, m));
          });
}

void suite_sharp(Ctx& c) {
  const ScalarMode m = c.cfg.mode;
  auto cliff_eq = [&c](const CliffordElement& x, const CliffordElement& y) {
    if (c.cfg.mode == ScalarMode::Exact) return x == y;
    CliffordElement d = x;
    d -= y;
    for (const auto& [mask, v] : d.terms())
      if (std::abs(v.to_double()) > c.cfg.tolerance) return false;
    return true;
  };
  c.check("clifford associativity", "(a.b).c = a.(b.c)",
          [&](Rng& rng, int n) {
            auto random_element = [&](Rng& r) {
              CliffordElement e(n, m);
              for (IndexMask mask = 0; mask < (IndexMask{1} << n); ++mask)
                if (r.chance(0.3)) e.add_term(mask, r.small_scalar(m));
              return e;
            };
            CliffordElement a = random_element(rng), b = random_element(rng),
                            d = random_element(rng);
            return cliff_eq(clifford_mul(clifford_mul(a, b), d),
                            clifford_mul(a, clifford_mul(b, d)));
          });
  c.check("clifford square of a covector", "e.e = -|e|^2",
          [&](Rng& rng, int n) {
            DoubleForm e = random_form(rng, n, 1, 0, m);
            CliffordElement ce = CliffordElement::from_form(e);
            CliffordElement sq = clifford_mul(ce, ce);
            CliffordElement expect(n, m);
            expect.add_term(0, -norm_sq(e));
            return cliff_eq(sq, expect);
          });
  c.check("adjoint action, three routes",
          "[a,w] = 2 rho(a)(w) = 2 sum_i i_{e_i}a ^ i_{e_i}w",
          [&](Rng& rng, int n) {
            int p = static_cast<int>(rng.int_in(0, n));
            DoubleForm alpha = random_form(rng, n, 2, 0, m);
            DoubleForm w = random_form(rng, n, p, 0, m);
            DoubleForm commutator = ad(alpha, w);
            DoubleForm via_rho =
                p == 0 ? DoubleForm(n, 0, 0, m)
                       : -compose(w, wedge(metric_identity(n, p - 1, m),
                                           rho(alpha))) *
                             Scalar::of_int(2, m);
            DoubleForm via_sum(n, p, 0, m);
            for (int i = 1; i <= n; ++i) {
              DoubleForm ei =
                  DoubleForm::basis_element(n, bit_of(i), 0, Scalar::one(m));
              via_sum += wedge(interior(ei, alpha), interior(ei, w)) *
                         Scalar::of_int(2, m);
            }
            return c.eq(commutator, via_rho) && c.eq(commutator, via_sum);
          });
  c.check("bracket comparison", "[a,b] = 4 [a,b]_o", [&](Rng& rng, int n) {
    DoubleForm a = random_form(rng, n, 2, 0, m);
    DoubleForm b = random_form(rng, n, 2, 0, m);
    CliffordElement comm = clifford_commutator(CliffordElement::from_form(a),
                                               CliffordElement::from_form(b));
    return c.eq(comm.grade(2), compose_bracket(a, b) * Scalar::of_int(4, m));
  });
  c.check("bracket jacobi identity",
          "[a,[b,c]_o]_o + [b,[c,a]_o]_o + [c,[a,b]_o]_o = 0",
          [&](Rng& rng, int n) {
            DoubleForm a = random_form(rng, n, 2, 0, m);
            DoubleForm b = random_form(rng, n, 2, 0, m);
            DoubleForm d = random_form(rng, n, 2, 0, m);
            DoubleForm j = compose_bracket(a, compose_bracket(b, d)) +
                           compose_bracket(b, compose_bracket(d, a)) +
                           compose_bracket(d, compose_bracket(a, b));
            return c.eq(j, DoubleForm(n, 2, 0, m));
          });
  c.check("adjoint action is a representation",
          "ad_a ad_b - ad_b ad_a = ad_{[a,b]}", [&](Rng& rng, int n) {
            DoubleForm a = random_form(rng, n, 2, 0, m);
            DoubleForm b = random_form(rng, n, 2, 0, m);
            int p = static_cast<int>(rng.int_in(0, n));
            DoubleForm w = random_form(rng, n, p, 0, m);
            DoubleForm lhs = ad(a, ad(b, w)) - ad(b, ad(a, w));
            DoubleForm bracket =
                clifford_commutator(CliffordElement::from_form(a),
                                    CliffordElement::from_form(b))
                    .grade(2);
            return c.eq(lhs, ad(bracket, w));
          });
  c.check("sharp symmetry", "a # b = b # a", [&](Rng& rng, int n) {
    int p = static_cast<int>(rng.int_in(1, std::min(2, n)));
    int q = static_cast<int>(rng.int_in(1, std::min(2, n)));
    DoubleForm a = random_form(rng, n, 2, 2, m);
    DoubleForm b = random_form(rng, n, p, q, m);
    return c.eq(sharp(a, b), sharp(b, a));
  });
  c.check("sharp kills trivial factors", "a # (t x 1) = 0",
          [&](Rng& rng, int n) {
            DoubleForm a = random_form(rng, n, 2, 2, m);
            DoubleForm b = random_form(rng, n,
                                       static_cast<int>(rng.int_in(0, n)), 0,
                                       m);
            return sharp(a, b).is_zero() && sharp(b, a).is_zero();
          });
  c.check("sharp with a bilinear form",
          "h # w = 4 i_h w (p even), 4 h.w (p odd)", [&](Rng& rng, int n) {
            DoubleForm h = random_form(rng, n, 1, 1, m);
            int p = static_cast<int>(
                rng.int_in(1, std::max(1, std::min(c.cfg.max_p, n))));
            DoubleForm w = random_form(rng, n, p, p, m);
            DoubleForm expect = (p % 2 == 0)
                                    ? interior(h, w) * Scalar::of_int(4, m)
                                    : wedge(h, w) * Scalar::of_int(4, m);
            return c.eq(sharp(h, w), expect);
          });
  c.check("sharp, three routes",
          "commutator form = composition form = interior-sum form",
          [&](Rng& rng, int n) {
            int p = static_cast<int>(rng.int_in(1, std::min(c.cfg.max_p, n)));
            int q = static_cast<int>(rng.int_in(1, std::min(c.cfg.max_q, n)));
            DoubleForm R = random_bianchi_curvature(rng, n, m).tensor();
            DoubleForm w = random_form(rng, n, p, q, m);
            DoubleForm direct = sharp(R, w);
            // bilinear extension of the simple-form composition formula
            DoubleForm comp_form(n, p, q, m);
            for (const auto& [key, v] : R.entries()) {
              DoubleForm r1 = rho(
                  DoubleForm::basis_element(n, key.left, 0, Scalar::one(m)));
              DoubleForm r2 = rho(
                  DoubleForm::basis_element(n, key.right, 0, Scalar::one(m)));
              comp_form += comp_left(r2, comp_right(w, r1)) *
                           (v * Scalar::of_int(-4, m));
            }
            DoubleForm int_form(n, p, q, m);
            for (int i = 1; i <= n; ++i)
              for (int j = 1; j <= n; ++j) {
                DoubleForm eij = DoubleForm::basis_element(
                    n, bit_of(i), bit_of(j), Scalar::one(m));
                int_form += wedge(interior(eij, R), interior(eij, w)) *
                            Scalar::of_int(4, m);
              }
            return c.eq(direct, comp_form) && c.eq(direct, int_form);
          });
  c.check("metric square sharp",
          "(1/2) g^2 # w = 4 g.c(w) - 4q w + 4 adjS S w",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            DoubleForm w = random_form(rng, n, p, q, m);
            DoubleForm lhs = sharp(metric_power(n, 2, m), w) *
                             Scalar::of_int(2, m).inv();
            DoubleForm rhs =
                wedge(metric(n, m), contract(w)) * Scalar::of_int(4, m) -
                w * Scalar::of_int(4L * q, m) +
                adjoint_bianchi_sum(bianchi_sum(w)) * Scalar::of_int(4, m);
            return c.eq(lhs, rhs);
          });
}

void suite_weitzenbock(Ctx& c) {
  const ScalarMode m = c.cfg.mode;
  c.check("method agreement", "index-sum term = index-free term",
          [&](Rng& rng, int n) {
            int p = std::min(c.rand_p(rng, n), 2);
            int q = std::min(c.rand_q(rng, n), 2);
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            DoubleForm w = random_form(rng, n, p, q, m);
            return c.eq(weitzenbock_term(R, w, WeitMethod::IndexSum),
                        weitzenbock_term(R, w, WeitMethod::IndexFree));
          });
  c.check("metric powers are flat directions", "Weit(g^p/p!) = 0",
          [&](Rng& rng, int n) {
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            for (int p = 1; p <= std::min(c.cfg.max_p, n); ++p) {
              DoubleForm idp = metric_identity(n, p, m);
              if (!c.eq(weitzenbock_term(R, idp, WeitMethod::IndexFree),
                        DoubleForm(n, p, p, m)))
                return false;
            }
            return true;
          });
  c.check("orthogonality to metric powers", "<Weit(w), g^p/p!> = 0",
          [&](Rng& rng, int n) {
            int p = std::max(1, std::min(c.rand_p(rng, n), n));
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            DoubleForm w = random_form(rng, n, p, p, m);
            Scalar v = inner(weitzenbock_term(R, w, WeitMethod::IndexFree),
                             metric_identity(n, p, m));
            return c.eq(v, Scalar::zero(m));
          });
  c.check("constant curvature closed form",
          "Weit(w) = [p(n-p)+q] w - g c(w) - adjS S w on the unit sphere",
          [&](Rng& rng, int n) {
            CurvatureInput R(metric_power(n, 2, m) *
                             Scalar::of_int(2, m).inv());
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            DoubleForm w = random_form(rng, n, p, q, m);
            DoubleForm rhs = w * Scalar::of_int(
                                     static_cast<long>(p) * (n - p) + q, m) -
                             wedge(metric(n, m), contract(w)) -
                             adjoint_bianchi_sum(bianchi_sum(w));
            return c.eq(weitzenbock_term(R, w, WeitMethod::IndexFree), rhs);
          });
  c.check("star commutation", "Weit(star w) = star Weit(w)",
          [&](Rng& rng, int n) {
            int p = std::min(c.rand_p(rng, n), 2);
            int q = std::min(c.rand_q(rng, n), 2);
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            DoubleForm w = random_form(rng, n, p, q, m);
            return c.eq(
                weitzenbock_term(R, hodge_star(w), WeitMethod::IndexFree),
                hodge_star(weitzenbock_term(R, w, WeitMethod::IndexFree)));
          });
  c.check("special cases equal the general term",
          "one-form, (1,1), (2,2) and (p,0) closed forms",
          [&](Rng& rng, int n) {
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            DoubleForm th = random_form(rng, n, 1, 0, m);
            if (!c.eq(weitzenbock_term(R, th, WeitMethod::IndexFree),
                      compose(th, R.ricci())))
              return false;
            DoubleForm h = random_form(rng, n, 1, 1, m);
            if (!c.eq(weitzenbock_term(R, h, WeitMethod::IndexFree),
                      weitzenbock_special(R, h, WeitSpecialCase::OneOne)))
              return false;
            DoubleForm w22 = random_form(rng, n, 2, 2, m);
            if (!c.eq(weitzenbock_term(R, w22, WeitMethod::IndexFree),
                      weitzenbock_special(R, w22, WeitSpecialCase::TwoTwo)))
              return false;
            int p = std::max(1, c.rand_p(rng, n));
            DoubleForm wp = random_form(rng, n, p, 0, m);
            return c.eq(weitzenbock_term(R, wp, WeitMethod::IndexFree),
                        weitzenbock_special(R, wp, WeitSpecialCase::PForms));
          });
}

void suite_ric_l(Ctx& c) {
  const ScalarMode m = c.cfg.mode;
  c.check("transpose-average form",
          "Ric_L(w) = (1/2)(Weit(w) + (Weit(w^t))^t)", [&](Rng& rng, int n) {
            int p = std::min(c.rand_p(rng, n), 2);
            int q = std::min(c.rand_q(rng, n), 2);
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            DoubleForm w = random_form(rng, n, p, q, m);
            DoubleForm avg =
                (weitzenbock_term(R, w, WeitMethod::IndexFree) +
                 transpose(weitzenbock_term(R, transpose(w),
                                            WeitMethod::IndexFree))) *
                Scalar::of_int(2, m).inv();
            return c.eq(ric_l_term(R, w), avg);
          });
  c.check("constant curvature closed form",
          "Ric_L(w) = (p(n-p)+q(n-q)+p+q)/2 w - g c(w) - "
          "(adjS S + S adjS)(w)/2 on the unit sphere",
          [&](Rng& rng, int n) {
            CurvatureInput R(metric_power(n, 2, m) *
                             Scalar::of_int(2, m).inv());
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            DoubleForm w = random_form(rng, n, p, q, m);
            Scalar half = Scalar::of_int(2, m).inv();
            DoubleForm rhs =
                w * (Scalar::of_int(static_cast<long>(p) * (n - p) +
                                        static_cast<long>(q) * (n - q) + p + q,
                                    m) *
                     half) -
                wedge(metric(n, m), contract(w)) -
                (adjoint_bianchi_sum(bianchi_sum(w)) +
                 bianchi_sum(adjoint_bianchi_sum(w))) *
                    half;
            return c.eq(ric_l_term(R, w), rhs);
          });
  c.check("symmetric quadratic forms agree",
          "<Ric_L(w), w> = <Weit(w), w> for symmetric w",
          [&](Rng& rng, int n) {
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            DoubleForm h = random_symmetric_one_one(rng, n, m);
            DoubleForm w = wedge(h, h);
            return c.eq(inner(ric_l_term(R, w), w),
                        inner(weitzenbock_term(R, w, WeitMethod::IndexFree),
                              w));
          });
  c.check("star commutation", "Ric_L(star w) = star Ric_L(w)",
          [&](Rng& rng, int n) {
            int p = std::min(c.rand_p(rng, n), 2);
            int q = std::min(c.rand_q(rng, n), 2);
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            DoubleForm w = random_form(rng, n, p, q, m);
            return c.eq(ric_l_term(R, hodge_star(w)),
                        hodge_star(ric_l_term(R, w)));
          });
  c.check("one-form reduction", "Ric_L(t x 1) = (1/2)(t o Ric) x 1",
          [&](Rng& rng, int n) {
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            DoubleForm th = random_form(rng, n, 1, 0, m);
            return c.eq(ric_l_term(R, th),
                        compose(th, R.ricci()) * Scalar::of_int(2, m).inv());
          });
}

void suite_lemmas(Ctx& c) {
  const ScalarMode m = c.cfg.mode;
  c.check("weighted sum bound",
          "sum l_i w_i >= (S/k) sum_{i<=k} l_i, k = floor(S/max w)",
          [&](Rng& rng, int n) {
            int count = n * (n - 1) / 2;
            std::vector<double> lam, wts;
            for (int i = 0; i < count; ++i) {
              lam.push_back(rng.uniform(-3.0, 3.0));
              wts.push_back(rng.uniform(0.0, 2.0));
            }
            std::sort(lam.begin(), lam.end());
            if (*std::max_element(wts.begin(), wts.end()) <= 0.0)
              wts.back() = 1.0;
            return weighted_sum_bound(lam, wts).holds;
          });
  c.check("weighted sum equality at uniform weights",
          "w = 1: k = n and the bound is attained", [&](Rng& rng, int n) {
            std::vector<double> lam;
            lam.reserve(n);
            for (int i = 0; i < n; ++i) lam.push_back(rng.uniform(-2.0, 2.0));
            std::sort(lam.begin(), lam.end());
            std::vector<double> wts(n, 1.0);
            auto b = weighted_sum_bound(lam, wts);
            double dot = 0.0;
            for (double l : lam) dot += l;
            return b.k == n && std::abs(b.lower_bound - dot) <= 1e-12 * n;
          });
  c.check("rotation-square operator bounds",
          "eigenvalues of B_E lie in [0, min(p, r)], 2r = rank E",
          [&](Rng& rng, int n) {
            int r = static_cast<int>(rng.int_in(1, n / 2));
            int p = static_cast<int>(
                rng.int_in(1, std::max(1, std::min(c.cfg.max_p, n - 1))));
            DoubleForm E = random_two_form_of_rank(rng, n, r);
            DoubleForm B = b_alpha_operator(E, p);
            auto eig = operator_eigenvalues(B);
            double lo = eig.front(), hi = eig.back();
            return lo >= -1e-9 && hi <= std::min(p, r) + 1e-9;
          });
  c.check("rotation-square operator sum",
          "sum over an orthonormal 2-form basis of B_E = p(n-p) g^p/p!",
          [&](Rng& rng, int n) {
            int p = static_cast<int>(
                rng.int_in(1, std::max(1, std::min(c.cfg.max_p, n))));
            DoubleForm acc(n, p, p, m);
            for (IndexMask mk : basis_masks(n, 2)) {
              DoubleForm E =
                  DoubleForm::basis_element(n, mk, 0, Scalar::one(m));
              acc += b_alpha_operator(E, p);
            }
            return c.eq(acc, metric_identity(n, p, m) *
                                 Scalar::of_int(static_cast<long>(p) * (n - p), m));
          });
  c.check("metric power norm expansion",
          "|g^k w|^2/k! = |c^k w|^2/k! + correction sum",
          [&](Rng& rng, int n) {
            int p = std::min(c.rand_p(rng, n), 2);
            int q = std::min(c.rand_q(rng, n), 2);
            int k = static_cast<int>(rng.int_in(1, 2));
            DoubleForm w = random_form(rng, n, p, q, m);
            auto fact = [&](int j) {
              Scalar f = Scalar::one(m);
              for (int i = 2; i <= j; ++i) f *= Scalar::of_int(i, m);
              return f;
            };
            Scalar lhs =
                norm_sq(wedge(metric_power(n, k, m), w)) / fact(k);
            Scalar rhs = norm_sq(contract_power(w, k)) / fact(k);
            for (int r = 1; r <= k; ++r) {
              Scalar coeff = Scalar::one(m);
              for (int i = 0; i < r; ++i)
                coeff *= Scalar::of_int(n - p - q - i, m);
              long binom = 1;
              for (int i = 1; i <= r; ++i) binom = binom * (k - i + 1) / i;
              rhs += Scalar::of_int(binom, m) * coeff *
                     norm_sq(contract_power(w, k - r)) / fact(k - r);
            }
            return c.eq(lhs, rhs);
          });
  c.check("orthogonal decomposition",
          "w = sum g^{p-i} w_i, c(w_i) = 0, reconstruction exact",
          [&](Rng& rng, int n) {
            if (m != ScalarMode::Exact) return true;  // exact-mode statement
            int p = static_cast<int>(rng.int_in(1, std::min(2, n / 2)));
            DoubleForm w = random_form(rng, n, p, p, m);
            auto dec = orthogonal_decompose(w);
            if (dec.reconstruction != w) return false;
            for (int i = 1; i <= p; ++i)
              if (!contract(dec.components[i]).is_zero()) return false;
            return true;
          });
  c.check("first Bianchi descends to components",
          "S(w) = 0 implies S(w_i) = 0 for all i", [&](Rng& rng, int n) {
            if (m != ScalarMode::Exact) return true;
            DoubleForm h = random_symmetric_one_one(rng, n, m);
            DoubleForm w = wedge(h, h);
            auto dec = orthogonal_decompose(w);
            for (const auto& comp : dec.components)
              if (!bianchi_sum(comp).is_zero()) return false;
            return true;
          });
  c.check("derivation extensions, slot oracle",
          "composition closed form = Leibniz slot action",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            DoubleForm h = random_form(rng, n, 1, 1, m);
            DoubleForm w = random_form(rng, n, p, q, m);
            return c.eq(extend(h, w, ExtensionMode::Left),
                        testing::leibniz_extend_left(h, w)) &&
                   c.eq(extend(h, w, ExtensionMode::Right),
                        testing::leibniz_extend_right(h, w));
          });
  c.check("extensions act by derivations",
          "E(w1.w2) = E(w1).w2 + w1.E(w2)", [&](Rng& rng, int n) {
            DoubleForm h = random_form(rng, n, 1, 1, m);
            DoubleForm a = random_form(rng, n, 1, 1, m);
            DoubleForm b = random_form(rng, n, 1, 0, m);
            for (auto mode : {ExtensionMode::Left, ExtensionMode::Right,
                              ExtensionMode::Derivation}) {
              DoubleForm lhs = extend(h, wedge(a, b), mode);
              DoubleForm rhs = wedge(extend(h, a, mode), b) +
                               wedge(a, extend(h, b, mode));
              if (!c.eq(lhs, rhs)) return false;
            }
            return true;
          });
  c.check("rotation generators, operator form",
          "(rho_ij)_l = i_{e_j x 1} mu_{e^i x 1} - i_{e_i x 1} mu_{e^j x 1}",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            DoubleForm w = random_form(rng, n, p, q, m);
            for (int i = 1; i <= n; ++i)
              for (int j = i + 1; j <= n; ++j) {
                DoubleForm ei =
                    DoubleForm::basis_element(n, bit_of(i), 0, Scalar::one(m));
                DoubleForm ej =
                    DoubleForm::basis_element(n, bit_of(j), 0, Scalar::one(m));
                DoubleForm mu_iota = interior(ej, wedge(ei, w)) -
                                     interior(ei, wedge(ej, w));
                if (!c.eq(rho_ij_action(i, j, w, RhoSide::Left), mu_iota))
                  return false;
              }
            return true;
          });
  c.check("rotation generators act by derivations",
          "(rho_ij)_l (w1.w2) = (rho_ij)_l(w1).w2 + w1.(rho_ij)_l(w2)",
          [&](Rng& rng, int n) {
            DoubleForm a = random_form(rng, n, 1, 1, m);
            DoubleForm b = random_form(rng, n, 1, 0, m);
            int i = static_cast<int>(rng.int_in(1, n - 1));
            int j = static_cast<int>(rng.int_in(i + 1, n));
            return c.eq(rho_ij_action(i, j, wedge(a, b), RhoSide::Left),
                        wedge(rho_ij_action(i, j, a, RhoSide::Left), b) +
                            wedge(a, rho_ij_action(i, j, b, RhoSide::Left)));
          });
  c.check("rotation generators pass through composition",
          "(rho_ij)_l (w1 o w2) = w1 o (rho_ij)_l (w2)",
          [&](Rng& rng, int n) {
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            int r = c.rand_p(rng, n);
            DoubleForm a = random_form(rng, n, p, q, m);
            DoubleForm b = random_form(rng, n, r, p, m);
            int i = static_cast<int>(rng.int_in(1, n - 1));
            int j = static_cast<int>(rng.int_in(i + 1, n));
            return c.eq(rho_ij_action(i, j, compose(a, b), RhoSide::Left),
                        compose(a, rho_ij_action(i, j, b, RhoSide::Left)));
          });
  c.check("curvature transformation as a derivation",
          "R_ij(w) = (g^{q-1}R_ij/(q-1)!) o w - w o (g^{p-1}R_ij/(p-1)!)",
          [&](Rng& rng, int n) {
            // Against the slot oracle: R_ij acts on each factor by the
            // Leibniz rule with the transposed sign of a skew form.
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            int p = c.rand_p(rng, n), q = c.rand_q(rng, n);
            DoubleForm w = random_form(rng, n, p, q, m);
            int i = static_cast<int>(rng.int_in(1, n - 1));
            int j = static_cast<int>(rng.int_in(i + 1, n));
            DoubleForm rij = curvature_transformation(R.tensor(), i, j);
            DoubleForm closed = comp_left(rij, w) - comp_right(w, rij);
            DoubleForm oracle = testing::leibniz_extend_left(rij, w) +
                                testing::leibniz_extend_right(rij, w);
            return c.eq(closed, oracle);
          });
  c.check("curvature transformation bilinear identity",
          "R_ij(h)(z,u) = -h(R_ij z, u) - h^t(R_ij u, z)",
          [&](Rng& rng, int n) {
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            DoubleForm h = random_form(rng, n, 1, 1, m);
            int i = static_cast<int>(rng.int_in(1, n - 1));
            int j = static_cast<int>(rng.int_in(i + 1, n));
            DoubleForm rij = curvature_transformation(R.tensor(), i, j);
            DoubleForm act = compose(rij, h) - compose(h, rij);
            DoubleForm ht = transpose(h);
            for (int z = 1; z <= n; ++z)
              for (int u = 1; u <= n; ++u) {
                Scalar lhs = act.coefficient(bit_of(z), bit_of(u));
                Scalar rhs = Scalar::zero(m);
                for (int l = 1; l <= n; ++l) {
                  rhs -= rij.coefficient(bit_of(z), bit_of(l)) *
                         h.coefficient(bit_of(l), bit_of(u));
                  rhs -= rij.coefficient(bit_of(u), bit_of(l)) *
                         ht.coefficient(bit_of(l), bit_of(z));
                }
                if (!c.eq(lhs, rhs)) return false;
              }
            return true;
          });
  c.check("bilinear multiplication identity",
          "(gh o R)(x,y,z,u) = h(R(x,y)z, u) - h(R(x,y)u, z)",
          [&](Rng& rng, int n) {
            CurvatureInput R = random_bianchi_curvature(rng, n, m);
            DoubleForm h = random_form(rng, n, 1, 1, m);
            DoubleForm lam = comp_left(h, R.tensor());
            for (int t = 0; t < 8; ++t) {
              int x = static_cast<int>(rng.int_in(1, n));
              int y = static_cast<int>(rng.int_in(1, n));
              int z = static_cast<int>(rng.int_in(1, n));
              int u = static_cast<int>(rng.int_in(1, n));
              Scalar lhs = testing::evaluate(lam, {x, y}, {z, u});
              Scalar rhs = Scalar::zero(m);
              for (int l = 1; l <= n; ++l) {
                rhs += testing::evaluate(R.tensor(), {x, y}, {z, l}) *
                       h.coefficient(bit_of(l), bit_of(u));
                rhs -= testing::evaluate(R.tensor(), {x, y}, {u, l}) *
                       h.coefficient(bit_of(l), bit_of(z));
              }
              if (!c.eq(lhs, rhs)) return false;
            }
            return true;
          });
  c.check("threshold formula for pure trace-free forms",
          "k_g(w, r) = p(n-p+1)/(2 min(p,r)) for symmetric trace-free "
          "first-Bianchi (p,p) forms",
          [&](Rng& rng, int n) {
            if (m != ScalarMode::Exact) return true;
            int p = static_cast<int>(rng.int_in(1, std::min(2, n / 2)));
            DoubleForm w = random_trace_free_bianchi(rng, n, p, m);
            for (int r = 1; r <= 3; ++r) {
              Scalar expect =
                  Scalar::exact(static_cast<long>(p) * (n - p + 1),
                                2L * std::min(p, r));
              if (k_g_threshold(w, r) != expect) return false;
            }
            return true;
          });
  c.check("metric annihilates the threshold", "k_g(g, r) = 0",
          [&](Rng& rng, int n) {
            (void)rng;
            return c.eq(k_g_threshold(metric(n, m), 1), Scalar::zero(m));
          });
  c.check("metric multiplication kernel",
          "g^k w = 0 forces w = 0 below the critical degree",
          [&](Rng& rng, int n) {
            int p = std::min(c.rand_p(rng, n), n / 2);
            int q = std::min(c.rand_q(rng, n), n - p);
            int k = static_cast<int>(rng.int_in(0, n - p - q));
            DoubleForm w = random_form(rng, n, p, q, m);
            auto rep = gk_kernel_check(w, k);
            if (!rep.consistent) return false;
            if (!w.is_zero() && p + q + k < n + 1 && rep.product_vanishes)
              return false;  // nonzero w cannot be killed below the bound
            return true;
          });
}

using SuiteFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"hodge", suite_hodge},
      {"composition", suite_composition},
      {"greub_vanstone", suite_greub_vanstone},
      {"two_identities", suite_two_identities},
      {"sharp", suite_sharp},
      {"weitzenbock", suite_weitzenbock},
      {"ric_l", suite_ric_l},
      {"lemmas", suite_lemmas},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& config) {
  if (name == "all") {
    SuiteReport all;
    all.suite = "all";
    for (const auto& [sub, fn] : registry()) {
      SuiteReport rep;
      rep.suite = sub;
      Ctx ctx{config, rep};
      fn(ctx);
      for (auto& line : rep.lines) {
        line.identity = sub + ": " + line.identity;
        all.lines.push_back(std::move(line));
      }
    }
    return all;
  }
  for (const auto& [sub, fn] : registry()) {
    if (sub == name) {
      SuiteReport rep;
      rep.suite = name;
      Ctx ctx{config, rep};
      fn(ctx);
      return rep;
    }
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string format_report(const SuiteReport& report, const RunConfig& config) {
  std::ostringstream os;
  os << "# dforms verify: suite " << report.suite << '\n';
  os << "# prng mt19937_64 seed " << config.seed << '\n';
  os << "# mode " << (config.mode == ScalarMode::Exact ? "exact" : "float")
     << " dims " << config.dim_min << ".." << config.dim_max << " p<="
     << config.max_p << " q<=" << config.max_q << " trials " << config.trials
     << '\n';
  for (const auto& line : report.lines) {
    os << (line.failures == 0 ? "ok   " : "FAIL ") << line.identity << "  ["
       << line.anchor << "]  " << (line.trials - line.failures) << '/'
       << line.trials << '\n';
  }
  os << (report.passed() ? "PASS" : "FAIL") << ' ' << report.suite << '\n';
  return os.str();
}

}  // namespace dforms
