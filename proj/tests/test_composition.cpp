#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "dforms/composition.hpp"
#include "dforms/io.hpp"
#include "dforms/rng.hpp"

using namespace dforms;

namespace {
const ScalarMode EX = ScalarMode::Exact;

DoubleForm basis(int n, IndexMask l, IndexMask r) {
  return DoubleForm::basis_element(n, l, r, Scalar::exact(1));
}
}  // namespace

TEST_CASE("composition product", "[composition]") {
  Rng rng(3);
  SECTION("g is the identity on (1,1) forms") {
    for (int t = 0; t < 10; ++t) {
      DoubleForm h = random_form(rng, 4, 1, 1, EX);
      CHECK(compose(metric(4, EX), h) == h);
      CHECK(compose(h, metric(4, EX)) == h);
    }
  }
  SECTION("g^p/p! is the identity on (p,p) forms") {
    for (int p = 0; p <= 4; ++p) {
      DoubleForm w = random_form(rng, 4, p, p, EX);
      DoubleForm idp = metric_identity(4, p, EX);
      CHECK(compose(idp, w) == w);
      CHECK(compose(w, idp) == w);
    }
  }
  SECTION("bidegree mismatch composes to zero") {
    DoubleForm a = random_form(rng, 4, 2, 1, EX);
    DoubleForm b = random_form(rng, 4, 1, 1, EX);
    CHECK(compose(a, b).is_zero());  // needs left degree of a == right of b
  }
  SECTION("adjunctions and transpose rule") {
    for (int t = 0; t < 25; ++t) {
      int p = rng.int_in(0, 2), q = rng.int_in(0, 2), r = rng.int_in(0, 2);
      DoubleForm a = random_form(rng, 4, p, q, EX);
      DoubleForm b = random_form(rng, 4, r, p, EX);
      DoubleForm c = random_form(rng, 4, r, q, EX);
      CHECK(transpose(compose(a, b)) ==
            compose(transpose(b), transpose(a)));
      CHECK(inner(compose(a, b), c) == inner(b, compose(transpose(a), c)));
      CHECK(inner(compose(a, b), c) == inner(a, compose(c, transpose(b))));
    }
  }
  SECTION("associativity on compatible bidegrees") {
    for (int t = 0; t < 15; ++t) {
      int p = rng.int_in(0, 2), q = rng.int_in(0, 2), r = rng.int_in(0, 2),
          s = rng.int_in(0, 2);
      DoubleForm a = random_form(rng, 4, p, q, EX);
      DoubleForm b = random_form(rng, 4, r, p, EX);
      DoubleForm c = random_form(rng, 4, s, r, EX);
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
  }
  SECTION("greub-vanstone identity at n = 4, p = 2") {
    for (int t = 0; t < 50; ++t) {
      DoubleForm h = random_form(rng, 4, 1, 1, EX);
      DoubleForm k = random_form(rng, 4, 1, 1, EX);
      DoubleForm g = metric(4, EX);
      CHECK(compose(wedge(g, h), wedge(g, k)) ==
            wedge(g, compose(h, k)) + wedge(h, k));
    }
  }
}

TEST_CASE("first bianchi sum and its adjoint", "[composition]") {
  CHECK(bianchi_sum(metric(3, EX)).is_zero());
  CHECK(bianchi_sum(metric_power(3, 2, EX) * Scalar::exact(1, 2)).is_zero());
  CHECK(bianchi_sum(basis(3, bit_of(1), bit_of(2))) ==
        basis(3, bit_of(1) | bit_of(2), 0) * Scalar::exact(-1));
  CHECK(adjoint_bianchi_sum(metric(3, EX)).is_zero());

  Rng rng(5);
  SECTION("adjoint formula on p-forms") {
    // adj S (t x 1) = sum_i i_{e_i} t (x) e^i
    for (int t = 0; t < 10; ++t) {
      int n = 4, p = rng.int_in(1, 3);
      DoubleForm th = random_form(rng, n, p, 0, EX);
      DoubleForm expect(n, p - 1, 1, EX);
      for (int i = 1; i <= n; ++i) {
        DoubleForm ei = basis(n, bit_of(i), 0);
        DoubleForm ins = interior(ei, th);
        for (const auto& [k, v] : ins.entries())
          expect.add_entry(k.left, bit_of(i), v);
      }
      CHECK(adjoint_bianchi_sum(th) == expect);
    }
  }
  SECTION("adjointness against the inner product") {
    for (int t = 0; t < 20; ++t) {
      int p = rng.int_in(0, 2), q = rng.int_in(1, 2);
      DoubleForm w = random_form(rng, 4, p, q, EX);
      DoubleForm tau = random_form(rng, 4, p + 1, q - 1, EX);
      CHECK(inner(bianchi_sum(w), tau) ==
            inner(w, adjoint_bianchi_sum(tau)));
    }
  }
  SECTION("commutation with metric multiplication and contraction") {
    for (int t = 0; t < 20; ++t) {
      int p = rng.int_in(0, 2), q = rng.int_in(1, 2), r = rng.int_in(1, 2);
      DoubleForm w = random_form(rng, 5, p, q, EX);
      DoubleForm gr = metric_power(5, r, EX);
      CHECK(bianchi_sum(wedge(gr, w)) == wedge(gr, bianchi_sum(w)));
      if (p >= 1)
        CHECK(bianchi_sum(contract(w)) == contract(bianchi_sum(w)));
    }
  }
}

TEST_CASE("orthogonal decomposition", "[composition]") {
  Rng rng(7);
  SECTION("pure metric powers decompose trivially") {
    for (int n = 3; n <= 5; ++n)
      for (int p = 1; 2 * p <= n; ++p) {
        auto dec = orthogonal_decompose(metric_power(n, p, EX));
        CHECK(dec.components[0] == DoubleForm::constant(n, Scalar::exact(1)));
        for (int i = 1; i <= p; ++i) CHECK(dec.components[i].is_zero());
      }
  }
  SECTION("random square forms reconstruct with trace-free components") {
    for (int n : {4, 5}) {
      for (int t = 0; t < 25; ++t) {
        DoubleForm w = random_form(rng, n, 2, 2, EX);
        auto dec = orthogonal_decompose(w);
        CHECK(dec.reconstruction == w);
        DoubleForm rec(n, 2, 2, EX);
        for (int i = 0; i <= 2; ++i) {
          if (i >= 1) CHECK(contract(dec.components[i]).is_zero());
          rec += wedge(metric_power(n, 2 - i, EX), dec.components[i]);
        }
        CHECK(rec == w);
      }
    }
  }
  SECTION("first Bianchi inputs give first Bianchi components") {
    for (int t = 0; t < 10; ++t) {
      DoubleForm h = random_symmetric_one_one(rng, 4, EX);
      auto dec = orthogonal_decompose(wedge(h, h));
      for (const auto& comp : dec.components)
        CHECK(bianchi_sum(comp).is_zero());
    }
  }
  SECTION("decomposition is idempotent") {
    DoubleForm w = random_form(rng, 4, 2, 2, EX);
    auto dec = orthogonal_decompose(w);
    auto dec2 = orthogonal_decompose(dec.reconstruction);
    for (int i = 0; i <= 2; ++i)
      CHECK(dec.components[i] == dec2.components[i]);
  }
  SECTION("n < 2p forces vanishing upper components") {
    // structurally valid input: g^2 times a trace-free symmetric (1,1)
    DoubleForm h = random_symmetric_one_one(rng, 4, EX);
    DoubleForm tf =
        h - metric(4, EX) * (contract(h).scalar_value() / Scalar::exact(4));
    DoubleForm w = wedge(metric_power(4, 2, EX), tf) +
                   wedge(metric_power(4, 3, EX),
                         DoubleForm::constant(4, Scalar::exact(5)));
    auto dec = orthogonal_decompose(w);
    CHECK(dec.reconstruction == w);
    CHECK(dec.components[1] == tf);
    CHECK(dec.components[2].is_zero());
    CHECK(dec.components[3].is_zero());
  }
  SECTION("every (3,3) form in dimension 4 decomposes with a zero tail") {
    for (int t = 0; t < 8; ++t) {
      DoubleForm w = random_form(rng, 4, 3, 3, EX);
      auto dec = orthogonal_decompose(w);
      CHECK(dec.reconstruction == w);
      CHECK(dec.components[2].is_zero());
      CHECK(dec.components[3].is_zero());
    }
  }
  SECTION("mode and degree guards") {
    CHECK_THROWS_AS(
        orthogonal_decompose(random_form(rng, 4, 2, 2, ScalarMode::Float64)),
        ModeError);
    CHECK_THROWS_AS(orthogonal_decompose(random_form(rng, 4, 2, 1, EX)),
                    DegreeError);
  }
}

TEST_CASE("metric multiplication kernel reports", "[composition]") {
  Rng rng(11);
  SECTION("below the critical degree a nonzero form survives") {
    for (int t = 0; t < 20; ++t) {
      DoubleForm w = random_form(rng, 4, 1, 1, EX);
      if (w.is_zero()) continue;
      auto rep = gk_kernel_check(w, 1);
      CHECK_FALSE(rep.product_vanishes);
      CHECK(rep.consistent);
    }
  }
  SECTION("at the critical degree only the contraction dies") {
    // n = 2: w = e^1 x e^2 - e^2 x e^1 has g.w = 0 and c(w) = 0
    DoubleForm w =
        basis(2, bit_of(1), bit_of(2)) - basis(2, bit_of(2), bit_of(1));
    CHECK(wedge(metric(2, EX), w).is_zero());
    CHECK(contract(w).is_zero());
    auto rep = gk_kernel_check(w, 1);
    CHECK(rep.product_vanishes);
    CHECK_FALSE(rep.is_zero_forced);
    REQUIRE(rep.contraction_order_forced.has_value());
    CHECK(*rep.contraction_order_forced == 1);
    CHECK(rep.consistent);
  }
  SECTION("zero input is trivially consistent") {
    auto rep = gk_kernel_check(DoubleForm(4, 1, 1, EX), 2);
    CHECK(rep.product_vanishes);
    CHECK(rep.is_zero_forced);
    CHECK(rep.consistent);
  }
}

TEST_CASE("norm expansion of metric multiplication", "[composition]") {
  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    int n = 4, p = rng.int_in(0, 2), q = rng.int_in(0, 2),
        k = rng.int_in(1, 2);
    DoubleForm w = random_form(rng, n, p, q, EX);
    auto fact = [](int j) {
      long f = 1;
      for (int i = 2; i <= j; ++i) f *= i;
      return Scalar::exact(f);
    };
    Scalar lhs = norm_sq(wedge(metric_power(n, k, EX), w)) / fact(k);
    Scalar rhs = norm_sq(contract_power(w, k)) / fact(k);
    for (int r = 1; r <= k; ++r) {
      long binom = 1;
      for (int i = 1; i <= r; ++i) binom = binom * (k - i + 1) / i;
      Scalar coeff = Scalar::exact(binom);
      for (int i = 0; i < r; ++i) coeff *= Scalar::exact(n - p - q - i);
      rhs += coeff * norm_sq(contract_power(w, k - r)) / fact(k - r);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("decomposition serialization round trip", "[composition][io]") {
  Rng rng(17);
  DoubleForm w = random_form(rng, 4, 2, 2, EX);
  auto dec = orthogonal_decompose(w);
  std::stringstream ss;
  write_decomposition(ss, dec);
  auto back = read_decomposition(ss);
  REQUIRE(back.components.size() == dec.components.size());
  for (std::size_t i = 0; i < dec.components.size(); ++i)
    CHECK(back.components[i] == dec.components[i]);
  CHECK(back.reconstruction == w);
}
