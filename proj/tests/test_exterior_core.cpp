#include <catch2/catch_amalgamated.hpp>

#include "dforms/exterior.hpp"
#include "dforms/io.hpp"
#include "dforms/rng.hpp"

using namespace dforms;

namespace {
const ScalarMode EX = ScalarMode::Exact;

DoubleForm basis(int n, IndexMask l, IndexMask r) {
  return DoubleForm::basis_element(n, l, r, Scalar::exact(1));
}
}  // namespace

TEST_CASE("scalar arithmetic stays exact and canonical", "[scalar]") {
  Scalar a = Scalar::exact(3, 7);
  Scalar b = Scalar::exact(-2, 14);  // not canonical as written
  CHECK((a + b).str() == "2/7");
  CHECK((a * b).str() == "-3/49");
  CHECK((a / b) == Scalar::exact(-3));
  CHECK(Scalar::exact(0).is_zero());
  CHECK_THROWS_AS(a / Scalar::exact(0), std::domain_error);
  CHECK_THROWS_AS(Scalar::exact(1, 0), std::domain_error);

  SECTION("modes never mix silently") {
    CHECK_THROWS_AS(a + Scalar::real(0.5), ModeError);
    CHECK_THROWS_AS(a == Scalar::real(0.5), ModeError);
    CHECK_THROWS_AS(Scalar::real(1.0).rational(), ModeError);
  }

  SECTION("text round trip") {
    CHECK(Scalar::parse("-22/7", EX) == Scalar::exact(-22, 7));
    CHECK(Scalar::parse(Scalar::exact(355, -113).str(), EX) ==
          Scalar::exact(-355, 113));
    CHECK_THROWS_AS(Scalar::parse("x/y", EX), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1/0", EX), std::invalid_argument);
    Scalar f = Scalar::real(0.1 + 0.2);
    CHECK(Scalar::parse(f.str(), ScalarMode::Float64) == f);
  }
}

TEST_CASE("multi-index validation", "[multi_index]") {
  CHECK(MultiIndex({1, 3, 4}, 5).mask() == (bit_of(1) | bit_of(3) | bit_of(4)));
  CHECK(MultiIndex({}, 5).degree() == 0);
  CHECK_THROWS_AS(MultiIndex({3, 1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({1, 1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({1, 6}, 5), std::invalid_argument);
  CHECK(basis_masks(4, 2).size() == 6);
  CHECK(basis_masks(4, 0).size() == 1);
  CHECK(basis_masks(4, 5).empty());
}

TEST_CASE("metric powers", "[exterior]") {
  CHECK(metric(2, EX) ==
        basis(2, bit_of(1), bit_of(1)) + basis(2, bit_of(2), bit_of(2)));
  // g^2 in dimension 2 is 2 (e^1^e^2)(x)(e^1^e^2)
  DoubleForm g2 = metric_power(2, 2, EX);
  CHECK(g2 == basis(2, 3, 3) * Scalar::exact(2));
  CHECK(wedge(metric(2, EX), metric(2, EX)) == g2);

  SECTION("norms match n! p! / (n-p)!") {
    CHECK(inner(metric_power(3, 2, EX), metric_power(3, 2, EX)) ==
          Scalar::exact(12));
    CHECK(inner(metric(3, EX), metric_power(3, 2, EX)).is_zero());
    for (int n = 2; n <= 5; ++n)
      for (int p = 0; p <= n; ++p) {
        long expect = 1;
        for (int i = 0; i < p; ++i) expect *= n - i;
        for (int i = 2; i <= p; ++i) expect *= i;
        CHECK(inner(metric_power(n, p, EX), metric_power(n, p, EX)) ==
              Scalar::exact(expect));
      }
  }

  SECTION("degrees out of range give the zero form") {
    CHECK(metric_power(3, 4, EX).is_zero());
    CHECK(metric_power(3, -1, EX).is_zero());
    CHECK(metric_power(3, 0, EX) == DoubleForm::constant(3, Scalar::exact(1)));
  }
}

TEST_CASE("exterior product", "[exterior]") {
  DoubleForm a = basis(2, bit_of(1), bit_of(2));
  DoubleForm b = basis(2, bit_of(2), bit_of(1));
  CHECK(wedge(a, b) == basis(2, 3, 3) * Scalar::exact(-1));
  CHECK(wedge(DoubleForm::constant(3, Scalar::exact(1)), metric(3, EX)) ==
        metric(3, EX));
  CHECK_THROWS_AS(wedge(metric(2, EX), metric(3, EX)), DimensionError);

  Rng rng(11);
  SECTION("graded commutativity and associativity") {
    for (int t = 0; t < 30; ++t) {
      int n = 4;
      int p = rng.int_in(0, 2), q = rng.int_in(0, 2);
      int r = rng.int_in(0, 2), s = rng.int_in(0, 2);
      DoubleForm x = random_form(rng, n, p, q, EX);
      DoubleForm y = random_form(rng, n, r, s, EX);
      DoubleForm z = random_form(rng, n, rng.int_in(0, 1), rng.int_in(0, 1),
                                 EX);
      int sign = (p * r + q * s) % 2 ? -1 : 1;
      CHECK(wedge(x, y) == wedge(y, x) * Scalar::exact(sign));
      CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
    }
  }
}

TEST_CASE("interior product is the wedge adjoint", "[exterior]") {
  // single-slot insertion: i_{e^1 x 1}((e^1^e^2) x e^3) = e^2 x e^3
  DoubleForm w = basis(3, bit_of(1) | bit_of(2), bit_of(3));
  DoubleForm a = basis(3, bit_of(1), 0);
  CHECK(interior(a, w) == basis(3, bit_of(2), bit_of(3)));

  SECTION("interior by g is the contraction") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
      DoubleForm x = random_form(rng, 4, rng.int_in(1, 3), rng.int_in(1, 3),
                                 EX);
      CHECK(interior(metric(4, EX), x) == contract(x));
    }
  }

  SECTION("exact adjointness over all basis pairs, n = 4") {
    Rng rng(7);
    for (int t = 0; t < 25; ++t) {
      int p = rng.int_in(0, 2), q = rng.int_in(0, 2);
      int ap = rng.int_in(0, p), aq = rng.int_in(0, q);
      DoubleForm al = random_form(rng, 4, ap, aq, EX);
      DoubleForm x = random_form(rng, 4, p, q, EX);
      DoubleForm th = random_form(rng, 4, p - ap, q - aq, EX);
      CHECK(inner(interior(al, x), th) == inner(x, wedge(al, th)));
    }
  }

  SECTION("degree underflow gives the zero form") {
    CHECK(interior(w, a).is_zero());
  }
}

TEST_CASE("contraction", "[exterior]") {
  CHECK(contract(metric(4, EX)) == DoubleForm::constant(4, Scalar::exact(4)));
  CHECK(contract(metric_power(4, 2, EX)) == metric(4, EX) * Scalar::exact(6));
  CHECK(contract(DoubleForm::constant(4, Scalar::exact(3))).is_zero());

  SECTION("iterated contraction rule c(g^r w) = g^r c(w) + r(n-p-q-r+1) g^{r-1} w") {
    Rng rng(13);
    for (int t = 0; t < 20; ++t) {
      int n = 5, p = rng.int_in(0, 2), q = rng.int_in(0, 2),
          r = rng.int_in(1, 2);
      DoubleForm w = random_form(rng, n, p, q, EX);
      DoubleForm lhs = contract(wedge(metric_power(n, r, EX), w));
      DoubleForm rhs = wedge(metric_power(n, r, EX), contract(w)) +
                       wedge(metric_power(n, r - 1, EX), w) *
                           Scalar::exact(r * (n - p - q - r + 1));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("double hodge star", "[exterior]") {
  SECTION("unit volume form") {
    DoubleForm vol = metric_identity(3, 3, EX);
    CHECK(hodge_star(vol) == DoubleForm::constant(3, Scalar::exact(1)));
    CHECK(hodge_star(DoubleForm::constant(3, Scalar::exact(1))) == vol);
  }
  SECTION("star of the metric in dimension 2") {
    CHECK(hodge_star(metric(2, EX)) == metric(2, EX));
  }
  SECTION("involution sign sweep") {
    Rng rng(17);
    for (int n = 2; n <= 4; ++n)
      for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
          DoubleForm w = random_form(rng, n, p, q, EX);
          int s = (p * (n - p) + q * (n - q)) % 2 ? -1 : 1;
          CHECK(hodge_star(hodge_star(w)) == w * Scalar::exact(s));
        }
  }
  SECTION("star-conjugated interior identity, random") {
    Rng rng(19);
    for (int t = 0; t < 40; ++t) {
      int n = rng.int_in(2, 4);
      int p = rng.int_in(0, 2), q = rng.int_in(0, 2);
      int r = rng.int_in(0, 2), s = rng.int_in(0, 2);
      DoubleForm th = random_form(rng, n, p, q, EX);
      DoubleForm w = random_form(rng, n, r, s, EX);
      int e = n * (r + s - p - q) + r * (p + 1) + s * (q + 1);
      int sign = ((e % 2) + 2) % 2 ? -1 : 1;
      CHECK(hodge_star(wedge(th, hodge_star(w))) ==
            interior(th, w) * Scalar::exact(sign));
    }
  }
  SECTION("inner product through the star") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
      int n = 4, p = rng.int_in(0, 3), q = rng.int_in(0, 3);
      DoubleForm x = random_form(rng, n, p, q, EX);
      DoubleForm y = random_form(rng, n, p, q, EX);
      CHECK(hodge_star(wedge(x, hodge_star(y))).scalar_value() == inner(x, y));
    }
  }
}

TEST_CASE("transpose", "[exterior]") {
  CHECK(transpose(basis(3, bit_of(1), bit_of(2))) ==
        basis(3, bit_of(2), bit_of(1)));
  CHECK(transpose(metric(3, EX)) == metric(3, EX));
  Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    DoubleForm x = random_form(rng, 4, rng.int_in(0, 2), rng.int_in(0, 2), EX);
    DoubleForm y = random_form(rng, 4, rng.int_in(0, 2), rng.int_in(0, 2), EX);
    CHECK(transpose(transpose(x)) == x);
    CHECK(transpose(wedge(x, y)) == wedge(transpose(x), transpose(y)));
  }
}

TEST_CASE("rho inclusion of 2-forms", "[exterior]") {
  DoubleForm e12 = basis(3, bit_of(1) | bit_of(2), 0);
  CHECK(rho(e12) == basis(3, bit_of(1), bit_of(2)) -
                        basis(3, bit_of(2), bit_of(1)));
  CHECK(rho(DoubleForm(3, 2, 0, EX)).is_zero());
  CHECK_THROWS_AS(rho(metric(3, EX)), DegreeError);

  SECTION("norm doubling") {
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
      DoubleForm E = random_form(rng, 5, 2, 0, EX);
      CHECK(norm_sq(rho(E)) == Scalar::exact(2) * norm_sq(E));
    }
  }
  SECTION("rho_inverse undoes rho, and rejects non-skew input") {
    Rng rng(37);
    DoubleForm E = random_form(rng, 5, 2, 0, EX);
    CHECK(rho_inverse(rho(E)) == E);
    CHECK_THROWS_AS(rho_inverse(metric(5, EX)), std::invalid_argument);
  }
}

TEST_CASE("double form text serialization", "[io]") {
  Rng rng(41);
  SECTION("exact round trip is lossless") {
    for (int t = 0; t < 10; ++t) {
      DoubleForm w =
          random_form(rng, 4, rng.int_in(0, 3), rng.int_in(0, 3), EX, 0.6);
      CHECK(from_text(to_text(w)) == w);
    }
  }
  SECTION("float round trip at full precision") {
    DoubleForm w = random_form(rng, 3, 1, 2, ScalarMode::Float64);
    DoubleForm back = from_text(to_text(w));
    CHECK(back == w);
  }
  SECTION("parse errors carry line numbers") {
    try {
      from_text("3 1 1 exact\n1 | 2 | 1/2\n1,2 | 2 | 1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line_number == 3);
    }
    CHECK_THROWS_AS(from_text("3 1 1 nonsense\n"), ParseError);
    CHECK_THROWS_AS(from_text("3 1 1 exact\n1 | 2 | 1/2\n1 | 2 | 1\n"),
                    ParseError);  // duplicate entry
    CHECK_THROWS_AS(from_text("3 1 1 exact\n2,1 | 2 | 1\n"), ParseError);
  }
}
