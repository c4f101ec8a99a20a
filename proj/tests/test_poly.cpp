#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("rationals stay reduced with a positive denominator") {
  const Rational r(Integer(6), Integer(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational::parse("-10/4") == Rational(Integer(-5), Integer(2)));
  CHECK_THROWS(Rational(Integer(1), Integer(0)));
  CHECK_THROWS(Rational().inverse());
}

TEST_CASE("rational arithmetic laws on random triples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> v(-50, 50), w(1, 30);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a(Integer(v(rng)), Integer(w(rng)));
    const Rational b(Integer(v(rng)), Integer(w(rng)));
    const Rational c(Integer(v(rng)), Integer(w(rng)));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("zero polynomial has degree minus infinity") {
  const Poly zero;
  CHECK(zero.degree().is_minus_infinity());
  CHECK_THROWS_AS(static_cast<void>(zero.deg()), std::domain_error);
  CHECK(zero.degree() < Poly::constant(3).degree());
  CHECK(Poly({1, 2, 0, 0}).deg() == 1);
}

TEST_CASE("rendering") {
  CHECK(P("x^4 - 10*x^2 + 1").to_string() == "x^4 - 10*x^2 + 1");
  CHECK(Poly().to_string() == "0");
  CHECK(Poly({Rational(Integer(-1), Integer(2)), 0, 3}).to_string() == "3*x^2 - 1/2");
  CHECK(P("-x").to_string() == "-x");
}

TEST_CASE("formal derivative") {
  CHECK(formal_derivative(P("x^2 - 2")) == P("2*x"));
  CHECK(formal_derivative(Poly::constant(5)).is_zero());
  CHECK(formal_derivative(P("x^3 + x + 1")) == P("3*x^2 + 1"));
}

TEST_CASE("gcd") {
  CHECK(poly_gcd(P("x^2 - 1"), P("x - 1")) == P("x - 1"));
  CHECK(poly_gcd(P("3*x^2 - 3"), Poly()) == P("x^2 - 1"));
  CHECK(poly_gcd(P("x^2 - 2"), P("2*x")) == Poly::constant(1));
  CHECK_THROWS_WITH(poly_gcd(Poly(), Poly()), "gcd of zero polynomials undefined");

  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly common = random_poly(rng, 2, 4);
    const Poly a = random_poly(rng, 4, 6) * common;
    const Poly b = random_poly(rng, 4, 6) * common;
    const Poly g = poly_gcd(a, b);
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    CHECK(divides(common.monic(), g));
    const ExtendedGcd e = extended_gcd(a, b);
    CHECK(e.gcd == g);
    CHECK(e.s * a + e.t * b == g);
  }
}

TEST_CASE("separability") {
  CHECK(is_separable(P("x^2 - 2")));
  CHECK_FALSE(is_separable(P("x^2 - 2*x + 1")));
  CHECK(is_separable(Poly::x()));
  CHECK_THROWS_WITH(is_separable(Poly::constant(4)), "separability undefined for constants");
}

TEST_CASE("separable exactly when the splitting field holds deg p distinct roots") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> shift(-3, 3);
  int separable_seen = 0, inseparable_seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = random_poly(rng, trial % 3 == 0 ? 2 : 4, 4);
    if (trial % 3 == 0) {
      const Poly linear = from_ints({shift(rng), 1});
      p = p * linear * linear;
    }
    const SplittingField sf = splitting_field(p);
    const bool distinct_roots = sf.roots.size() == p.deg();
    CHECK(is_separable(p) == distinct_roots);
    ++(distinct_roots ? separable_seen : inseparable_seen);
  }
  CHECK(separable_seen > 0);
  CHECK(inseparable_seen > 0);
}

TEST_CASE("resultant against the Sylvester determinant") {
  CHECK(resultant(P("x - 2"), P("x - 3")) == Rational(-1));
  CHECK(resultant(P("x^2 - 1"), P("x")) == Rational(-1));
  CHECK(resultant(P("x^3 + 2*x + 7"), Poly::constant(1)) == Rational(1));
  CHECK_THROWS(resultant(Poly(), P("x")));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    Poly a = random_poly(rng, 5, 5);
    Poly b = random_poly(rng, 5, 5);
    if (trial % 4 == 0) {
      const Poly shared = random_poly(rng, 1, 3);
      a = a * shared;
      b = b * shared;
      if (a.deg() > 5 || b.deg() > 5) continue;
    }
    const Rational r = resultant(a, b);
    CHECK(r == sylvester_resultant(a, b));
    CHECK(r.is_zero() == (poly_gcd(a, b).deg() >= 1));
  }
}

TEST_CASE("factorization examples") {
  const Factorization f = factor_rationals(P("x^4 - 1"));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0].factor == P("x - 1"));
  CHECK(f.factors[1].factor == P("x + 1"));
  CHECK(f.factors[2].factor == P("x^2 + 1"));
  CHECK(f.unit == Rational(1));

  const Factorization g = factor_rationals(P("x^2 + 1"));
  CHECK(g.is_irreducible());

  const Factorization c = factor_rationals(Poly::constant(6));
  CHECK(c.unit == Rational(6));
  CHECK(c.factors.empty());
  CHECK_THROWS(factor_rationals(Poly()));

  const Factorization m = factor_rationals(P("(2/3)*(x-1)^3*(x^2+1)^2"));
  CHECK(m.unit == Rational(Integer(2), Integer(3)));
  REQUIRE(m.factors.size() == 2);
  CHECK(m.factors[0].multiplicity == 3);
  CHECK(m.factors[1].multiplicity == 2);
}

TEST_CASE("hard factorization cases") {
  // Swinnerton-Dyer style: reducible modulo every prime.
  CHECK(is_irreducible(P("x^4 - 10*x^2 + 1")));
  CHECK(is_irreducible(P("x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576")));
  CHECK(is_irreducible(P("x^4 + 1")));
  const Poly cyclotomic_product = P("(x^4+x^3+x^2+x+1)*(x^2+x+1)*(x^6+x^5+x^4+x^3+x^2+x+1)");
  const Factorization f = factor_rationals(cyclotomic_product);
  CHECK(f.factors.size() == 3);
  CHECK(f.expand() == cyclotomic_product);
}

TEST_CASE("factorization round trip with independent irreducibility certificates") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    Poly p = random_poly(rng, 4, 9);
    if (trial % 2 == 0) p = p * random_poly(rng, 4, 9);
    const Factorization f = factor_rationals(p);
    CHECK(f.expand() == p);
    for (const auto& fp : f.factors) {
      CHECK(fp.factor.is_monic());
      CHECK(certified_irreducible(fp.factor));
    }
  }
}

TEST_CASE("squarefree decomposition") {
  const Poly p = P("(x-1)*(x+2)^2*(x^2+1)^3");
  const auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == P("x - 1"));
  CHECK(parts[1] == P("x + 2"));
  CHECK(parts[2] == P("x^2 + 1"));
  CHECK(squarefree_part(p) == P("(x-1)*(x+2)*(x^2+1)"));
}
