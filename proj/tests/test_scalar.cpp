/*
 * Exact Q(mu) arithmetic: canonical forms, field axioms on samples,
 * specialization, and pole behavior.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaff/scalar.hpp"

using namespace qaff;

namespace {
Scalar sym_mu(long k) { return Scalar::muPow(Mu::sym(), k); }
}  // namespace

TEST_CASE("polynomial ring basics") {
  Poly a = Poly::mu(2) + Poly(1);       // mu^2 + 1
  Poly b = Poly::mu(2) - Poly(1);       // mu^2 - 1
  Poly p = a * b;                       // mu^4 - 1
  CHECK(p == Poly::mu(4) - Poly(1));
  CHECK((a - a).isZero());
  CHECK(p.degree() == 4);
  CHECK(p.evalAt(mpq_class(2)) == mpq_class(15));
  CHECK(Poly::gcd(p, b) == b);
  CHECK(Poly::divExact(p, a) == b);
  CHECK(Poly::gcd(Poly(4), Poly(6)) == Poly(2));
  CHECK((-a).str() == "-mu^2-1");
  CHECK(p.str() == "mu^4-1");
}

TEST_CASE("canonical fraction reduction") {
  // (1 - mu^-4) / (1 - mu^-2) -> (mu^2+1)/mu^2
  Scalar one = Scalar::one();
  Scalar lhs = (one - sym_mu(-4)) / (one - sym_mu(-2));
  Scalar expect = Scalar::fromPolys(Poly::mu(2) + Poly(1), Poly::mu(2));
  CHECK(lhs == expect);
  CHECK(lhs.str() == "(mu^2+1)/(mu^2)");

  // additive inverse and multiplicative identity
  Scalar a = one - sym_mu(2);
  Scalar b = sym_mu(2) - one;
  CHECK((a + b).isZero());
  CHECK(a * one == a);

  // canonicalization fixes denominator sign
  Scalar c = Scalar::fromPolys(Poly(1), Poly(1) - Poly::mu(2));
  Scalar d = Scalar::fromPolys(Poly(-1), Poly::mu(2) - Poly(1));
  CHECK(c == d);
}

TEST_CASE("field axioms on a sample set") {
  std::vector<Scalar> samples = {
      Scalar(), Scalar::one(), sym_mu(1), sym_mu(-2),
      Scalar::one() - sym_mu(2),
      Scalar::fromPolys(Poly::mu(3), Poly(1) - Poly::mu(2)),
      Scalar::ofRat(mpq_class(-3, 7))};
  for (const auto& x : samples)
    for (const auto& y : samples)
      for (const auto& z : samples) {
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
  for (const auto& x : samples) {
    CHECK(x + Scalar() == x);
    CHECK(x * Scalar::one() == x);
    CHECK((x - x).isZero());
    if (!x.isZero()) CHECK(x / x == Scalar::one());
  }
}

TEST_CASE("evaluation is a field homomorphism away from poles") {
  Scalar w = Scalar::fromPolys(Poly::mu(3), Poly(1) - Poly::mu(2));  // mu^3/(1-mu^2)
  CHECK(w.evalAt(mpq_class(1, 2)) == mpq_class(1, 6));
  CHECK_THROWS_AS(w.evalAt(mpq_class(-1)), PoleError);
  CHECK_THROWS_AS(w.evalAt(mpq_class(1)), PoleError);

  Scalar a = Scalar::one() - sym_mu(-4);
  Scalar b = sym_mu(2) + Scalar::ofInt(3);
  mpq_class at(3, 5);
  CHECK((a + b).evalAt(at) == a.evalAt(at) + b.evalAt(at));
  CHECK((a * b).evalAt(at) == a.evalAt(at) * b.evalAt(at));
}

TEST_CASE("division by the zero scalar raises") {
  CHECK_THROWS_AS(Scalar::one() / Scalar(), PoleError);
  CHECK_THROWS_AS(Scalar::fromPolys(Poly(1), Poly()), PoleError);
}

TEST_CASE("specialized mode builds constants at construction") {
  Mu half = Mu::at(mpq_class(1, 2));
  Scalar m2 = Scalar::muPow(half, 2);
  CHECK(m2 == Scalar::ofRat(mpq_class(1, 4)));
  Scalar mneg = Scalar::muPow(half, -3);
  CHECK(mneg == Scalar::ofInt(8));

  Mu minus = Mu::at(mpq_class(-1));
  CHECK(Scalar::muPow(minus, 2) == Scalar::one());
  CHECK(Scalar::muPow(minus, 3) == Scalar::ofInt(-1));
  CHECK_THROWS_AS(Mu::at(mpq_class(0)), InvariantViolation);
}
