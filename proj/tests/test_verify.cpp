#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaff/verify.hpp"

using namespace qaff;

namespace {

const Check* findCheck(const Report& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

void requireAllPass(const Report& rep) {
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("scalar and base suites pass") {
  Report s = scalarsSuite();
  requireAllPass(s);
  CHECK(s.checks.size() == 2);
  requireAllPass(baseHopfSuite());
}

TEST_CASE("braiding suite passes symbolically") {
  Report rep = braidingSuite(Mu::sym(), 99);
  requireAllPass(rep);
  CHECK(findCheck(rep, "braid-equation") != nullptr);
  CHECK(findCheck(rep, "braid-word-independence") != nullptr);
  CHECK(findCheck(rep, "braid-kernel-ideal") != nullptr);
}

TEST_CASE("braided algebras suite passes symbolically") {
  Report rep = braidedAlgebrasSuite(Mu::sym(), 99);
  requireAllPass(rep);
  CHECK(findCheck(rep, "symalg-image-kernel-split") != nullptr);
  CHECK(findCheck(rep, "symalg-quadratic-generation") != nullptr);
  const Check* rev = findCheck(rep, "symalg-reversal-involution-measured");
  REQUIRE(rev != nullptr);
  CHECK(rev->value == "quotient=twisted tensor=twisted");
}

TEST_CASE("affine suite passes symbolically") {
  Report rep = affineHopfSuite(Mu::sym(), 99);
  requireAllPass(rep);
  CHECK(findCheck(rep, "coproduct-coassociative") != nullptr);
  CHECK(findCheck(rep, "affine-coproduct-two-route") != nullptr);
}

TEST_CASE("fibration suite passes symbolically") {
  Report rep = hopfFibrationSuite(Mu::sym(), 99);
  requireAllPass(rep);
  CHECK(findCheck(rep, "bundle-product-confluence") != nullptr);
  CHECK(findCheck(rep, "translation-op-coaction-identity") != nullptr);
  CHECK(findCheck(rep, "sigma-route-agreement") != nullptr);
}

TEST_CASE("connections suite passes symbolically") {
  Report rep = connectionsSuite(Mu::sym(), 99);
  requireAllPass(rep);
  const Check* up = findCheck(rep, "upsilon-rank-frame");
  REQUIRE(up != nullptr);
  CHECK(up->value == "15");
  CHECK(findCheck(rep, "curvature-closed-form") != nullptr);
  CHECK(findCheck(rep, "translaton-multiplicative") != nullptr);
  CHECK(findCheck(rep, "frame-mixing(e+,e-)") != nullptr);
}

TEST_CASE("every suite passes at the degenerate parameter") {
  Mu minusOne = Mu::at(-1);
  for (const std::string& name : librarySuiteNames()) {
    Report rep = runLibrarySuite(name, minusOne, 3);
    INFO("suite ", name);
    requireAllPass(rep);
  }
  Report conn = connectionsSuite(minusOne, 3);
  const Check* up = findCheck(conn, "upsilon-rank-frame");
  REQUIRE(up != nullptr);
  CHECK(up->value == "3");
  CHECK(findCheck(conn, "gamma-integer-degenerate") != nullptr);
}

TEST_CASE("suite registry dispatches and rejects unknown names") {
  CHECK(librarySuiteNames().size() == 7);
  CHECK_THROWS_AS(runLibrarySuite("nope", Mu::sym(), 3),
                  std::invalid_argument);
}
