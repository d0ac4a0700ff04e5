#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaff/su2.hpp"

using namespace qaff;

namespace {

Scalar mu(int k) { return Scalar::muPow(Mu::sym(), k); }

SU2Element scaled(const SU2Element& x, const Scalar& c) {
  SU2Element out;
  addMonoScaled(out, x, c);
  return out;
}

}  // namespace

TEST_CASE("defining relations") {
  SU2Alg B(Mu::sym());
  auto al = B.alpha(), as = B.alphaStar(), g = B.gamma(), gs = B.gammaStar();
  CHECK(subSU2(B.mul(g, al), scaled(B.mul(al, g), mu(-1))).empty());
  CHECK(subSU2(B.mul(gs, al), scaled(B.mul(al, gs), mu(-1))).empty());
  CHECK(subSU2(B.mul(g, as), scaled(B.mul(as, g), mu(1))).empty());
  CHECK(subSU2(B.mul(gs, as), scaled(B.mul(as, gs), mu(1))).empty());
  CHECK(subSU2(B.mul(g, gs), B.mul(gs, g)).empty());

  SU2Element ggs = B.mul(g, gs);
  SU2Element lhs = B.mul(al, as);
  SU2Element rhs = subSU2(B.unit(), scaled(ggs, mu(2)));
  CHECK(subSU2(lhs, rhs).empty());
  CHECK(subSU2(B.mul(as, al), subSU2(B.unit(), ggs)).empty());
}

TEST_CASE("mixed power expansions match the frozen oracles") {
  SU2Alg B(Mu::sym());
  auto al = B.alpha(), as = B.alphaStar();
  SU2Element a2 = B.mul(al, al), as2 = B.mul(as, as);
  // alpha^2 alpha*^2 = 1 - (mu^2+mu^4) g gs + mu^6 g^2 gs^2
  SU2Element lhs = B.mul(a2, as2);
  SU2Element expect;
  addMono(expect, SU2Mono{0, 0, 0}, Scalar::one());
  addMono(expect, SU2Mono{0, 1, 1}, -(mu(2) + mu(4)));
  addMono(expect, SU2Mono{0, 2, 2}, mu(6));
  CHECK(subSU2(lhs, expect).empty());
  // alpha*^2 alpha^2 = 1 - (1+1/mu^2) g gs + (1/mu^2) g^2 gs^2
  SU2Element lhs2 = B.mul(as2, a2);
  SU2Element expect2;
  addMono(expect2, SU2Mono{0, 0, 0}, Scalar::one());
  addMono(expect2, SU2Mono{0, 1, 1}, -(Scalar::one() + mu(-2)));
  addMono(expect2, SU2Mono{0, 2, 2}, mu(-2));
  CHECK(subSU2(lhs2, expect2).empty());
}

TEST_CASE("associativity on mixed monomials") {
  SU2Alg B(Mu::sym());
  auto monos = B.monosUpToDegree(2);
  for (const auto& x : monos)
    for (const auto& y : monos)
      for (const auto& z : monos) {
        SU2Element lhs = B.mul(B.mul(B.of(x), B.of(y)), B.of(z));
        SU2Element rhs = B.mul(B.of(x), B.mul(B.of(y), B.of(z)));
        CHECK(subSU2(lhs, rhs).empty());
      }
}

TEST_CASE("star structure") {
  SU2Alg B(Mu::sym());
  auto monos = B.monosUpToDegree(4);
  for (const auto& k : monos) {
    // involution
    CHECK(subSU2(B.star(B.star(B.of(k))), B.of(k)).empty());
  }
  // antihomomorphism on degree-2 pairs
  auto small = B.monosUpToDegree(2);
  for (const auto& x : small)
    for (const auto& y : small) {
      SU2Element lhs = B.star(B.mul(B.of(x), B.of(y)));
      SU2Element rhs = B.mul(B.star(B.of(y)), B.star(B.of(x)));
      CHECK(subSU2(lhs, rhs).empty());
    }
  // (alpha gamma)* = gamma* alpha* = mu alpha* gamma*
  SU2Element lhs = B.star(B.mul(B.alpha(), B.gamma()));
  CHECK(subSU2(lhs, scaled(B.mul(B.alphaStar(), B.gammaStar()), mu(1))).empty());
}

TEST_CASE("weights add and the projection is multiplicative") {
  SU2Alg B(Mu::sym());
  auto small = B.monosUpToDegree(2);
  for (const auto& x : small)
    for (const auto& y : small) {
      for (const auto& [k, c] : B.mul(B.of(x), B.of(y))) {
        (void)c;
        CHECK(k.weight() == x.weight() + y.weight());
      }
      BaseElement lhs = B.project(B.mul(B.of(x), B.of(y)));
      BaseElement rhs = B.project(B.of(x)) * B.project(B.of(y));
      CHECK(lhs == rhs);
      CHECK(B.counit(B.mul(B.of(x), B.of(y))) ==
            B.counit(B.of(x)) * B.counit(B.of(y)));
    }
}

TEST_CASE("coaction matches the coproduct composed with the projection") {
  SU2Alg B(Mu::sym());
  // Pinned generator coproducts, as (left, right) monomial pairs.
  struct Pair {
    SU2Mono l;
    SU2Mono r;
    Scalar c;
  };
  auto checkGen = [&](const SU2Mono& x, const std::vector<Pair>& cop) {
    // (id (x) project) of the coproduct must equal x (x) U^{weight(x)}.
    std::map<std::pair<SU2Mono, Grouplike>, Scalar> img;
    for (const auto& t : cop) {
      BaseElement p = B.project(B.of(t.r));
      for (const auto& [g, c] : p.terms()) {
        auto key = std::make_pair(t.l, g);
        img[key] += t.c * c;
        if (img[key].isZero()) img.erase(key);
      }
    }
    std::map<std::pair<SU2Mono, Grouplike>, Scalar> expect;
    expect[{x, Grouplike::U(x.weight())}] = Scalar::one();
    CHECK(img == expect);
  };
  SU2Mono al{1, 0, 0}, as{-1, 0, 0}, g{0, 1, 0}, gs{0, 0, 1};
  checkGen(al, {{al, al, Scalar::one()}, {gs, g, -mu(1)}});
  checkGen(g, {{g, al, Scalar::one()}, {as, g, Scalar::one()}});
  checkGen(gs, {{al, gs, Scalar::one()}, {gs, as, Scalar::one()}});
  checkGen(as, {{as, as, Scalar::one()}, {g, gs, -mu(1)}});
}

TEST_CASE("specialized parameter") {
  SU2Alg B(Mu::at(mpq_class(1, 2)));
  SU2Element lhs = B.mul(B.alpha(), B.alphaStar());
  SU2Element expect;
  addMono(expect, SU2Mono{0, 0, 0}, Scalar::one());
  addMono(expect, SU2Mono{0, 1, 1}, Scalar::ofRat(mpq_class(-1, 4)));
  CHECK(subSU2(lhs, expect).empty());
}
