#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "qaff/connections.hpp"
#include "qaff/linalg.hpp"

using namespace qaff;

namespace {

Scalar mu(int k) { return Scalar::muPow(Mu::sym(), k); }

Word powWord(int p, int q) {
  Word w;
  for (int i = 0; i < p; ++i) w.push_back(0);
  for (int j = 0; j < q; ++j) w.push_back(1);
  return w;
}

// xi^p xi*^q as an affine element: unit group leg, reduced symmetric word
// 0^p 1^q, coefficient mu^q from the star normal form.
AffComb powComb(const Mu& mode, int p, int q) {
  return AffComb{{AffKey{Grouplike::unit(), powWord(p, q)},
                  Scalar::muPow(mode, q)}};
}

AhElem scaleAh(const AhElem& x, const Scalar& c) {
  AhElem out;
  for (const auto& [k, v] : x) addInto(out, k, v * c);
  return out;
}

AhElem addAh(const AhElem& a, const AhElem& b) {
  AhElem out = a;
  for (const auto& [k, c] : b) addInto(out, k, c);
  return out;
}

AhElem subAh(const AhElem& a, const AhElem& b) {
  return addAh(a, scaleAh(b, Scalar::ofInt(-1)));
}

size_t rankOf(const std::vector<AhElem>& family) {
  std::map<AhKey, size_t> index;
  for (const auto& v : family)
    for (const auto& [k, c] : v) index.emplace(k, 0);
  size_t n = 0;
  for (auto& [k, i] : index) i = n++;
  if (n == 0) return 0;
  Span span(n);
  for (const auto& v : family) {
    Vec row(n, Scalar::ofInt(0));
    for (const auto& [k, c] : v) row[index.at(k)] = c;
    span.add(std::move(row));
  }
  return span.dim();
}

const Check* findCheck(const Report& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

struct Fixture {
  BundleAlg P{Mu::sym()};
  Germ rho{P, curvatureGermData(P)};
  Germ fr{P, frameGermData(P)};

  const AffineAlg& A() const { return P.affine(); }
  AffComb aU(long n) const { return P.affine().ofGroup(Grouplike::U(n)); }
  AffComb aXi() const {
    return P.affine().ofSym(LinComb{{Word{0}, Scalar::one()}});
  }
  AffComb aXiStar() const {
    return P.affine().ofSym(LinComb{{Word{1}, mu(1)}});
  }
  AffComb aPow(int p, int q) const { return powComb(Mu::sym(), p, q); }

  // c * (reduced exterior area form e+ e-)
  AhElem area(const Scalar& c) const {
    return P.ahOfExt(LinComb{{Word{0, 1}, c}});
  }
  AhElem unitAh() const {
    return P.ahOf(P.su2().unit(), LinComb{{Word{}, Scalar::one()}},
                  LinComb{{Word{}, Scalar::one()}});
  }
  AhElem bAh(const SU2Element& b) const {
    return P.ahOf(b, LinComb{{Word{}, Scalar::one()}},
                  LinComb{{Word{}, Scalar::one()}});
  }
  AhElem zetaGamma() const { return subAh(rho.piGroup(1), rho.piGroup(-1)); }
};

}  // namespace

TEST_CASE("curvature of group powers matches the closed form") {
  Fixture F;

  CHECK(F.rho.piGroup(0).empty());
  CHECK(F.rho.piGroup(1) == F.area(-mu(-1)));
  CHECK(F.rho.piGroup(-1) == F.area(mu(1)));

  CHECK(qInt(Mu::sym(), 0) == Scalar::ofInt(0));
  CHECK(qInt(Mu::sym(), 1) == Scalar::one());
  CHECK(qInt(Mu::sym(), 2) == Scalar::one() + mu(-2));
  CHECK(qInt(Mu::sym(), -1) == Scalar::ofInt(0) - mu(2));

  for (long n = -6; n <= 6; ++n) {
    if (n == 0) continue;
    CHECK(F.rho.piGroup(n) == scaleAh(F.rho.piGroup(1), qInt(Mu::sym(), n)));
  }
}

TEST_CASE("group curvature spans one dimension with a twist eigenvalue") {
  Fixture F;

  AhElem zg = F.zetaGamma();
  CHECK(zg == F.area(Scalar::ofInt(0) - mu(1) - mu(-1)));
  CHECK_FALSE(zg.empty());
  CHECK(F.P.circGroupAh(zg, 1) == scaleAh(zg, mu(-2)));

  std::vector<AhElem> family;
  for (long n = -6; n <= 6; ++n)
    if (n != 0) family.push_back(F.rho.piGroup(n));
  CHECK(rankOf(family) == 1);

  // The group relations that the curvature kernel encodes: U^n reduces to
  // the span of U and 1 with the integer-like coefficients.
  for (long n = -4; n <= 4; ++n) {
    AffComb x = F.aU(n);
    addAffScaled(x, F.aU(1), Scalar::ofInt(0) - qInt(Mu::sym(), n));
    addAffScaled(x, F.A().unit(), qInt(Mu::sym(), n) - Scalar::one());
    CHECK(F.rho.piTilde(x).empty());
  }
}

TEST_CASE("curvature scales each symmetric word by the area coefficient") {
  Fixture F;

  // Degree one, written out fully.
  AhElem xiWant;
  addInto(xiWant, AhKey{SU2Mono{}, Word{0, 1}, Word{0}}, mu(-1) + mu(-3));
  CHECK(F.rho.piTilde(F.aXi()) == xiWant);

  AhElem xiStarWant;
  addInto(xiStarWant, AhKey{SU2Mono{}, Word{0, 1}, Word{1}},
          Scalar::ofInt(0) - mu(2) - mu(4));
  CHECK(F.rho.piTilde(F.aXiStar()) == xiStarWant);

  // All mixed powers: a single term on the area form times the same
  // symmetric word, with an explicit product coefficient.
  Scalar wext = (Scalar::ofInt(0) - mu(1)) / (Scalar::one() - mu(2));
  for (int d = 1; d <= 8; ++d) {
    for (int p = 0; p <= d; ++p) {
      int q = d - p;
      AhElem want;
      addInto(want, AhKey{SU2Mono{}, Word{0, 1}, powWord(p, q)},
              areaCoeff(Mu::sym(), p, q) * mu(q) * wext);
      CHECK(F.rho.piTilde(F.aPow(p, q)) == want);
    }
  }
}

TEST_CASE("curvature is covariant for the adjoint coaction") {
  Fixture F;
  const AffineAlg& A = F.A();

  std::vector<AffComb> samples = {F.aU(1),  F.aU(-1),    F.aU(2),
                                  F.aXi(),  F.aXiStar(), A.mul(F.aXi(),
                                                               F.aXiStar())};
  for (const auto& a : samples) {
    AhAff lhs = F.P.coactAh(F.rho.piTilde(a));
    AhAff rhs;
    for (const auto& [pr, c] : A.adjoint(a)) {
      AhElem v = F.rho.piTilde(AffComb{{pr.first, Scalar::one()}});
      for (const auto& [k, cv] : v)
        addInto(rhs, std::make_pair(k, pr.second), c * cv);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("curvature intertwines star through the antipode") {
  Fixture F;
  const AffineAlg& A = F.A();

  std::vector<AffComb> samples = {F.aU(1),  F.aU(-1),    F.aU(2),
                                  F.aXi(),  F.aXiStar(), A.mul(F.aXi(),
                                                               F.aXiStar())};
  for (const auto& a : samples) {
    AhElem lhs = F.rho.piTilde(A.star(A.antipode(a)));
    AhElem rhs = scaleAh(F.P.ahStar(F.rho.piTilde(a)), Scalar::ofInt(-1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("curvature obeys the base module law") {
  Fixture F;
  const AffineAlg& A = F.A();

  std::vector<AffComb> lefts;
  {
    AffComb t = F.aU(1);
    addAffScaled(t, A.unit(), Scalar::ofInt(-1));
    lefts.push_back(t);
  }
  {
    AffComb t = F.aU(2);
    addAffScaled(t, A.unit(), Scalar::ofInt(-1));
    lefts.push_back(t);
  }
  lefts.push_back(F.aXi());

  struct Sample {
    AhElem value;
    AffComb shift;
  };
  std::vector<Sample> rights = {
      {F.bAh(F.P.su2().alpha()), F.aU(1)},
      {F.bAh(F.P.su2().gamma()), F.aU(1)},
      {F.P.ahOfExt(LinComb{{Word{0}, Scalar::one()}}), F.aU(2)},
  };

  for (const auto& a : lefts) {
    for (const auto& s : rights) {
      AhElem lhs = F.P.ahMul(F.rho.piTilde(a), s.value);
      AhElem rhs = F.P.ahMul(s.value, F.rho.piTilde(A.mul(a, s.shift)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("curvature turns right group multiplication into the circ action") {
  Fixture F;
  for (long n : {1L, -1L, 2L}) {
    AhElem lhs = F.rho.piTilde(F.A().mul(F.aXi(), F.aU(n)));
    AhElem rhs = F.P.circGroupAh(F.rho.piTilde(F.aXi()), n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("curvature values commute with weight-zero base elements") {
  Fixture F;

  std::vector<AhElem> values = {
      F.rho.piGroup(1),           F.zetaGamma(),
      F.rho.piTilde(F.aXi()),     F.rho.piTilde(F.aXiStar()),
      F.rho.piTilde(F.aPow(1, 1))};
  std::vector<SU2Mono> zs = {{0, 1, 1}, {1, 0, 1}, {-1, 1, 0}};
  for (const auto& z : zs) {
    AhElem zb = F.bAh(SU2Alg::of(z));
    for (const auto& v : values)
      CHECK(F.P.ahMul(v, zb) == F.P.ahMul(zb, v));
  }
}

TEST_CASE("module action routes agree on the commutant") {
  Fixture F;

  // Elements that commute with the base forms in each exterior degree:
  // on those the fold into reversal-and-coaction legs and the one-letter
  // peel give the same answer.
  std::vector<AhElem> values = {F.unitAh(),
                                F.rho.piGroup(1),
                                F.zetaGamma(),
                                F.rho.piTilde(F.aXi()),
                                F.fr.piLetter(0),
                                F.P.ahOfExt(LinComb{{Word{0},
                                                     Scalar::one()}})};
  std::vector<Word> words;
  for (int a = 0; a < 2; ++a) {
    words.push_back(Word{Word::value_type(a)});
    for (int b = 0; b < 2; ++b) {
      words.push_back(Word{Word::value_type(a), Word::value_type(b)});
      for (int c = 0; c < 2; ++c)
        words.push_back(
            Word{Word::value_type(a), Word::value_type(b),
                 Word::value_type(c)});
    }
  }
  for (const auto& v : values)
    for (const auto& w : words)
      CHECK(F.P.circWordAh(v, w) == F.P.circWordAhPeel(v, w));

  // Outside the commutant the two routes genuinely differ.
  AhElem alphaAh = F.bAh(F.P.su2().alpha());
  CHECK(F.P.circWordAh(alphaAh, Word{0, 1}) !=
        F.P.circWordAhPeel(alphaAh, Word{0, 1}));
}

TEST_CASE("vertical families fill the expected ranks") {
  Fixture F;

  // Frame-germ family: the group element at degree zero, then all mixed
  // powers per total degree.
  std::vector<AhElem> family{F.zetaGamma()};
  std::vector<size_t> expected = {3, 6, 10, 15};
  for (int d = 1; d <= 4; ++d) {
    for (int p = 0; p <= d; ++p)
      family.push_back(F.fr.piTilde(F.aPow(p, d - p)));
    CHECK(rankOf(family) == expected[d - 1]);
  }

  // Curvature family over group shifts: same rank profile.
  for (int N = 1; N <= 4; ++N) {
    std::vector<AhElem> fam;
    for (long a = -N; a <= N; ++a) {
      for (int d = 0; d <= N; ++d) {
        for (int p = 0; p <= d; ++p) {
          if (a == 0 && d == 0) continue;
          fam.push_back(F.rho.piTilde(
              F.A().mul(F.aU(a), F.aPow(p, d - p))));
        }
      }
    }
    CHECK(rankOf(fam) == size_t((N + 1) * (N + 2) / 2));
  }
}

TEST_CASE("frame germ reproduces the vertical projector on letters") {
  Fixture F;

  AhElem plusWant;
  addInto(plusWant, AhKey{SU2Mono{}, Word{0}, Word{}}, Scalar::one());
  addInto(plusWant, AhKey{SU2Mono{}, Word{0, 1}, Word{0}}, mu(-1) + mu(-3));
  CHECK(F.fr.piLetter(0) == plusWant);

  AhElem minusWant;
  addInto(minusWant, AhKey{SU2Mono{}, Word{1}, Word{}}, Scalar::one());
  addInto(minusWant, AhKey{SU2Mono{}, Word{0, 1}, Word{1}},
          Scalar::ofInt(0) - mu(1) - mu(3));
  CHECK(F.fr.piLetter(1) == minusWant);

  // The two germs share the group values and differ by the boundary data.
  for (int i = 0; i < 2; ++i) {
    Word w{Word::value_type(i)};
    CHECK(F.fr.piWord(w) ==
          addAh(F.fr.zetaLetter(i), F.rho.piWord(w)));
  }
}

TEST_CASE("flat frame satisfies the frame relations") {
  Fixture F;
  Frame f = flatFrame(F.P);
  Report rep = frameRelationsReport(F.P, f);
  CHECK(rep.allPass());
  CHECK(rep.checks.size() == 12);
  CHECK(findCheck(rep, "frame-mixing(e+,e-)") != nullptr);
  CHECK(findCheck(rep, "frame-module(e-,gs)") != nullptr);
}

TEST_CASE("flat frame multiplication is a bijection onto horizontal forms") {
  Fixture F;
  Frame f = flatFrame(F.P);
  std::vector<Word> exts = {Word{}, Word{0}, Word{1}, Word{0, 1}};

  std::vector<AhElem> images;
  for (const auto& m : F.P.su2().monosUpToDegree(3)) {
    for (const auto& w : exts) {
      AhElem got = frameApply(F.P, f, SU2Alg::of(m), w);
      AhElem want = F.P.ahOf(SU2Alg::of(m), LinComb{{w, Scalar::one()}},
                             LinComb{{Word{}, Scalar::one()}});
      CHECK(got == want);
      images.push_back(got);
    }
  }
  CHECK(rankOf(images) == images.size());

  // The zero frame drops every positive exterior degree: not injective.
  Frame zero;
  zero.lambda.assign(2, AhElem{});
  CHECK(frameApply(F.P, zero, F.P.su2().unit(), Word{0}).empty());
  CHECK(frameRelationsReport(F.P, zero).allPass());  // relations are blind

  // A scaled frame stays a frame and scales images per degree.
  Frame scaledFrame = flatFrame(F.P);
  Scalar c = Scalar::one() - mu(2);
  for (auto& l : scaledFrame.lambda) l = scaleAh(l, c);
  CHECK(frameRelationsReport(F.P, scaledFrame).allPass());
  CHECK(frameApply(F.P, scaledFrame, F.P.su2().unit(), Word{0, 1}) ==
        F.P.ahOfExt(LinComb{{Word{0, 1}, c * c}}));
}

TEST_CASE("canonical translaton passes every lift law") {
  Fixture F;
  Translaton t = canonicalTranslaton(F.P);
  Report rep = translatonReport(F.P, t, 2);
  CHECK(rep.allPass());
  CHECK(rep.checks.size() == 7);
  CHECK(findCheck(rep, "translaton-coaction(e+)") != nullptr);
  CHECK(findCheck(rep, "translaton-hermitian(e-)") != nullptr);
  CHECK(findCheck(rep, "translaton-regular(e+)") != nullptr);
  CHECK(findCheck(rep, "translaton-multiplicative") != nullptr);
}

TEST_CASE("shifted translaton keeps the linear laws but is obstructed") {
  Fixture F;
  Translaton sh = shiftedTranslaton(F.P);
  Report rep = translatonReport(F.P, sh, 2);

  CHECK(findCheck(rep, "translaton-coaction(e+)")->pass);
  CHECK(findCheck(rep, "translaton-coaction(e-)")->pass);
  CHECK(findCheck(rep, "translaton-hermitian(e+)")->pass);
  CHECK(findCheck(rep, "translaton-hermitian(e-)")->pass);
  CHECK_FALSE(findCheck(rep, "translaton-regular(e+)")->pass);
  CHECK_FALSE(findCheck(rep, "translaton-regular(e-)")->pass);
  CHECK_FALSE(findCheck(rep, "translaton-multiplicative")->pass);

  // Pinned witness: moving e+ against the degree-one base element g leaves
  // a single monomial behind in the quotient.
  CElem got = F.P.embedC(
      translatonObstruction(F.P, sh, 0, F.P.su2().gamma()));
  CElem want{{CKey{Word{}, SU2Mono{2, 1, 0}, Word{}},
              (mu(3) - Scalar::one()) / mu(3)}};
  CHECK(got == want);
}

TEST_CASE("weight-mismatched lift breaks the coaction law") {
  Fixture F;
  Translaton mut = canonicalTranslaton(F.P);
  for (const auto& [k, c] :
       F.P.tensorOf(F.P.btOfB(F.P.su2().alpha()), F.P.btUnit()))
    addInto(mut.value[0], k, c);
  Report rep = translatonReport(F.P, mut, 1);
  CHECK_FALSE(findCheck(rep, "translaton-coaction(e+)")->pass);
}

TEST_CASE("degree-zero part of the relative quotient is the base") {
  Fixture F;
  const Scalar one = Scalar::one();

  auto repOf = [&](const Word& s1, const SU2Element& b, const Word& s2) {
    BtTensor t = F.P.tensorOf(F.P.btOfSym(LinComb{{s1, one}}),
                              F.P.btOfB(b));
    return F.P.tensorMulRight(t, F.P.btOfSym(LinComb{{s2, one}}));
  };

  // Pure base representatives coact within the group part only.
  for (const SU2Element& b :
       {F.P.su2().unit(), F.P.su2().alpha(),
        SU2Alg::of(SU2Mono{0, 1, 1})}) {
    CAff co = F.P.coactC(repOf(Word{}, b, Word{}));
    CHECK_FALSE(co.empty());
    for (const auto& [pr, c] : co) CHECK(pr.second.second.empty());
  }

  // Any fibre letter in the representative forces a fibre letter into the
  // structure leg somewhere.
  for (const auto& [s1, s2] : std::vector<std::pair<Word, Word>>{
           {Word{0}, Word{}}, {Word{}, Word{1}}, {Word{0}, Word{1}}}) {
    CAff co = F.P.coactC(repOf(s1, F.P.su2().alpha(), s2));
    bool sawFibreLeg = false;
    for (const auto& [pr, c] : co)
      if (!pr.second.second.empty()) sawFibreLeg = true;
    CHECK(sawFibreLeg);
  }
}

TEST_CASE("inconsistent germ data is rejected with a reason") {
  Fixture F;
  const BundleAlg& P = F.P;

  {
    GermData d = curvatureGermData(P);
    d.piU = P.ahOfExt(LinComb{{Word{0}, Scalar::one()}});
    CHECK_THROWS_WITH_AS(([&] { Germ g{P, d}; }()),
                         "generator value is not coaction-invariant",
                         InconsistentGermData);
  }
  {
    GermData d = curvatureGermData(P);
    d.piU = F.unitAh();
    CHECK_THROWS_WITH_AS(([&] { Germ g{P, d}; }()),
                         "generator value is not anti-hermitian",
                         InconsistentGermData);
  }
  {
    GermData d = frameGermData(P);
    std::swap(d.zeta[0], d.zeta[1]);
    CHECK_THROWS_WITH_AS(([&] { Germ g{P, d}; }()),
                         "boundary value breaks the coaction law",
                         InconsistentGermData);
  }
  {
    GermData d = frameGermData(P);
    d.zeta[1] = scaleAh(d.zeta[1], Scalar::ofInt(2));
    CHECK_THROWS_WITH_AS(([&] { Germ g{P, d}; }()),
                         "boundary value breaks the star law",
                         InconsistentGermData);
  }
  {
    // Add a weight-matched, star-matched pair that twists wrongly under
    // the group action.
    GermData d = frameGermData(P);
    d.zeta[0] = addAh(d.zeta[0], F.bAh(SU2Alg::of(SU2Mono{2, 0, 0})));
    d.zeta[1] = addAh(d.zeta[1],
                      scaleAh(F.bAh(SU2Alg::of(SU2Mono{-2, 0, 0})), mu(-1)));
    CHECK_THROWS_WITH_AS(([&] { Germ g{P, d}; }()),
                         "boundary value breaks the action law",
                         InconsistentGermData);
  }
  {
    GermData d = frameGermData(P);
    d.zeta.pop_back();
    CHECK_THROWS_WITH_AS(([&] { Germ g{P, d}; }()),
                         "boundary values must cover the module basis",
                         InconsistentGermData);
  }
}

TEST_CASE("degenerate deformation values collapse the vertical family") {
  for (int sign : {1, -1}) {
    CAPTURE(sign);
    Mu mode = Mu::at(mpq_class(sign));
    BundleAlg P{mode};
    Germ rho{P, curvatureGermData(P)};
    Germ fr{P, frameGermData(P)};

    for (long n = -6; n <= 6; ++n) {
      CHECK(qInt(mode, n) == Scalar::ofInt(n));
      if (n != 0)
        CHECK(rho.piGroup(n) ==
              scaleAh(rho.piGroup(1), Scalar::ofInt(n)));
    }

    for (int d = 2; d <= 4; ++d)
      for (int p = 0; p <= d; ++p)
        CHECK(rho.piTilde(powComb(mode, p, d - p)).empty());

    std::vector<AhElem> family{subAh(rho.piGroup(1), rho.piGroup(-1))};
    for (int d = 1; d <= 4; ++d)
      for (int p = 0; p <= d; ++p)
        family.push_back(fr.piTilde(powComb(mode, p, d - p)));
    CHECK(rankOf(family) == 3);

    std::vector<AhElem> fam2;
    for (long a = -2; a <= 2; ++a)
      for (int d = 0; d <= 2; ++d)
        for (int p = 0; p <= d; ++p) {
          if (a == 0 && d == 0) continue;
          fam2.push_back(rho.piTilde(P.affine().mul(
              P.affine().ofGroup(Grouplike::U(a)), powComb(mode, p, d - p))));
        }
    CHECK(rankOf(fam2) == 3);
  }

  {
    // At the classical point the shifted lift becomes regular...
    BundleAlg P{Mu::at(1)};
    CHECK(translatonReport(P, shiftedTranslaton(P), 2).allPass());
    // ...but inconsistent germ data is still rejected.
    GermData d = frameGermData(P);
    d.zeta[1] = scaleAh(d.zeta[1], Scalar::ofInt(2));
    CHECK_THROWS_AS(([&] { Germ g{P, d}; }()), InconsistentGermData);
  }
  {
    // At the sign point the obstruction survives with an integer value.
    BundleAlg P{Mu::at(-1)};
    CElem got = P.embedC(
        translatonObstruction(P, shiftedTranslaton(P), 0, P.su2().gamma()));
    CElem want{{CKey{Word{}, SU2Mono{2, 1, 0}, Word{}}, Scalar::ofInt(2)}};
    CHECK(got == want);
  }
}
