#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaff/bimodule.hpp"
#include "qaff/braiding.hpp"

using namespace qaff;

namespace {

Matrix expectedBraid(const Mu& mode) {
  // Frozen oracle: basis order (++, +-, -+, --).
  Matrix m(4, 4);
  m.at(0, 0) = Scalar::muPow(mode, -2);
  m.at(2, 1) = Scalar::muPow(mode, 2);
  m.at(1, 2) = Scalar::muPow(mode, -2);
  m.at(3, 3) = Scalar::muPow(mode, 2);
  return m;
}

Matrix flipMatrix() {
  Matrix m(4, 4);
  m.at(0, 0) = Scalar::one();
  m.at(2, 1) = Scalar::one();
  m.at(1, 2) = Scalar::one();
  m.at(3, 3) = Scalar::one();
  return m;
}

LinComb one(const Word& w) { return LinComb{{w, Scalar::one()}}; }

LinComb applyYkronY(const BraidCalc& bc, int k, int l, const LinComb& x) {
  LinComb out;
  for (const auto& [w, c] : x) addScaled(out, bc.applyYTensorY(k, l, w), c);
  return out;
}

Vec combToVec(const BraidCalc& bc, const LinComb& x, int n) {
  Vec v(1 << n, Scalar());
  for (const auto& [w, c] : x) v[BraidCalc::wordIndex(w, 2)] = c;
  return v;
}

}  // namespace

TEST_CASE("braid matrix matches the frozen oracle") {
  auto spec = BimoduleSpec::hopfFibration(Mu::sym());
  BraidCalc bc(spec);
  CHECK(bc.braidMatrix() == expectedBraid(Mu::sym()));
  CHECK(bc.multisetPreserving());

  for (mpq_class v : {mpq_class(1), mpq_class(-1)}) {
    auto specd = BimoduleSpec::hopfFibration(Mu::at(v));
    BraidCalc bcd(specd);
    CHECK(bcd.braidMatrix() == flipMatrix());
  }
  auto spec2 = BimoduleSpec::hopfFibration(Mu::at(mpq_class(1, 2)));
  BraidCalc bc2(spec2);
  CHECK(bc2.braidMatrix() == expectedBraid(Mu::at(mpq_class(1, 2))));
}

TEST_CASE("braid equation on all degree-3 words") {
  BraidCalc bc(BimoduleSpec::hopfFibration(Mu::sym()));
  for (const Word& w : bc.wordsOfDegree(3)) {
    LinComb lhs = bc.applyTau(bc.applyTau(bc.applyTau(one(w), 0), 1), 0);
    LinComb rhs = bc.applyTau(bc.applyTau(bc.applyTau(one(w), 1), 0), 1);
    CHECK(subComb(lhs, rhs).empty());
  }
}

TEST_CASE("permutation lifts are independent of the reduced word") {
  BraidCalc bc(BimoduleSpec::hopfFibration(Mu::sym()));
  for (int n = 2; n <= 4; ++n) {
    for (const auto& perm : BraidCalc::allPerms(n)) {
      for (const Word& w : bc.wordsOfDegree(n)) {
        LinComb a = bc.applyPermLift(perm, one(w),
                                     BraidCalc::DescentStrategy::Smallest);
        LinComb b = bc.applyPermLift(perm, one(w),
                                     BraidCalc::DescentStrategy::Largest);
        CHECK(subComb(a, b).empty());
      }
    }
  }
}

TEST_CASE("star conjugation inverts the braiding") {
  BraidCalc bc(BimoduleSpec::hopfFibration(Mu::sym()));
  auto starTauStar = [&](const Word& w) {
    return bc.starComb(bc.applyTau(bc.starComb(one(w)), 0));
  };
  CHECK(bc.denseMatrix(starTauStar, 2) == bc.braidInverse());
}

TEST_CASE("braiding is covariant for the coaction and the action") {
  BraidCalc bc(BimoduleSpec::hopfFibration(Mu::sym()));
  for (const Word& w : bc.wordsOfDegree(2)) {
    // coaction о tau = (tau (x) id) о coaction
    std::map<Grouplike, LinComb> lhs, rhs;
    for (const auto& [c, u, g] : bc.coactWord(w)) {
      LinComb tail = bc.applyTau(one(u), 0);
      addScaled(rhs[g], tail, c);
    }
    for (const auto& [u, cu] : bc.applyTau(one(w), 0))
      for (const auto& [c, v, g] : bc.coactWord(u)) addTerm(lhs[g], v, cu * c);
    for (const auto& [g, comb] : lhs) CHECK(subComb(comb, rhs[g]).empty());
    for (const auto& [g, comb] : rhs) CHECK(subComb(lhs[g], comb).empty());
    // tau(x . g) = tau(x) . g
    Grouplike g = Grouplike::U(1);
    CHECK(subComb(bc.applyTau(bc.circWord(w, g), 0),
                  bc.circComb(bc.applyTau(one(w), 0), g))
              .empty());
  }
}

TEST_CASE("symmetrizer equals the full permutation sum for small degree") {
  BraidCalc bc(BimoduleSpec::hopfFibration(Mu::sym()));
  for (int n = 2; n <= 4; ++n) {
    for (const Word& w : bc.wordsOfDegree(n)) {
      LinComb direct;
      for (const auto& perm : BraidCalc::allPerms(n))
        addScaled(direct, bc.applyPermLift(perm, one(w)), Scalar::one());
      CHECK(subComb(bc.applyY(w), direct).empty());
    }
  }
}

TEST_CASE("symmetrizer factorizations through shuffle sums") {
  BraidCalc bc(BimoduleSpec::hopfFibration(Mu::sym()));
  for (int total = 2; total <= 6; ++total) {
    for (int k = 1; k < total; ++k) {
      const int l = total - k;
      for (const Word& w : bc.wordsOfDegree(total)) {
        LinComb y = bc.applyY(w);
        LinComb viaYkl = bc.applyYkl(k, l, bc.applyYTensorY(k, l, w));
        CHECK(subComb(y, viaYkl).empty());
        LinComb viaMkl = applyYkronY(bc, k, l, bc.applyMkl(k, l, one(w)));
        CHECK(subComb(y, viaMkl).empty());
      }
    }
  }
}

TEST_CASE("kernel of the symmetrizer") {
  BraidCalc bc(BimoduleSpec::hopfFibration(Mu::sym()));
  auto k2 = bc.kernelY(2);
  REQUIRE(k2.size() == 1);
  // Frozen oracle: span of (+ -) - mu^2 (- +).
  const LinComb& row = k2[0];
  Word pm = {0, 1}, mp = {1, 0};
  REQUIRE(row.count(pm) == 1);
  REQUIRE(row.count(mp) == 1);
  CHECK(row.at(mp) / row.at(pm) == -Scalar::muPow(Mu::sym(), 2));
  // Kernel dimensions 2^n - (n+1) for n <= 6.
  for (int n = 2; n <= 6; ++n)
    CHECK(bc.kernelY(n).size() == static_cast<size_t>((1 << n) - n - 1));
  // Every kernel row is annihilated by Y.
  for (int n = 2; n <= 4; ++n)
    for (const auto& r : bc.kernelY(n)) CHECK(bc.applyY(r).empty());
}

TEST_CASE("kernel is star-stable and an ideal") {
  BraidCalc bc(BimoduleSpec::hopfFibration(Mu::sym()));
  for (int n = 2; n <= 4; ++n) {
    auto rows = bc.kernelY(n);
    Span span(static_cast<size_t>(1) << n);
    for (const auto& r : rows) span.add(combToVec(bc, r, n));
    for (const auto& r : rows)
      CHECK(span.contains(combToVec(bc, bc.starComb(r), n)));
    // Ideal property: V (x) ker + ker (x) V lies in the next kernel.
    for (const auto& r : rows) {
      for (uint8_t letter : {0, 1}) {
        LinComb left, right;
        for (const auto& [w, c] : r) {
          Word lw;
          lw.push_back(letter);
          lw.insert(lw.end(), w.begin(), w.end());
          addTerm(left, lw, c);
          Word rw = w;
          rw.push_back(letter);
          addTerm(right, rw, c);
        }
        CHECK(bc.applyY(left).empty());
        CHECK(bc.applyY(right).empty());
      }
    }
  }
}

TEST_CASE("degenerate parameters reproduce the classical picture") {
  for (mpq_class v : {mpq_class(1), mpq_class(-1)}) {
    BraidCalc bc(BimoduleSpec::hopfFibration(Mu::at(v)));
    auto k2 = bc.kernelY(2);
    REQUIRE(k2.size() == 1);
    Word pm = {0, 1}, mp = {1, 0};
    CHECK(k2[0].at(mp) / k2[0].at(pm) == -Scalar::one());
    for (int n = 2; n <= 5; ++n)
      CHECK(bc.kernelY(n).size() == static_cast<size_t>((1 << n) - n - 1));
  }
}
