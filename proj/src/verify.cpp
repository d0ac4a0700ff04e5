#include "qaff/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qaff/connections.hpp"

namespace qaff {

namespace {

int clampDeg(int bound, int maxDegree) { return std::min(bound, maxDegree); }

LinComb one(const Word& w) { return LinComb{{w, Scalar::one()}}; }

Vec combToVec(const LinComb& x, int n) {
  Vec v(static_cast<size_t>(1) << n, Scalar());
  for (const auto& [w, c] : x) v[BraidCalc::wordIndex(w, 2)] = c;
  return v;
}

std::string wordStr(const Word& w) {
  std::string s;
  for (uint8_t l : w) s += (l == 0 ? "e+" : "e-");
  return s.empty() ? "1" : s;
}

// ---- scalars ---------------------------------------------------------------

std::vector<Scalar> scalarPool() {
  const Mu sym = Mu::sym();
  const Scalar one = Scalar::one();
  std::vector<Scalar> pool;
  pool.push_back(Scalar::ofInt(3));
  pool.push_back(Scalar::ofRat(mpq_class(-7, 4)));
  pool.push_back(Scalar::muPow(sym, 3));
  pool.push_back(Scalar::muPow(sym, -2));
  pool.push_back(one - Scalar::muPow(sym, 2));
  pool.push_back(one + Scalar::muPow(sym, 2));
  pool.push_back(one / (one + Scalar::muPow(sym, 2)));
  pool.push_back(one / (one - Scalar::muPow(sym, 2)));
  pool.push_back(Scalar::muPow(sym, -3) - Scalar::ofInt(2) +
                 Scalar::muPow(sym, 5));
  pool.push_back((one - Scalar::muPow(sym, 4)) * Scalar::ofRat(mpq_class(2, 3)));
  return pool;
}

// ---- base Hopf algebra -----------------------------------------------------

std::vector<BaseElement> baseSamples() {
  std::vector<BaseElement> out;
  for (long n = -6; n <= 6; ++n) out.push_back(BaseElement::of(Grouplike::U(n)));
  BaseElement s1 = BaseElement::of(Grouplike::U(2)) +
                   BaseElement::of(Grouplike::U(-1), Scalar::ofInt(3));
  BaseElement s2 =
      BaseElement::of(Grouplike::U(1),
                      Scalar::one() - Scalar::muPow(Mu::sym(), 2)) +
      BaseElement::of(Grouplike::U(-4), Scalar::ofRat(mpq_class(1, 2)));
  out.push_back(s1);
  out.push_back(s2);
  return out;
}

// ---- shared tensor accumulators ---------------------------------------------

using GPair = std::pair<Grouplike, Grouplike>;
using GTriple = std::tuple<Grouplike, Grouplike, Grouplike>;

// ---- bundle coaction helpers -------------------------------------------------

BtAff mulBtAff(const BundleAlg& P, const BtAff& a, const BtAff& b) {
  BtAff out;
  for (const auto& [k1, c1] : a) {
    for (const auto& [k2, c2] : b) {
      BtElem bp = P.btMul(BtElem{{k1.first, Scalar::one()}},
                          BtElem{{k2.first, Scalar::one()}});
      AffComb ap = P.affine().mul(AffComb{{k1.second, Scalar::one()}},
                                  AffComb{{k2.second, Scalar::one()}});
      for (const auto& [bk, cb] : bp)
        for (const auto& [ak, ca] : ap)
          addInto(out, std::make_pair(bk, ak), c1 * c2 * cb * ca);
    }
  }
  return out;
}

AhAff mulAhAff(const BundleAlg& P, const AhAff& a, const AhAff& b) {
  AhAff out;
  for (const auto& [k1, c1] : a) {
    for (const auto& [k2, c2] : b) {
      AhElem hp = P.ahMul(AhElem{{k1.first, Scalar::one()}},
                          AhElem{{k2.first, Scalar::one()}});
      AffComb ap = P.affine().mul(AffComb{{k1.second, Scalar::one()}},
                                  AffComb{{k2.second, Scalar::one()}});
      for (const auto& [hk, ch] : hp)
        for (const auto& [ak, ca] : ap)
          addInto(out, std::make_pair(hk, ak), c1 * c2 * ch * ca);
    }
  }
  return out;
}

}  // namespace

// ---- shared helpers -----------------------------------------------------------

size_t spanRank(const std::vector<AhElem>& family) {
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
  return static_cast<size_t>(span.dim());
}

// ---- translation identities --------------------------------------------------

bool translationCoactionIdentity(const BundleAlg& P, const AffComb& psi) {
  using Key3L = std::tuple<BtKey, BtKey, AffKey>;
  std::map<Key3L, Scalar> lhs, rhs;
  BtTensor tr = P.transAffine(psi);
  for (const auto& [k, c] : tr) {
    BtAff ca = P.coactBt(BtElem{{k.second, Scalar::one()}});
    for (const auto& [p, c2] : ca)
      addInto(lhs, Key3L{k.first, p.first, p.second}, c * c2);
  }
  AffTensor cop = P.affine().coproduct(psi);
  for (const auto& [p, c] : cop) {
    BtTensor t1 = P.transAffine(AffComb{{p.first, Scalar::one()}});
    for (const auto& [k, c2] : t1)
      addInto(rhs, Key3L{k.first, k.second, p.second}, c * c2);
  }
  return lhs == rhs;
}

bool translationProductIdentity(const BundleAlg& P, const AffComb& psi) {
  BtElem prod = P.multiplyLegs(P.transAffine(psi));
  BtElem expected;
  Scalar eps = P.affine().counit(psi);
  if (!eps.isZero()) expected = BtElem{{{SU2Mono{}, Word{}}, eps}};
  return prod == expected;
}

bool translationOpCoactionIdentity(const BundleAlg& P, const AffComb& psi) {
  const AffineAlg& A = P.affine();
  std::map<std::pair<AffKey, CKey>, Scalar> lhs, rhs;
  BtTensor tr = P.transAffine(psi);
  for (const auto& [k, c] : tr) {
    BtAff ca = P.coactBt(BtElem{{k.first, Scalar::one()}});
    for (const auto& [p, c2] : ca) {
      AffComb kinv =
          A.star(A.antipode(A.star(AffComb{{p.second, Scalar::one()}})));
      CElem emb = P.embedC(
          BtTensor{{std::make_pair(p.first, k.second), Scalar::one()}});
      for (const auto& [ak, c3] : kinv)
        for (const auto& [ck, c4] : emb)
          addInto(lhs, std::make_pair(ak, ck), c * c2 * c3 * c4);
    }
  }
  AffTensor cop = A.coproduct(psi);
  for (const auto& [p, c] : cop) {
    CElem emb = P.embedC(P.transAffine(AffComb{{p.second, Scalar::one()}}));
    for (const auto& [ck, c2] : emb)
      addInto(rhs, std::make_pair(p.first, ck), c * c2);
  }
  return lhs == rhs;
}

namespace {

Word powWord(int p, int q) {
  Word w;
  for (int i = 0; i < p; ++i) w.push_back(0);
  for (int j = 0; j < q; ++j) w.push_back(1);
  return w;
}

AhElem scaleAh(const AhElem& x, const Scalar& c) {
  AhElem out;
  for (const auto& [k, v] : x) addInto(out, k, v * c);
  return out;
}

bool degenerateMode(const Mu& mode) {
  return !mode.symbolic && (mode.value == 1 || mode.value == -1);
}

}  // namespace

// ---- suite: scalars ----------------------------------------------------------

Report scalarsSuite() {
  Report rep;
  const std::vector<Scalar> pool = scalarPool();

  bool assocOk = true;
  std::string assocWit;
  for (size_t i = 0; i < pool.size() && assocOk; ++i) {
    for (size_t j = 0; j < pool.size() && assocOk; ++j) {
      for (size_t k = 0; k < pool.size() && assocOk; ++k) {
        const Scalar& a = pool[i];
        const Scalar& b = pool[j];
        const Scalar& c = pool[k];
        Scalar p1 = (a * b) * c;
        Scalar p2 = a * (b * c);
        Scalar s1 = (a + b) + c;
        Scalar s2 = a + (b + c);
        if (p1 != p2 || p1.str() != p2.str() || s1 != s2 ||
            s1.str() != s2.str()) {
          assocOk = false;
          std::ostringstream os;
          os << "triple (" << i << "," << j << "," << k << ")";
          assocWit = os.str();
        }
      }
    }
  }
  rep.add("scalar-association", assocOk, assocWit);

  std::mt19937 rng(20240901u);
  std::uniform_int_distribution<int> numDist(-30, 30);
  std::uniform_int_distribution<int> denDist(1, 7);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> opDist(0, 3);
  bool evalOk = true;
  std::string evalWit;
  for (int trial = 0; trial < 100 && evalOk; ++trial) {
    mpq_class r;
    do {
      r = mpq_class(numDist(rng), denDist(rng));
      r.canonicalize();
    } while (r == 0 || r == 1 || r == -1);
    const Scalar& a = pool[pick(rng)];
    const Scalar& b = pool[pick(rng)];
    int op = opDist(rng);
    Scalar combined;
    mpq_class expected;
    mpq_class av = a.evalAt(r), bv = b.evalAt(r);
    switch (op) {
      case 0: combined = a + b; expected = av + bv; break;
      case 1: combined = a - b; expected = av - bv; break;
      case 2: combined = a * b; expected = av * bv; break;
      default:
        if (bv == 0) continue;  // pool values never vanish off mu = 0, +-1
        combined = a / b;
        expected = av / bv;
        break;
    }
    if (combined.evalAt(r) != expected) {
      evalOk = false;
      std::ostringstream os;
      os << "trial " << trial << " at mu = " << r.get_str();
      evalWit = os.str();
    }
  }
  rep.add("scalar-evaluation-homomorphism", evalOk, evalWit);
  return rep;
}

// ---- suite: base Hopf algebra --------------------------------------------------

Report baseHopfSuite() {
  Report rep;
  const std::vector<BaseElement> samples = baseSamples();

  bool coassoc = true, counit = true, antipode = true, starCop = true,
       starAnti = true;
  std::string wit[5];
  for (size_t si = 0; si < samples.size(); ++si) {
    const BaseElement& b = samples[si];
    std::map<GTriple, Scalar> lhs, rhs;
    BaseElement left, right, anti1, anti2;
    for (const auto& [c, g1, g2] : b.coproduct()) {
      for (const auto& [c2, h1, h2] : BaseElement::of(g1).coproduct())
        addInto(lhs, GTriple{h1, h2, g2}, c * c2);
      for (const auto& [c2, h1, h2] : BaseElement::of(g2).coproduct())
        addInto(rhs, GTriple{g1, h1, h2}, c * c2);
      left.add(g2, c * BaseElement::of(g1).counit());
      right.add(g1, c * BaseElement::of(g2).counit());
      anti1 = anti1 + (BaseElement::of(g1).antipode() *
                       BaseElement::of(g2)).scale(c);
      anti2 = anti2 + (BaseElement::of(g1) *
                       BaseElement::of(g2).antipode()).scale(c);
    }
    std::ostringstream os;
    os << "sample " << si;
    if (lhs != rhs && coassoc) { coassoc = false; wit[0] = os.str(); }
    if ((!(left == b) || !(right == b)) && counit) {
      counit = false;
      wit[1] = os.str();
    }
    BaseElement target = BaseElement::unit().scale(b.counit());
    if ((!(anti1 == target) || !(anti2 == target)) && antipode) {
      antipode = false;
      wit[2] = os.str();
    }
    std::map<GPair, Scalar> sl, sr;
    for (const auto& [c, g1, g2] : b.star().coproduct())
      addInto(sl, GPair{g1, g2}, c);
    for (const auto& [c, g1, g2] : b.coproduct()) {
      BaseElement leg1 = BaseElement::of(g1, c).star();
      BaseElement leg2 = BaseElement::of(g2).star();
      for (const auto& [h1, c1] : leg1.terms())
        for (const auto& [h2, c2] : leg2.terms())
          addInto(sr, GPair{h1, h2}, c1 * c2);
    }
    if (sl != sr && starCop) { starCop = false; wit[3] = os.str(); }
    BaseElement twice = b.antipode().star().antipode().star();
    if (!(twice == b) && starAnti) { starAnti = false; wit[4] = os.str(); }
  }
  rep.add("base-coassociativity", coassoc, wit[0]);
  rep.add("base-counit", counit, wit[1]);
  rep.add("base-antipode", antipode, wit[2]);
  rep.add("base-star-coproduct", starCop, wit[3]);
  rep.add("base-star-antipode-involution", starAnti, wit[4]);
  return rep;
}

// ---- suite: braiding ------------------------------------------------------------

Report braidingSuite(const Mu& mode, int maxDegree) {
  Report rep;
  BraidCalc bc(BimoduleSpec::hopfFibration(mode));

  {
    auto f010 = [&](const Word& w) {
      return bc.applyTau(bc.applyTau(bc.applyTau(one(w), 0), 1), 0);
    };
    auto f101 = [&](const Word& w) {
      return bc.applyTau(bc.applyTau(bc.applyTau(one(w), 1), 0), 1);
    };
    rep.add("braid-equation", bc.denseMatrix(f010, 3) == bc.denseMatrix(f101, 3));
  }
  {
    auto starTauStar = [&](const Word& w) {
      return bc.starComb(bc.applyTau(bc.starComb(one(w)), 0));
    };
    rep.add("braid-star-inverse",
            bc.denseMatrix(starTauStar, 2) == bc.braidInverse());
  }
  {
    bool coactOk = true, actOk = true;
    std::string coactWit, actWit;
    for (const Word& w : bc.wordsOfDegree(2)) {
      std::map<Grouplike, LinComb> lhs, rhs;
      for (const auto& [c, u, g] : bc.coactWord(w))
        addScaled(rhs[g], bc.applyTau(one(u), 0), c);
      for (const auto& [u, cu] : bc.applyTau(one(w), 0))
        for (const auto& [c, v, g] : bc.coactWord(u)) addTerm(lhs[g], v, cu * c);
      for (const auto& [g, comb] : lhs)
        if (!subComb(comb, rhs[g]).empty() && coactOk) {
          coactOk = false;
          coactWit = "word " + wordStr(w);
        }
      for (const auto& [g, comb] : rhs)
        if (!subComb(lhs[g], comb).empty() && coactOk) {
          coactOk = false;
          coactWit = "word " + wordStr(w);
        }
      Grouplike g = Grouplike::U(1);
      if (!subComb(bc.applyTau(bc.circWord(w, g), 0),
                   bc.circComb(bc.applyTau(one(w), 0), g))
               .empty() &&
          actOk) {
        actOk = false;
        actWit = "word " + wordStr(w);
      }
    }
    rep.add("braid-coaction-covariance", coactOk, coactWit);
    rep.add("braid-action-covariance", actOk, actWit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int n = 2; n <= clampDeg(5, maxDegree) && ok; ++n) {
      const auto perms = BraidCalc::allPerms(n);
      for (const auto& perm : perms) {
        for (const Word& w : bc.wordsOfDegree(n)) {
          LinComb a =
              bc.applyPermLift(perm, one(w), BraidCalc::DescentStrategy::Smallest);
          LinComb b =
              bc.applyPermLift(perm, one(w), BraidCalc::DescentStrategy::Largest);
          if (!subComb(a, b).empty()) {
            ok = false;
            std::ostringstream os;
            os << "degree " << n << " word " << wordStr(w);
            wit = os.str();
            break;
          }
        }
        if (!ok) break;
      }
    }
    rep.add("braid-word-independence", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int k = 1; ok && k <= clampDeg(6, maxDegree) - 1; ++k) {
      for (int l = 1; ok && k + l <= clampDeg(6, maxDegree); ++l) {
        for (const Word& w : bc.wordsOfDegree(k + l)) {
          LinComb target = bc.applyY(w);
          LinComb route1 = bc.applyYkl(k, l, bc.applyYTensorY(k, l, w));
          LinComb route2;
          for (const auto& [u, c] : bc.applyMkl(k, l, one(w)))
            addScaled(route2, bc.applyYTensorY(k, l, u), c);
          if (!subComb(route1, target).empty() ||
              !subComb(route2, target).empty()) {
            ok = false;
            std::ostringstream os;
            os << "split (" << k << "," << l << ") word " << wordStr(w);
            wit = os.str();
            break;
          }
        }
      }
    }
    rep.add("braid-factorizations", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int n = 1; ok && n <= clampDeg(4, maxDegree); ++n) {
      const auto perms = BraidCalc::allPerms(n);
      for (const Word& w : bc.wordsOfDegree(n)) {
        LinComb sum;
        for (const auto& perm : perms)
          addScaled(sum, bc.applyPermLift(perm, one(w)), Scalar::one());
        if (!subComb(sum, bc.applyY(w)).empty()) {
          ok = false;
          wit = "degree " + std::to_string(n) + " word " + wordStr(w);
          break;
        }
      }
    }
    rep.add("braid-symmetrizer-permutation-sum", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int n = 2; ok && n <= clampDeg(5, maxDegree); ++n) {
      auto rows = bc.kernelY(n);
      Span span(static_cast<size_t>(1) << n);
      for (const auto& r : rows) span.add(combToVec(r, n));
      for (const auto& r : rows)
        if (!span.contains(combToVec(bc.starComb(r), n))) {
          ok = false;
          wit = "degree " + std::to_string(n);
          break;
        }
    }
    rep.add("braid-kernel-star-stable", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int n = 2; ok && n <= clampDeg(5, maxDegree) - 1; ++n) {
      for (int m = 1; ok && n + m <= clampDeg(5, maxDegree); ++m) {
        for (const auto& r : bc.kernelY(n)) {
          for (const Word& u : bc.wordsOfDegree(m)) {
            LinComb left, right;
            for (const auto& [w, c] : r) {
              Word lw = u;
              lw.insert(lw.end(), w.begin(), w.end());
              addTerm(left, lw, c);
              Word rw = w;
              rw.insert(rw.end(), u.begin(), u.end());
              addTerm(right, rw, c);
            }
            if (!bc.applyY(left).empty() || !bc.applyY(right).empty()) {
              ok = false;
              std::ostringstream os;
              os << "kernel degree " << n << " times " << wordStr(u);
              wit = os.str();
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    rep.add("braid-kernel-ideal", ok, wit);
  }
  return rep;
}

// ---- suite: braided algebras ------------------------------------------------------

Report braidedAlgebrasSuite(const Mu& mode, int maxDegree) {
  Report rep;
  SymAlg S(BimoduleSpec::hopfFibration(mode));
  const BraidCalc& bc = S.braid();
  using Fl = SymAlg::Flavor;

  {
    bool coactOk = true, actOk = true, starOk = true;
    std::string coactWit, actWit, starWit;
    for (int k = 2; k <= clampDeg(5, maxDegree); ++k) {
      size_t ri = 0;
      for (const auto& r : bc.kernelY(k)) {
        std::map<Grouplike, LinComb> comps;
        for (const auto& [w, c] : r)
          for (const auto& [c2, w2, g] : bc.coactWord(w))
            addTerm(comps[g], w2, c * c2);
        for (const auto& [g, comb] : comps)
          if (!bc.applyY(comb).empty() && coactOk) {
            coactOk = false;
            coactWit = "degree " + std::to_string(k) + " row " +
                       std::to_string(ri);
          }
        for (long n : {1L, -1L})
          if (!bc.applyY(bc.circComb(r, Grouplike::U(n))).empty() && actOk) {
            actOk = false;
            actWit = "degree " + std::to_string(k) + " row " +
                     std::to_string(ri);
          }
        if (!bc.applyY(bc.starComb(r)).empty() && starOk) {
          starOk = false;
          starWit = "degree " + std::to_string(k) + " row " +
                    std::to_string(ri);
        }
        ++ri;
      }
    }
    rep.add("kernel-coaction-stable", coactOk, coactWit);
    rep.add("kernel-action-stable", actOk, actWit);
    rep.add("kernel-star-stable", starOk, starWit);
  }
  {
    bool starOk = true, coactOk = true, assocOk = true;
    std::string starWit, coactWit, assocWit;
    const Grouplike g = Grouplike::U(1);
    for (int d = 1; d <= clampDeg(4, maxDegree); ++d) {
      for (const Word& w : S.reps(Fl::Sym, d)) {
        LinComb x = one(w);
        LinComb acted = S.circ(Fl::Sym, x, g);
        if (!subComb(S.star(Fl::Sym, acted),
                     S.circ(Fl::Sym, S.star(Fl::Sym, x), g))
                 .empty() &&
            starOk) {
          starOk = false;
          starWit = wordStr(w);
        }
        std::map<Grouplike, LinComb> lhs = S.coact(Fl::Sym, acted);
        std::map<Grouplike, LinComb> rhs;
        for (const auto& [h, comb] : S.coact(Fl::Sym, x)) {
          LinComb moved = S.circ(Fl::Sym, comb, g);
          if (!moved.empty()) rhs[h] = moved;
        }
        if (lhs != rhs && coactOk) {
          coactOk = false;
          coactWit = wordStr(w);
        }
        LinComb backAndForth =
            S.circ(Fl::Sym, acted, Grouplike::U(-1));
        LinComb twice = S.circ(Fl::Sym, acted, g);
        if ((!subComb(backAndForth, S.reduce(Fl::Sym, x)).empty() ||
             !subComb(twice, S.circ(Fl::Sym, x, Grouplike::U(2))).empty()) &&
            assocOk) {
          assocOk = false;
          assocWit = wordStr(w);
        }
      }
    }
    rep.add("symalg-action-star-compatible", starOk, starWit);
    rep.add("symalg-action-coaction-compatible", coactOk, coactWit);
    rep.add("symalg-action-associative", assocOk, assocWit);
  }
  if (mode.symbolic) {
    bool ok = true;
    std::string wit;
    for (int k = 2; ok && k <= clampDeg(5, maxDegree); ++k) {
      const size_t dim = static_cast<size_t>(1) << k;
      Span image(dim);
      for (const Word& w : bc.wordsOfDegree(k)) image.add(combToVec(bc.applyY(w), k));
      auto rows = bc.kernelY(k);
      Span whole(dim);
      for (const Word& w : bc.wordsOfDegree(k)) whole.add(combToVec(bc.applyY(w), k));
      for (const auto& r : rows) whole.add(combToVec(r, k));
      if (image.dim() + static_cast<int>(rows.size()) != static_cast<int>(dim) ||
          whole.dim() != static_cast<int>(dim)) {
        ok = false;
        wit = "degree " + std::to_string(k);
      }
    }
    rep.add("symalg-image-kernel-split", ok, wit);
  }
  {
    bool quotientInvolutive = true, tensorInvolutive = true;
    for (int d = 2; d <= clampDeg(4, maxDegree); ++d) {
      for (const Word& w : bc.wordsOfDegree(d)) {
        if (!subComb(bc.applyReversal(bc.applyReversal(one(w))), one(w)).empty())
          tensorInvolutive = false;
      }
      for (const Word& w : S.reps(Fl::Sym, d)) {
        LinComb twice = S.reversal(Fl::Sym, S.reversal(Fl::Sym, one(w)));
        if (!subComb(twice, S.reduceWord(Fl::Sym, w)).empty())
          quotientInvolutive = false;
      }
    }
    std::ostringstream os;
    os << "quotient=" << (quotientInvolutive ? "involutive" : "twisted")
       << " tensor=" << (tensorInvolutive ? "involutive" : "twisted");
    rep.add("symalg-reversal-involution-measured",
            quotientInvolutive == tensorInvolutive,
            quotientInvolutive == tensorInvolutive ? "" : os.str(), os.str());
  }
  {
    bool ok = true;
    std::string wit;
    for (int k = 0; k <= clampDeg(6, maxDegree); ++k)
      if (S.dimension(Fl::Sym, k) != k + 1 && ok) {
        ok = false;
        wit = "degree " + std::to_string(k) + " dim " +
              std::to_string(S.dimension(Fl::Sym, k));
      }
    rep.add("symalg-dimensions", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    const int expected[] = {1, 2, 1};
    for (int k = 0; k <= clampDeg(6, maxDegree); ++k) {
      int want = k <= 2 ? expected[k] : 0;
      if (S.dimension(Fl::Ext, k) != want && ok) {
        ok = false;
        wit = "degree " + std::to_string(k) + " dim " +
              std::to_string(S.dimension(Fl::Ext, k));
      }
    }
    rep.add("extalg-dimensions", ok, wit);
  }
  {
    LinComb want{{Word{0, 1}, Scalar::muPow(mode, -2)}};
    rep.add("symalg-degree-two-relation",
            subComb(S.reduceWord(Fl::Sym, Word{1, 0}), want).empty());
    bool sq = S.reduceWord(Fl::Ext, Word{0, 0}).empty() &&
              S.reduceWord(Fl::Ext, Word{1, 1}).empty();
    LinComb extWant{{Word{0, 1}, -Scalar::muPow(mode, -2)}};
    rep.add("extalg-relations",
            sq && subComb(S.reduceWord(Fl::Ext, Word{1, 0}), extWant).empty());
  }
  {
    bool ok = true;
    std::string wit;
    for (int k = 3; ok && k <= clampDeg(6, maxDegree); ++k) {
      const size_t dim = static_cast<size_t>(1) << k;
      Span ideal(dim);
      const auto quad = bc.kernelY(2);
      for (int left = 0; left + 2 <= k; ++left) {
        int right = k - 2 - left;
        for (const Word& u : bc.wordsOfDegree(left)) {
          for (const Word& v : bc.wordsOfDegree(right)) {
            for (const auto& r : quad) {
              LinComb emb;
              for (const auto& [w, c] : r) {
                Word full = u;
                full.insert(full.end(), w.begin(), w.end());
                full.insert(full.end(), v.begin(), v.end());
                addTerm(emb, full, c);
              }
              ideal.add(combToVec(emb, k));
            }
          }
        }
      }
      auto rows = bc.kernelY(k);
      if (ideal.dim() != static_cast<int>(rows.size())) {
        ok = false;
        wit = "degree " + std::to_string(k) + " ideal dim " +
              std::to_string(ideal.dim());
        break;
      }
      for (const auto& r : rows)
        if (!ideal.contains(combToVec(r, k))) {
          ok = false;
          wit = "degree " + std::to_string(k) + " kernel row escapes";
          break;
        }
    }
    rep.add("symalg-quadratic-generation", ok, wit);
  }
  return rep;
}

// ---- suite: affine Hopf algebra ------------------------------------------------

Report affineHopfSuite(const Mu& mode, int maxDegree) {
  Report rep;
  AffineAlg A(BimoduleSpec::hopfFibration(mode));
  const int dBound = std::max(1, clampDeg(3, maxDegree));
  rep.merge(A.verifyHopf(3, dBound));

  {
    bool ok = true;
    std::string wit;
    const BimoduleSpec& spec = A.spec();
    for (int letter = 0; letter < spec.dim(); ++letter) {
      AffTensor expected;
      addAffT(expected, AffKey{Grouplike::unit(), Word{}},
              AffKey{Grouplike::unit(), Word{uint8_t(letter)}}, Scalar::one());
      for (const auto& t : spec.coactionOf(letter))
        addAffT(expected, AffKey{Grouplike::unit(), Word{uint8_t(t.vec)}},
                AffKey{t.grp, Word{}}, t.coeff);
      AffComb theta{{AffKey{Grouplike::unit(), Word{uint8_t(letter)}},
                     Scalar::one()}};
      if (A.coproduct(theta) != expected && ok) {
        ok = false;
        wit = spec.labels()[letter];
      }
    }
    rep.add("affine-generator-coproduct", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (long n = -3; n <= 3; ++n) {
      AffKey k{Grouplike::U(n), Word{}};
      AffTensor expected;
      addAffT(expected, k, k, Scalar::one());
      if (A.coproduct(AffComb{{k, Scalar::one()}}) != expected && ok) {
        ok = false;
        wit = "exponent " + std::to_string(n);
      }
    }
    rep.add("affine-base-coproduct", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (long a = -2; a <= 2 && ok; ++a) {
      for (int d = 0; d <= dBound && ok; ++d) {
        for (const Word& w : A.sym().reps(SymAlg::Flavor::Sym, d)) {
          AffTensor cop = A.coproduct(
              A.ofPair(Grouplike::U(a), one(w)));
          for (const auto& [p, c] : cop) {
            int total = static_cast<int>(p.first.second.size()) +
                        static_cast<int>(p.second.second.size());
            if (total > d) {
              ok = false;
              std::ostringstream os;
              os << "U^" << a << " " << wordStr(w) << " term degree " << total;
              wit = os.str();
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    rep.add("affine-degree-filtration", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    const BraidCalc& bc = A.sym().braid();
    for (int d = 1; d <= dBound && ok; ++d) {
      for (const Word& w : bc.wordsOfDegree(d)) {
        AffTensor byWord;
        addAffT(byWord, AffKey{Grouplike::unit(), Word{}},
                AffKey{Grouplike::unit(), Word{}}, Scalar::one());
        for (uint8_t letter : w) {
          AffComb th{{AffKey{Grouplike::unit(), Word{letter}}, Scalar::one()}};
          byWord = A.mulTensor(byWord, A.coproduct(th));
        }
        if (A.coproduct(A.ofSym(one(w))) != byWord) {
          ok = false;
          wit = wordStr(w);
          break;
        }
      }
    }
    rep.add("affine-coproduct-two-route", ok, wit);
  }
  return rep;
}

// ---- suite: the quantum Hopf fibration bundle ------------------------------------

Report hopfFibrationSuite(const Mu& mode, int maxDegree) {
  Report rep;
  BundleAlg P(mode);
  const AffineAlg& A = P.affine();
  const Scalar one = Scalar::one();
  const int degCap = std::max(1, clampDeg(4, maxDegree));

  {
    std::mt19937 rng(770511u);
    std::uniform_int_distribution<int> aDist(-2, 2);
    std::uniform_int_distribution<int> mDist(0, 2);
    std::uniform_int_distribution<int> lenDist(0, 2);
    std::uniform_int_distribution<int> letterDist(0, 1);
    auto randomMonomial = [&]() {
      for (;;) {
        SU2Mono mono{aDist(rng), mDist(rng), mDist(rng)};
        Word w;
        int len = lenDist(rng);
        for (int i = 0; i < len; ++i)
          w.push_back(static_cast<uint8_t>(letterDist(rng)));
        if (mono.degree() + static_cast<int>(w.size()) <= degCap)
          return BtElem{{BtKey{mono, w}, one}};
      }
    };
    bool ok = true;
    std::string wit;
    for (int trial = 0; trial < 200 && ok; ++trial) {
      BtElem x = randomMonomial(), y = randomMonomial(), z = randomMonomial();
      if (P.btMul(P.btMul(x, y), z) != P.btMul(x, P.btMul(y, z))) {
        ok = false;
        wit = "trial " + std::to_string(trial);
      }
    }
    rep.add("bundle-product-confluence", ok, wit);
  }

  std::vector<BtElem> btSamples;
  {
    std::vector<SU2Element> bs = {P.su2().unit(),      P.su2().alpha(),
                                  P.su2().alphaStar(), P.su2().gamma(),
                                  P.su2().gammaStar(),
                                  SU2Alg::of(SU2Mono{0, 1, 1})};
    std::vector<Word> syms = {Word{}, Word{0}};
    if (degCap >= 2) syms.push_back(Word{0, 1});
    for (const auto& b : bs)
      for (const auto& s : syms)
        btSamples.push_back(P.btMul(P.btOfB(b), P.btOfSym(LinComb{{s, one}})));
  }
  {
    bool mulOk = true, starOk = true, coOk = true, counitOk = true;
    std::string mulWit, starWit, coWit, counitWit;
    for (size_t i = 0; i < btSamples.size(); ++i) {
      const BtElem& x = btSamples[i];
      BtAff cx = P.coactBt(x);
      // star homomorphism
      BtAff viaStar;
      for (const auto& [k, c] : cx) {
        BtElem bs = P.btStar(BtElem{{k.first, one}});
        AffComb as = A.star(AffComb{{k.second, one}});
        for (const auto& [bk, cb] : bs)
          for (const auto& [ak, ca] : as)
            addInto(viaStar, std::make_pair(bk, ak), c * cb * ca);
      }
      if (P.coactBt(P.btStar(x)) != viaStar && starOk) {
        starOk = false;
        starWit = "sample " + std::to_string(i);
      }
      // coassociativity
      using BtKey3 = std::tuple<BtKey, AffKey, AffKey>;
      std::map<BtKey3, Scalar> lhs, rhs;
      for (const auto& [k, c] : cx) {
        for (const auto& [p, c2] : P.coactBt(BtElem{{k.first, one}}))
          addInto(lhs, BtKey3{p.first, p.second, k.second}, c * c2);
        for (const auto& [p, c2] :
             A.coproduct(AffComb{{k.second, one}}))
          addInto(rhs, BtKey3{k.first, p.first, p.second}, c * c2);
      }
      if (lhs != rhs && coOk) {
        coOk = false;
        coWit = "sample " + std::to_string(i);
      }
      // counit
      BtElem back;
      for (const auto& [k, c] : cx)
        addInto(back, k.first, c * A.counit(AffComb{{k.second, one}}));
      if (back != x && counitOk) {
        counitOk = false;
        counitWit = "sample " + std::to_string(i);
      }
    }
    for (size_t i = 0; i < btSamples.size() && mulOk; i += 2) {
      for (size_t j = 1; j < btSamples.size() && mulOk; j += 3) {
        if (P.coactBt(P.btMul(btSamples[i], btSamples[j])) !=
            mulBtAff(P, P.coactBt(btSamples[i]), P.coactBt(btSamples[j]))) {
          mulOk = false;
          mulWit = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    }
    rep.add("bundle-coaction-multiplicative", mulOk, mulWit);
    rep.add("bundle-coaction-star", starOk, starWit);
    rep.add("bundle-coaction-coassociative", coOk, coWit);
    rep.add("bundle-coaction-counit", counitOk, counitWit);
  }
  {
    std::vector<AhElem> ahSamples;
    for (const SU2Element& b :
         {P.su2().unit(), P.su2().alpha(), P.su2().gammaStar()})
      for (const Word& e : {Word{}, Word{0}, Word{1}, Word{0, 1}})
        for (const Word& s : {Word{}, Word{0}})
          ahSamples.push_back(
              P.ahOf(b, LinComb{{e, one}}, LinComb{{s, one}}));
    bool mulOk = true, starOk = true, coOk = true, counitOk = true;
    std::string mulWit, starWit, coWit, counitWit;
    using AhKey3 = std::tuple<AhKey, AffKey, AffKey>;
    for (size_t i = 0; i < ahSamples.size(); ++i) {
      const AhElem& x = ahSamples[i];
      AhAff cx = P.coactAh(x);
      AhAff viaStar;
      for (const auto& [k, c] : cx) {
        AhElem hs = P.ahStar(AhElem{{k.first, one}});
        AffComb as = A.star(AffComb{{k.second, one}});
        for (const auto& [hk, ch] : hs)
          for (const auto& [ak, ca] : as)
            addInto(viaStar, std::make_pair(hk, ak), c * ch * ca);
      }
      if (P.coactAh(P.ahStar(x)) != viaStar && starOk) {
        starOk = false;
        starWit = "sample " + std::to_string(i);
      }
      std::map<AhKey3, Scalar> lhs, rhs;
      for (const auto& [k, c] : cx) {
        for (const auto& [p, c2] : P.coactAh(AhElem{{k.first, one}}))
          addInto(lhs, AhKey3{p.first, p.second, k.second}, c * c2);
        for (const auto& [p, c2] : A.coproduct(AffComb{{k.second, one}}))
          addInto(rhs, AhKey3{k.first, p.first, p.second}, c * c2);
      }
      if (lhs != rhs && coOk) {
        coOk = false;
        coWit = "sample " + std::to_string(i);
      }
      AhElem back;
      for (const auto& [k, c] : cx)
        addInto(back, k.first, c * A.counit(AffComb{{k.second, one}}));
      if (back != x && counitOk) {
        counitOk = false;
        counitWit = "sample " + std::to_string(i);
      }
    }
    for (size_t i = 0; i < ahSamples.size() && mulOk; i += 5) {
      for (size_t j = 1; j < ahSamples.size() && mulOk; j += 7) {
        if (P.coactAh(P.ahMul(ahSamples[i], ahSamples[j])) !=
            mulAhAff(P, P.coactAh(ahSamples[i]), P.coactAh(ahSamples[j]))) {
          mulOk = false;
          mulWit = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    }
    rep.add("horizontal-coaction-multiplicative", mulOk, mulWit);
    rep.add("horizontal-coaction-star", starOk, starWit);
    rep.add("horizontal-coaction-coassociative", coOk, coWit);
    rep.add("horizontal-coaction-counit", counitOk, counitWit);
  }
  {
    bool ok = true;
    std::string wit;
    for (const auto& mono : P.su2().monosUpToDegree(2)) {
      for (int d = 1; d <= clampDeg(2, maxDegree); ++d) {
        for (const Word& s : P.sym().reps(SymAlg::Flavor::Sym, d)) {
          BtElem x = P.btMul(P.btOfB(SU2Alg::of(mono)),
                             P.btOfSym(LinComb{{s, one}}));
          bool sawFibreLeg = false;
          for (const auto& [k, c] : P.coactBt(x))
            if (!k.second.second.empty()) sawFibreLeg = true;
          if (!sawFibreLeg && ok) {
            ok = false;
            wit = mono.str() + " " + wordStr(s);
          }
        }
      }
    }
    rep.add("bundle-base-identification", ok, wit);
  }
  {
    std::vector<std::pair<std::string, AffComb>> psis = {
        {"U", A.ofGroup(Grouplike::U(1))},
        {"U^-1", A.ofGroup(Grouplike::U(-1))},
        {"U^2", A.ofGroup(Grouplike::U(2))},
        {"U^-2", A.ofGroup(Grouplike::U(-2))},
        {"xi", A.ofSym(LinComb{{Word{0}, one}})},
        {"xis", A.ofSym(LinComb{{Word{1}, Scalar::muPow(mode, 1)}})},
        {"xi*xis",
         AffComb{{AffKey{Grouplike::unit(), Word{0, 1}},
                  Scalar::muPow(mode, 1)}}},
    };
    bool coOk = true, prodOk = true, opOk = true;
    std::string coWit, prodWit, opWit;
    for (const auto& [label, psi] : psis) {
      if (!translationCoactionIdentity(P, psi) && coOk) {
        coOk = false;
        coWit = label;
      }
      if (!translationProductIdentity(P, psi) && prodOk) {
        prodOk = false;
        prodWit = label;
      }
      if (!translationOpCoactionIdentity(P, psi) && opOk) {
        opOk = false;
        opWit = label;
      }
    }
    rep.add("translation-coaction-identity", coOk, coWit);
    rep.add("translation-product-identity", prodOk, prodWit);
    rep.add("translation-op-coaction-identity", opOk, opWit);
  }
  {
    bool ok = true, unitOk = true;
    std::string wit, unitWit;
    std::vector<std::pair<std::string, BtElem>> phis = {
        {"a", P.btOfB(P.su2().alpha())},
        {"as", P.btOfB(P.su2().alphaStar())},
        {"g", P.btOfB(P.su2().gamma())},
        {"gs", P.btOfB(P.su2().gammaStar())},
        {"xi", P.btOfSym(LinComb{{Word{0}, one}})},
        {"xis", P.btOfSym(LinComb{{Word{1}, Scalar::muPow(mode, 1)}})},
    };
    std::vector<std::pair<std::string, LinComb>> thetas = {
        {"xi", LinComb{{Word{0}, one}}},
        {"xis", LinComb{{Word{1}, Scalar::muPow(mode, 1)}}},
    };
    for (const auto& [tl, th] : thetas) {
      for (const auto& [pl, phi] : phis) {
        BtTensor r1 = P.sigmaB(P.btOfSym(th), phi);
        BtTensor r2 = P.sigmaDeg1(th, phi);
        BtTensor r3 = P.sigmaSym(th, phi);
        if ((r1 != r2 || r1 != r3) && ok) {
          ok = false;
          wit = tl + " with " + pl;
        }
      }
    }
    for (const auto& [pl, phi] : phis)
      if (P.sigmaB(P.btUnit(), phi) != P.tensorOf(phi, P.btUnit()) && unitOk) {
        unitOk = false;
        unitWit = pl;
      }
    rep.add("sigma-route-agreement", ok, wit);
    rep.add("sigma-unit-transparent", unitOk, unitWit);
  }
  return rep;
}

// ---- gamma line -----------------------------------------------------------------

Report gammaReport(const BundleAlg& P, const Germ& rho) {
  Report rep;
  const AffineAlg& A = P.affine();
  const Mu& mode = P.mode();
  const Scalar one = Scalar::one();
  auto aU = [&](long n) { return A.ofGroup(Grouplike::U(n)); };
  auto area = [&](const Scalar& c) {
    return P.ahOfExt(LinComb{{Word{0, 1}, c}});
  };

  {
    std::vector<AhElem> family;
    for (long n = -6; n <= 6; ++n)
      if (n != 0) family.push_back(rho.piGroup(n));
    size_t r = spanRank(family);
    rep.add("gamma-dimension", r == 1, r == 1 ? "" : "rank " + std::to_string(r),
            std::to_string(r));
  }
  {
    AhElem zeta = subMap(rho.piGroup(1), rho.piGroup(-1));
    bool ok = !zeta.empty() &&
              zeta == area(-Scalar::muPow(mode, 1) - Scalar::muPow(mode, -1)) &&
              P.circGroupAh(zeta, 1) == scaleAh(zeta, Scalar::muPow(mode, -2));
    rep.add("gamma-twist-eigenvalue", ok);
  }
  {
    bool ok = qInt(mode, 0).isZero() && qInt(mode, 1).isOne();
    std::string wit;
    for (long n = -4; n <= 4 && ok; ++n) {
      if (qInt(mode, n + 1) != qInt(mode, n) + Scalar::muPow(mode, -2 * n)) {
        ok = false;
        wit = "step " + std::to_string(n);
      }
    }
    rep.add("gamma-integer-recursion", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (long n = -4; n <= 4 && ok; ++n) {
      AffComb x = aU(n);
      addAffScaled(x, aU(1), -qInt(mode, n));
      addAffScaled(x, A.unit(), qInt(mode, n) - one);
      if (!rho.piTilde(x).empty()) {
        ok = false;
        wit = "exponent " + std::to_string(n);
      }
    }
    rep.add("gamma-ideal-annihilation", ok, wit);
  }
  if (degenerateMode(mode)) {
    bool ok = true;
    std::string wit;
    for (long n = -6; n <= 6 && ok; ++n)
      if (qInt(mode, n) != Scalar::ofInt(n)) {
        ok = false;
        wit = "exponent " + std::to_string(n);
      }
    rep.add("gamma-integer-degenerate", ok, wit);
  }
  return rep;
}

// ---- suite: connections -----------------------------------------------------------

Report connectionsSuite(const Mu& mode, int maxDegree) {
  Report rep;
  BundleAlg P(mode);
  Germ rho(P, curvatureGermData(P));
  Germ fr(P, frameGermData(P));
  const AffineAlg& A = P.affine();
  const Scalar one = Scalar::one();
  const bool degenerate = degenerateMode(mode);

  auto aU = [&](long n) { return A.ofGroup(Grouplike::U(n)); };
  auto aPow = [&](int p, int q) {
    return AffComb{{AffKey{Grouplike::unit(), powWord(p, q)},
                    Scalar::muPow(mode, q)}};
  };
  auto area = [&](const Scalar& c) {
    return P.ahOfExt(LinComb{{Word{0, 1}, c}});
  };
  AffComb aXi = A.ofSym(LinComb{{Word{0}, one}});
  AffComb aXiStar = A.ofSym(LinComb{{Word{1}, Scalar::muPow(mode, 1)}});

  {
    bool ok = rho.piGroup(1) == area(-Scalar::muPow(mode, -1)) &&
              rho.piGroup(-1) == area(Scalar::muPow(mode, 1)) &&
              rho.piGroup(0).empty();
    std::string wit;
    for (long n = -6; n <= 6 && ok; ++n) {
      if (rho.piGroup(n) != scaleAh(rho.piGroup(1), qInt(mode, n))) {
        ok = false;
        wit = "exponent " + std::to_string(n);
      }
    }
    rep.add("curvature-group-powers", ok, wit);
  }
  rep.merge(gammaReport(P, rho));
  {
    const int sweep = std::max(1, clampDeg(8, maxDegree));
    bool ok = true;
    std::string wit;
    for (int total = 1; total <= sweep && ok; ++total) {
      for (int p = 0; p <= total; ++p) {
        int q = total - p;
        AhElem got = rho.piTilde(aPow(p, q));
        Scalar coeff = curvatureAreaScale(mode, p, q);
        AhElem want;
        if (!coeff.isZero())
          addInto(want, AhKey{SU2Mono{}, Word{0, 1}, powWord(p, q)}, coeff);
        if (got != want) {
          ok = false;
          std::ostringstream os;
          os << "p=" << p << " q=" << q;
          wit = os.str();
          break;
        }
        if (mode.symbolic) {
          Scalar viaArea = areaCoeff(mode, p, q) * Scalar::muPow(mode, q) *
                           (-Scalar::muPow(mode, 1) /
                            (one - Scalar::muPow(mode, 2)));
          if (coeff != viaArea) {
            ok = false;
            std::ostringstream os;
            os << "p=" << p << " q=" << q << " coefficient route mismatch";
            wit = os.str();
            break;
          }
        }
      }
    }
    rep.add("curvature-closed-form", ok, wit);
  }
  std::vector<std::pair<std::string, AffComb>> samples;
  {
    AffComb um1 = aU(1);
    addAffScaled(um1, A.unit(), -one);
    AffComb u2m1 = aU(2);
    addAffScaled(u2m1, A.unit(), -one);
    samples = {{"U-1", um1},          {"U^2-1", u2m1},
               {"xi", aXi},           {"xis", aXiStar},
               {"U^-1*xi", A.mul(aU(-1), aXi)},
               {"xi*xis", aPow(1, 1)}};
  }
  {
    bool ok = true;
    std::string wit;
    for (const auto& [label, a] : samples) {
      AhAff lhs = P.coactAh(rho.piTilde(a));
      AhAff rhs;
      for (const auto& [p, c] : A.adjoint(a)) {
        AhElem v = rho.piTilde(AffComb{{p.first, one}});
        for (const auto& [k, c2] : v)
          addInto(rhs, std::make_pair(k, p.second), c * c2);
      }
      if (lhs != rhs && ok) {
        ok = false;
        wit = label;
      }
    }
    rep.add("curvature-adjoint-covariance", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (const auto& [label, a] : samples) {
      AhElem lhs = rho.piTilde(A.star(A.antipode(a)));
      AhElem rhs = scaleAh(P.ahStar(rho.piTilde(a)), -one);
      if (lhs != rhs && ok) {
        ok = false;
        wit = label;
      }
    }
    rep.add("curvature-star-antipode", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    std::vector<std::pair<AhElem, AffComb>> rights = {
        {P.ahOf(P.su2().alpha(), LinComb{{Word{}, one}},
                LinComb{{Word{}, one}}),
         aU(1)},
        {P.ahOf(P.su2().gamma(), LinComb{{Word{}, one}},
                LinComb{{Word{}, one}}),
         aU(1)},
        {P.ahOfExt(LinComb{{Word{0}, one}}), aU(2)},
    };
    for (size_t li = 0; li < 3; ++li) {
      const AffComb& a = samples[li].second;
      for (const auto& [phi, shift] : rights) {
        AhElem lhs = P.ahMul(rho.piTilde(a), phi);
        AhElem rhs = P.ahMul(phi, rho.piTilde(A.mul(a, shift)));
        if (lhs != rhs && ok) {
          ok = false;
          wit = samples[li].first;
        }
      }
    }
    rep.add("curvature-base-module-law", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    AffComb um1 = aU(1);
    addAffScaled(um1, A.unit(), -one);
    std::vector<std::pair<std::string, AffComb>> lefts = {{"xi", aXi},
                                                          {"xis", aXiStar}};
    for (int d = 0; d <= clampDeg(2, maxDegree); ++d)
      for (const Word& w : P.sym().reps(SymAlg::Flavor::Sym, d))
        lefts.push_back(
            {"(U-1)" + wordStr(w), A.mul(um1, A.ofSym(LinComb{{w, one}}))});
    for (const auto& [label, x] : lefts) {
      for (long n : {1L, -1L}) {
        AhElem lhs = rho.piTilde(A.mul(x, aU(n)));
        AhElem rhs = P.circGroupAh(rho.piTilde(x), n);
        if (lhs != rhs && ok) {
          ok = false;
          wit = label + " n=" + std::to_string(n);
        }
      }
    }
    rep.add("curvature-group-module-compat", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    std::vector<std::pair<std::string, AffComb>> xs = {
        {"xi", aXi}, {"xis", aXiStar}, {"xi*xis", aPow(1, 1)}};
    for (const auto& [label, x] : xs) {
      for (long n : {1L, -1L, 2L}) {
        if (rho.piTilde(A.mul(x, aU(n))) !=
                P.circGroupAh(rho.piTilde(x), n) &&
            ok) {
          ok = false;
          wit = label + " n=" + std::to_string(n);
        }
      }
    }
    rep.add("curvature-derivation-reduction", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    std::vector<std::pair<std::string, AhElem>> commutant = {
        {"pi(U)", rho.piGroup(1)},
        {"zeta", subMap(rho.piGroup(1), rho.piGroup(-1))},
        {"rho(xi)", rho.piTilde(aXi)},
        {"frame(e+)", fr.piLetter(0)},
        {"e+", P.ahOfExt(LinComb{{Word{0}, one}})},
    };
    for (int d = 1; d <= clampDeg(3, maxDegree) && ok; ++d) {
      for (const Word& w : P.sym().braid().wordsOfDegree(d)) {
        for (const auto& [label, x] : commutant) {
          if (P.circWordAh(x, w) != P.circWordAhPeel(x, w)) {
            ok = false;
            wit = label + " acted by " + wordStr(w);
            break;
          }
        }
        if (!ok) break;
      }
    }
    rep.add("curvature-action-two-route", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (long a = -2; a <= 2 && ok; ++a) {
      for (int d = 0; d <= clampDeg(3, maxDegree) && ok; ++d) {
        for (const Word& w : P.sym().reps(SymAlg::Flavor::Sym, d)) {
          AffComb x = A.mul(aU(a), A.ofSym(LinComb{{w, one}}));
          for (const auto& [k, c] : rho.piTilde(x)) {
            int sd = static_cast<int>(k.s.size());
            if (k.e != Word{0, 1} || (sd != d && sd != d + 1)) {
              ok = false;
              std::ostringstream os;
              os << "U^" << a << " " << wordStr(w);
              wit = os.str();
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    rep.add("curvature-degree-bound", ok, wit);
  }
  {
    const int N = std::max(1, clampDeg(4, maxDegree));
    const size_t expected =
        degenerate ? 3 : static_cast<size_t>((N + 1) * (N + 2) / 2);
    std::vector<AhElem> family{subMap(rho.piGroup(1), rho.piGroup(-1))};
    for (int d = 1; d <= N; ++d)
      for (int p = 0; p <= d; ++p)
        family.push_back(fr.piTilde(aPow(p, d - p)));
    size_t got = spanRank(family);
    rep.add("upsilon-rank-frame", got == expected,
            got == expected ? "" : "rank " + std::to_string(got),
            std::to_string(got));

    std::vector<AhElem> fam;
    for (long a = -N; a <= N; ++a)
      for (int d = 0; d <= N; ++d)
        for (int p = 0; p <= d; ++p) {
          if (a == 0 && d == 0) continue;
          fam.push_back(rho.piTilde(A.mul(aU(a), aPow(p, d - p))));
        }
    size_t got2 = spanRank(fam);
    rep.add("upsilon-rank-group", got2 == expected,
            got2 == expected ? "" : "rank " + std::to_string(got2),
            std::to_string(got2));
  }
  {
    AhElem plusWant;
    addInto(plusWant, AhKey{SU2Mono{}, Word{0}, Word{}}, one);
    addInto(plusWant, AhKey{SU2Mono{}, Word{0, 1}, Word{0}},
            Scalar::muPow(mode, -1) + Scalar::muPow(mode, -3));
    AhElem minusWant;
    addInto(minusWant, AhKey{SU2Mono{}, Word{1}, Word{}}, one);
    addInto(minusWant, AhKey{SU2Mono{}, Word{0, 1}, Word{1}},
            Scalar() - Scalar::muPow(mode, 1) - Scalar::muPow(mode, 3));
    rep.add("frame-vertical-letters",
            fr.piLetter(0) == plusWant && fr.piLetter(1) == minusWant);
    bool split = true;
    for (int i = 0; i < 2; ++i) {
      Word w{static_cast<uint8_t>(i)};
      AhElem lhs = fr.piWord(w);
      AhElem rhs = fr.zetaLetter(i);
      for (const auto& [k, c] : rho.piWord(w)) addInto(rhs, k, c);
      if (lhs != rhs) split = false;
    }
    rep.add("frame-germ-split", split);
  }
  rep.merge(frameRelationsReport(P, flatFrame(P)));
  {
    Frame f = flatFrame(P);
    std::vector<Word> exts = {Word{}, Word{0}, Word{1}, Word{0, 1}};
    bool ok = true;
    std::string wit;
    std::vector<AhElem> images;
    for (const auto& m : P.su2().monosUpToDegree(clampDeg(3, maxDegree))) {
      for (const auto& w : exts) {
        AhElem got = frameApply(P, f, SU2Alg::of(m), w);
        AhElem want =
            P.ahOf(SU2Alg::of(m), LinComb{{w, one}}, LinComb{{Word{}, one}});
        if (got != want && ok) {
          ok = false;
          wit = m.str() + " " + wordStr(w);
        }
        images.push_back(got);
      }
    }
    if (ok && spanRank(images) != images.size()) {
      ok = false;
      wit = "image rank below monomial count";
    }
    rep.add("frame-multiplication-bijective", ok, wit);

    Frame zero;
    zero.lambda.assign(2, AhElem{});
    rep.add("frame-degenerate-collapse",
            frameApply(P, zero, P.su2().unit(), Word{0}).empty() &&
                frameRelationsReport(P, zero).allPass());
  }
  {
    Translaton t = canonicalTranslaton(P);
    rep.merge(translatonReport(P, t, std::max(1, clampDeg(2, maxDegree))));
    Translaton sh = shiftedTranslaton(P);
    bool shiftVanishes = true;
    for (size_t i = 0; i < sh.value.size(); ++i)
      if (!subMap(sh.value[i], t.value[i]).empty()) shiftVanishes = false;
    Report shRep =
        translatonReport(P, sh, std::max(1, clampDeg(2, maxDegree)));
    bool ok;
    std::string wit;
    if (shiftVanishes) {
      ok = shRep.allPass();
      if (!ok) wit = "degenerate shift still fails";
    } else {
      ok = shRep.failCount() > 0;
      if (ok) {
        for (const auto& c : shRep.checks)
          if (!c.pass && c.witness.empty()) ok = false;
        if (!ok) wit = "failing law carries no witness";
      } else {
        wit = "shifted lift slipped through every law";
      }
    }
    rep.add("translaton-mutant-detected", ok, wit);
  }
  {
    auto repOf = [&](const Word& s1, const SU2Element& b, const Word& s2) {
      BtTensor t = P.tensorOf(P.btOfSym(LinComb{{s1, one}}), P.btOfB(b));
      return P.tensorMulRight(t, P.btOfSym(LinComb{{s2, one}}));
    };
    bool ok = true;
    std::string wit;
    for (const SU2Element& b : {P.su2().unit(), P.su2().alpha(),
                                SU2Alg::of(SU2Mono{0, 1, 1})}) {
      CAff co = P.coactC(repOf(Word{}, b, Word{}));
      if (co.empty() && ok) {
        ok = false;
        wit = "base monomial coacts to zero";
      }
      for (const auto& [pr, c] : co)
        if (!pr.second.second.empty() && ok) {
          ok = false;
          wit = "base monomial leaks a fibre leg";
        }
    }
    for (const auto& [s1, s2] : std::vector<std::pair<Word, Word>>{
             {Word{0}, Word{}}, {Word{}, Word{1}}, {Word{0}, Word{1}}}) {
      CAff co = P.coactC(repOf(s1, P.su2().alpha(), s2));
      bool sawFibreLeg = false;
      for (const auto& [pr, c] : co)
        if (!pr.second.second.empty()) sawFibreLeg = true;
      if (!sawFibreLeg && ok) {
        ok = false;
        wit = "fibre monomial hides its fibre leg";
      }
    }
    rep.add("quotient-degree-zero-base", ok, wit);
  }
  {
    bool invariance = false, hermiticity = false;
    try {
      GermData bad = curvatureGermData(P);
      bad.piU = P.ahOfExt(LinComb{{Word{0}, one}});
      Germ g(P, bad);
    } catch (const InconsistentGermData&) {
      invariance = true;
    }
    try {
      GermData bad = curvatureGermData(P);
      bad.piU = P.ahUnit();
      Germ g(P, bad);
    } catch (const InconsistentGermData&) {
      hermiticity = true;
    }
    rep.add("germ-rejects-invariance-break", invariance);
    rep.add("germ-rejects-hermiticity-break", hermiticity);
  }
  return rep;
}

// ---- registry ---------------------------------------------------------------------

std::vector<std::string> librarySuiteNames() {
  return {"scalars",     "base-hopf",      "braiding", "braided-algebras",
          "affine-hopf", "hopf-fibration", "connections"};
}

Report runLibrarySuite(const std::string& name, const Mu& mode,
                       int maxDegree) {
  if (name == "scalars") return scalarsSuite();
  if (name == "base-hopf") return baseHopfSuite();
  if (name == "braiding") return braidingSuite(mode, maxDegree);
  if (name == "braided-algebras") return braidedAlgebrasSuite(mode, maxDegree);
  if (name == "affine-hopf") return affineHopfSuite(mode, maxDegree);
  if (name == "hopf-fibration") return hopfFibrationSuite(mode, maxDegree);
  if (name == "connections") return connectionsSuite(mode, maxDegree);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace qaff
