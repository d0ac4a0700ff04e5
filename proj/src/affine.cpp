#include "qaff/affine.hpp"

#include <tuple>
#include <utility>
#include <vector>

#include "qaff/errors.hpp"

namespace qaff {

AffineAlg::AffineAlg(BimoduleSpec spec, int maxDeg)
    : sym_(std::move(spec), maxDeg) {}

AffComb AffineAlg::unit() const {
  return ofGroup(Grouplike::unit(spec().groupRank()));
}

AffComb AffineAlg::ofGroup(const Grouplike& g) const {
  return AffComb{{{g, Word{}}, Scalar::one()}};
}

AffComb AffineAlg::ofSym(const LinComb& s) const {
  return ofPair(Grouplike::unit(spec().groupRank()), s);
}

AffComb AffineAlg::ofPair(const Grouplike& g, const LinComb& s) const {
  AffComb out;
  for (const auto& [w, c] : sym_.reduce(SymAlg::Flavor::Sym, s))
    addAff(out, {g, w}, c);
  return out;
}

AffComb AffineAlg::mul(const AffComb& a, const AffComb& b) const {
  AffComb out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      // (g1 (x) s1)(g2 (x) s2) = g1 g2 (x) (s1 . g2) s2
      LinComb twisted =
          sym_.circ(SymAlg::Flavor::Sym, LinComb{{ka.second, Scalar::one()}},
                    kb.first);
      LinComb prod = sym_.mul(SymAlg::Flavor::Sym, twisted,
                              LinComb{{kb.second, Scalar::one()}});
      Grouplike g = ka.first * kb.first;
      for (const auto& [w, c] : prod) addAff(out, {g, w}, ca * cb * c);
    }
  }
  return out;
}

AffComb AffineAlg::star(const AffComb& x) const {
  AffComb out;
  for (const auto& [k, c] : x) {
    Grouplike gi = k.first.inverse();
    LinComb s = sym_.circ(SymAlg::Flavor::Sym,
                          sym_.star(SymAlg::Flavor::Sym,
                                    LinComb{{k.second, Scalar::one()}}),
                          gi);
    for (const auto& [w, cw] : s) addAff(out, {gi, w}, c * cw);
  }
  return out;
}

Scalar AffineAlg::counit(const AffComb& x) const {
  Scalar out;
  for (const auto& [k, c] : x)
    if (k.second.empty()) out += c;
  return out;
}

AffTensor AffineAlg::coproduct(const AffComb& x) const {
  AffTensor out;
  const auto& bc = sym_.braid();
  for (const auto& [k, c] : x) {
    const Grouplike& g = k.first;
    const Word& w = k.second;
    const int n = static_cast<int>(w.size());
    for (int split = 0; split <= n; ++split) {
      const int l = n - split;
      LinComb shuffled = bc.applyMkl(split, l, LinComb{{w, Scalar::one()}});
      for (const auto& [u, cu] : shuffled) {
        Word w1(u.begin(), u.begin() + split), w2(u.begin() + split, u.end());
        for (const auto& [cc, v, h] : bc.coactWord(w1)) {
          LinComb left = sym_.reduceWord(SymAlg::Flavor::Sym, v);
          LinComb right = sym_.reduceWord(SymAlg::Flavor::Sym, w2);
          for (const auto& [lw, lc] : left)
            for (const auto& [rw, rc] : right)
              addAffT(out, {g, lw}, {g * h, rw}, c * cu * cc * lc * rc);
        }
      }
    }
  }
  return out;
}

AffComb AffineAlg::antipode(const AffComb& x) const {
  AffComb out;
  const auto& bc = sym_.braid();
  for (const auto& [k, c] : x) {
    const Grouplike& g = k.first;
    const Word& w = k.second;
    Scalar sign = (w.size() % 2 == 0) ? Scalar::one() : -Scalar::one();
    for (const auto& [cc, v, h] : bc.coactWord(w)) {
      LinComb rev = sym_.reversal(SymAlg::Flavor::Sym,
                                  LinComb{{v, Scalar::one()}});
      // reversal{s_k} placed left of the grouplike (h g)^-1.
      AffComb term = mul(ofSym(rev), ofGroup((h * g).inverse()));
      addAffScaled(out, term, c * cc * sign);
    }
  }
  return out;
}

AffTensor AffineAlg::adjoint(const AffComb& x) const {
  // x -> x(2) (x) antipode(x(1)) x(3)
  AffTensor out;
  for (const auto& [k, c] : x) {
    AffComb single{{k, c}};
    AffTensor cop = coproduct(single);
    for (const auto& [pair1, c1] : cop) {
      AffTensor inner = coproduct(AffComb{{pair1.second, Scalar::one()}});
      for (const auto& [pair2, c2] : inner) {
        AffComb wing = mul(antipode(AffComb{{pair1.first, Scalar::one()}}),
                           AffComb{{pair2.second, Scalar::one()}});
        for (const auto& [kw, cw] : wing)
          addAffT(out, pair2.first, kw, c1 * c2 * cw);
      }
    }
  }
  return out;
}

AffTensor AffineAlg::mulTensor(const AffTensor& a, const AffTensor& b) const {
  AffTensor out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      AffComb left = mul(AffComb{{ka.first, Scalar::one()}},
                         AffComb{{kb.first, Scalar::one()}});
      AffComb right = mul(AffComb{{ka.second, Scalar::one()}},
                          AffComb{{kb.second, Scalar::one()}});
      for (const auto& [kl, cl] : left)
        for (const auto& [kr, cr] : right)
          addAffT(out, kl, kr, ca * cb * cl * cr);
    }
  }
  return out;
}

AffTensor AffineAlg::starTensor(const AffTensor& t) const {
  AffTensor out;
  for (const auto& [k, c] : t) {
    AffComb left = star(AffComb{{k.first, Scalar::one()}});
    AffComb right = star(AffComb{{k.second, Scalar::one()}});
    for (const auto& [kl, cl] : left)
      for (const auto& [kr, cr] : right) addAffT(out, kl, kr, c * cl * cr);
  }
  return out;
}

std::string AffineAlg::str(const AffComb& x) const {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.str() + ")*" + k.first.str();
    if (!k.second.empty()) s += "." + wordStr(k.second, spec().labels());
  }
  return s;
}

Report AffineAlg::verifyHopf(int aBound, int dBound) const {
  Report rep;
  const int rank = spec().groupRank();
  // Basis sample: U^a (x) w along the first group generator.
  std::vector<AffComb> basis;
  std::vector<AffKey> keys;
  for (int a = -aBound; a <= aBound; ++a) {
    Grouplike g = Grouplike::unit(rank);
    g.e[0] = a;
    for (int n = 0; n <= dBound; ++n)
      for (const Word& w : sym_.reps(SymAlg::Flavor::Sym, n)) {
        basis.push_back(AffComb{{{g, w}, Scalar::one()}});
        keys.push_back({g, w});
      }
  }
  auto keyStr = [&](size_t i) { return str(basis[i]); };

  {
    bool ok = true;
    std::string wit;
    for (size_t i = 0; i < basis.size() && ok; ++i) {
      AffTensor cop = coproduct(basis[i]);
      // (coproduct (x) id) and (id (x) coproduct) as triple maps.
      std::map<std::tuple<AffKey, AffKey, AffKey>, Scalar> lhs, rhs;
      for (const auto& [pr, c] : cop) {
        for (const auto& [pr2, c2] : coproduct(AffComb{{pr.first, Scalar::one()}})) {
          auto key = std::make_tuple(pr2.first, pr2.second, pr.second);
          lhs[key] += c * c2;
          if (lhs[key].isZero()) lhs.erase(key);
        }
        for (const auto& [pr2, c2] : coproduct(AffComb{{pr.second, Scalar::one()}})) {
          auto key = std::make_tuple(pr.first, pr2.first, pr2.second);
          rhs[key] += c * c2;
          if (rhs[key].isZero()) rhs.erase(key);
        }
      }
      if (lhs != rhs) {
        ok = false;
        wit = keyStr(i);
      }
    }
    rep.add("coproduct-coassociative", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    for (size_t i = 0; i < basis.size() && ok; ++i) {
      AffComb left, right;
      for (const auto& [pr, c] : coproduct(basis[i])) {
        addAff(left, pr.first,
               c * counit(AffComb{{pr.second, Scalar::one()}}));
        addAff(right, pr.second,
               c * counit(AffComb{{pr.first, Scalar::one()}}));
      }
      if (!subAff(left, basis[i]).empty() || !subAff(right, basis[i]).empty()) {
        ok = false;
        wit = keyStr(i);
      }
    }
    rep.add("counit-axiom", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    for (size_t i = 0; i < basis.size() && ok; ++i) {
      AffComb conv1, conv2;
      for (const auto& [pr, c] : coproduct(basis[i])) {
        addAffScaled(conv1,
                     mul(antipode(AffComb{{pr.first, Scalar::one()}}),
                         AffComb{{pr.second, Scalar::one()}}),
                     c);
        addAffScaled(conv2,
                     mul(AffComb{{pr.first, Scalar::one()}},
                         antipode(AffComb{{pr.second, Scalar::one()}})),
                     c);
      }
      AffComb target;
      addAffScaled(target, unit(), counit(basis[i]));
      if (!subAff(conv1, target).empty() || !subAff(conv2, target).empty()) {
        ok = false;
        wit = keyStr(i);
      }
    }
    rep.add("antipode-axiom", ok, wit);
  }

  {
    // Homomorphism property of the coproduct on generator pairs.
    std::vector<AffComb> gens;
    Grouplike up = Grouplike::unit(rank), dn = Grouplike::unit(rank);
    up.e[0] = 1;
    dn.e[0] = -1;
    gens.push_back(ofGroup(up));
    gens.push_back(ofGroup(dn));
    for (int i = 0; i < spec().dim(); ++i)
      gens.push_back(ofSym(LinComb{{Word{static_cast<uint8_t>(i)}, Scalar::one()}}));
    bool ok = true, okEps = true;
    std::string wit, witEps;
    for (size_t i = 0; i < gens.size(); ++i) {
      for (size_t j = 0; j < gens.size(); ++j) {
        AffComb prod = mul(gens[i], gens[j]);
        AffTensor viaMul = mulTensor(coproduct(gens[i]), coproduct(gens[j]));
        AffTensor direct = coproduct(prod);
        AffTensor diff = direct;
        for (const auto& [k, c] : viaMul) {
          diff[k] += -c;
          if (diff[k].isZero()) diff.erase(k);
        }
        if (!diff.empty() && ok) {
          ok = false;
          wit = str(gens[i]) + " , " + str(gens[j]);
        }
        if (!(counit(prod) == counit(gens[i]) * counit(gens[j])) && okEps) {
          okEps = false;
          witEps = str(gens[i]) + " , " + str(gens[j]);
        }
      }
    }
    rep.add("coproduct-homomorphism", ok, wit);
    rep.add("counit-homomorphism", okEps, witEps);
  }

  {
    bool ok = true;
    std::string wit;
    for (size_t i = 0; i < basis.size() && ok; ++i) {
      AffTensor lhs = coproduct(star(basis[i]));
      AffTensor rhs = starTensor(coproduct(basis[i]));
      AffTensor diff = lhs;
      for (const auto& [k, c] : rhs) {
        diff[k] += -c;
        if (diff[k].isZero()) diff.erase(k);
      }
      if (!diff.empty()) {
        ok = false;
        wit = keyStr(i);
      }
    }
    rep.add("coproduct-star-compatible", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    for (size_t i = 0; i < basis.size() && ok; ++i) {
      // (star о antipode) is an involution.
      AffComb y = star(antipode(basis[i]));
      AffComb z = star(antipode(y));
      if (!subAff(z, basis[i]).empty()) {
        ok = false;
        wit = keyStr(i);
      }
    }
    rep.add("antipode-star-involution", ok, wit);
  }

  return rep;
}

}  // namespace qaff
