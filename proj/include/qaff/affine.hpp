#pragma once
/*
 * Affine extension of the base Hopf algebra by the braided symmetric
 * algebra of a bicovariant bimodule.
 *
 * Elements are kept in the normal form  sum c * (g (x) w)  with g a
 * grouplike of the base and w a representative word of the symmetric
 * algebra.  The structure maps:
 *
 *   product      (g1 (x) s1)(g2 (x) s2) = g1 g2 (x) (s1 . g2) s2
 *   star         (g (x) s)* = g^-1 (x) (s* . g^-1)
 *   coproduct    on a degree-n word, sum over splits k+l=n of
 *                (coaction_k (x) id_l) M_kl, with the coaction's group leg
 *                multiplied from the left into the second tensor factor,
 *                then multiplied by the grouplike coproduct g (x) g
 *   counit       constant term of the symmetric part
 *   antipode     (-1)^n sum reversal{s_k} antipode(c_k) antipode(g)
 *                over coaction branches s -> s_k (x) c_k
 *
 * verifyHopf checks the Hopf *-algebra axioms on a bounded basis.
 */

#include <map>
#include <string>
#include <utility>

#include "qaff/report.hpp"
#include "qaff/symalg.hpp"

namespace qaff {

using AffKey = std::pair<Grouplike, Word>;
using AffComb = std::map<AffKey, Scalar>;
using AffTensor = std::map<std::pair<AffKey, AffKey>, Scalar>;

inline void addAff(AffComb& acc, const AffKey& k, const Scalar& c) {
  if (c.isZero()) return;
  auto it = acc.find(k);
  if (it == acc.end()) {
    acc.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.isZero()) acc.erase(it);
  }
}

inline void addAffScaled(AffComb& acc, const AffComb& x, const Scalar& c) {
  if (c.isZero()) return;
  for (const auto& [k, v] : x) addAff(acc, k, v * c);
}

inline AffComb subAff(const AffComb& a, const AffComb& b) {
  AffComb out = a;
  addAffScaled(out, b, -Scalar::one());
  return out;
}

inline void addAffT(AffTensor& acc, const AffKey& k1, const AffKey& k2,
                    const Scalar& c) {
  if (c.isZero()) return;
  auto key = std::make_pair(k1, k2);
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.isZero()) acc.erase(it);
  }
}

class AffineAlg {
 public:
  explicit AffineAlg(BimoduleSpec spec, int maxDeg = 8);

  const SymAlg& sym() const { return sym_; }
  const BimoduleSpec& spec() const { return sym_.spec(); }

  AffComb unit() const;
  AffComb ofGroup(const Grouplike& g) const;
  // Embed a symmetric-algebra element (reduces it first).
  AffComb ofSym(const LinComb& s) const;
  AffComb ofPair(const Grouplike& g, const LinComb& s) const;

  AffComb mul(const AffComb& a, const AffComb& b) const;
  AffComb star(const AffComb& x) const;
  Scalar counit(const AffComb& x) const;
  AffTensor coproduct(const AffComb& x) const;
  AffComb antipode(const AffComb& x) const;
  // Right adjoint coaction x -> x(2) (x) antipode(x(1)) x(3).
  AffTensor adjoint(const AffComb& x) const;

  AffTensor mulTensor(const AffTensor& a, const AffTensor& b) const;
  AffTensor starTensor(const AffTensor& t) const;

  std::string str(const AffComb& x) const;

  // Hopf *-algebra axioms on the basis {U^a (x) w : |a| <= aBound,
  // deg w <= dBound}; the homomorphism property of the coproduct is checked
  // on all pairs of algebra generators.
  Report verifyHopf(int aBound, int dBound) const;

 private:
  SymAlg sym_;
};

}  // namespace qaff
