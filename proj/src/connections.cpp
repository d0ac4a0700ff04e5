#include "qaff/connections.hpp"

#include <sstream>

#include "qaff/errors.hpp"

namespace qaff {

namespace {

Scalar kOne() { return Scalar::one(); }

AhElem scaleAh(const AhElem& x, const Scalar& c) {
  AhElem out;
  for (const auto& [k, v] : x) addInto(out, k, c * v);
  return out;
}

void addAh(AhElem& acc, const AhElem& x, const Scalar& c) {
  for (const auto& [k, v] : x) addInto(acc, k, c * v);
}

BtTensor scaleBtT(const BtTensor& x, const Scalar& c) {
  BtTensor out;
  for (const auto& [k, v] : x) addInto(out, k, c * v);
  return out;
}

void addBtT(BtTensor& acc, const BtTensor& x, const Scalar& c) {
  for (const auto& [k, v] : x) addInto(acc, k, c * v);
}

}  // namespace

// ---------------------------------------------------------------------------
// Germ
// ---------------------------------------------------------------------------

Germ::Germ(const BundleAlg& P, GermData data) : P_(&P), data_(std::move(data)) {
  const BimoduleSpec& spec = P.sym().spec();
  if (!data_.zeta.empty() &&
      static_cast<int>(data_.zeta.size()) != spec.dim()) {
    throw InconsistentGermData("boundary values must cover the module basis");
  }
  validate();
}

void Germ::validate() const {
  const BundleAlg& P = *P_;
  const BimoduleSpec& spec = P.sym().spec();

  // pi(U) must be coaction-invariant: the adjoint coaction of the group
  // generator is trivial.
  {
    AhAff lhs = P.coactAh(data_.piU);
    AhAff rhs;
    AffKey unitKey{Grouplike::unit(1), Word{}};
    for (const auto& [k, c] : data_.piU)
      addInto(rhs, std::make_pair(k, unitKey), c);
    if (lhs != rhs)
      throw InconsistentGermData("generator value is not coaction-invariant");
  }
  // pi(U)* = -pi[(U^{-1})*] = -pi(U).
  if (P.ahStar(data_.piU) != scaleAh(data_.piU, -kOne()))
    throw InconsistentGermData("generator value is not anti-hermitian");

  if (data_.zeta.empty()) return;
  for (int i = 0; i < spec.dim(); ++i) {
    const AhElem& zi = data_.zeta[i];
    // Coaction law: the boundary value transforms like the letter.
    {
      AhAff lhs = P.coactAh(zi);
      AhAff rhs;
      for (const auto& ct : spec.coactionOf(i)) {
        AffKey key{ct.grp, Word{}};
        for (const auto& [k, c] : data_.zeta[ct.vec])
          addInto(rhs, std::make_pair(k, key), ct.coeff * c);
      }
      if (lhs != rhs)
        throw InconsistentGermData("boundary value breaks the coaction law");
    }
    // Star law: zeta(theta*) = zeta(theta)*.
    {
      AhElem lhs;
      for (const auto& vb : spec.starBranches(i))
        addAh(lhs, data_.zeta[vb.vec], vb.coeff);
      if (lhs != P.ahStar(zi))
        throw InconsistentGermData("boundary value breaks the star law");
    }
    // Action law: zeta(theta . U) = zeta(theta) . U.
    {
      AhElem lhs;
      for (const auto& vb : spec.actionBranches(i, Grouplike::U(1)))
        addAh(lhs, data_.zeta[vb.vec], vb.coeff);
      if (lhs != P.circGroupAh(zi, 1))
        throw InconsistentGermData("boundary value breaks the action law");
    }
  }
}

AhElem Germ::zetaLetter(int letter) const {
  if (data_.zeta.empty()) return AhElem{};
  return data_.zeta.at(letter);
}

AhElem Germ::zetaOf(const LinComb& theta) const {
  AhElem out;
  for (const auto& [w, c] : theta) {
    if (w.size() != 1)
      throw InvariantViolation("boundary map takes degree-one input");
    addAh(out, zetaLetter(w.front()), c);
  }
  return out;
}

const AhElem& Germ::piGroup(long n) const {
  auto it = piCache_.find(n);
  if (it != piCache_.end()) return it->second;
  AhElem val;
  if (n > 0) {
    val = P_->circGroupAh(piGroup(n - 1), 1);
    addAh(val, data_.piU, kOne());
  } else if (n < 0) {
    val = P_->circGroupAh(piGroup(n + 1), -1);
    addAh(val, P_->circGroupAh(data_.piU, -1), -kOne());
  }
  return piCache_.emplace(n, std::move(val)).first->second;
}

AhElem Germ::piLetter(int letter) const {
  const BimoduleSpec& spec = P_->sym().spec();
  AhElem out = zetaLetter(letter);
  for (const auto& ct : spec.coactionOf(letter)) {
    Word lw{static_cast<Word::value_type>(ct.vec)};
    AhElem term =
        P_->ahMul(P_->ahOfSym(LinComb{{lw, kOne()}}), piGroup(ct.grp.e.at(0)));
    addAh(out, term, -ct.coeff);
  }
  return out;
}

AhElem Germ::piWord(const Word& w) const {
  if (w.empty()) return AhElem{};
  if (w.size() == 1) return piLetter(w.front());
  auto it = wordCache_.find(w);
  if (it != wordCache_.end()) return it->second;
  // Germ values lie in the graded commutant, where the action property lets
  // the last letter peel off:  pi(w theta) = pi(w) . theta.  Single-letter
  // steps are much cheaper than the alternating split sum, and consecutive
  // words share their prefix values.
  Word head(w.begin(), w.end() - 1);
  Word tail{w.back()};
  AhElem val = P_->circWordAhPeel(piWord(head), tail);
  return wordCache_.emplace(w, std::move(val)).first->second;
}

const AhElem& Germ::groupCirc(long a, const Word& w) const {
  auto key = std::make_pair(a, w);
  auto it = groupCircCache_.find(key);
  if (it != groupCircCache_.end()) return it->second;
  AhElem val;
  if (w.empty()) {
    val = piGroup(a);
  } else {
    Word head(w.begin(), w.end() - 1);
    Word tail{w.back()};
    val = P_->circWordAhPeel(groupCirc(a, head), tail);
  }
  return groupCircCache_.emplace(std::move(key), std::move(val)).first->second;
}

AhElem Germ::piTilde(const AffComb& x) const {
  AhElem out;
  for (const auto& [key, c] : x) {
    addAh(out, groupCirc(key.first.e.at(0), key.second), c);
    addAh(out, piWord(key.second), c);
  }
  return out;
}

GermData curvatureGermData(const BundleAlg& P) {
  GermData d;
  d.piU = P.ahOfExt(LinComb{{Word{1, 0}, Scalar::muPow(P.mode(), 1)}});
  return d;
}

GermData frameGermData(const BundleAlg& P) {
  GermData d = curvatureGermData(P);
  for (int i = 0; i < P.sym().spec().dim(); ++i) {
    Word lw{static_cast<Word::value_type>(i)};
    d.zeta.push_back(P.ahOfExt(LinComb{{lw, kOne()}}));
  }
  return d;
}

Scalar qInt(const Mu& mode, long n) {
  Scalar out = Scalar::ofInt(0);
  if (n > 0) {
    for (long j = 0; j < n; ++j) out += Scalar::muPow(mode, -2 * j);
  } else {
    for (long j = 1; j <= -n; ++j) out -= Scalar::muPow(mode, 2 * j);
  }
  return out;
}

Scalar areaCoeff(const Mu& mode, int p, int q) {
  Scalar out = kOne();
  for (int i = 1; i <= p; ++i)
    out *= kOne() - Scalar::muPow(mode, -2 * i - 2);
  for (int j = 1; j <= q; ++j)
    out *= kOne() - Scalar::muPow(mode, 2 * j + 2);
  return out;
}

Scalar curvatureAreaScale(const Mu& mode, int p, int q) {
  // areaCoeff(p, q) * mu^q * (-mu) / (1 - mu^2) with the pole cancelled
  // against the first factor of whichever product is nonempty.
  if (p == 0 && q == 0) return Scalar();
  Scalar out;
  if (p >= 1) {
    out = Scalar::muPow(mode, q) * (Scalar::muPow(mode, 2) + kOne()) *
          Scalar::muPow(mode, -3);
    for (int i = 2; i <= p; ++i)
      out *= kOne() - Scalar::muPow(mode, -2 * i - 2);
    for (int j = 1; j <= q; ++j)
      out *= kOne() - Scalar::muPow(mode, 2 * j + 2);
  } else {
    out = -(Scalar::muPow(mode, q + 1) * (kOne() + Scalar::muPow(mode, 2)));
    for (int j = 2; j <= q; ++j)
      out *= kOne() - Scalar::muPow(mode, 2 * j + 2);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Frames
// ---------------------------------------------------------------------------

Frame flatFrame(const BundleAlg& P) {
  Frame f;
  for (int i = 0; i < P.sym().spec().dim(); ++i) {
    Word lw{static_cast<Word::value_type>(i)};
    f.lambda.push_back(P.ahOfExt(LinComb{{lw, kOne()}}));
  }
  return f;
}

namespace {

AhElem lambdaOf(const Frame& f, const std::vector<VBranch>& branches) {
  AhElem out;
  for (const auto& vb : branches) addAh(out, f.lambda.at(vb.vec), vb.coeff);
  return out;
}

}  // namespace

Report frameRelationsReport(const BundleAlg& P, const Frame& f) {
  Report rep;
  const BimoduleSpec& spec = P.sym().spec();
  const auto& labels = spec.labels();
  for (int i = 0; i < spec.dim(); ++i) {
    for (int j = 0; j < spec.dim(); ++j) {
      AhElem lhs = scaleAh(P.ahMul(f.lambda[i], f.lambda[j]), -kOne());
      AhElem rhs;
      for (const auto& ct : spec.coactionOf(j)) {
        AhElem right = lambdaOf(f, spec.actionBranches(i, ct.grp));
        addAh(rhs, P.ahMul(f.lambda[ct.vec], right), ct.coeff);
      }
      rep.add("frame-mixing(" + labels[i] + "," + labels[j] + ")", lhs == rhs,
              P.ahStr(subMap(lhs, rhs)));
    }
  }
  const SU2Alg& B = P.su2();
  const SU2Element gens[] = {B.alpha(), B.alphaStar(), B.gamma(),
                             B.gammaStar()};
  const char* gnames[] = {"a", "as", "g", "gs"};
  LinComb extUnit{{Word{}, kOne()}};
  LinComb symUnit{{Word{}, kOne()}};
  for (int i = 0; i < spec.dim(); ++i) {
    for (int gi = 0; gi < 4; ++gi) {
      AhElem bAh = P.ahOf(gens[gi], extUnit, symUnit);
      AhElem lhs = P.ahMul(f.lambda[i], bAh);
      long w = gens[gi].begin()->first.weight();
      AhElem rhs =
          P.ahMul(bAh, lambdaOf(f, spec.actionBranches(i, Grouplike::U(w))));
      rep.add("frame-module(" + labels[i] + "," + gnames[gi] + ")", lhs == rhs,
              P.ahStr(subMap(lhs, rhs)));
    }
  }
  return rep;
}

AhElem frameApply(const BundleAlg& P, const Frame& f, const SU2Element& b,
                  const Word& ext) {
  LinComb unitW{{Word{}, kOne()}};
  AhElem acc = P.ahOf(b, unitW, unitW);
  for (auto letter : ext) acc = P.ahMul(acc, f.lambda.at(letter));
  return acc;
}

// ---------------------------------------------------------------------------
// Translatons
// ---------------------------------------------------------------------------

Translaton canonicalTranslaton(const BundleAlg& P) {
  Translaton t;
  for (int i = 0; i < P.sym().spec().dim(); ++i) {
    Word lw{static_cast<Word::value_type>(i)};
    t.value.push_back(
        P.tensorOf(P.btUnit(), P.btOfSym(LinComb{{lw, kOne()}})));
  }
  return t;
}

Translaton shiftedTranslaton(const BundleAlg& P) {
  Translaton t = canonicalTranslaton(P);
  addBtT(t.value[0],
         P.tensorOf(P.btOfB(SU2Alg::of(SU2Mono{2, 0, 0})), P.btUnit()),
         kOne());
  addBtT(t.value[1],
         P.tensorOf(P.btOfB(SU2Alg::of(SU2Mono{-2, 0, 0})), P.btUnit()),
         Scalar::muPow(P.mode(), -1));
  return t;
}

BtTensor translatonOf(const BundleAlg& P, const Translaton& t,
                      const LinComb& theta) {
  BtTensor out;
  for (const auto& [w, c] : theta) {
    if (w.size() != 1)
      throw InvariantViolation("translaton takes degree-one input");
    addBtT(out, t.value.at(w.front()), c);
  }
  (void)P;
  return out;
}

BtTensor translatonObstruction(const BundleAlg& P, const Translaton& t,
                               int letter, const SU2Element& phi) {
  const BimoduleSpec& spec = P.sym().spec();
  BtTensor out = P.tensorMulRight(t.value.at(letter), P.btOfB(phi));
  for (const auto& [mono, c] : phi) {
    for (const auto& vb :
         spec.actionBranches(letter, Grouplike::U(mono.weight()))) {
      BtTensor term =
          P.tensorMulLeft(P.btOfB(SU2Alg::of(mono)), t.value.at(vb.vec));
      addBtT(out, term, -(c * vb.coeff));
    }
  }
  return out;
}

namespace {

BtTensor starLegs(const BundleAlg& P, const BtTensor& t) {
  BtTensor out;
  for (const auto& [k, c] : t) {
    BtElem lf = P.btStar(BtElem{{k.first, Scalar::one()}});
    BtElem rf = P.btStar(BtElem{{k.second, Scalar::one()}});
    for (const auto& [lk, lc] : lf)
      for (const auto& [rk, rc] : rf)
        addInto(out, std::make_pair(lk, rk), c * lc * rc);
  }
  return out;
}

}  // namespace

Report translatonReport(const BundleAlg& P, const Translaton& t,
                        int phiDegree) {
  Report rep;
  const BimoduleSpec& spec = P.sym().spec();
  const auto& labels = spec.labels();

  for (int i = 0; i < spec.dim(); ++i) {
    // Coaction law: K xi(theta) = sum xi(theta_k) (x) c_k + 1 (x) 1 (x) theta.
    {
      CAff lhs = P.coactC(t.value[i]);
      CAff rhs;
      for (const auto& ct : spec.coactionOf(i)) {
        CElem emb = P.embedC(t.value[ct.vec]);
        AffKey key{ct.grp, Word{}};
        for (const auto& [k, c] : emb)
          addInto(rhs, std::make_pair(k, key), ct.coeff * c);
      }
      Word lw{static_cast<Word::value_type>(i)};
      CElem unitEmb = P.embedC(P.tensorOf(P.btUnit(), P.btUnit()));
      AffKey thetaKey{Grouplike::unit(1), lw};
      for (const auto& [k, c] : unitEmb)
        addInto(rhs, std::make_pair(k, thetaKey), c);
      rep.add("translaton-coaction(" + labels[i] + ")", lhs == rhs);
    }
    // Hermiticity: xi(theta*) = (* (x) *) xi(theta).
    {
      BtTensor lhs;
      for (const auto& vb : spec.starBranches(i))
        addBtT(lhs, t.value.at(vb.vec), vb.coeff);
      BtTensor rhs = starLegs(P, t.value[i]);
      rep.add("translaton-hermitian(" + labels[i] + ")", lhs == rhs);
    }
    // Regularity: the left obstruction vanishes in the quotient for every
    // B monomial up to the requested degree.
    {
      bool ok = true;
      std::string witness;
      for (const auto& mono : P.su2().monosUpToDegree(phiDegree)) {
        BtTensor obs = translatonObstruction(P, t, i, SU2Alg::of(mono));
        if (!P.embedC(obs).empty()) {
          ok = false;
          witness = "obstruction at " + mono.str() + ": " +
                    P.cStr(P.embedC(obs));
          break;
        }
      }
      rep.add("translaton-regular(" + labels[i] + ")", ok, witness);
    }
  }

  // Multiplicativity: the tensor-square kills the degree-two braid kernel.
  {
    bool ok = true;
    std::string witness;
    for (const auto& kv : P.sym().braid().kernelY(2)) {
      BtTensor acc;
      for (const auto& [w, c] : kv) {
        BtTensor prod =
            P.tensorMulComp(t.value.at(w.at(0)), t.value.at(w.at(1)));
        addBtT(acc, prod, c);
      }
      if (!P.embedC(acc).empty()) {
        ok = false;
        witness = P.cStr(P.embedC(acc));
        break;
      }
    }
    rep.add("translaton-multiplicative", ok, witness);
  }
  return rep;
}

}  // namespace qaff
