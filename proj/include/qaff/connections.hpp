#pragma once
/*
 * Connection germs, curvature, frames, and translatons over the affine
 * quantum bundle.
 *
 * A germ is determined by one horizontal value pi(U) on the group generator
 * together with boundary values zeta on the module basis letters.  pi
 * extends to group powers by the twisted derivation rule
 *     pi(U^{n+1}) = pi(U^n) . U + pi(U),
 * to module letters by subtracting the coaction legs,
 *     pi(theta) = zeta(theta) - sum theta_k pi(c_k),
 * and to the whole affine algebra by peeling letters through the circ
 * action.  Construction validates the coaction, star, and action axioms on
 * the generator values and throws InconsistentGermData on failure.
 *
 * Shipped germ data: the curvature germ (zeta = 0), whose extension scales
 * the area form by an explicit product coefficient on each symmetric word,
 * and the frame germ (zeta = exterior letter), whose extension is the
 * vertical projector of the bundle.
 *
 * A frame assigns a horizontal one-form to each module basis letter; the
 * induced map multiplies the values along exterior words.  A translaton is
 * a family of lifts of the module basis into Bt (x) Bt; its laws (coaction,
 * hermiticity, regularity, multiplicativity) are checked through the
 * relative tensor quotient.
 */

#include <vector>

#include "qaff/bundle.hpp"
#include "qaff/report.hpp"

namespace qaff {

struct GermData {
  AhElem piU;                // value on the group generator
  std::vector<AhElem> zeta;  // per module basis letter; empty = zero map
};

class Germ {
 public:
  // Validates the generator axioms; throws InconsistentGermData on failure.
  Germ(const BundleAlg& P, GermData data);

  const BundleAlg& bundle() const { return *P_; }
  bool zetaIsZero() const { return data_.zeta.empty(); }
  AhElem zetaLetter(int letter) const;
  AhElem zetaOf(const LinComb& theta) const;
  // Group powers by the twisted derivation rule (memoized).
  const AhElem& piGroup(long n) const;
  // zeta(theta) - sum theta_k pi(c_k) on one basis letter.
  AhElem piLetter(int letter) const;
  // Words peel left to right: pi(theta rest) = pi(theta) . rest.
  AhElem piWord(const Word& w) const;
  // Full extension: pi(U^a w) = pi(U^a) . w + pi(w), linearly.
  AhElem piTilde(const AffComb& x) const;

 private:
  void validate() const;
  // pi(U^a) acted by a reduced word, built letter by letter (memoized).
  const AhElem& groupCirc(long a, const Word& w) const;
  const BundleAlg* P_;
  GermData data_;
  mutable std::map<long, AhElem> piCache_;
  mutable std::map<Word, AhElem> wordCache_;
  mutable std::map<std::pair<long, Word>, AhElem> groupCircCache_;
};

// Shipped germ data over the Hopf fibration bundle.
GermData curvatureGermData(const BundleAlg& P);
GermData frameGermData(const BundleAlg& P);

// (1 - mu^{-2n}) / (1 - mu^{-2}) assembled as a polynomial in mu (no pole
// at mu^2 = 1); equals n at mu = 1.
Scalar qInt(const Mu& mode, long n);

// Product coefficient attached to the symmetric word with p plus-letters
// and q minus-letters:  prod_{i=1}^{p} (1 - mu^{-2i-2}) * prod_{j=1}^{q}
// (1 - mu^{2j+2}).
Scalar areaCoeff(const Mu& mode, int p, int q);

// Scalar multiplying (area form (x) word) in the curvature of the word with
// p plus-letters and q minus-letters, written pole-free so it specializes
// to every nonzero mu, the unit roots included.
Scalar curvatureAreaScale(const Mu& mode, int p, int q);

// ---- horizontal frames ----------------------------------------------------

struct Frame {
  std::vector<AhElem> lambda;  // horizontal one-form per basis letter
};

Frame flatFrame(const BundleAlg& P);  // lambda(theta) = exterior letter

// Generator checks: the mixing relation
//   -lambda(eta) lambda(theta) = sum lambda(theta_k) lambda(eta . c_k)
// and the module relation  lambda(theta) b = sum b_j lambda(theta . d_j).
Report frameRelationsReport(const BundleAlg& P, const Frame& f);

// b times the product of frame values along the exterior word.
AhElem frameApply(const BundleAlg& P, const Frame& f, const SU2Element& b,
                  const Word& ext);

// ---- translatons -----------------------------------------------------------

struct Translaton {
  std::vector<BtTensor> value;  // lift per module basis letter
};

Translaton canonicalTranslaton(const BundleAlg& P);
// Canonical lift shifted by a weight-matched B tensor; satisfies the
// coaction law and hermiticity but fails regularity.
Translaton shiftedTranslaton(const BundleAlg& P);

BtTensor translatonOf(const BundleAlg& P, const Translaton& t,
                      const LinComb& theta);
// Left obstruction  xi(theta) phi - sum phi_j xi(theta . d_j)  as a
// representative tensor; regularity means it vanishes in the quotient.
BtTensor translatonObstruction(const BundleAlg& P, const Translaton& t,
                               int letter, const SU2Element& phi);

// Named checks: coaction law and hermiticity per letter, regularity against
// all B monomials up to phiDegree, multiplicativity on the degree-two braid
// kernel.
Report translatonReport(const BundleAlg& P, const Translaton& t,
                        int phiDegree);

}  // namespace qaff
