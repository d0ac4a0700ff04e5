#pragma once
/*
 * The quantum SU(2) coordinate *-algebra.
 *
 * Monomials are kept in the normal order  alpha-part * gamma^m * gamma*^n,
 * where the alpha-part is alpha^a for a > 0 and (alpha*)^{-a} for a < 0.
 * Defining relations:
 *   gamma  alpha = (1/mu) alpha gamma        gamma* alpha  = (1/mu) alpha gamma*
 *   gamma alpha* = mu alpha* gamma           gamma* alpha* = mu alpha* gamma*
 *   gamma gamma* = gamma* gamma
 *   alpha alpha* = 1 - mu^2 gamma gamma*     alpha* alpha  = 1 - gamma gamma*
 *
 * Mixed alpha powers are expanded by a memoized recursion; the projection
 * to the base Hopf algebra sends alpha -> U and gamma -> 0, giving each
 * monomial the group weight a + m - n.
 */

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "qaff/base_hopf.hpp"
#include "qaff/scalar.hpp"

namespace qaff {

struct SU2Mono {
  long a = 0;  // alpha^a for a>0, (alpha*)^{-a} for a<0
  int m = 0;   // gamma power
  int n = 0;   // gamma* power

  auto operator<=>(const SU2Mono&) const = default;
  int degree() const { return static_cast<int>(a >= 0 ? a : -a) + m + n; }
  long weight() const { return a + m - n; }
  bool isUnit() const { return a == 0 && m == 0 && n == 0; }
  std::string str() const;
};

using SU2Element = std::map<SU2Mono, Scalar>;

inline void addMono(SU2Element& acc, const SU2Mono& k, const Scalar& c) {
  if (c.isZero()) return;
  auto it = acc.find(k);
  if (it == acc.end()) {
    acc.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.isZero()) acc.erase(it);
  }
}

inline void addMonoScaled(SU2Element& acc, const SU2Element& x, const Scalar& c) {
  if (c.isZero()) return;
  for (const auto& [k, v] : x) addMono(acc, k, v * c);
}

inline SU2Element subSU2(const SU2Element& a, const SU2Element& b) {
  SU2Element out = a;
  addMonoScaled(out, b, -Scalar::one());
  return out;
}

class SU2Alg {
 public:
  explicit SU2Alg(Mu mode) : mode_(std::move(mode)) {}

  const Mu& mode() const { return mode_; }

  SU2Element unit() const { return of(SU2Mono{}); }
  SU2Element alpha() const { return of(SU2Mono{1, 0, 0}); }
  SU2Element alphaStar() const { return of(SU2Mono{-1, 0, 0}); }
  SU2Element gamma() const { return of(SU2Mono{0, 1, 0}); }
  SU2Element gammaStar() const { return of(SU2Mono{0, 0, 1}); }
  static SU2Element of(const SU2Mono& k) {
    return SU2Element{{k, Scalar::one()}};
  }

  SU2Element mul(const SU2Mono& x, const SU2Mono& y) const;
  SU2Element mul(const SU2Element& x, const SU2Element& y) const;
  SU2Element star(const SU2Element& x) const;
  Scalar counit(const SU2Element& x) const;
  // Projection to the base Hopf algebra: alpha -> U, gamma -> 0.
  BaseElement project(const SU2Element& x) const;

  std::string str(const SU2Element& x) const;

  // All normal-order monomials of total degree <= d (alpha power bounded by
  // the degree), ordered by the monomial comparison.
  std::vector<SU2Mono> monosUpToDegree(int d) const;

 private:
  // alpha^a alpha^b for mixed signs, as a combination of
  // (a+b, j, j) monomials.
  const SU2Element& powerProduct(long a, long b) const;

  Mu mode_;
  mutable std::map<std::pair<long, long>, SU2Element> ppCache_;
};

}  // namespace qaff
