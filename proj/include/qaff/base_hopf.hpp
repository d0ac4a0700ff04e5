#pragma once
/*
 * The structure-group function algebra A as a grouplike-spanned Hopf
 * *-algebra: the group algebra of Z^r over Q(mu).  The shipped instantiation
 * has r = 1 with basis {U^n : n in Z}.  Structure maps on a grouplike g:
 * product = exponent addition, coproduct g -> g (x) g, counit 1,
 * antipode g -> g^{-1}, star g -> g^{-1} (coefficients self-conjugate),
 * right adjoint coaction g -> g (x) 1.
 */

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qaff/scalar.hpp"

namespace qaff {

struct Grouplike {
  std::vector<long> e;  // exponent vector, free-abelian group law

  static Grouplike unit(int rank = 1) { return Grouplike{std::vector<long>(static_cast<size_t>(rank), 0)}; }
  static Grouplike U(long n) { return Grouplike{{n}}; }  // rank-1 convenience

  Grouplike operator*(const Grouplike& o) const {
    Grouplike r = *this;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  Grouplike inverse() const {
    Grouplike r = *this;
    for (auto& x : r.e) x = -x;
    return r;
  }
  bool isUnit() const {
    for (long x : e)
      if (x != 0) return false;
    return true;
  }
  auto operator<=>(const Grouplike&) const = default;

  std::string str() const {  // rank-1 prints as U^n
    if (e.size() == 1) {
      if (e[0] == 0) return "1";
      if (e[0] == 1) return "U";
      return "U^" + std::to_string(e[0]);
    }
    std::ostringstream os;
    os << "g(";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
  }
};

// A finite Q(mu)-combination of grouplikes; no zero coefficients stored.
class BaseElement {
 public:
  BaseElement() = default;
  static BaseElement of(const Grouplike& g, const Scalar& c = Scalar::one()) {
    BaseElement b;
    if (!c.isZero()) b.terms_[g] = c;
    return b;
  }
  static BaseElement unit(int rank = 1) { return of(Grouplike::unit(rank)); }

  const std::map<Grouplike, Scalar>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  void add(const Grouplike& g, const Scalar& c) {
    if (c.isZero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
      terms_[g] = c;
    } else {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  friend BaseElement operator+(const BaseElement& a, const BaseElement& b) {
    BaseElement r = a;
    for (const auto& [g, c] : b.terms_) r.add(g, c);
    return r;
  }
  friend BaseElement operator-(const BaseElement& a, const BaseElement& b) {
    BaseElement r = a;
    for (const auto& [g, c] : b.terms_) r.add(g, -c);
    return r;
  }
  friend BaseElement operator*(const BaseElement& a, const BaseElement& b) {
    BaseElement r;
    for (const auto& [g, c] : a.terms_)
      for (const auto& [h, d] : b.terms_) r.add(g * h, c * d);
    return r;
  }
  BaseElement scale(const Scalar& s) const {
    BaseElement r;
    for (const auto& [g, c] : terms_) r.add(g, c * s);
    return r;
  }
  bool operator==(const BaseElement& other) const { return terms_ == other.terms_; }

  Scalar counit() const {
    Scalar s;
    for (const auto& [g, c] : terms_) s += c;
    return s;
  }
  BaseElement antipode() const {
    BaseElement r;
    for (const auto& [g, c] : terms_) r.add(g.inverse(), c);
    return r;
  }
  BaseElement star() const { return antipode(); }  // coefficients self-conjugate

  // Coproduct and right adjoint coaction as explicit tensor-term lists.
  using TensorTerms = std::vector<std::tuple<Scalar, Grouplike, Grouplike>>;
  TensorTerms coproduct() const {
    TensorTerms t;
    for (const auto& [g, c] : terms_) t.emplace_back(c, g, g);
    return t;
  }
  TensorTerms adjoint() const {  // ad(g) = g (x) kappa(g) g = g (x) 1
    TensorTerms t;
    const int rank = terms_.empty() ? 1 : static_cast<int>(terms_.begin()->first.e.size());
    for (const auto& [g, c] : terms_) t.emplace_back(c, g, Grouplike::unit(rank));
    return t;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      if (c.isOne() && !g.isUnit())
        os << g.str();
      else if (g.isUnit())
        os << c.str();
      else
        os << c.str() << "*" << g.str();
    }
    return os.str();
  }

 private:
  std::map<Grouplike, Scalar> terms_;
};

}  // namespace qaff
