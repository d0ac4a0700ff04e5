/*
 * Q(mu) arithmetic: polynomial ring operations, content/primitive-part gcd,
 * exact division, and the canonical-fraction scalar type.
 */

#include "qaff/scalar.hpp"

#include <sstream>
#include <utility>

namespace qaff {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(long v) {
  if (v != 0) c_.push_back(mpz_class(v));
}

Poly::Poly(const mpz_class& v) {
  if (v != 0) c_.push_back(v);
}

Poly Poly::mu(int power) {
  Poly p;
  p.c_.assign(static_cast<size_t>(power) + 1, mpz_class(0));
  p.c_.back() = 1;
  return p;
}

Poly Poly::fromCoeffs(std::vector<mpz_class> coeffs) {
  Poly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& Poly::leading() const {
  static const mpz_class kZero = 0;
  return c_.empty() ? kZero : c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Poly::fromCoeffs(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return Poly::fromCoeffs(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.isZero() || b.isZero()) return Poly();
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly::fromCoeffs(std::move(r));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

mpq_class Poly::evalAt(const mpq_class& x) const {
  mpq_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + c_[i];
  }
  acc.canonicalize();
  return acc;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitivePart() const {
  if (isZero()) return Poly();
  mpz_class g = content();
  if (leading() < 0) g = -g;
  Poly r = *this;
  for (auto& x : r.c_) x /= g;
  return r;
}

namespace {
// Pseudo-remainder of a by b (b nonzero, deg a >= deg b not required).
Poly pseudoRem(Poly a, const Poly& b) {
  const int db = b.degree();
  while (!a.isZero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    // lc(b)*a - lc(a)*mu^shift*b drops the leading term of a.
    std::vector<mpz_class> scaled(a.coeffs());
    for (auto& x : scaled) x *= b.leading();
    std::vector<mpz_class> sub(static_cast<size_t>(a.degree()) + 1, mpz_class(0));
    for (int i = 0; i <= db; ++i) sub[static_cast<size_t>(i + shift)] = a.leading() * b.coeffs()[static_cast<size_t>(i)];
    for (size_t i = 0; i < scaled.size(); ++i) scaled[i] -= sub[i];
    a = Poly::fromCoeffs(std::move(scaled));
  }
  return a;
}
}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
  if (a.isZero()) return b.primitivePart() * Poly(b.content());
  if (b.isZero()) return a.primitivePart() * Poly(a.content());
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  a = a.primitivePart();
  b = b.primitivePart();
  while (!b.isZero()) {
    Poly r = pseudoRem(a, b).primitivePart();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitivePart() * Poly(cg);
}

Poly Poly::divExact(const Poly& a, const Poly& b) {
  if (b.isZero()) throw PoleError("polynomial division by zero");
  if (a.isZero()) return Poly();
  if (a.degree() < b.degree()) throw InvariantViolation("polynomial division not exact");
  // Long division with rational bookkeeping; exactness demands integer output.
  std::vector<mpq_class> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<mpq_class> quot(static_cast<size_t>(a.degree() - db) + 1, mpq_class(0));
  for (int d = a.degree(); d >= db; --d) {
    mpq_class q = rem[static_cast<size_t>(d)] / mpq_class(b.leading());
    q.canonicalize();
    if (q == 0) continue;
    quot[static_cast<size_t>(d - db)] = q;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<size_t>(d - db + i)] -= q * b.coeffs()[static_cast<size_t>(i)];
      rem[static_cast<size_t>(d - db + i)].canonicalize();
    }
  }
  for (const auto& x : rem)
    if (x != 0) throw InvariantViolation("polynomial division not exact");
  std::vector<mpz_class> out;
  out.reserve(quot.size());
  for (const auto& q : quot) {
    if (q.get_den() != 1) throw InvariantViolation("polynomial division not exact");
    out.push_back(q.get_num());
  }
  return Poly::fromCoeffs(std::move(out));
}

std::string Poly::str() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const mpz_class& coef = c_[i];
    if (coef == 0) continue;
    mpz_class mag = abs(coef);
    if (first) {
      if (coef < 0) os << "-";
      first = false;
    } else {
      os << (coef < 0 ? "-" : "+");
    }
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "mu";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Mu

Mu Mu::at(const mpq_class& v) {
  if (v == 0) throw InvariantViolation("specialized mu must be nonzero");
  Mu m;
  m.symbolic = false;
  m.value = v;
  m.value.canonicalize();
  return m;
}

std::string Mu::str() const { return symbolic ? "sym" : value.get_str(); }

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::ofInt(long v) {
  Scalar s;
  s.num_ = Poly(v);
  s.den_ = Poly(1);
  return s;
}

Scalar Scalar::ofRat(const mpq_class& v) {
  Scalar s;
  s.num_ = Poly(mpz_class(v.get_num()));
  s.den_ = Poly(mpz_class(v.get_den()));
  return s;  // mpq_class keeps den positive and reduced, so this is canonical
}

Scalar Scalar::fromPolys(Poly num, Poly den) {
  if (den.isZero()) throw PoleError("scalar with zero denominator");
  Scalar s;
  if (num.isZero()) {
    s.den_ = Poly(1);
    return s;
  }
  Poly g = Poly::gcd(num, den);
  num = Poly::divExact(num, g);
  den = Poly::divExact(den, g);
  if (den.leading() < 0) {
    num = -num;
    den = -den;
  }
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  return s;
}

Scalar Scalar::fromCoprime(Poly num, Poly den) {
  Scalar s;
  if (num.isZero()) {
    s.den_ = Poly(1);
    return s;
  }
#ifndef NDEBUG
  if (!Poly::gcd(num, den).isOne())
    throw InvariantViolation("fromCoprime inputs share a factor");
#endif
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  return s;
}

Scalar Scalar::muPow(const Mu& mode, long k) {
  if (mode.symbolic) {
    if (k >= 0) return fromPolys(Poly::mu(static_cast<int>(k)), Poly(1));
    return fromPolys(Poly(1), Poly::mu(static_cast<int>(-k)));
  }
  mpq_class v = 1;
  const mpq_class base = k >= 0 ? mode.value : mpq_class(1) / mode.value;
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) v *= base;
  v.canonicalize();
  return ofRat(v);
}

namespace {

// Assembles a scalar from an already-coprime pair, fixing only the sign
// convention.  Callers must guarantee gcd(num, den) = 1.
Scalar makeCoprime(Poly num, Poly den) {
  if (num.isZero()) return Scalar();
  if (den.leading() < 0) {
    num = -num;
    den = -den;
  }
  return Scalar::fromCoprime(std::move(num), std::move(den));
}

}  // namespace

// Both inputs are canonical, so only denominator primes shared between the
// two fractions can cancel: reduce by g = gcd(d1, d2) up front and by
// h = gcd(t, g) at the end; the result is coprime by unique factorization.
Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  Poly g = Poly::gcd(a.den_, b.den_);
  if (g.isOne())
    return makeCoprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  Poly d2g = Poly::divExact(b.den_, g);
  Poly t = a.num_ * d2g + b.num_ * Poly::divExact(a.den_, g);
  if (t.isZero()) return Scalar();
  Poly h = Poly::gcd(t, g);
  if (h.isOne()) return makeCoprime(std::move(t), a.den_ * d2g);
  return makeCoprime(Poly::divExact(t, h), Poly::divExact(a.den_, h) * d2g);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

// Cross-cancellation: with both inputs canonical, gcd(n1 n2, d1 d2) splits
// as gcd(n1, d2) * gcd(n2, d1), so the assembled result is coprime.
Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.isZero() || b.isZero()) return Scalar();
  if (a.isOne()) return b;
  if (b.isOne()) return a;
  Poly g1 = Poly::gcd(a.num_, b.den_);
  Poly g2 = Poly::gcd(b.num_, a.den_);
  Poly num = (g1.isOne() ? a.num_ : Poly::divExact(a.num_, g1)) *
             (g2.isOne() ? b.num_ : Poly::divExact(b.num_, g2));
  Poly den = (g2.isOne() ? a.den_ : Poly::divExact(a.den_, g2)) *
             (g1.isOne() ? b.den_ : Poly::divExact(b.den_, g1));
  return makeCoprime(std::move(num), std::move(den));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.isZero()) throw PoleError("division by zero scalar");
  if (a.isZero()) return Scalar();
  Poly g1 = Poly::gcd(a.num_, b.num_);
  Poly g2 = Poly::gcd(a.den_, b.den_);
  Poly num = (g1.isOne() ? a.num_ : Poly::divExact(a.num_, g1)) *
             (g2.isOne() ? b.den_ : Poly::divExact(b.den_, g2));
  Poly den = (g2.isOne() ? a.den_ : Poly::divExact(a.den_, g2)) *
             (g1.isOne() ? b.num_ : Poly::divExact(b.num_, g1));
  return makeCoprime(std::move(num), std::move(den));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

mpq_class Scalar::evalAt(const mpq_class& x) const {
  mpq_class d = den_.evalAt(x);
  if (d == 0) throw PoleError("evaluation at a pole: denominator vanishes");
  mpq_class r = num_.evalAt(x) / d;
  r.canonicalize();
  return r;
}

std::string Scalar::str() const {
  if (den_.isOne()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qaff
