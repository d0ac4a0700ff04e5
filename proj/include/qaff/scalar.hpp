#pragma once
/*
 * Exact arithmetic in Q(mu): dense integer-coefficient polynomials in the
 * deformation parameter mu, and canonical fractions of such polynomials.
 * Also the parameter mode (symbolic, or specialized at a nonzero rational),
 * which is consulted by scalar factories at construction time: in specialized
 * mode every factory-made scalar is already a rational constant.
 */

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qaff/errors.hpp"

namespace qaff {

// Dense polynomial in mu over the integers; coefficient i multiplies mu^i.
// The zero polynomial is the empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(long v);
  explicit Poly(const mpz_class& v);
  static Poly mu(int power = 1);  // mu^power, power >= 0
  static Poly fromCoeffs(std::vector<mpz_class> coeffs);

  bool isZero() const { return c_.empty(); }
  bool isOne() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  const mpz_class& leading() const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  bool operator==(const Poly& other) const { return c_ == other.c_; }
  bool operator!=(const Poly& other) const { return c_ != other.c_; }

  mpq_class evalAt(const mpq_class& x) const;
  mpz_class content() const;      // nonnegative gcd of coefficients (0 for zero)
  Poly primitivePart() const;     // content divided out, leading coefficient > 0
  static Poly gcd(Poly a, Poly b);            // content-inclusive, leading > 0
  static Poly divExact(const Poly& a, const Poly& b);  // throws if not exact

  std::string str() const;  // descending powers, e.g. "-mu^4+2*mu^2-1"

 private:
  std::vector<mpz_class> c_;
  void trim();
};

// Deformation-parameter mode: symbolic mu, or a fixed nonzero rational value.
struct Mu {
  bool symbolic = true;
  mpq_class value = 0;

  static Mu sym() { return Mu{}; }
  static Mu at(const mpq_class& v);
  bool operator==(const Mu& other) const {
    return symbolic == other.symbolic && value == other.value;
  }
  std::string str() const;  // "sym" or the rational value
};

// Canonical fraction of integer polynomials in mu: gcd(num, den) = 1
// (integer content included) and den has positive leading coefficient.
// Equal values always have identical representations, so operator== on the
// raw fields decides value equality.  Complex conjugation is the identity on
// this field (mu is a real parameter), so no conjugation hook is provided.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}  // zero
  static Scalar ofInt(long v);
  static Scalar ofRat(const mpq_class& v);
  static Scalar fromPolys(Poly num, Poly den);  // canonicalizes
  static Scalar one() { return ofInt(1); }

  // mu^k under the given mode (k may be negative).  In specialized mode this
  // is the rational constant value^k.
  static Scalar muPow(const Mu& mode, long k);

  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  // Fast assembly from an already-coprime pair with positive leading
  // denominator coefficient (checked in debug builds).  Arithmetic
  // operators use this after cross-cancellation.
  static Scalar fromCoprime(Poly num, Poly den);

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);  // PoleError on /0
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }
  bool operator==(const Scalar& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  mpq_class evalAt(const mpq_class& x) const;  // PoleError at denominator roots

  // Rough size measure used for pivot selection (lowest degree first).
  int complexity() const { return num_.degree() + den_.degree(); }

  std::string str() const;  // "num" or "(num)/(den)"

 private:
  Poly num_, den_;
};

}  // namespace qaff
