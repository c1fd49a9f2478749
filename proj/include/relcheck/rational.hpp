#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "relcheck/errors.hpp"

namespace relcheck {

/// Arbitrary-precision rational, always in canonical form: lowest terms,
/// positive denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  /// Strict parse of "[-]digits" or "[-]digits/digits". Nothing else.
  static std::optional<Rational> parse(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool isZero() const { return sign() == 0; }
  bool isInteger() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.isZero()) throw DivisionByZero("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Three-way comparison: -1, 0, +1.
  friend int cmp3(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_); }

  std::string str() const;

  /// Exact square root if this value is the square of a rational.
  std::optional<Rational> sqrtExact() const;

 private:
  explicit Rational(const mpq_class& v) : v_(v) {}
  mpq_class v_;
};

/// floor(sqrt(n)) for n >= 0.
mpz_class isqrtFloor(const mpz_class& n);

/// Perfect-square test; optionally yields the nonnegative root.
bool isPerfectSquare(const mpz_class& n, mpz_class* root = nullptr);

/// Splits n >= 1 as s^2 * m with m square-free as far as small-prime trial
/// division plus a final perfect-square test can discover.
void extractSquarePart(const mpz_class& n, mpz_class& s, mpz_class& m);

}  // namespace relcheck
