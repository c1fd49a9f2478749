#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relcheck/rational.hpp"

namespace relcheck {

/// Field the tool computes in: plain rationals, or rationals closed under
/// square roots of nonnegative elements.
enum class FieldMode { rational, euclidean };

const char* fieldModeName(FieldMode mode);
std::optional<FieldMode> fieldModeFromName(std::string_view name);

class Scalar;

namespace detail {

struct Atom;
using AtomPtr = std::shared_ptr<const Atom>;

/// Product of distinct sqrt atoms, sorted by structural order. Empty = 1.
struct Monomial {
  std::vector<AtomPtr> atoms;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

struct Access;  // scalar.cpp internals

}  // namespace detail

/// Exact field element: a rational, or (euclidean mode) an element of the
/// closure of the rationals under square roots of nonnegative values.
///
/// Representation: canonical linear combination of monomials of sqrt atoms
/// with rational coefficients. Arithmetic keeps the form normalized; equality
/// and ordering are exact (structural fast path, then sign determination by
/// interval refinement against a separation bound).
class Scalar {
 public:
  Scalar() = default;  // zero
  Scalar(long n);      // NOLINT: implicit by design
  Scalar(const Rational& r);  // NOLINT: implicit by design

  bool isRational() const;
  /// The value as a rational, when the canonical form is one.
  std::optional<Rational> asRational() const;

  /// Exact sign: -1, 0, +1.
  int sign() const;
  bool isZero() const { return sign() == 0; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);  // DivisionByZero
  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

  /// Exact value equality.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator<=(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b);
  friend bool operator>=(const Scalar& a, const Scalar& b);

  /// Canonical literal; parseScalar(str(), mode) reproduces the value exactly.
  std::string str() const;

  /// Deterministic total order on canonical forms (serialization order, not
  /// numeric order; distinct forms may denote equal values).
  static int structuralCompare(const Scalar& a, const Scalar& b);

 private:
  std::vector<detail::Term> terms_;
  friend struct detail::Access;
};

namespace detail {
struct Atom {
  Scalar radicand;  // semantically > 0; never a detected perfect square
  int height = 1;   // 1 + max height of atoms inside the radicand
};
}  // namespace detail

/// Exact three-way comparison: -1, 0, +1.
int compareScalar(const Scalar& a, const Scalar& b);

/// The unique r >= 0 with r*r == x.
/// Errors: NegativeInput (x < 0); NotEuclidean (rational mode, x not a
/// rational square).
Scalar sqrtScalar(const Scalar& x, FieldMode mode);

/// Parses a scalar literal: integers, fractions p/q, sqrt(...), +, -, *, /,
/// parentheses. Errors: ParseError (syntax), NotEuclidean (sqrt of a
/// non-square in rational mode), DivisionByZero.
Scalar parseScalar(const std::string& text, FieldMode mode);

}  // namespace relcheck
