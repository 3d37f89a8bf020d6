#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace balfan {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic violation: division by zero or mixing incompatible radicands.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input; carries the offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
};

/// Structural invariant violation (bad skeleton, bad permutation, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exact element a + b*sqrt(radicand) of a real quadratic field.
///
/// The radicand is a positive squarefree integer carried per value
/// (default 5).  Purely rational values (b == 0) are compatible with any
/// radicand: mixed expressions adopt the radicand of the irrational side,
/// and mixing two genuinely irrational values with different radicands
/// throws FieldError.
class QuadraticScalar {
 public:
  QuadraticScalar() : QuadraticScalar(Rational(0)) {}
  QuadraticScalar(int value) : QuadraticScalar(Rational(value)) {}  // NOLINT: implicit by design
  QuadraticScalar(long value) : QuadraticScalar(Rational(value)) {}  // NOLINT
  QuadraticScalar(long long value) : QuadraticScalar(Rational(value)) {}  // NOLINT
  explicit QuadraticScalar(Rational rational, std::int64_t radicand = 5);
  QuadraticScalar(Rational rational, Rational coefficient, std::int64_t radicand = 5);

  /// The pure radical sqrt(radicand).
  static QuadraticScalar sqrtOf(std::int64_t radicand);

  const Rational& rationalPart() const noexcept { return a_; }
  const Rational& radicalPart() const noexcept { return b_; }
  std::int64_t radicand() const noexcept { return radicand_; }

  bool isZero() const noexcept { return a_ == 0 && b_ == 0; }
  bool isRational() const noexcept { return b_ == 0; }

  /// Exact sign of the real value: -1, 0, or +1.  No floating point:
  /// mixed-sign components are decided by comparing a^2 against r*b^2.
  int sign() const;

  QuadraticScalar conjugate() const;           // a - b*sqrt(r)
  Rational norm() const;                       // a^2 - r*b^2
  QuadraticScalar inverse() const;             // throws FieldError on zero

  QuadraticScalar operator-() const;
  QuadraticScalar& operator+=(const QuadraticScalar& other);
  QuadraticScalar& operator-=(const QuadraticScalar& other);
  QuadraticScalar& operator*=(const QuadraticScalar& other);
  QuadraticScalar& operator/=(const QuadraticScalar& other);

  friend QuadraticScalar operator+(QuadraticScalar lhs, const QuadraticScalar& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend QuadraticScalar operator-(QuadraticScalar lhs, const QuadraticScalar& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend QuadraticScalar operator*(QuadraticScalar lhs, const QuadraticScalar& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend QuadraticScalar operator/(QuadraticScalar lhs, const QuadraticScalar& rhs) {
    lhs /= rhs;
    return lhs;
  }

  friend bool operator==(const QuadraticScalar& lhs, const QuadraticScalar& rhs);
  friend bool operator!=(const QuadraticScalar& lhs, const QuadraticScalar& rhs) {
    return !(lhs == rhs);
  }
  friend bool operator<(const QuadraticScalar& lhs, const QuadraticScalar& rhs) {
    return (lhs - rhs).sign() < 0;
  }
  friend bool operator>(const QuadraticScalar& lhs, const QuadraticScalar& rhs) {
    return rhs < lhs;
  }
  friend bool operator<=(const QuadraticScalar& lhs, const QuadraticScalar& rhs) {
    return !(rhs < lhs);
  }
  friend bool operator>=(const QuadraticScalar& lhs, const QuadraticScalar& rhs) {
    return !(lhs < rhs);
  }

 private:
  Rational a_;
  Rational b_;
  std::int64_t radicand_ = 5;
};

QuadraticScalar abs(const QuadraticScalar& value);

/// Canonical text form: "p/q", "p/q+r/sr5" or "p/q-r/sr5" — lowest terms,
/// positive denominators, "/1" omitted, zero parts omitted ("0" for zero).
std::string formatScalar(const QuadraticScalar& value);

/// Parses the grammar accepted by formatScalar, whitespace-insensitive
/// between tokens.  A value without a radical token adopts
/// `defaultRadicand`; when `requiredRadicand` is set, an explicit radical
/// token must match it.
QuadraticScalar parseScalar(std::string_view text,
                            std::int64_t defaultRadicand = 5,
                            std::optional<std::int64_t> requiredRadicand = std::nullopt);

/// Correctly rounded (ties to even) fixed-point decimal rendering with
/// `digits` fractional digits.  Exact: uses integer square roots only.
std::string toDecimal(const QuadraticScalar& value, unsigned digits);

std::ostream& operator<<(std::ostream& stream, const QuadraticScalar& value);

}  // namespace balfan
