#include "balfan/quadratic.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

namespace balfan {

namespace {

bool isSquarefree(std::int64_t value) {
  if (value < 2) return false;
  for (std::int64_t p = 2; p * p <= value; ++p) {
    if (value % (p * p) == 0) return false;
  }
  return true;
}

void requireSquarefree(std::int64_t radicand) {
  if (!isSquarefree(radicand)) {
    throw FieldError("radicand must be a squarefree integer >= 2, got " +
                     std::to_string(radicand));
  }
}

/// Radicand shared by two operands; purely rational values are neutral.
std::int64_t joinRadicand(const QuadraticScalar& x, const QuadraticScalar& y) {
  if (x.radicand() == y.radicand()) return x.radicand();
  if (x.isRational()) return y.radicand();
  if (y.isRational()) return x.radicand();
  throw FieldError("radicand mismatch: " + std::to_string(x.radicand()) +
                   " vs " + std::to_string(y.radicand()));
}

int rationalSign(const Rational& value) {
  if (value > 0) return 1;
  if (value < 0) return -1;
  return 0;
}

BigInt floorRational(const Rational& value) {
  BigInt num = numerator(value);
  BigInt den = denominator(value);  // always > 0
  BigInt quotient = num / den;      // truncates toward zero
  if (num % den != 0 && num < 0) --quotient;
  return quotient;
}

}  // namespace

QuadraticScalar::QuadraticScalar(Rational rational, std::int64_t radicand)
    : a_(std::move(rational)), b_(0), radicand_(radicand) {
  requireSquarefree(radicand_);
}

QuadraticScalar::QuadraticScalar(Rational rational, Rational coefficient,
                                 std::int64_t radicand)
    : a_(std::move(rational)), b_(std::move(coefficient)), radicand_(radicand) {
  requireSquarefree(radicand_);
}

QuadraticScalar QuadraticScalar::sqrtOf(std::int64_t radicand) {
  return QuadraticScalar(Rational(0), Rational(1), radicand);
}

int QuadraticScalar::sign() const {
  const int signA = rationalSign(a_);
  const int signB = rationalSign(b_);
  if (signB == 0) return signA;
  if (signA == 0) return signB;
  if (signA == signB) return signA;
  // Opposite component signs: |a| vs |b|*sqrt(r) decided by a^2 vs r*b^2.
  const Rational left = a_ * a_;
  const Rational right = Rational(radicand_) * b_ * b_;
  if (left == right) return 0;  // unreachable for squarefree radicand unless zero
  return left > right ? signA : signB;
}

QuadraticScalar QuadraticScalar::conjugate() const {
  return QuadraticScalar(a_, -b_, radicand_);
}

Rational QuadraticScalar::norm() const {
  return a_ * a_ - Rational(radicand_) * b_ * b_;
}

QuadraticScalar QuadraticScalar::inverse() const {
  if (isZero()) throw FieldError("division by zero");
  const Rational n = norm();
  return QuadraticScalar(a_ / n, -b_ / n, radicand_);
}

QuadraticScalar QuadraticScalar::operator-() const {
  return QuadraticScalar(-a_, -b_, radicand_);
}

QuadraticScalar& QuadraticScalar::operator+=(const QuadraticScalar& other) {
  radicand_ = joinRadicand(*this, other);
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

QuadraticScalar& QuadraticScalar::operator-=(const QuadraticScalar& other) {
  radicand_ = joinRadicand(*this, other);
  a_ -= other.a_;
  b_ -= other.b_;
  return *this;
}

QuadraticScalar& QuadraticScalar::operator*=(const QuadraticScalar& other) {
  radicand_ = joinRadicand(*this, other);
  const Rational r(radicand_);
  Rational newA = a_ * other.a_ + r * b_ * other.b_;
  Rational newB = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(newA);
  b_ = std::move(newB);
  return *this;
}

QuadraticScalar& QuadraticScalar::operator/=(const QuadraticScalar& other) {
  *this *= other.inverse();
  return *this;
}

bool operator==(const QuadraticScalar& lhs, const QuadraticScalar& rhs) {
  joinRadicand(lhs, rhs);  // reject incomparable values
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

QuadraticScalar abs(const QuadraticScalar& value) {
  return value.sign() < 0 ? -value : value;
}

namespace {

std::string formatRational(const Rational& value) {
  std::ostringstream stream;
  stream << numerator(value);
  if (denominator(value) != 1) stream << '/' << denominator(value);
  return stream.str();
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  bool atEnd() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " at position " + std::to_string(pos), pos);
  }
};

BigInt parseDigits(Cursor& cursor) {
  if (cursor.atEnd() || !std::isdigit(static_cast<unsigned char>(cursor.peek()))) {
    cursor.fail("expected digits");
  }
  const std::size_t start = cursor.pos;
  while (!cursor.atEnd() &&
         std::isdigit(static_cast<unsigned char>(cursor.peek()))) {
    ++cursor.pos;
  }
  return BigInt(std::string(cursor.text.substr(start, cursor.pos - start)));
}

/// R := ["-"] digits ["/" digits]
Rational parseRationalToken(Cursor& cursor) {
  bool negative = false;
  if (!cursor.atEnd() && cursor.peek() == '-') {
    negative = true;
    ++cursor.pos;
  }
  BigInt num = parseDigits(cursor);
  BigInt den = 1;
  if (!cursor.atEnd() && cursor.peek() == '/') {
    ++cursor.pos;
    const std::size_t denStart = cursor.pos;
    den = parseDigits(cursor);
    if (den == 0) {
      throw ParseError("zero denominator at position " + std::to_string(denStart),
                       denStart);
    }
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::int64_t parseRadicandToken(Cursor& cursor,
                                std::optional<std::int64_t> required) {
  // caller guarantees cursor.peek() == 'r'
  ++cursor.pos;
  const std::size_t start = cursor.pos;
  BigInt value = parseDigits(cursor);
  if (value > std::numeric_limits<std::int64_t>::max()) {
    throw ParseError("radicand too large at position " + std::to_string(start),
                     start);
  }
  const auto radicand = static_cast<std::int64_t>(value);
  if (!isSquarefree(radicand)) {
    throw ParseError("radicand must be squarefree and >= 2 at position " +
                         std::to_string(start),
                     start);
  }
  if (required && radicand != *required) {
    throw ParseError("expected radicand " + std::to_string(*required) +
                         " but found " + std::to_string(radicand) +
                         " at position " + std::to_string(start),
                     start);
  }
  return radicand;
}

}  // namespace

std::string formatScalar(const QuadraticScalar& value) {
  if (value.isRational()) return formatRational(value.rationalPart());
  const Rational& b = value.radicalPart();
  std::string radical = formatRational(b < 0 ? Rational(-b) : b) + "r" +
                        std::to_string(value.radicand());
  if (value.rationalPart() == 0) {
    return (value.radicalPart() < 0 ? "-" : "") + radical;
  }
  const char sign = value.radicalPart() < 0 ? '-' : '+';
  return formatRational(value.rationalPart()) + sign + radical;
}

QuadraticScalar parseScalar(std::string_view text, std::int64_t defaultRadicand,
                            std::optional<std::int64_t> requiredRadicand) {
  requireSquarefree(defaultRadicand);
  Cursor cursor{text};
  cursor.skipSpace();
  if (cursor.atEnd()) cursor.fail("empty scalar");

  Rational first = parseRationalToken(cursor);
  cursor.skipSpace();

  Rational a(0);
  Rational b(0);
  std::optional<std::int64_t> radicand;
  if (!cursor.atEnd() && cursor.peek() == 'r') {
    // pure radical: "r/s r5"
    b = first;
    radicand = parseRadicandToken(cursor, requiredRadicand);
  } else if (!cursor.atEnd() && (cursor.peek() == '+' || cursor.peek() == '-')) {
    const bool minus = cursor.peek() == '-';
    ++cursor.pos;
    cursor.skipSpace();
    a = first;
    b = parseRationalToken(cursor);
    if (minus) b = -b;
    cursor.skipSpace();
    if (cursor.atEnd() || cursor.peek() != 'r') cursor.fail("expected radical token");
    radicand = parseRadicandToken(cursor, requiredRadicand);
  } else {
    a = first;
  }
  cursor.skipSpace();
  if (!cursor.atEnd()) cursor.fail("unexpected trailing input");

  return QuadraticScalar(a, b, radicand.value_or(defaultRadicand));
}

namespace {

BigInt floorScalar(const QuadraticScalar& value) {
  if (value.isRational()) return floorRational(value.rationalPart());
  // value = (U + W*sqrt(r)) / d with integers U, W and d > 0
  const BigInt p = numerator(value.rationalPart());
  const BigInt q = denominator(value.rationalPart());
  const BigInt u = numerator(value.radicalPart());
  const BigInt v = denominator(value.radicalPart());
  const BigInt d = q * v;
  const BigInt bigU = p * v;
  const BigInt bigW = u * q;
  const BigInt r(value.radicand());

  // floor(|W|*sqrt(r)) computed by an exact integer square root
  const BigInt root = boost::multiprecision::sqrt(BigInt(bigW * bigW * r));
  const BigInt radicalFloor = bigW >= 0 ? root : -(root + 1);
  BigInt candidate = floorRational(Rational(bigU + radicalFloor, d));

  // the estimate is within one; fix up with exact sign tests
  while ((value - QuadraticScalar(Rational(candidate + 1))).sign() >= 0) ++candidate;
  while ((value - QuadraticScalar(Rational(candidate))).sign() < 0) --candidate;
  return candidate;
}

}  // namespace

std::string toDecimal(const QuadraticScalar& value, unsigned digits) {
  const BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
  const QuadraticScalar scaled =
      value * QuadraticScalar(Rational(scale), value.radicand());
  BigInt units = floorScalar(scaled);
  const QuadraticScalar fraction = scaled - QuadraticScalar(Rational(units));
  const int halfComparison =
      (fraction - QuadraticScalar(Rational(1, 2))).sign();
  if (halfComparison > 0 || (halfComparison == 0 && units % 2 != 0)) {
    ++units;  // round up; exact ties resolved to the even integer
  }

  const bool negative = units < 0;
  std::string magnitude = BigInt(boost::multiprecision::abs(units)).str();
  if (magnitude.size() <= digits) {
    magnitude.insert(0, digits + 1 - magnitude.size(), '0');
  }
  std::string result;
  if (negative) result += '-';
  result += magnitude.substr(0, magnitude.size() - digits);
  if (digits > 0) {
    result += '.';
    result += magnitude.substr(magnitude.size() - digits);
  }
  return result;
}

std::ostream& operator<<(std::ostream& stream, const QuadraticScalar& value) {
  return stream << formatScalar(value);
}

}  // namespace balfan
