#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace etainv {

using BigInt = mpz_class;

/// Greatest common divisor, always nonnegative; gcd(0, 0) = 0.
BigInt gcd(const BigInt &a, const BigInt &b);
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Arbitrary-precision exact fraction kept in lowest terms with a positive
/// denominator. Zero is canonically 0/1.
class Rational {
public:
  Rational() = default;
  Rational(int n) : value_(n) {}
  Rational(long n) : value_(n) {}
  Rational(long long n) : value_(BigInt(std::to_string(n))) {}
  Rational(const BigInt &n) : value_(n) {}
  template <class U> Rational(const __gmp_expr<mpz_t, U> &e) : value_(BigInt(e)) {}
  /// Throws DivisionByZero when \p den is zero.
  Rational(const BigInt &num, const BigInt &den);

  /// Accepts "num/den" or a bare integer "num". Throws ParseError.
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;
  Rational pow(unsigned exponent) const;
  Rational abs() const;

  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  /// Throws DivisionByZero.
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  /// Always "num/den"; integers render as "n/1".
  std::string to_string() const;
  /// Decimal rendering rounded half away from zero to \p digits fractional digits.
  std::string to_decimal(unsigned digits = 20) const;

  const mpq_class &raw() const { return value_; }

private:
  explicit Rational(mpq_class v);
  mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

// Coefficient-ring protocol shared with UniPoly; used by the generic series code.
inline bool is_zero(const Rational &r) { return r.is_zero(); }
inline bool is_unit(const Rational &r) { return !r.is_zero(); }
inline Rational unit_inverse(const Rational &r) { return r.inverse(); }

} // namespace etainv
