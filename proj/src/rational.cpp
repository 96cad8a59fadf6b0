#include "etainv/rational.hpp"

#include <cstdlib>
#include <ostream>

#include "etainv/errors.hpp"

namespace etainv {

BigInt gcd(const BigInt &a, const BigInt &b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw DivisionByZero("denominator is zero");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    if (s.empty())
      throw ParseError("empty integer in '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
      throw ParseError("malformed integer in '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw ParseError("malformed integer in '" + std::string(text) + "'");
    if (s[0] == '+')
      s.erase(0, 1);
    return BigInt(s, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
  if (is_zero())
    throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(unsigned exponent) const {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(n, d);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational &Rational::operator+=(const Rational &rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero())
    throw DivisionByZero(to_string() + " / 0");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(unsigned digits) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt n = ::abs(value_.get_num()) * scale;
  const BigInt &d = value_.get_den();
  BigInt q = n / d;
  BigInt r = n % d;
  if (2 * r >= d)
    ++q;
  std::string body = q.get_str();
  if (body.size() <= digits)
    body.insert(0, digits + 1 - body.size(), '0');
  std::string out = sign() < 0 && q != 0 ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0)
    out += "." + body.substr(body.size() - digits);
  return out;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

} // namespace etainv
