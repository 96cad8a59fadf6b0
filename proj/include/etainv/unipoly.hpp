#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "etainv/rational.hpp"

namespace etainv {

/// Dense univariate polynomial over Q. The coefficient list is trimmed so the
/// last entry is nonzero; the zero polynomial has no coefficients.
///
/// Constant polynomials are compatible with any variable tag. Combining two
/// non-constant polynomials with different tags throws VariableMismatch.
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(Rational(c)) {}
  UniPoly(const Rational &constant, std::string variable = "s");
  UniPoly(std::vector<Rational> coeffs, std::string variable = "s");

  /// The polynomial x in the given variable.
  static UniPoly identity(std::string variable = "s");
  static UniPoly monomial(const Rational &c, std::size_t degree, std::string variable = "s");

  const std::string &variable() const { return variable_; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(std::size_t i) const;
  Rational constant_term() const { return coeff(0); }

  /// Only odd-degree coefficients are nonzero.
  bool is_odd() const;
  bool is_even() const;

  /// p(-x).
  UniPoly reflect() const;
  /// Keeps the terms of degree <= max_degree.
  UniPoly truncated(std::size_t max_degree) const;

  UniPoly &operator+=(const UniPoly &rhs);
  UniPoly &operator-=(const UniPoly &rhs);
  UniPoly &operator*=(const UniPoly &rhs);
  UniPoly &operator*=(const Rational &rhs);

  friend UniPoly operator+(UniPoly lhs, const UniPoly &rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly &rhs) { return lhs -= rhs; }
  friend UniPoly operator*(UniPoly lhs, const UniPoly &rhs) { return lhs *= rhs; }
  friend UniPoly operator*(UniPoly lhs, const Rational &rhs) { return lhs *= rhs; }
  friend UniPoly operator*(const Rational &lhs, UniPoly rhs) { return rhs *= lhs; }
  UniPoly operator-() const;

  /// Coefficient equality; the variable tag of a constant is ignored.
  friend bool operator==(const UniPoly &a, const UniPoly &b);

  std::string to_string() const;

private:
  void trim();
  const std::string &merged_variable(const UniPoly &rhs) const;

  std::vector<Rational> coeffs_;
  std::string variable_ = "s";
};

std::ostream &operator<<(std::ostream &os, const UniPoly &p);

/// Horner evaluation, exact.
Rational poly_eval(const UniPoly &p, const Rational &x);

inline bool is_zero(const UniPoly &p) { return p.is_zero(); }
/// Units of Q[x] are the nonzero constants.
inline bool is_unit(const UniPoly &p) { return p.degree() == 0; }
/// Throws NonUnitConstantTerm for non-units.
UniPoly unit_inverse(const UniPoly &p);

} // namespace etainv
