#pragma once

// Truncated formal power series in one variable.
//
// A PowerSeries<C> of order N carries exactly the coefficients of x^0..x^N;
// everything of degree > N is unknown and discarded. The coefficient type C
// is Rational or UniPoly and must provide is_zero(C), is_unit(C),
// unit_inverse(C), the ring operators, multiplication by Rational and
// construction from Rational.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "etainv/errors.hpp"
#include "etainv/rational.hpp"

namespace etainv {

template <typename C> class PowerSeries {
public:
  using coefficient_type = C;

  /// The zero series of the given order.
  PowerSeries(std::string variable, std::size_t order)
      : variable_(std::move(variable)), coeffs_(order + 1, C(Rational(0))) {}

  /// Order is coeffs.size() - 1; an empty list is treated as the order-0 zero series.
  PowerSeries(std::string variable, std::vector<C> coeffs)
      : variable_(std::move(variable)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      coeffs_.push_back(C(Rational(0)));
  }

  static PowerSeries constant(const C &c, std::string variable, std::size_t order) {
    PowerSeries r(std::move(variable), order);
    r.coeffs_[0] = c;
    return r;
  }

  /// The series x itself (order >= 1 to be meaningful).
  static PowerSeries identity(std::string variable, std::size_t order) {
    PowerSeries r(std::move(variable), order);
    if (order >= 1)
      r.coeffs_[1] = C(Rational(1));
    return r;
  }

  const std::string &variable() const { return variable_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<C> &coeffs() const { return coeffs_; }

  /// Throws OrderExceeded for n > order().
  const C &coeff(std::size_t n) const {
    if (n > order())
      throw OrderExceeded("coefficient " + std::to_string(n) + " requested from a series of order " +
                          std::to_string(order()));
    return coeffs_[n];
  }

  void set_coeff(std::size_t n, C value) {
    if (n > order())
      throw OrderExceeded("cannot set coefficient " + std::to_string(n) + " beyond order " +
                          std::to_string(order()));
    coeffs_[n] = std::move(value);
  }

  /// Index of the first nonzero coefficient, or order()+1 if all are zero.
  std::size_t valuation() const {
    std::size_t i = 0;
    while (i < coeffs_.size() && is_zero(coeffs_[i]))
      ++i;
    return i;
  }

  PowerSeries truncated(std::size_t order) const {
    PowerSeries r = *this;
    r.coeffs_.resize(std::min(order, this->order()) + 1);
    return r;
  }

  PowerSeries with_variable(std::string variable) const {
    PowerSeries r = *this;
    r.variable_ = std::move(variable);
    return r;
  }

  PowerSeries &operator+=(const PowerSeries &rhs) {
    check_variable(rhs);
    coeffs_.resize(std::min(order(), rhs.order()) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }

  PowerSeries &operator-=(const PowerSeries &rhs) {
    check_variable(rhs);
    coeffs_.resize(std::min(order(), rhs.order()) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }

  PowerSeries &operator*=(const PowerSeries &rhs) {
    check_variable(rhs);
    const std::size_t n = std::min(order(), rhs.order());
    std::vector<C> out(n + 1, C(Rational(0)));
    for (std::size_t i = 0; i <= n; ++i) {
      if (is_zero(coeffs_[i]))
        continue;
      for (std::size_t j = 0; i + j <= n; ++j)
        out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
  }

  PowerSeries &operator*=(const C &scalar) {
    for (auto &c : coeffs_)
      c *= scalar;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries &b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries &b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const PowerSeries &b) { return a *= b; }
  friend PowerSeries operator*(PowerSeries a, const C &s) { return a *= s; }
  friend PowerSeries operator*(const C &s, PowerSeries a) { return a *= s; }
  PowerSeries operator-() const {
    PowerSeries r = *this;
    for (auto &c : r.coeffs_)
      c = -c;
    return r;
  }

  friend bool operator==(const PowerSeries &a, const PowerSeries &b) {
    return a.variable_ == b.variable_ && a.coeffs_ == b.coeffs_;
  }

private:
  void check_variable(const PowerSeries &rhs) const {
    if (rhs.variable_ != variable_)
      throw VariableMismatch("series in " + variable_ + " combined with series in " + rhs.variable_);
  }

  std::string variable_;
  std::vector<C> coeffs_;
};

/// sum_{n=0}^{N} a^n x^n / n!, i.e. exp(a x) truncated at order N.
template <typename C> PowerSeries<C> ps_exp(const C &a, std::size_t order, std::string variable = "x") {
  PowerSeries<C> r(std::move(variable), order);
  C term(Rational(1));
  r.set_coeff(0, term);
  for (std::size_t n = 1; n <= order; ++n) {
    term = term * a;
    term = term * Rational(1, BigInt(static_cast<unsigned long>(n)));
    r.set_coeff(n, term);
  }
  return r;
}

template <typename C> PowerSeries<C> ps_add(const PowerSeries<C> &f, const PowerSeries<C> &g) { return f + g; }
template <typename C> PowerSeries<C> ps_sub(const PowerSeries<C> &f, const PowerSeries<C> &g) { return f - g; }
template <typename C> PowerSeries<C> ps_mul(const PowerSeries<C> &f, const PowerSeries<C> &g) { return f * g; }
template <typename C> PowerSeries<C> ps_scale(const PowerSeries<C> &f, const C &s) { return f * s; }

template <typename C> const C &ps_coeff(const PowerSeries<C> &f, std::size_t n) { return f.coeff(n); }

/// f^m by repeated squaring; f^0 is the constant 1 at f's order.
template <typename C> PowerSeries<C> ps_pow(PowerSeries<C> f, unsigned m) {
  auto result = PowerSeries<C>::constant(C(Rational(1)), f.variable(), f.order());
  while (m > 0) {
    if (m & 1u)
      result *= f;
    m >>= 1;
    if (m > 0)
      f *= f;
  }
  return result;
}

/// Quotient h with h*g = f.
///
/// A common factor x^v, where v is the valuation of g, is cancelled first;
/// this requires f to vanish to order v as well and costs v orders of
/// precision, so the result has order min(order f, order g) - v. The leading
/// coefficient of g after cancellation must be a unit.
template <typename C> PowerSeries<C> ps_div(const PowerSeries<C> &f, const PowerSeries<C> &g) {
  if (f.variable() != g.variable())
    throw VariableMismatch("series in " + f.variable() + " divided by series in " + g.variable());
  const std::size_t n = std::min(f.order(), g.order());
  const std::size_t shift = g.valuation();
  if (shift > n)
    throw NonUnitConstantTerm("division by the zero series");
  if (shift > 0 && f.valuation() < shift)
    throw NonUnitConstantTerm("divisor vanishes at 0 to order " + std::to_string(shift) +
                              " but the dividend does not");
  const C &lead = g.coeffs()[shift];
  if (!is_unit(lead))
    throw NonUnitConstantTerm("leading coefficient of the divisor is not a unit");
  const C lead_inv = unit_inverse(lead);
  const std::size_t out_order = n - shift;
  PowerSeries<C> h(f.variable(), out_order);
  for (std::size_t i = 0; i <= out_order; ++i) {
    C acc = f.coeffs()[i + shift];
    for (std::size_t j = 1; j <= i; ++j)
      acc -= g.coeffs()[j + shift] * h.coeffs()[i - j];
    h.set_coeff(i, acc * lead_inv);
  }
  return h;
}

/// f(g(y)); g must have zero constant term. The result is a series in g's
/// variable of order min(order f, order g).
template <typename C> PowerSeries<C> ps_compose(const PowerSeries<C> &f, const PowerSeries<C> &g) {
  if (!is_zero(g.coeffs()[0]))
    throw NonzeroConstantInner("inner series has a nonzero constant term");
  const std::size_t n = std::min(f.order(), g.order());
  const PowerSeries<C> inner = g.truncated(n);
  auto acc = PowerSeries<C>::constant(f.coeffs()[n], g.variable(), n);
  for (std::size_t i = n; i-- > 0;) {
    acc *= inner;
    acc.set_coeff(0, acc.coeffs()[0] + f.coeffs()[i]);
  }
  return acc;
}

/// Compositional inverse: g with f(g(w)) = w and g(f(u)) = u to f's order.
/// Coefficients are fixed one degree at a time: raising g_n by d raises
/// (f o g)_n by f_1 * d and leaves lower coefficients unchanged.
template <typename C> PowerSeries<C> ps_revert(const PowerSeries<C> &f, std::string variable = {}) {
  if (variable.empty())
    variable = f.variable();
  const std::size_t n = f.order();
  if (n < 1 || !is_zero(f.coeffs()[0]) || !is_unit(f.coeffs()[1]))
    throw NotReversible("series needs zero constant term and a unit linear coefficient");
  const C lin_inv = unit_inverse(f.coeffs()[1]);
  PowerSeries<C> g(variable, n);
  g.set_coeff(1, lin_inv);
  for (std::size_t i = 2; i <= n; ++i) {
    const auto h = ps_compose(f.truncated(i), g.truncated(i));
    g.set_coeff(i, g.coeffs()[i] - h.coeffs()[i] * lin_inv);
  }
  return g;
}

} // namespace etainv
