#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "etainv/power_series.hpp"
#include "etainv/rational.hpp"
#include "etainv/unipoly.hpp"

namespace etainv {

/// Parameters of H*(B_c; Q) = Q[u,v] / (v^2, u^{2k} - c u^{2k-1} v).
/// Throws InvalidParams unless k >= 2 and c is odd.
class RingSpec {
public:
  RingSpec(int k, std::int64_t c);

  int k() const { return k_; }
  std::int64_t c() const { return c_; }
  /// Real dimension of B_c, i.e. 4k.
  int top_degree() const { return 4 * k_; }

  friend bool operator==(const RingSpec &, const RingSpec &) = default;

private:
  int k_;
  std::int64_t c_;
};

/// Element p(u) + v q(u) of H*(B_c; Q) in normal form: deg p, deg q <= 2k-1.
/// Every operation reduces eagerly, so equality is coefficient equality.
class CohClass {
public:
  explicit CohClass(const RingSpec &spec);
  /// Reduces (p, q) to normal form first; p and q may have any degree.
  CohClass(const RingSpec &spec, const UniPoly &p, const UniPoly &q);

  static CohClass constant(const RingSpec &spec, const Rational &value);
  static CohClass one(const RingSpec &spec) { return constant(spec, Rational(1)); }
  static CohClass u(const RingSpec &spec);
  static CohClass v(const RingSpec &spec);
  /// coef * u^i * v^j, reduced.
  static CohClass monomial(const RingSpec &spec, const Rational &coef, std::size_t i, std::size_t j);
  /// a u + b v.
  static CohClass linear(const RingSpec &spec, const Rational &a, const Rational &b);

  const RingSpec &spec() const { return spec_; }
  /// The v-free part.
  const UniPoly &p() const { return p_; }
  /// The coefficient of v.
  const UniPoly &q() const { return q_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  Rational constant_term() const { return p_.constant_term(); }
  /// Component of cohomological degree 2n: the u^n and u^{n-1} v terms.
  CohClass homogeneous_part(std::size_t n) const;
  bool is_homogeneous_of(std::size_t n) const { return *this == homogeneous_part(n); }

  CohClass &operator+=(const CohClass &rhs);
  CohClass &operator-=(const CohClass &rhs);
  CohClass &operator*=(const CohClass &rhs);
  CohClass &operator*=(const Rational &rhs);

  friend CohClass operator+(CohClass a, const CohClass &b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass &b) { return a -= b; }
  friend CohClass operator*(CohClass a, const CohClass &b) { return a *= b; }
  friend CohClass operator*(CohClass a, const Rational &r) { return a *= r; }
  friend CohClass operator*(const Rational &r, CohClass a) { return a *= r; }
  CohClass operator-() const;
  CohClass pow(unsigned m) const;

  friend bool operator==(const CohClass &a, const CohClass &b) {
    return a.spec_ == b.spec_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

  std::string to_string() const;

private:
  void reduce(UniPoly p, UniPoly q);
  void check_spec(const CohClass &rhs) const;

  RingSpec spec_;
  UniPoly p_;
  UniPoly q_;
};

CohClass coh_add(const CohClass &a, const CohClass &b);
CohClass coh_mul(const CohClass &a, const CohClass &b);

/// sum_n f_n x^n. x must have zero constant part (NonNilpotentArgument);
/// since x^{2k+1} = 0 the series needs order >= 2k (InsufficientOrder).
CohClass coh_eval_series(const PowerSeries<Rational> &f, const CohClass &x);

/// Evaluation on the fundamental class: the coefficient of u^{2k-1} v.
Rational coh_integrate(const CohClass &a);

} // namespace etainv
