#include "etainv/cohomology_ring.hpp"

#include <sstream>
#include <vector>

#include "etainv/errors.hpp"

namespace etainv {

RingSpec::RingSpec(int k, std::int64_t c) : k_(k), c_(c) {
  if (k < 2)
    throw InvalidParams("k = " + std::to_string(k) + " violates the standing assumption k >= 2");
  if (c % 2 == 0)
    throw InvalidParams("c = " + std::to_string(c) + " violates the standing assumption that c is odd");
}

CohClass::CohClass(const RingSpec &spec) : spec_(spec), p_(Rational(0), "u"), q_(Rational(0), "u") {}

CohClass::CohClass(const RingSpec &spec, const UniPoly &p, const UniPoly &q) : spec_(spec) { reduce(p, q); }

CohClass CohClass::constant(const RingSpec &spec, const Rational &value) {
  return CohClass(spec, UniPoly(value, "u"), UniPoly(Rational(0), "u"));
}

CohClass CohClass::u(const RingSpec &spec) { return monomial(spec, Rational(1), 1, 0); }

CohClass CohClass::v(const RingSpec &spec) { return monomial(spec, Rational(1), 0, 1); }

CohClass CohClass::monomial(const RingSpec &spec, const Rational &coef, std::size_t i, std::size_t j) {
  if (j >= 2)
    return CohClass(spec);
  auto term = UniPoly::monomial(coef, i, "u");
  return j == 0 ? CohClass(spec, term, UniPoly(Rational(0), "u")) : CohClass(spec, UniPoly(Rational(0), "u"), term);
}

CohClass CohClass::linear(const RingSpec &spec, const Rational &a, const Rational &b) {
  return CohClass(spec, UniPoly::monomial(a, 1, "u"), UniPoly(b, "u"));
}

// u^{2k} = c u^{2k-1} v, hence u^{2k} v = 0 and u^{2k+1} = c u^{2k} v = 0.
void CohClass::reduce(UniPoly p, UniPoly q) {
  const std::size_t top = 2 * static_cast<std::size_t>(spec_.k()) - 1;
  Rational overflow = p.coeff(top + 1);
  p_ = p.truncated(top);
  q_ = q.truncated(top);
  if (!overflow.is_zero())
    q_ += UniPoly::monomial(overflow * Rational(static_cast<long long>(spec_.c())), top, "u");
  p_ = UniPoly(p_.coeffs(), "u");
  q_ = UniPoly(q_.coeffs(), "u");
}

void CohClass::check_spec(const CohClass &rhs) const {
  if (!(spec_ == rhs.spec_))
    throw SpecMismatch("classes belong to H*(B_c) with (k, c) = (" + std::to_string(spec_.k()) + ", " +
                       std::to_string(spec_.c()) + ") and (" + std::to_string(rhs.spec_.k()) + ", " +
                       std::to_string(rhs.spec_.c()) + ")");
}

CohClass CohClass::homogeneous_part(std::size_t n) const {
  CohClass r(spec_);
  r.p_ = UniPoly::monomial(p_.coeff(n), n, "u");
  r.q_ = n >= 1 ? UniPoly::monomial(q_.coeff(n - 1), n - 1, "u") : UniPoly(Rational(0), "u");
  return r;
}

CohClass &CohClass::operator+=(const CohClass &rhs) {
  check_spec(rhs);
  p_ += rhs.p_;
  q_ += rhs.q_;
  return *this;
}

CohClass &CohClass::operator-=(const CohClass &rhs) {
  check_spec(rhs);
  p_ -= rhs.p_;
  q_ -= rhs.q_;
  return *this;
}

CohClass &CohClass::operator*=(const CohClass &rhs) {
  check_spec(rhs);
  // (p1 + v q1)(p2 + v q2) = p1 p2 + v (p1 q2 + q1 p2), using v^2 = 0.
  UniPoly p = p_ * rhs.p_;
  UniPoly q = p_ * rhs.q_ + q_ * rhs.p_;
  reduce(std::move(p), std::move(q));
  return *this;
}

CohClass &CohClass::operator*=(const Rational &rhs) {
  p_ *= rhs;
  q_ *= rhs;
  return *this;
}

CohClass CohClass::operator-() const {
  CohClass r = *this;
  r.p_ = -p_;
  r.q_ = -q_;
  return r;
}

CohClass CohClass::pow(unsigned m) const {
  CohClass result = one(spec_);
  CohClass base = *this;
  while (m > 0) {
    if (m & 1u)
      result *= base;
    m >>= 1;
    if (m > 0)
      base *= base;
  }
  return result;
}

std::string CohClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational &c, std::size_t i, bool with_v) {
    if (c.is_zero())
      return;
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    Rational mag = c.abs();
    bool bare = i == 0 && !with_v;
    if (!(mag == Rational(1)) || bare)
      os << (mag.is_integer() ? mag.num().get_str() : mag.to_string()) << (bare ? "" : "*");
    if (i > 0)
      os << "u" << (i > 1 ? "^" + std::to_string(i) : "");
    if (with_v)
      os << (i > 0 ? "*v" : "v");
  };
  const std::size_t top = 2 * static_cast<std::size_t>(spec_.k()) - 1;
  for (std::size_t i = 0; i <= top; ++i) {
    emit(p_.coeff(i), i, false);
    emit(q_.coeff(i), i, true);
  }
  return first ? "0" : os.str();
}

CohClass coh_add(const CohClass &a, const CohClass &b) { return a + b; }

CohClass coh_mul(const CohClass &a, const CohClass &b) { return a * b; }

CohClass coh_eval_series(const PowerSeries<Rational> &f, const CohClass &x) {
  if (!x.constant_term().is_zero())
    throw NonNilpotentArgument("argument " + x.to_string() + " has a nonzero constant part");
  const std::size_t needed = 2 * static_cast<std::size_t>(x.spec().k());
  if (f.order() < needed)
    throw InsufficientOrder("series of order " + std::to_string(f.order()) + " evaluated in H*(B_c) with k = " +
                            std::to_string(x.spec().k()) + " needs order >= " + std::to_string(needed));
  // Horner; terms beyond x^{2k} vanish.
  CohClass acc = CohClass::constant(x.spec(), f.coeffs()[needed]);
  for (std::size_t n = needed; n-- > 0;)
    acc = acc * x + CohClass::constant(x.spec(), f.coeffs()[n]);
  return acc;
}

Rational coh_integrate(const CohClass &a) { return a.q().coeff(2 * static_cast<std::size_t>(a.spec().k()) - 1); }

} // namespace etainv
