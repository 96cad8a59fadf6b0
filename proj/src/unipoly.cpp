#include "etainv/unipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "etainv/errors.hpp"

namespace etainv {

UniPoly::UniPoly(const Rational &constant, std::string variable) : variable_(std::move(variable)) {
  if (!constant.is_zero())
    coeffs_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string variable)
    : coeffs_(std::move(coeffs)), variable_(std::move(variable)) {
  trim();
}

UniPoly UniPoly::identity(std::string variable) { return monomial(Rational(1), 1, std::move(variable)); }

UniPoly UniPoly::monomial(const Rational &c, std::size_t degree, std::string variable) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return UniPoly(std::move(coeffs), std::move(variable));
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

bool UniPoly::is_odd() const {
  for (std::size_t i = 0; i < coeffs_.size(); i += 2)
    if (!coeffs_[i].is_zero())
      return false;
  return true;
}

bool UniPoly::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (!coeffs_[i].is_zero())
      return false;
  return true;
}

UniPoly UniPoly::reflect() const {
  UniPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2)
    r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

UniPoly UniPoly::truncated(std::size_t max_degree) const {
  UniPoly r = *this;
  if (r.coeffs_.size() > max_degree + 1)
    r.coeffs_.resize(max_degree + 1);
  r.trim();
  return r;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

const std::string &UniPoly::merged_variable(const UniPoly &rhs) const {
  if (is_constant())
    return rhs.variable_;
  if (!rhs.is_constant() && rhs.variable_ != variable_)
    throw VariableMismatch(variable_ + " vs " + rhs.variable_);
  return variable_;
}

UniPoly &UniPoly::operator+=(const UniPoly &rhs) {
  variable_ = merged_variable(rhs);
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly &UniPoly::operator-=(const UniPoly &rhs) {
  variable_ = merged_variable(rhs);
  if (coeffs_.size() < rhs.coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly &UniPoly::operator*=(const UniPoly &rhs) {
  variable_ = merged_variable(rhs);
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly &UniPoly::operator*=(const Rational &rhs) {
  for (auto &c : coeffs_)
    c *= rhs;
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

bool operator==(const UniPoly &a, const UniPoly &b) {
  if (a.coeffs_ != b.coeffs_)
    return false;
  return a.is_constant() || a.variable_ == b.variable_;
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational &c = coeffs_[i];
    if (c.is_zero())
      continue;
    Rational mag = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    bool unit = mag == Rational(1);
    if (!unit || i == 0)
      os << (mag.is_integer() ? mag.num().get_str() : mag.to_string());
    if (i > 0) {
      if (!unit)
        os << "*";
      os << variable_;
      if (i > 1)
        os << "^" << i;
    }
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const UniPoly &p) { return os << p.to_string(); }

Rational poly_eval(const UniPoly &p, const Rational &x) {
  Rational acc;
  const auto &cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

UniPoly unit_inverse(const UniPoly &p) {
  if (!is_unit(p))
    throw NonUnitConstantTerm("polynomial " + p.to_string() + " is not a unit in Q[" + p.variable() + "]");
  return UniPoly(p.coeff(0).inverse(), p.variable());
}

} // namespace etainv
