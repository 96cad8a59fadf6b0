#pragma once

// Characteristic classes of B_c, the fixed-point integrand over B_c and the
// relative eta-invariant of M_{s,t,c}, plus three independent routes to the
// coefficient A1 in a(B_c)(tau) = A0 - A1 t.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etainv/cohomology_ring.hpp"
#include "etainv/power_series.hpp"
#include "etainv/rational.hpp"
#include "etainv/unipoly.hpp"

namespace etainv {

/// Series truncation override; std::nullopt selects the default order.
using SeriesOrder = std::optional<std::size_t>;

/// (k, c, s, t) with k >= 2, c odd, s even and nonzero, t odd, gcd(s, t) = 1.
/// The constructor throws InvalidParams naming the violated assumption.
class FamilyParams {
public:
  FamilyParams(int k, std::int64_t c, std::int64_t s, std::int64_t t);

  int k() const { return k_; }
  std::int64_t c() const { return c_; }
  std::int64_t s() const { return s_; }
  std::int64_t t() const { return t_; }
  RingSpec ring() const { return RingSpec(k_, c_); }

  friend bool operator==(const FamilyParams &, const FamilyParams &) = default;

private:
  int k_;
  std::int64_t c_, s_, t_;
};

/// Throws InvalidParams unless s is even and nonzero.
void require_valid_s(std::int64_t s);

/// The overall sign of the fixed-point datum is not determined by the
/// geometry; PLUS means a_value = +integral.
enum class SignConvention { Plus, Minus };
std::string to_string(SignConvention sign);

struct AffineInT {
  Rational A0;
  Rational A1;
};

struct EtaReport {
  FamilyParams params;
  Rational a_value;
  Rational eta_rel;
  Rational A0;
  Rational A1;
  SignConvention sign_convention = SignConvention::Plus;
};

/// 4k + 2: the working order for evaluations in H*(B_c).
std::size_t default_ring_order(int k);
/// 2k + 2: the working order for the univariate A1 computations.
std::size_t default_a1_order(int k);

/// x / (e^{x/2} - e^{-x/2}) to the given order.
template <typename C> PowerSeries<C> ahat_factor_series(std::size_t order, std::string variable = "x") {
  const C half(Rational(1, 2));
  auto two_sinh = ps_exp(half, order + 1, variable) - ps_exp(C(-Rational(1, 2)), order + 1, variable);
  return ps_div(PowerSeries<C>::identity(variable, order + 1), two_sinh);
}

/// 1 / (e^{x/2} + e^{-x/2}) to the given order.
PowerSeries<Rational> half_sech_series(std::size_t order, std::string variable = "x");

/// c(TB_c) = (1 + 2v)((1 + u)^{2k} - c v (1 + u)^{2k-1}).
CohClass chern_total_TBc(const RingSpec &spec);

/// Product of the A-hat factor over the Chern roots 2v, u (2k-1 times), u - cv.
CohClass ahat_Bc(const RingSpec &spec, SeriesOrder order = std::nullopt);

/// A-hat(B_c) / (e^{y/2} + e^{-y/2}) at y = su + tv.
CohClass local_datum_integrand(const FamilyParams &params, SeriesOrder order = std::nullopt);

/// +integral over B_c of local_datum_integrand.
Rational local_datum(const FamilyParams &params, SeriesOrder order = std::nullopt);

/// Same integral for any integer t; only k, c are validated. The value is a
/// polynomial in t, so probes outside the family are still meaningful.
Rational integrate_fixed_point_form(const RingSpec &spec, std::int64_t s, std::int64_t t,
                                    SeriesOrder order = std::nullopt);

/// Fits a = A0 - A1 t through t = 1, 3 and checks t = 5; throws AffinityViolation.
AffineInT decompose_affine_in_t(int k, std::int64_t c, std::int64_t s, SeriesOrder order = std::nullopt);

/// eta_rel = -2 a_value together with the affine decomposition in t.
EtaReport relative_eta(const FamilyParams &params, SeriesOrder order = std::nullopt);

/// Coefficient of u^{2k-1} in (u/(e^{u/2}-e^{-u/2}))^{2k} (e^{su/2}-e^{-su/2}) / (2(e^{su/2}+e^{-su/2})^2),
/// with s in any coefficient ring: Rational for a number, UniPoly for the indeterminate.
template <typename C> C a1_series_coefficient(int k, const C &s, std::size_t order) {
  const std::size_t top = 2 * static_cast<std::size_t>(k) - 1;
  if (order < top)
    throw InsufficientOrder("A1 needs series order >= " + std::to_string(top));
  const auto ahat_power = ps_pow(ahat_factor_series<C>(order, "u"), static_cast<unsigned>(2 * k));
  const C half_s = s * Rational(1, 2);
  const auto up = ps_exp(half_s, order, "u");
  const auto down = ps_exp(C(-half_s), order, "u");
  const auto sum = up + down;
  const auto denominator = sum * sum * C(Rational(2));
  return ps_coeff(ahat_power * ps_div(up - down, denominator), top);
}

Rational a1_direct(int k, std::int64_t s);

/// A1 as the residue at w = 0 after substituting w = 2 sinh(u/2).
Rational a1_residue(int k, std::int64_t s);

/// Coefficient of w^{2k-2} in (1/4) / (1 + w^2/2)^2.
Rational s2_closed_form(int k);

/// A1 as an element of Q[s].
UniPoly a1_poly_in_s(int k);

/// The candidates s with A1(s) != 0; every candidate must be even and nonzero.
std::vector<std::int64_t> find_good_s(int k, const std::vector<std::int64_t> &s_candidates);

struct FamilyScanEntry {
  std::int64_t t;
  std::optional<EtaReport> report;
  /// Set when t violates the family assumptions.
  std::string error;
};

struct FamilyScan {
  int k;
  std::int64_t c, s;
  std::vector<FamilyScanEntry> entries;
  std::size_t valid_count = 0;
  std::size_t distinct_count = 0;
  /// Number of distinct valid t values; distinct_count equals it when A1 != 0.
  std::size_t distinct_t_count = 0;
};

/// Reports for every t, in input order. Invalid t values are reported per
/// entry and do not stop the scan. Entries are computed concurrently.
FamilyScan family_scan(int k, std::int64_t c, std::int64_t s, const std::vector<std::int64_t> &t_values,
                       SeriesOrder order = std::nullopt);

} // namespace etainv
