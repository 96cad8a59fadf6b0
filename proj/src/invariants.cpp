#include "etainv/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "etainv/errors.hpp"

namespace etainv {

namespace {

Rational rat(std::int64_t n) { return Rational(static_cast<long long>(n)); }

std::size_t resolve(SeriesOrder order, std::size_t fallback) { return order.value_or(fallback); }

} // namespace

void require_valid_s(std::int64_t s) {
  if (s == 0)
    throw InvalidParams("s = 0 violates the standing assumption that s is nonzero");
  if (s % 2 != 0)
    throw InvalidParams("s = " + std::to_string(s) + " violates the standing assumption that s is even");
}

FamilyParams::FamilyParams(int k, std::int64_t c, std::int64_t s, std::int64_t t) : k_(k), c_(c), s_(s), t_(t) {
  (void)RingSpec(k, c);
  require_valid_s(s);
  if (t % 2 == 0)
    throw InvalidParams("t = " + std::to_string(t) + " violates the standing assumption that t is odd");
  if (gcd(s, t) != 1)
    throw InvalidParams("s = " + std::to_string(s) + ", t = " + std::to_string(t) +
                        " violate the standing assumption that s and t are coprime");
}

std::string to_string(SignConvention sign) { return sign == SignConvention::Plus ? "PLUS" : "MINUS"; }

std::size_t default_ring_order(int k) { return 4 * static_cast<std::size_t>(k) + 2; }

std::size_t default_a1_order(int k) { return 2 * static_cast<std::size_t>(k) + 2; }

PowerSeries<Rational> half_sech_series(std::size_t order, std::string variable) {
  auto two_cosh = ps_exp(Rational(1, 2), order, variable) + ps_exp(-Rational(1, 2), order, variable);
  return ps_div(PowerSeries<Rational>::constant(Rational(1), variable, order), two_cosh);
}

CohClass chern_total_TBc(const RingSpec &spec) {
  const auto one = CohClass::one(spec);
  const auto u = CohClass::u(spec);
  const auto v = CohClass::v(spec);
  const unsigned rank = static_cast<unsigned>(2 * spec.k());
  const auto fibre = (one + u).pow(rank) - rat(spec.c()) * v * (one + u).pow(rank - 1);
  return (one + Rational(2) * v) * fibre;
}

CohClass ahat_Bc(const RingSpec &spec, SeriesOrder order) {
  const auto factor = ahat_factor_series<Rational>(resolve(order, default_ring_order(spec.k())));
  const auto u = CohClass::u(spec);
  const auto v = CohClass::v(spec);
  return coh_eval_series(factor, Rational(2) * v) *
         coh_eval_series(factor, u).pow(static_cast<unsigned>(2 * spec.k() - 1)) *
         coh_eval_series(factor, u - rat(spec.c()) * v);
}

namespace {

CohClass fixed_point_form(const RingSpec &spec, std::int64_t s, std::int64_t t, SeriesOrder order) {
  const std::size_t n = resolve(order, default_ring_order(spec.k()));
  const auto normal_euler = CohClass::linear(spec, rat(s), rat(t));
  return ahat_Bc(spec, n) * coh_eval_series(half_sech_series(n), normal_euler);
}

} // namespace

CohClass local_datum_integrand(const FamilyParams &params, SeriesOrder order) {
  return fixed_point_form(params.ring(), params.s(), params.t(), order);
}

Rational local_datum(const FamilyParams &params, SeriesOrder order) {
  return coh_integrate(local_datum_integrand(params, order));
}

Rational integrate_fixed_point_form(const RingSpec &spec, std::int64_t s, std::int64_t t, SeriesOrder order) {
  return coh_integrate(fixed_point_form(spec, s, t, order));
}

AffineInT decompose_affine_in_t(int k, std::int64_t c, std::int64_t s, SeriesOrder order) {
  const RingSpec spec(k, c);
  require_valid_s(s);
  const Rational at1 = integrate_fixed_point_form(spec, s, 1, order);
  const Rational at3 = integrate_fixed_point_form(spec, s, 3, order);
  const Rational at5 = integrate_fixed_point_form(spec, s, 5, order);
  AffineInT fit;
  fit.A1 = (at1 - at3) / Rational(2);
  fit.A0 = at1 + fit.A1;
  if (!(fit.A0 - Rational(5) * fit.A1 == at5))
    throw AffinityViolation("a(t) at t = 1, 3, 5 is " + at1.to_string() + ", " + at3.to_string() + ", " +
                            at5.to_string() + ": not affine in t");
  return fit;
}

EtaReport relative_eta(const FamilyParams &params, SeriesOrder order) {
  const auto fit = decompose_affine_in_t(params.k(), params.c(), params.s(), order);
  const Rational a = local_datum(params, order);
  if (!(a == fit.A0 - fit.A1 * rat(params.t())))
    throw AffinityViolation("a(t = " + std::to_string(params.t()) + ") = " + a.to_string() +
                            " is off the line A0 - A1 t");
  return EtaReport{params, a, Rational(-2) * a, fit.A0, fit.A1, SignConvention::Plus};
}

Rational a1_direct(int k, std::int64_t s) {
  (void)RingSpec(k, 1);
  require_valid_s(s);
  return a1_series_coefficient<Rational>(k, rat(s), default_a1_order(k));
}

Rational a1_residue(int k, std::int64_t s) {
  (void)RingSpec(k, 1);
  require_valid_s(s);
  const std::size_t n = default_a1_order(k);
  const Rational half(1, 2);
  const Rational half_s = rat(s) * half;

  // u as a series in w = 2 sinh(u/2).
  const auto w_of_u = ps_exp(half, n, "u") - ps_exp(-half, n, "u");
  const auto u_of_w = ps_revert(w_of_u, "w");

  // sinh(su/2) / (2 cosh(su/2))^2 * 1/cosh(u/2), as a series in u.
  const auto up = ps_exp(half_s, n, "u");
  const auto down = ps_exp(-half_s, n, "u");
  const auto sinh_su = (up - down) * half;
  const auto two_cosh_su = up + down;
  const auto cosh_u = (ps_exp(half, n, "u") + ps_exp(-half, n, "u")) * half;
  const auto integrand = ps_div(ps_div(sinh_su, two_cosh_su * two_cosh_su), cosh_u);

  // Res_{w=0} w^{-2k} h(w) is the coefficient of w^{2k-1} in h.
  return ps_coeff(ps_compose(integrand, u_of_w), 2 * static_cast<std::size_t>(k) - 1);
}

Rational s2_closed_form(int k) {
  (void)RingSpec(k, 1);
  const std::size_t n = 2 * static_cast<std::size_t>(k);
  auto base = PowerSeries<Rational>::constant(Rational(1), "w", n);
  base.set_coeff(2, Rational(1, 2));
  const auto quarter = PowerSeries<Rational>::constant(Rational(1, 4), "w", n);
  return ps_coeff(ps_div(quarter, base * base), n - 2);
}

UniPoly a1_poly_in_s(int k) {
  (void)RingSpec(k, 1);
  return UniPoly(a1_series_coefficient<UniPoly>(k, UniPoly::identity("s"), default_a1_order(k)).coeffs(), "s");
}

std::vector<std::int64_t> find_good_s(int k, const std::vector<std::int64_t> &s_candidates) {
  for (auto s : s_candidates)
    require_valid_s(s);
  if (s_candidates.empty())
    return {};
  const UniPoly a1 = a1_poly_in_s(k);
  std::vector<std::int64_t> good;
  for (auto s : s_candidates)
    if (!poly_eval(a1, rat(s)).is_zero())
      good.push_back(s);
  return good;
}

FamilyScan family_scan(int k, std::int64_t c, std::int64_t s, const std::vector<std::int64_t> &t_values,
                       SeriesOrder order) {
  (void)RingSpec(k, c);
  require_valid_s(s);
  const AffineInT fit = decompose_affine_in_t(k, c, s, order);

  FamilyScan scan{k, c, s, {}, 0, 0, 0};
  scan.entries.resize(t_values.size());

  auto evaluate = [&](std::size_t i) {
    FamilyScanEntry &entry = scan.entries[i];
    entry.t = t_values[i];
    try {
      const FamilyParams params(k, c, s, entry.t);
      const Rational a = local_datum(params, order);
      if (!(a == fit.A0 - fit.A1 * rat(entry.t)))
        throw AffinityViolation("a(t = " + std::to_string(entry.t) + ") = " + a.to_string() +
                                " is off the line A0 - A1 t");
      entry.report = EtaReport{params, a, Rational(-2) * a, fit.A0, fit.A1, SignConvention::Plus};
    } catch (const InvalidParams &e) {
      entry.error = e.what();
    }
  };

  // Results land in their input slot, so scheduling is not observable.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < t_values.size(); i = next++) {
      try {
        evaluate(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(t_values.size(), std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w)
      pool.emplace_back(worker);
    worker();
  }
  if (failure)
    std::rethrow_exception(failure);

  std::set<Rational> etas;
  std::set<std::int64_t> ts;
  for (const auto &entry : scan.entries) {
    if (!entry.report)
      continue;
    ++scan.valid_count;
    etas.insert(entry.report->eta_rel);
    ts.insert(entry.t);
  }
  scan.distinct_count = etas.size();
  scan.distinct_t_count = ts.size();
  return scan;
}

} // namespace etainv
