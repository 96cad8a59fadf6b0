#include "etainv/verify.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "etainv/cohomology_ring.hpp"
#include "etainv/errors.hpp"
#include "etainv/invariants.hpp"
#include "etainv/power_series.hpp"
#include "etainv/zcohomology.hpp"

namespace etainv {

namespace {

Rational rat(std::int64_t n) { return Rational(static_cast<long long>(n)); }

Rational random_rational(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

CohClass random_class(const RingSpec &spec, std::mt19937_64 &rng) {
  std::vector<Rational> p, q;
  for (int i = 0; i < 2 * spec.k(); ++i) {
    p.push_back(random_rational(rng));
    q.push_back(random_rational(rng));
  }
  return CohClass(spec, UniPoly(p, "u"), UniPoly(q, "u"));
}

// (-1)^{k-1} k / 2^{k+1}, the binomial expansion of (1/4)(1 + w^2/2)^{-2}.
Rational binomial_closed_form(int k) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(k + 1));
  return Rational(BigInt(k % 2 == 0 ? -k : k), den);
}

using Check = std::function<std::string()>; // empty string on success

CriterionResult run(int id, std::string name, const Check &check) {
  try {
    std::string failure = check();
    return {id, std::move(name), failure.empty(), failure.empty() ? "ok" : failure};
  } catch (const std::exception &e) {
    return {id, std::move(name), false, std::string("exception: ") + e.what()};
  }
}

std::string gysin_cokernels() {
  const std::pair<std::int64_t, std::int64_t> pairs[] = {{2, 1}, {2, 3}, {4, 3}, {6, 5}};
  std::size_t checked = 0;
  for (int k : {2, 3, 4})
    for (auto [s, t] : pairs)
      for (int l = 1; l <= 2 * k - 2; ++l) {
        const auto d = snf(gysin_step_matrix(RingSpec(k, 1), s, t, l));
        if (!(d.size() == 2 && d[0] == 1 && d[1] == BigInt(s * s)))
          return "k=" + std::to_string(k) + " s=" + std::to_string(s) + " t=" + std::to_string(t) +
                 " l=" + std::to_string(l) + ": SNF is not (1, s^2)";
        ++checked;
      }
  return checked == 0 ? "no cases" : "";
}

std::string h4_orders() {
  for (std::int64_t s : {2, 4, 6})
    if (h4_M_order(s) != BigInt(4 * s * s))
      return "s=" + std::to_string(s) + ": |H^4(M)| = " + h4_M_order(s).get_str();
  return "";
}

std::string mbar_table() {
  const std::vector<AbelianGroupDesc> expected = {
      AbelianGroupDesc::free(1), {},  AbelianGroupDesc::free(1), {}, AbelianGroupDesc::cyclic(4),
      {},  AbelianGroupDesc::cyclic(4), AbelianGroupDesc::free(1), {}, AbelianGroupDesc::free(1)};
  const auto table = cohomology_Mbar(2, 2);
  if (table != expected) {
    std::string got;
    for (const auto &g : table)
      got += g.to_string() + " ";
    return "got " + got;
  }
  return "";
}

std::string three_way_a1() {
  for (int k : {2, 3})
    for (std::int64_t s : {2, 4, 6}) {
      const Rational direct = a1_direct(k, s);
      const Rational residue = a1_residue(k, s);
      for (std::int64_t c : {1, 3}) {
        const Rational affine = decompose_affine_in_t(k, c, s).A1;
        if (!(direct == residue && residue == affine))
          return "k=" + std::to_string(k) + " s=" + std::to_string(s) + " c=" + std::to_string(c) +
                 ": direct " + direct.to_string() + ", residue " + residue.to_string() + ", affine " +
                 affine.to_string();
      }
    }
  return "";
}

std::string s2_closed_form_check() {
  for (int k = 2; k <= 5; ++k) {
    const Rational expected = binomial_closed_form(k);
    if (!(a1_direct(k, 2) == expected) || !(s2_closed_form(k) == expected))
      return "k=" + std::to_string(k) + ": a1_direct " + a1_direct(k, 2).to_string() + ", expected " +
             expected.to_string();
  }
  if (!(a1_direct(2, 2) == Rational(-1, 4)) || !(a1_direct(3, 2) == Rational(3, 16)))
    return "anchor values -1/4 (k=2) and 3/16 (k=3) not reproduced";
  return "";
}

std::string affinity() {
  std::vector<Rational> a;
  for (std::int64_t t : {1, 3, 5, 7})
    a.push_back(local_datum(FamilyParams(2, 1, 2, t)));
  for (std::size_t i = 0; i + 2 < a.size(); ++i)
    if (!(a[i] - Rational(2) * a[i + 1] + a[i + 2]).is_zero())
      return "nonzero second difference at index " + std::to_string(i);
  return "";
}

std::string distinctness() {
  std::vector<std::int64_t> ts;
  for (std::int64_t t = 1; t <= 49; t += 2)
    ts.push_back(t);
  const auto scan = family_scan(2, 1, 2, ts);
  if (scan.valid_count != 25 || scan.distinct_count != 25)
    return "valid " + std::to_string(scan.valid_count) + ", distinct " + std::to_string(scan.distinct_count);
  for (const auto &e : scan.entries)
    if (!(e.report->eta_rel == Rational(-2) * e.report->a_value))
      return "eta_rel != -2 a_value at t=" + std::to_string(e.t);
  return "";
}

std::string a1_polynomial() {
  for (int k : {2, 3}) {
    const UniPoly p = a1_poly_in_s(k);
    if (!p.is_odd() || p.degree() > 2 * k - 1 || p.is_zero())
      return "k=" + std::to_string(k) + ": A1(s) = " + p.to_string() + " is not a nonzero odd polynomial of degree <= 2k-1";
    for (std::int64_t s : {2, 4, 6})
      if (!(poly_eval(p, rat(s)) == a1_direct(k, s)))
        return "k=" + std::to_string(k) + " s=" + std::to_string(s) + ": A1(s) disagrees with a1_direct";
  }
  return "";
}

std::string series_engine() {
  const auto ahat = ahat_factor_series<Rational>(4);
  if (!(ahat.coeff(0) == Rational(1) && ahat.coeff(1).is_zero() && ahat.coeff(2) == Rational(-1, 24) &&
        ahat.coeff(3).is_zero() && ahat.coeff(4) == Rational(7, 5760)))
    return "A-hat factor does not begin 1 - x^2/24 + 7x^4/5760";
  const Rational half(1, 2);
  const auto w = ps_exp(half, 5, "u") - ps_exp(-half, 5, "u");
  const auto u = ps_revert(w, "w");
  const std::vector<Rational> expected = {0, 1, 0, Rational(-1, 24), 0, Rational(3, 640)};
  if (u.coeffs() != expected)
    return "revert(2 sinh(u/2)) does not begin w - w^3/24 + 3w^5/640";

  std::mt19937_64 rng(0x5eedULL);
  constexpr std::size_t order = 12;
  for (int trial = 0; trial < 40; ++trial) {
    PowerSeries<Rational> f("x", order);
    for (std::size_t i = 1; i <= order; ++i)
      f.set_coeff(i, random_rational(rng));
    if (f.coeff(1).is_zero())
      f.set_coeff(1, Rational(1));
    const auto g = ps_revert(f);
    if (!(ps_compose(f, g) == PowerSeries<Rational>::identity("x", order)))
      return "compose(f, revert(f)) != identity in trial " + std::to_string(trial);
    if (!(ps_revert(g) == f))
      return "revert(revert(f)) != f in trial " + std::to_string(trial);
  }
  return "";
}

std::string ring_engine() {
  std::mt19937_64 rng(0xc0ffeeULL);
  std::size_t checks = 0;
  for (int k : {2, 3})
    for (std::int64_t c : {1, 3}) {
      const RingSpec spec(k, c);
      for (int trial = 0; trial < 250; ++trial, ++checks) {
        const auto a = random_class(spec, rng), b = random_class(spec, rng), d = random_class(spec, rng);
        if (!((a * b) * d == a * (b * d)))
          return "associativity failed for (k, c) = (" + std::to_string(k) + ", " + std::to_string(c) + ")";
        if (!(a * b == b * a))
          return "commutativity failed";
        const std::size_t n1 = rng() % (2 * k + 1), n2 = rng() % (2 * k + 1);
        const auto prod = a.homogeneous_part(n1) * b.homogeneous_part(n2);
        if (!prod.is_homogeneous_of(n1 + n2))
          return "grading failed for half-degrees " + std::to_string(n1) + ", " + std::to_string(n2);
      }
      const auto u = CohClass::u(spec);
      const auto v = CohClass::v(spec);
      const unsigned top = static_cast<unsigned>(2 * k);
      if (!(u.pow(top) == rat(c) * u.pow(top - 1) * v))
        return "u^{2k} != c u^{2k-1} v";
      if (!u.pow(top + 1).is_zero())
        return "u^{2k+1} != 0";
    }
  return checks >= 1000 ? "" : "fewer than 1000 randomized checks";
}

} // namespace

std::vector<CriterionResult> run_builtin_suite() {
  return {
      run(1, "Gysin cokernels are cyclic of order s^2", gysin_cokernels),
      run(2, "|H^4(M_{s,t,c})| = 4 s^2", h4_orders),
      run(3, "H^*(Mbar) for (k, s) = (2, 2)", mbar_table),
      run(4, "three-way agreement of A1", three_way_a1),
      run(5, "A1 at s = 2 equals (-1)^{k-1} k / 2^{k+1}", s2_closed_form_check),
      run(6, "a(B_c)(tau) is affine in t", affinity),
      run(7, "25 pairwise distinct relative eta-invariants", distinctness),
      run(8, "A1(s) is odd of degree <= 2k-1", a1_polynomial),
      run(9, "series engine", series_engine),
      run(10, "cohomology ring engine", ring_engine),
  };
}

} // namespace etainv
