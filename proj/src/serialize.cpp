#include "etainv/serialize.hpp"

#include "etainv/errors.hpp"

namespace etainv {

namespace {

constexpr unsigned kApproxDigits = 20;

json integer_json(const BigInt &n) {
  if (n.fits_slong_p())
    return json(n.get_si());
  return json(n.get_str());
}

} // namespace

json to_json(const Rational &r) { return r.to_string(); }

json to_json(const UniPoly &p) {
  json out = json::array();
  for (const auto &c : p.coeffs())
    out.push_back(to_json(c));
  return out;
}

json to_json(const CohClass &x) {
  return json{{"k", x.spec().k()}, {"c", x.spec().c()}, {"p", to_json(x.p())}, {"q", to_json(x.q())}};
}

json to_json(const EtaReport &r, bool approx) {
  json j{{"k", r.params.k()},
         {"c", r.params.c()},
         {"s", r.params.s()},
         {"t", r.params.t()},
         {"a_value", to_json(r.a_value)},
         {"eta_rel", to_json(r.eta_rel)},
         {"A0", to_json(r.A0)},
         {"A1", to_json(r.A1)},
         {"sign_convention", to_string(r.sign_convention)}};
  if (approx) {
    j["a_value_approx"] = r.a_value.to_decimal(kApproxDigits);
    j["eta_rel_approx"] = r.eta_rel.to_decimal(kApproxDigits);
    j["A0_approx"] = r.A0.to_decimal(kApproxDigits);
    j["A1_approx"] = r.A1.to_decimal(kApproxDigits);
  }
  return j;
}

json to_json(const AbelianGroupDesc &g) {
  json torsion = json::array();
  for (const auto &d : g.torsion)
    torsion.push_back(integer_json(d));
  return json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

json to_json(const FamilyScan &scan, bool approx) {
  json rows = json::array();
  for (const auto &e : scan.entries) {
    if (e.report)
      rows.push_back(to_json(*e.report, approx));
    else
      rows.push_back(json{{"t", e.t}, {"error", e.error}});
  }
  return json{{"k", scan.k},
              {"c", scan.c},
              {"s", scan.s},
              {"rows", rows},
              {"valid_count", scan.valid_count},
              {"distinct_count", scan.distinct_count},
              {"pairwise_distinct", scan.distinct_count == scan.distinct_t_count}};
}

Rational rational_from_json(const json &j) {
  if (!j.is_string())
    throw ParseError("expected a rational string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

UniPoly unipoly_from_json(const json &j, std::string variable) {
  if (!j.is_array())
    throw ParseError("expected a coefficient array, got " + j.dump());
  std::vector<Rational> coeffs;
  for (const auto &c : j)
    coeffs.push_back(rational_from_json(c));
  return UniPoly(std::move(coeffs), std::move(variable));
}

EtaReport eta_report_from_json(const json &j) {
  try {
    const FamilyParams params(j.at("k").get<int>(), j.at("c").get<std::int64_t>(), j.at("s").get<std::int64_t>(),
                              j.at("t").get<std::int64_t>());
    const std::string sign = j.at("sign_convention").get<std::string>();
    if (sign != "PLUS" && sign != "MINUS")
      throw ParseError("unknown sign convention " + sign);
    return EtaReport{params,
                     rational_from_json(j.at("a_value")),
                     rational_from_json(j.at("eta_rel")),
                     rational_from_json(j.at("A0")),
                     rational_from_json(j.at("A1")),
                     sign == "PLUS" ? SignConvention::Plus : SignConvention::Minus};
  } catch (const json::exception &e) {
    throw ParseError(e.what());
  }
}

std::string csv_header(bool approx) {
  std::string h = "k,c,s,t,a_value,eta_rel,A0,A1,sign_convention";
  if (approx)
    h += ",a_value_approx,eta_rel_approx";
  return h;
}

std::string csv_row(const EtaReport &r, bool approx) {
  std::string row = std::to_string(r.params.k()) + "," + std::to_string(r.params.c()) + "," +
                    std::to_string(r.params.s()) + "," + std::to_string(r.params.t()) + "," + r.a_value.to_string() +
                    "," + r.eta_rel.to_string() + "," + r.A0.to_string() + "," + r.A1.to_string() + "," +
                    to_string(r.sign_convention);
  if (approx)
    row += "," + r.a_value.to_decimal(kApproxDigits) + "," + r.eta_rel.to_decimal(kApproxDigits);
  return row;
}

} // namespace etainv
