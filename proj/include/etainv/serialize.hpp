#pragma once

// JSON and CSV encodings shared by the CLI and its consumers.
//
//   Rational        "num/den" in lowest terms ("3/1" for integers)
//   UniPoly         ["c0", "c1", ...] trimmed, lowest degree first
//   PowerSeries     {"variable", "order", "coeffs"}
//   CohClass        {"k", "c", "p", "q"}
//   EtaReport       {"k", "c", "s", "t", "a_value", "eta_rel", "A0", "A1", "sign_convention"}
//   AbelianGroup    {"free_rank", "torsion"}

#include <string>
#include <vector>

#include <json.hpp>

#include "etainv/cohomology_ring.hpp"
#include "etainv/invariants.hpp"
#include "etainv/power_series.hpp"
#include "etainv/rational.hpp"
#include "etainv/unipoly.hpp"
#include "etainv/zcohomology.hpp"

namespace etainv {

using json = nlohmann::ordered_json;

json to_json(const Rational &r);
json to_json(const UniPoly &p);
json to_json(const CohClass &x);
json to_json(const EtaReport &report, bool approx = false);
json to_json(const AbelianGroupDesc &g);
json to_json(const FamilyScan &scan, bool approx = false);

template <typename C> json to_json(const PowerSeries<C> &f) {
  json coeffs = json::array();
  for (const auto &c : f.coeffs())
    coeffs.push_back(to_json(c));
  return json{{"variable", f.variable()}, {"order", f.order()}, {"coeffs", coeffs}};
}

/// Inverses used by consumers of the JSON output; throw ParseError.
Rational rational_from_json(const json &j);
UniPoly unipoly_from_json(const json &j, std::string variable = "s");
EtaReport eta_report_from_json(const json &j);

/// Fixed column order k,c,s,t,a_value,eta_rel,A0,A1,sign_convention.
std::string csv_header(bool approx = false);
std::string csv_row(const EtaReport &report, bool approx = false);

} // namespace etainv
