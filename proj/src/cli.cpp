#include "etainv/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "etainv/errors.hpp"
#include "etainv/invariants.hpp"
#include "etainv/serialize.hpp"
#include "etainv/verify.hpp"
#include "etainv/zcohomology.hpp"

namespace etainv::cli {

namespace {

struct Flags {
  int k = 0;
  std::int64_t c = 1, s = 0, t = 1;
  std::int64_t t_min = 1, t_max = 1, t_step = 2;
  std::vector<std::int64_t> s_candidates;
  std::string order = "auto";
  std::string format = "json";
  std::string output;
  bool approx = false;
  std::string suite = "paper";
};

void add_common(CLI::App *sub, Flags &f) {
  sub->add_option("--order", f.order, "series truncation order (default auto = 4k+2)");
  sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--output", f.output, "write the report to this path instead of standard output");
  sub->add_flag("--approx", f.approx, "add decimal renderings next to exact values");
}

std::optional<std::size_t> parse_order(const std::string &text) {
  if (text == "auto")
    return std::nullopt;
  std::size_t pos = 0;
  long long value = -1;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception &) {
    pos = 0;
  }
  if (pos != text.size() || value < 0)
    throw InvalidParams("--order must be 'auto' or a nonnegative integer, got '" + text + "'");
  return static_cast<std::size_t>(value);
}

std::string text_report(const EtaReport &r) {
  std::ostringstream os;
  os << "k = " << r.params.k() << ", c = " << r.params.c() << ", s = " << r.params.s() << ", t = " << r.params.t()
     << "\n"
     << "a(B_c)(tau) = " << r.a_value << "\n"
     << "eta_rel     = " << r.eta_rel << "\n"
     << "A0          = " << r.A0 << "\n"
     << "A1          = " << r.A1 << "\n"
     << "sign        = " << to_string(r.sign_convention) << "\n";
  return os.str();
}

std::vector<std::int64_t> t_range(const RunConfig &cfg) {
  if (cfg.t_step <= 0)
    throw InvalidParams("--t-step must be positive");
  if (cfg.t_min > cfg.t_max)
    throw InvalidParams("--t-min exceeds --t-max: the t range is empty");
  std::vector<std::int64_t> ts;
  for (std::int64_t t = cfg.t_min; t <= cfg.t_max; t += cfg.t_step)
    ts.push_back(t);
  return ts;
}

void render_compute(const RunConfig &cfg, std::ostream &out) {
  const auto report = relative_eta(FamilyParams(*cfg.k, *cfg.c, *cfg.s, *cfg.t), cfg.order);
  switch (cfg.format) {
  case Format::Json:
    out << to_json(report, cfg.approx).dump(2) << "\n";
    break;
  case Format::Csv:
    out << csv_header(cfg.approx) << "\n" << csv_row(report, cfg.approx) << "\n";
    break;
  case Format::Text:
    out << text_report(report);
    if (cfg.approx)
      out << "eta_rel ~   " << report.eta_rel.to_decimal() << "\n";
    break;
  }
}

void render_family(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const auto scan = family_scan(*cfg.k, *cfg.c, *cfg.s, t_range(cfg), cfg.order);
  for (const auto &e : scan.entries)
    if (!e.report)
      err << "skipping t = " << e.t << ": " << e.error << "\n";
  switch (cfg.format) {
  case Format::Json:
    out << to_json(scan, cfg.approx).dump(2) << "\n";
    break;
  case Format::Csv:
    out << csv_header(cfg.approx) << "\n";
    for (const auto &e : scan.entries)
      if (e.report)
        out << csv_row(*e.report, cfg.approx) << "\n";
    break;
  case Format::Text:
    for (const auto &e : scan.entries)
      if (e.report)
        out << "t = " << e.t << "  eta_rel = " << e.report->eta_rel
            << (cfg.approx ? "  (~" + e.report->eta_rel.to_decimal() + ")" : "") << "\n";
    out << "distinct eta_rel values: " << scan.distinct_count << " of " << scan.valid_count << "\n";
    break;
  }
}

void render_a1_poly(const RunConfig &cfg, std::ostream &out) {
  const UniPoly p = a1_poly_in_s(*cfg.k);
  switch (cfg.format) {
  case Format::Json:
    out << json{{"k", *cfg.k}, {"variable", p.variable()}, {"coeffs", to_json(p)}, {"degree", p.degree()},
                {"odd", p.is_odd()}}
               .dump(2)
        << "\n";
    break;
  case Format::Csv:
    out << "degree,coefficient\n";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      out << i << "," << p.coeffs()[i] << "\n";
    break;
  case Format::Text:
    out << "A1(s) = " << p << "\n";
    break;
  }
}

void render_find_s(const RunConfig &cfg, std::ostream &out) {
  const auto good = find_good_s(*cfg.k, cfg.s_candidates);
  const UniPoly p = a1_poly_in_s(*cfg.k);
  switch (cfg.format) {
  case Format::Json: {
    json rows = json::array();
    for (auto s : cfg.s_candidates) {
      const Rational a1 = poly_eval(p, Rational(static_cast<long long>(s)));
      json row{{"s", s}, {"A1", to_json(a1)}, {"good", !a1.is_zero()}};
      if (cfg.approx)
        row["A1_approx"] = a1.to_decimal();
      rows.push_back(row);
    }
    out << json{{"k", *cfg.k}, {"candidates", rows}, {"good_s", good}}.dump(2) << "\n";
    break;
  }
  case Format::Csv:
    out << "s,A1,good\n";
    for (auto s : cfg.s_candidates) {
      const Rational a1 = poly_eval(p, Rational(static_cast<long long>(s)));
      out << s << "," << a1 << "," << (a1.is_zero() ? "false" : "true") << "\n";
    }
    break;
  case Format::Text:
    out << "s with A1(s) != 0:";
    for (auto s : good)
      out << " " << s;
    out << "\n";
    break;
  }
}

void render_cohomology(const RunConfig &cfg, std::ostream &out) {
  const RingSpec spec(*cfg.k, cfg.c.value_or(1));
  const auto table = cohomology_Mbar(spec, *cfg.s, cfg.t.value_or(1));
  const BigInt h4 = h4_M_order(*cfg.s);
  switch (cfg.format) {
  case Format::Json: {
    json groups = json::array();
    for (const auto &g : table)
      groups.push_back(to_json(g));
    out << json{{"k", *cfg.k}, {"s", *cfg.s}, {"Mbar", groups}, {"h4_M_order", h4.get_str()}}.dump(2) << "\n";
    break;
  }
  case Format::Csv:
    out << "degree,free_rank,torsion\n";
    for (std::size_t d = 0; d < table.size(); ++d) {
      out << d << "," << table[d].free_rank << ",";
      for (std::size_t i = 0; i < table[d].torsion.size(); ++i)
        out << (i ? ";" : "") << table[d].torsion[i].get_str();
      out << "\n";
    }
    break;
  case Format::Text:
    for (std::size_t d = 0; d < table.size(); ++d)
      out << "H^" << d << "(Mbar) = " << table[d].to_string() << "\n";
    out << "|H^4(M)| = " << h4.get_str() << "\n";
    break;
  }
}

int render_verify(const RunConfig &cfg, std::ostream &out) {
  if (cfg.suite != "paper")
    throw InvalidParams("unknown suite '" + cfg.suite + "' (available: paper)");
  const auto results = run_builtin_suite();
  bool all = true;
  for (const auto &r : results)
    all = all && r.passed;
  switch (cfg.format) {
  case Format::Json: {
    json rows = json::array();
    for (const auto &r : results)
      rows.push_back(json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out << json{{"suite", cfg.suite}, {"passed", all}, {"criteria", rows}}.dump(2) << "\n";
    break;
  }
  case Format::Csv:
    out << "id,passed,name\n";
    for (const auto &r : results)
      out << r.id << "," << (r.passed ? "true" : "false") << ",\"" << r.name << "\"\n";
    break;
  case Format::Text:
    for (const auto &r : results)
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << (r.passed ? "" : ": " + r.detail)
          << "\n";
    break;
  }
  return all ? kExitOk : kExitInconsistent;
}

void require(bool present, const char *flag, const char *command) {
  if (!present)
    throw InvalidParams(std::string(flag) + " is required for '" + command + "'");
}

} // namespace

std::optional<RunConfig> parse_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err,
                                    int &exit_code) {
  CLI::App app{"Exact relative eta-invariants and Gysin cohomology of the M_{s,t,c} families"};
  app.require_subcommand(1);
  Flags f;

  auto *compute = app.add_subcommand("compute", "eta report for one (k, c, s, t)");
  auto *family = app.add_subcommand("family", "eta reports over a range of t");
  auto *a1poly = app.add_subcommand("a1-poly", "A1 as a polynomial in s");
  auto *finds = app.add_subcommand("find-s", "even s with A1(s) != 0");
  auto *cohom = app.add_subcommand("cohomology", "integral cohomology of Mbar_{s,t,c}");
  auto *verify = app.add_subcommand("verify", "built-in verification suite");

  for (auto *sub : {compute, family, a1poly, finds, cohom, verify})
    add_common(sub, f);
  for (auto *sub : {compute, family, a1poly, finds, cohom})
    sub->add_option("-k", f.k, "half the complex rank of the fibre bundle, k >= 2")->required();
  for (auto *sub : {compute, family})
    sub->add_option("-c", f.c, "odd twisting integer")->required();
  cohom->add_option("-c", f.c, "odd twisting integer (default 1)");
  for (auto *sub : {compute, family, cohom})
    sub->add_option("-s", f.s, "even nonzero integer")->required();
  compute->add_option("-t", f.t, "odd integer coprime to s")->required();
  cohom->add_option("-t", f.t, "odd integer coprime to s (default 1)");
  family->add_option("--t-min", f.t_min, "first t")->required();
  family->add_option("--t-max", f.t_max, "last t")->required();
  family->add_option("--t-step", f.t_step, "t increment (default 2)");
  finds->add_option("--s-candidates", f.s_candidates, "comma separated even integers")->delimiter(',')->required();
  verify->add_option("--suite", f.suite, "suite name (default: paper)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
    return std::nullopt;
  }

  RunConfig cfg;
  const std::pair<CLI::App *, Command> commands[] = {{compute, Command::Compute}, {family, Command::Family},
                                                     {a1poly, Command::A1Poly},   {finds, Command::FindS},
                                                     {cohom, Command::Cohomology}, {verify, Command::Verify}};
  for (auto [sub, cmd] : commands)
    if (sub->parsed())
      cfg.command = cmd;
  auto *active = app.get_subcommands().front();
  auto given = [active](const char *name) {
    const CLI::Option *opt = active->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("-k"))
    cfg.k = f.k;
  if (given("-c"))
    cfg.c = f.c;
  if (given("-s"))
    cfg.s = f.s;
  if (given("-t"))
    cfg.t = f.t;
  cfg.t_min = f.t_min;
  cfg.t_max = f.t_max;
  cfg.t_step = f.t_step;
  cfg.s_candidates = f.s_candidates;
  cfg.format = f.format == "csv" ? Format::Csv : f.format == "text" ? Format::Text : Format::Json;
  cfg.output = f.output;
  cfg.approx = f.approx;
  cfg.suite = f.suite;
  try {
    cfg.order = parse_order(f.order);
  } catch (const InvalidParams &e) {
    err << "error: " << e.what() << "\n";
    exit_code = kExitInvalid;
    return std::nullopt;
  }
  exit_code = kExitOk;
  return cfg;
}

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  std::ostringstream buffer;
  int status = kExitOk;
  try {
    switch (cfg.command) {
    case Command::Compute:
      require(cfg.k && cfg.c && cfg.s && cfg.t, "-k, -c, -s and -t", "compute");
      render_compute(cfg, buffer);
      break;
    case Command::Family:
      require(cfg.k && cfg.c && cfg.s, "-k, -c and -s", "family");
      render_family(cfg, buffer, err);
      break;
    case Command::A1Poly:
      require(cfg.k.has_value(), "-k", "a1-poly");
      render_a1_poly(cfg, buffer);
      break;
    case Command::FindS:
      require(cfg.k.has_value(), "-k", "find-s");
      render_find_s(cfg, buffer);
      break;
    case Command::Cohomology:
      require(cfg.k && cfg.s, "-k and -s", "cohomology");
      render_cohomology(cfg, buffer);
      break;
    case Command::Verify:
      status = render_verify(cfg, buffer);
      break;
    }
  } catch (const InvalidParams &e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InsufficientOrder &e) {
    err << "error: " << e.what() << " (raise --order)\n";
    return kExitInvalid;
  } catch (const AffinityViolation &e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const Error &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open --output path '" << cfg.output << "'\n";
      return kExitInvalid;
    }
    file << buffer.str();
  }
  return status;
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  int code = kExitOk;
  auto cfg = parse_args(argc, argv, out, err, code);
  if (!cfg)
    return code;
  return run(*cfg, out, err);
}

} // namespace etainv::cli
