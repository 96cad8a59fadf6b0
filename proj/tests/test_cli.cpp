#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "etainv/cli.hpp"
#include "etainv/serialize.hpp"

using namespace etainv;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "etainv");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("compute emits one report") {
  const auto r = invoke({"compute", "-k", "2", "-c", "1", "-s", "2", "-t", "3", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["a_value"] == "7/8");
  CHECK(j["eta_rel"] == "-7/4");
  CHECK(j["A0"] == "1/8");
  CHECK(j["A1"] == "-1/4");
  CHECK(j["sign_convention"] == "PLUS");
  CHECK_FALSE(j.contains("a_value_approx"));

  const auto report = eta_report_from_json(j);
  CHECK(report.params == FamilyParams(2, 1, 2, 3));
  CHECK(report.eta_rel == Rational(-7, 4));
  CHECK(to_json(report, false).dump(2) + "\n" == r.out);
}

TEST_CASE("family sweep") {
  const auto r = invoke({"family", "-k", "2", "-c", "1", "-s", "2", "--t-min", "1", "--t-max", "49", "--t-step", "2"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 25);
  CHECK(j["distinct_count"] == 25);
  CHECK(j["valid_count"] == 25);
  CHECK(j["pairwise_distinct"] == true);
  std::set<std::string> etas;
  for (const auto &row : j["rows"]) {
    const auto report = eta_report_from_json(row);
    CHECK(report.eta_rel == Rational(-2) * report.a_value);
    etas.insert(row["eta_rel"].get<std::string>());
  }
  CHECK(etas.size() == 25);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"compute", "-k", "2", "-c", "2", "-s", "2", "-t", "1"}).code == cli::kExitInvalid);
  CHECK(invoke({"compute", "-k", "1", "-c", "1", "-s", "2", "-t", "1"}).code == cli::kExitInvalid);
  CHECK(invoke({"compute", "-k", "2", "-c", "1", "-s", "6", "-t", "3"}).code == cli::kExitInvalid);
  CHECK(invoke({"compute", "-k", "2", "-c", "1", "-s", "2", "-t", "1", "--order", "2"}).code == cli::kExitInvalid);

  const auto missing = invoke({"compute", "-k", "2", "-c", "1", "-s", "2"});
  CHECK(missing.code == cli::kExitInvalid);
  CHECK(missing.err.find("-t") != std::string::npos);

  const auto bad = invoke({"compute", "-k", "2", "-c", "1", "-s", "3", "-t", "1"});
  CHECK(bad.code == cli::kExitInvalid);
  CHECK(bad.err.find("even") != std::string::npos);

  CHECK(invoke({"compute", "-k", "2", "-c", "1", "-s", "2", "-t", "1", "--format", "xml"}).code == cli::kExitInvalid);
  CHECK(invoke({"verify", "--suite", "nope"}).code == cli::kExitInvalid);
  CHECK(invoke({}).code == cli::kExitInvalid);
}

TEST_CASE("verify runs the built-in suite") {
  const auto r = invoke({"verify", "--suite", "paper", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["criteria"].size() == 10);
  CHECK(invoke({"verify"}).code == cli::kExitOk);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args = {"family", "-k", "3", "-c", "3", "-s", "4", "--t-min", "-9", "--t-max", "21"};
  const auto first = invoke(args);
  for (int i = 0; i < 3; ++i)
    CHECK(invoke(args).out == first.out);
  const std::vector<std::string> csv = {"family", "-k", "2", "-c", "1", "-s", "2", "--t-min", "1", "--t-max", "9", "--format", "csv"};
  CHECK(invoke(csv).out == invoke(csv).out);
}

TEST_CASE("csv layout") {
  const auto r = invoke({"family", "-k", "2", "-c", "1", "-s", "2", "--t-min", "1", "--t-max", "5", "--format", "csv"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out == "k,c,s,t,a_value,eta_rel,A0,A1,sign_convention\n"
                 "2,1,2,1,3/8,-3/4,1/8,-1/4,PLUS\n"
                 "2,1,2,3,7/8,-7/4,1/8,-1/4,PLUS\n"
                 "2,1,2,5,11/8,-11/4,1/8,-1/4,PLUS\n");
}

TEST_CASE("decimal renderings only on request") {
  const auto plain = invoke({"family", "-k", "2", "-c", "1", "-s", "2", "--t-min", "1", "--t-max", "3"});
  CHECK(plain.out.find("approx") == std::string::npos);
  const auto r = invoke({"compute", "-k", "2", "-c", "1", "-s", "2", "-t", "3", "--approx"});
  const auto j = json::parse(r.out);
  CHECK(j["a_value"] == "7/8");
  CHECK(j["eta_rel_approx"].get<std::string>().rfind("-1.75", 0) == 0);
}

TEST_CASE("--output writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "etainv_cli_test.json";
  std::filesystem::remove(path);
  const auto r = invoke({"compute", "-k", "2", "-c", "1", "-s", "2", "-t", "3", "--output", path.string()});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str() == invoke({"compute", "-k", "2", "-c", "1", "-s", "2", "-t", "3"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("--order override leaves exact values unchanged") {
  const std::vector<std::string> base = {"compute", "-k", "3", "-c", "1", "-s", "4", "-t", "5"};
  auto with_order = base;
  with_order.insert(with_order.end(), {"--order", "20"});
  CHECK(invoke(with_order).out == invoke(base).out);
}

TEST_CASE("other subcommands") {
  const auto poly = json::parse(invoke({"a1-poly", "-k", "2"}).out);
  CHECK(poly["coeffs"] == json::array({"0/1", "-1/48", "0/1", "-5/192"}));
  CHECK(poly["odd"] == true);
  CHECK(unipoly_from_json(poly["coeffs"]) == a1_poly_in_s(2));

  const auto good = json::parse(invoke({"find-s", "-k", "2", "--s-candidates", "2,4,6,8"}).out);
  CHECK(good["good_s"].size() <= 4);
  CHECK(good["good_s"][0] == 2);
  CHECK(invoke({"find-s", "-k", "2", "--s-candidates", "3"}).code == cli::kExitInvalid);

  const auto cohom = invoke({"cohomology", "-k", "2", "-s", "2", "--format", "text"});
  CHECK(cohom.code == cli::kExitOk);
  CHECK(cohom.out.find("H^4(Mbar) = Z_4") != std::string::npos);
  CHECK(cohom.out.find("|H^4(M)| = 16") != std::string::npos);
}
