#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace etainv::cli {

enum class Command { Compute, Family, A1Poly, FindS, Cohomology, Verify };
enum class Format { Json, Csv, Text };

struct RunConfig {
  Command command = Command::Compute;
  std::optional<int> k;
  std::optional<std::int64_t> c, s, t;
  std::int64_t t_min = 1, t_max = 1, t_step = 2;
  std::vector<std::int64_t> s_candidates;
  std::optional<std::size_t> order; // nullopt: 4k + 2
  Format format = Format::Json;
  std::string output;               // empty: standard output
  bool approx = false;
  std::string suite = "paper";
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInconsistent = 2;

/// Parses argv. On failure (or --help) returns nullopt and sets \p exit_code,
/// writing the message to \p err.
std::optional<RunConfig> parse_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err,
                                    int &exit_code);

/// Executes a parsed configuration, writing the report to \p out or to
/// config.output. Returns the process exit status.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// parse_args followed by run.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace etainv::cli
