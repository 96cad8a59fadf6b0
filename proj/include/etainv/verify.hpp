#pragma once

#include <string>
#include <vector>

namespace etainv {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

/// Built-in consistency suite: Gysin cokernels, |H^4(M)|, the cohomology
/// table of Mbar, three-way agreement of A1, the s = 2 closed form, affinity
/// and distinctness in t, the structure of A1(s), and randomized properties
/// of the series and ring engines. Deterministic (fixed RNG seeds).
std::vector<CriterionResult> run_builtin_suite();

} // namespace etainv
