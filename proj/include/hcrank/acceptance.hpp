#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hcrank {

struct AcceptanceOptions {
  bool large = false;  // 10395-dimension tier
  unsigned seed = 20231;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string name;  // suite name for `verify <suite>`
  std::string title;
};

const std::vector<Criterion>& acceptance_criteria();
// Accepts "all", a criterion number, or a suite name.
std::vector<int> resolve_suite(const std::string& suite);
CriterionResult run_criterion(int id, const AcceptanceOptions& opts);
std::string format_result(const CriterionResult& r);

}  // namespace hcrank
