// Runs every acceptance criterion and prints one PASS/FAIL line each.
// --large (or HCRANK_LARGE=1) adds the M_12 tier.
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "hcrank/acceptance.hpp"

int main(int argc, char** argv) {
  hcrank::AcceptanceOptions opts;
  const char* env = std::getenv("HCRANK_LARGE");
  opts.large = env && std::strcmp(env, "0") != 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--large") == 0) opts.large = true;

  int failed = 0;
  for (const auto& c : hcrank::acceptance_criteria()) {
    auto r = hcrank::run_criterion(c.id, opts);
    std::cout << hcrank::format_result(r) << std::endl;
    failed += !r.pass;
  }
  std::cout << (failed ? "FAILED " : "all passed ") << "(" << hcrank::acceptance_criteria().size() - failed << "/"
            << hcrank::acceptance_criteria().size() << ")" << std::endl;
  return failed ? 1 : 0;
}
