#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hcrank {

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;  // signed DIMACS literals

  void validate() const;
  // Brute force over all assignments (num_vars <= 24).
  mpz_class count_models() const;
  bool satisfied_by(unsigned long long assignment) const;  // bit v-1 = x_v
};

Cnf parse_dimacs(std::string_view text);
std::string write_dimacs(const Cnf& cnf);

}  // namespace hcrank
