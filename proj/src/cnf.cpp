#include "hcrank/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "hcrank/errors.hpp"

namespace hcrank {

void Cnf::validate() const {
  if (num_vars < 0) throw DomainError("negative variable count");
  for (const auto& c : clauses)
    for (int l : c)
      if (l == 0 || std::abs(l) > num_vars) throw DomainError("literal " + std::to_string(l) + " out of range");
}

bool Cnf::satisfied_by(unsigned long long a) const {
  for (const auto& c : clauses) {
    bool sat = false;
    for (int l : c) {
      bool val = (a >> (std::abs(l) - 1)) & 1ULL;
      if ((l > 0) == val) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

mpz_class Cnf::count_models() const {
  validate();
  if (num_vars > 24) throw CapacityError("model counting by enumeration capped at 24 variables");
  unsigned long long total = 0;
  for (unsigned long long a = 0; a < (1ULL << num_vars); ++a) total += satisfied_by(a);
  return mpz_class(static_cast<unsigned long>(total));
}

Cnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Cnf cnf;
  bool header = false;
  int declared = 0;
  std::vector<int> cur;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> cnf.num_vars >> declared) || fmt != "cnf")
        throw ParseError("bad DIMACS problem line: " + line);
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before 'p cnf' header");
    std::istringstream all(line);
    long v;
    while (all >> v) {
      if (v == 0) {
        cnf.clauses.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(static_cast<int>(v));
      }
    }
    if (!all.eof()) throw ParseError("bad DIMACS clause line: " + line);
  }
  if (!header) throw ParseError("missing 'p cnf' header");
  if (!cur.empty()) throw ParseError("last clause is not 0-terminated");
  if (static_cast<int>(cnf.clauses.size()) != declared)
    throw ParseError("header declares " + std::to_string(declared) + " clauses, found " + std::to_string(cnf.clauses.size()));
  cnf.validate();
  return cnf;
}

std::string write_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) {
    for (int l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace hcrank
