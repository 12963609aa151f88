#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hcrank/partition.hpp"

namespace hcrank {

inline constexpr int kMaxPartitionN = 40;
inline constexpr int kMaxSytN = 10;

std::vector<Partition> partitions(int n);  // reverse-lexicographic
bool covers(const Partition& lambda, const Partition& mu);
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);  // row-major by cell
mpz_class f_lambda(const Partition& lambda);
mpz_class enumerate_syt(const Partition& lambda);  // backtracking oracle
mpz_class rational_rank_formula(int n);
mpz_class double_factorial(int n);
mpz_class binomial(int n, int k);
mpz_class catalan(int n);

struct BipartiteRank {
  mpz_class formula;
  std::size_t computed = 0;
};
BipartiteRank bipartite_rank_check(int n);

struct DominoHookReport {
  int n = 0;
  mpz_class literal_sum, catalan_product, noncover_sum;
};
DominoHookReport domino_hook_report(int n);
std::string domino_hook_csv(const std::vector<DominoHookReport>& rows);

}  // namespace hcrank
