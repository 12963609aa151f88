#include "doctest.h"
#include "hcrank/errors.hpp"
#include "hcrank/tableaux.hpp"

using namespace hcrank;

TEST_CASE("partition enumeration") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions(n).size() == static_cast<std::size_t>(counts[n]));
  auto p4 = partitions(4);
  CHECK(p4.front() == Partition({4}));
  CHECK(p4[1] == Partition({3, 1}));
  CHECK(p4.back() == Partition({1, 1, 1, 1}));
  for (int n = 1; n <= 10; ++n)
    for (const auto& p : partitions(n)) CHECK(p.size() == n);
}

TEST_CASE("covers") {
  int count = 0;
  for (const auto& mu : partitions(5))
    if (covers(mu, Partition({2, 2}))) ++count;
  CHECK(count == 2);
  CHECK(covers(Partition({3, 2}), Partition({2, 2})));
  CHECK(covers(Partition({2, 1}), Partition({2, 2})) == false);
  CHECK(covers(Partition({2, 2, 1}), Partition({2, 2})));
  CHECK(covers(Partition({3}), Partition({3})));
  CHECK(covers(Partition({4, 3, 1, 1}), Partition({2, 2})));
  CHECK_FALSE(covers(Partition({2, 1, 1}), Partition({2, 2})));
}

TEST_CASE("hook lengths") {
  auto h = hook_lengths(Partition({3, 2}));
  CHECK(h == std::vector<std::vector<int>>{{4, 3, 1}, {2, 1}});
  CHECK(hook_lengths(Partition({4, 3, 1, 1})) == std::vector<std::vector<int>>{{7, 4, 3, 1}, {5, 2, 1}, {2}, {1}});
  CHECK(hook_lengths(Partition({2, 2})) == std::vector<std::vector<int>>{{3, 2}, {2, 1}});
  CHECK(hook_lengths(Partition({1})) == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("hook formula agrees with tableau enumeration") {
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : partitions(n)) CHECK(f_lambda(p) == enumerate_syt(p));
  CHECK(enumerate_syt(Partition({2, 1})) == 2);
  CHECK(enumerate_syt(Partition({3, 3})) == 5);
  CHECK(f_lambda(Partition({2, 2, 2})) == 5);
  CHECK(f_lambda(Partition({4, 4, 4})) == 462);
}

TEST_CASE("sum of squares of f is n!") {
  for (int n = 1; n <= 12; ++n) {
    mpz_class total = 0, fact = 1;
    for (const auto& p : partitions(n)) total += f_lambda(p) * f_lambda(p);
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(total == fact);
  }
}

TEST_CASE("rank formula") {
  CHECK(rational_rank_formula(2) == 3);
  CHECK(rational_rank_formula(3) == 15);
  CHECK(rational_rank_formula(4) == 105);
  CHECK(rational_rank_formula(5) == 945);
  CHECK(rational_rank_formula(6) == 9933);
  for (int n = 1; n <= 5; ++n) CHECK(rational_rank_formula(n) == double_factorial(2 * n - 1));
  for (int n = 6; n <= 14; ++n) CHECK(rational_rank_formula(n) < double_factorial(2 * n - 1));
  // Frozen values for the first sizes where some cells hit zero.
  CHECK(rational_rank_formula(7) == 114114);
  CHECK(rational_rank_formula(8) == 1383525);
}

TEST_CASE("bipartite rank") {
  for (int n = 2; n <= 4; ++n) {
    auto r = bipartite_rank_check(n);
    CHECK(r.formula == binomial(2 * n - 2, n - 1));
    CHECK(r.computed == r.formula.get_ui());
  }
}

TEST_CASE("catalan") {
  CHECK(catalan(4) == 14);
  CHECK(catalan(6) == 132);
  for (int n = 1; n <= 20; ++n) CHECK(catalan(n) * (n + 1) == binomial(2 * n, n));
}

TEST_CASE("domino hook report") {
  auto r2 = domino_hook_report(2);
  CHECK(r2.literal_sum == 2);
  CHECK(r2.catalan_product == 2);
  auto r4 = domino_hook_report(4);
  CHECK(r4.catalan_product == 70);
  CHECK(r4.noncover_sum == 105);
  for (int n = 2; n <= 10; ++n) {
    auto r = domino_hook_report(n);
    CHECK(r.noncover_sum == rational_rank_formula(n));
    CHECK(r.noncover_sum >= r.catalan_product);
  }
  CHECK(domino_hook_csv({r2, r4}).find("n,literal_sum") != std::string::npos);
}
