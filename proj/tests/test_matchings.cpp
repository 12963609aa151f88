#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hcrank/errors.hpp"
#include "hcrank/linalg.hpp"
#include "hcrank/matchings.hpp"
#include "hcrank/tableaux.hpp"

using namespace hcrank;

namespace {

// Walk the alternating cycles directly from pair lists.
std::vector<int> cycle_lengths(const Matching& a, const Matching& b) {
  std::map<int, int> pa, pb;
  for (auto [u, v] : a.pairs()) pa[u] = v, pa[v] = u;
  for (auto [u, v] : b.pairs()) pb[u] = v, pb[v] = u;
  std::set<int> seen;
  std::vector<int> out;
  for (auto [v, w] : pa) {
    (void)w;
    if (seen.count(v)) continue;
    int len = 0, x = v;
    bool use_a = true;
    do {
      seen.insert(x);
      x = use_a ? pa[x] : pb[x];
      use_a = !use_a;
      ++len;
    } while (x != v || !use_a);
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST_CASE("matching parsing and canonical form") {
  Matching m({{4, 3}, {2, 1}});
  CHECK(m.to_string() == "1-2|3-4");
  CHECK(Matching::parse("3-4|1-2") == m);
  CHECK(m.partner(3) == 4);
  CHECK(m.partner(9) == -1);
  CHECK(m.without(1, 2).to_string() == "3-4");
  CHECK(m.with(5, 6).size() == 3);
  CHECK_THROWS_AS(Matching({{1, 2}, {2, 3}}), DomainError);
  CHECK_THROWS_AS(Matching::parse("1-2|3"), ParseError);
}

TEST_CASE("matching counts are double factorials") {
  for (int k = 0; k <= 12; k += 2) {
    auto all = enumerate_matchings(k);
    CHECK(all.size() == double_factorial(k - 1).get_ui());
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set<Matching>(all.begin(), all.end()).size() == all.size());
  }
  CHECK_THROWS_AS(enumerate_matchings(5), DomainError);
  CHECK_THROWS_AS(enumerate_matchings(18), CapacityError);
}

TEST_CASE("cycle type") {
  auto a = Matching::parse("1-2|3-4|5-6"), b = Matching::parse("1-6|2-3|4-5");
  CHECK(union_cycle_type(a, b).lambda == Partition({3}));
  CHECK(is_single_cycle(a, b));
  CHECK(union_cycle_type(a, a).lambda == Partition({1, 1, 1}));
  CHECK(is_single_cycle(Matching::parse("1-2"), Matching::parse("1-2")));

  std::mt19937 rng(7);
  auto all = enumerate_matchings(10);
  for (int t = 0; t < 200; ++t) {
    const auto& x = all[rng() % all.size()];
    const auto& y = all[rng() % all.size()];
    auto lens = cycle_lengths(x, y);
    std::vector<int> half;
    for (int l : lens) half.push_back(l / 2);
    CHECK(union_cycle_type(x, y).lambda.parts() == half);
    CHECK(union_cycle_type(x, y).lambda == union_cycle_type(y, x).lambda);
  }
}

TEST_CASE("M_k structure") {
  auto m4 = build_M(4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(m4.at(i, j) == (i != j ? 1 : 0));
  CHECK(build_M(2).at(0, 0) == 1);
  auto m6 = build_M(6);
  for (std::size_t i = 0; i < m6.rows(); ++i) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < m6.cols(); ++j) s += m6.at(i, j);
    CHECK(s == 8);
  }
  CHECK(m6 == m6.transpose());
  CHECK(build_M(8).row_labels().front() == "1-2|3-4|5-6|7-8");
  CHECK_THROWS_AS(build_M(14), CapacityError);
}

TEST_CASE("fingerprint parse and validation") {
  auto f = Fingerprint::parse("d=0121;M=2-4");
  CHECK(f.boundary == std::vector<int>{1, 2, 3, 4});
  CHECK(f.degree_of(3) == 2);
  CHECK(f.vertices_with_degree(1) == std::vector<int>{2, 4});
  CHECK(f.to_string() == "d=0121;M=2-4");
  CHECK(Fingerprint::parse("d=22;M=").matching.empty());
  CHECK_THROWS_AS(Fingerprint::parse("d=0121;M=2-3"), DomainError);
  CHECK_THROWS_AS(Fingerprint::parse("d=0131;M=2-4"), ParseError);
}

TEST_CASE("fingerprint counts") {
  for (int k = 0; k <= 8; ++k) {
    mpz_class want = 0;
    for (int i = 0; i <= k; i += 2) {
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(k - i));
      want += binomial(k, i) * pw * double_factorial(i - 1);
    }
    std::vector<int> b;
    for (int i = 1; i <= k; ++i) b.push_back(i);
    auto all = enumerate_fingerprints(b);
    CHECK(all.size() == want.get_ui());
    CHECK(fingerprint_count(k) == want.get_ui());
    CHECK(std::set<Fingerprint>(all.begin(), all.end()).size() == all.size());
  }
  CHECK(fingerprint_count(2) == 5);
  CHECK(fingerprint_count(4) == 43);
}

TEST_CASE("combine relation") {
  auto f = Fingerprint::parse("d=1111;M=1-2|3-4"), g = Fingerprint::parse("d=1111;M=1-3|2-4");
  CHECK(fingerprints_combine(f, g));
  CHECK_FALSE(fingerprints_combine(f, f));
  CHECK(fingerprints_combine(Fingerprint::parse("d=20;M="), Fingerprint::parse("d=02;M=")));
  CHECK_FALSE(fingerprints_combine(Fingerprint::parse("d=20;M="), Fingerprint::parse("d=20;M=")));
  CHECK(fingerprints_combine(Fingerprint::parse("d=2110;M=2-3"), Fingerprint::parse("d=0112;M=2-3")));
}

TEST_CASE("H_k") {
  auto h2 = build_H(2);
  CHECK(h2.rows() == 5);
  CHECK(rank(h2) == 5);
  auto h4 = build_H(4);
  CHECK(h4 == h4.transpose());
  CHECK(rank(h4) == 43);
  CHECK_THROWS_AS(build_H(9), CapacityError);
}

TEST_CASE("G_F") {
  auto g = boundaried_graph_for_fingerprint(Fingerprint::parse("d=1111;M=1-2|3-4"));
  auto deg = g.degrees();
  for (int v = 0; v < 4; ++v) CHECK(deg[static_cast<std::size_t>(v)] == 1);
  for (int v = 4; v < g.num_vertices(); ++v) CHECK(deg[static_cast<std::size_t>(v)] == 2);
  CHECK_THROWS_AS(boundaried_graph_for_fingerprint(Fingerprint::parse("d=2200;M=")), ConstructionError);
  auto cyc = boundaried_graph_for_fingerprint(Fingerprint::parse("d=2222;M="));
  for (int v = 0; v < 4; ++v) CHECK(cyc.degrees()[static_cast<std::size_t>(v)] == 2);
}
