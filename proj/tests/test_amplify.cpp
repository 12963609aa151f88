#include <cmath>
#include <set>

#include "doctest.h"
#include "hcrank/amplify.hpp"
#include "hcrank/errors.hpp"
#include "hcrank/linalg.hpp"

using namespace hcrank;

TEST_CASE("product graph") {
  auto pg = build_product_graph(6, 3);
  CHECK(pg.graph.num_vertices() == 18);
  CHECK(pg.graph.edges().size() == 60u);
  CHECK(pg.patch_edges.size() == 15u);
  CHECK(pg.graph.has_edge(ProductGraph::label(6, 1, 2) - 1, ProductGraph::label(6, 2, 1) - 1));
  CHECK_FALSE(pg.graph.has_edge(ProductGraph::label(6, 1, 2) - 1, ProductGraph::label(6, 2, 2) - 1));

  auto one = build_product_graph(4, 1);
  CHECK(one.graph.edges().size() == 6u);
  CHECK(one.patch_edges.size() == 3u);
  CHECK_THROWS_AS(build_product_graph(5, 2), DomainError);
}

TEST_CASE("tensor families") {
  auto base = enumerate_matchings(6);
  auto om = tensor_matchings(base, 6, 2, TensorSide::Ominus);
  CHECK(om.members.size() == 225u);
  auto ob = tensor_matchings(base, 6, 2, TensorSide::Obar);
  auto pg = build_product_graph(6, 2);
  std::set<std::pair<int, int>> patch(pg.patch_edges.begin(), pg.patch_edges.end());
  for (const auto& m : ob.members) {
    int used = 0;
    for (auto pr : m.pairs()) used += static_cast<int>(patch.count(pr));
    CHECK(used == 2);
  }
  for (const auto& m : om.members)
    for (auto pr : m.pairs()) CHECK(patch.count(pr) == 0);
}

TEST_CASE("tensor identity") {
  auto base6 = enumerate_matchings(6);
  CHECK(verify_tensor_identity(6, 2, base6));
  CHECK(verify_tensor_identity(4, 2, enumerate_matchings(4)));
  CHECK(verify_tensor_identity(4, 3, enumerate_matchings(4)));
  auto sub = tensor_submatrix(base6, 6, 2, FieldSpec::rationals());
  auto m6 = build_M(6);
  CHECK(sub == kronecker(m6, m6));
}

TEST_CASE("rank report") {
  auto rows = mod_rank_report(3, {4, 6, 8, 10}, false);
  REQUIRE(rows.size() == 4u);
  CHECK(rows[0].rank == 3);
  CHECK(rows[1].rank == 15);
  CHECK(rows[3].rank == 567);
  CHECK(rows[3].base == doctest::Approx(std::pow(567.0, 0.1)));
  CHECK_THROWS_AS(mod_rank_report(3, {12}, false), CapacityError);
  CHECK(rank_report_csv(3, rows).find("567") != std::string::npos);
}
