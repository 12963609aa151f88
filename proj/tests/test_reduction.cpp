#include <random>

#include "doctest.h"
#include "hcrank/cnf.hpp"
#include "hcrank/errors.hpp"
#include "hcrank/hcount.hpp"
#include "hcrank/linalg.hpp"
#include "hcrank/reduction.hpp"

using namespace hcrank;

namespace {

Cnf random_cnf(std::mt19937& rng, int vars, int clauses) {
  Cnf c{vars, {}};
  for (int j = 0; j < clauses; ++j) {
    std::vector<int> cl;
    int len = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < len; ++i) {
      int v = 1 + static_cast<int>(rng() % static_cast<unsigned>(vars));
      cl.push_back(rng() % 2 ? v : -v);
    }
    c.clauses.push_back(cl);
  }
  return c;
}

mpz_class reduce_and_count(const Cnf& cnf, const ReductionParams& prm, bool allow_empty = false) {
  auto out = assemble(cnf, prm, allow_empty);
  validate_decomposition(out.graph, out.pd);
  CHECK(out.width <= out.width_bound);
  CHECK(out.width_bound == out.q * out.beta + kWidthConstant * out.beta);
  CHECK(out.predicted == cnf.count_models() % prm.p);
  return count_hc_pathdp(out.graph, out.pd, prm.p).value;
}

}  // namespace

TEST_CASE("dimacs") {
  auto c = parse_dimacs("c demo\np cnf 3 2\n1 -2 0\n2 3 0\n");
  CHECK(c.num_vars == 3);
  CHECK(c.clauses == std::vector<std::vector<int>>{{1, -2}, {2, 3}});
  CHECK(parse_dimacs(write_dimacs(c)).clauses == c.clauses);
  CHECK(c.count_models() == 4);
  CHECK(c.satisfied_by(0b011));
  CHECK_FALSE(c.satisfied_by(0b000));
  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), DomainError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
}

TEST_CASE("basis selection") {
  auto b4 = select_basis(4, 3, 0);
  CHECK(b4.B_l.size() == 1);
  CHECK(b4.B_r.size() == 1);
  CHECK(b4.F.at(0, 0) == 1);
  CHECK(b4.B_l[0].matching == Matching::parse("1-3|2-4"));
  CHECK(b4.B_r[0].matching == Matching::parse("1-2|3-4"));

  CHECK_THROWS_AS(select_basis(4, 3, 1), BasisTooSmallError);
  try {
    select_basis(4, 3, 1);
  } catch (const BasisTooSmallError& e) {
    CHECK(e.achieved() == 1);
    CHECK(std::string(e.what()).find("basis too small") != std::string::npos);
  }

  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto prm = select_basis(6, p, 1);
    CHECK(prm.greedy_rank == 15);
    REQUIRE(prm.B_l.size() == 2);
    REQUIRE(prm.B_r.size() == 2);
    CHECK(det(prm.F) != 0);
    CHECK(prm.F * prm.F_inv == ExactMatrix::identity(prm.F.field(), 2));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(prm.F.at(i, j) == (fingerprints_combine(prm.B_l[i], prm.B_r[j]) ? 1 : 0));
    for (const auto& f : prm.B_l) {
      for (int v = 1; v <= 3; ++v) CHECK(f.degree_of(v) == 1);
      CHECK(f.matching.contains(1, 3));
    }
    for (const auto& f : prm.B_r) {
      for (int v = 1; v <= 3; ++v) CHECK(f.degree_of(v) == 1);
      CHECK(f.matching.contains(1, 2));
    }
    CHECK(prm.eta == std::vector<unsigned>{0, 1});
  }
  // Frozen greedy choice.
  auto prm = select_basis(6, 5, 1);
  CHECK(prm.B_l[0].to_string() == "d=111001;M=1-3|2-6");
  CHECK(prm.B_l[1].to_string() == "d=111010;M=1-3|2-5");
  CHECK(prm.B_r[0].to_string() == "d=111212;M=1-2|3-5");
  CHECK(prm.B_r[1].to_string() == "d=111221;M=1-2|3-6");
}

TEST_CASE("label gadget expansion") {
  Graph g(5);
  int x = g.add_vertex(true);
  for (int i = 0; i < 4; ++i) g.add_edge(x, i, static_cast<std::uint8_t>(i + 1), 0);
  g.add_edge(0, 4);
  auto ex = expand_label_gadgets(g);
  CHECK(ex.graph.num_vertices() == 5 + 9);
  CHECK(ex.graph.edges().size() == 10u + 4u + 1u);
  CHECK(ex.image[static_cast<std::size_t>(x)].size() == 9u);
  CHECK_FALSE(ex.graph.has_annotations());

  Graph plain(3);
  plain.add_edge(0, 1);
  CHECK(expand_label_gadgets(plain).graph.edges().size() == 1u);

  Graph bad(2);
  int y = bad.add_vertex(true);
  bad.add_edge(y, 0, 0, 0);
  CHECK_THROWS_AS(expand_label_gadgets(bad), ConstructionError);
}

TEST_CASE("worked fingerprint gadget") {
  // B = v1..v5, a = 6, b = 7
  std::vector<int> B{1, 2, 3, 4, 5, 6, 7};
  GadgetSpec spec;
  spec.boundary = B;
  spec.a = 6;
  spec.b = 7;
  const char* fps[] = {"d=2211011;M=3-4|6-7", "d=0111111;M=2-3|4-5|6-7", "d=0001111;M=4-5|6-7"};
  for (auto t : fps) spec.counts.emplace_back(Fingerprint::parse(t, B), 1);
  spec.validate();
  auto piece = build_fingerprint_gadget(spec);
  validate_decomposition(piece.graph, piece.pd);
  CHECK(piece.graph.num_vertices() == 7 + 3 + 9 * 9);  // a', a'', c and chains of 4, 3, 2 gadgets
  CHECK(piece.pd.width() <= static_cast<int>(B.size()) + 3 * 6);
  auto prof = partial_solution_profile(piece.graph, piece.graph.boundary, piece.pd);
  CHECK(prof.counts.size() == 3u);
  for (const auto& [f, c] : prof.counts) CHECK(c == 1);
}

TEST_CASE("gadget spec preconditions") {
  std::vector<int> B{1, 2, 3, 4};
  GadgetSpec one{B, {{Fingerprint::parse("d=1111;M=1-2|3-4"), 2}}, 1, 2};
  CHECK_THROWS_AS(one.validate(), DomainError);
  GadgetSpec anchors{B, {{Fingerprint::parse("d=1111;M=1-2|3-4"), 1}, {Fingerprint::parse("d=1111;M=1-3|2-4"), 1}}, 1, 2};
  CHECK_THROWS_WITH_AS(anchors.validate(), doctest::Contains("does not match the anchors"), DomainError);
}

TEST_CASE("random gadget specs reproduce their counts") {
  std::mt19937 rng(21);
  const std::vector<int> B{1, 2, 3, 4};
  const auto all = enumerate_fingerprints(B);
  for (int t = 0; t < 15; ++t) {
    GadgetSpec spec{B, {}, 1 + t % 4, 1 + (t + 1 + t / 4) % 4};
    if (spec.a == spec.b) spec.b = spec.a % 4 + 1;
    std::vector<Fingerprint> cand;
    for (const auto& f : all)
      if (f.matching.contains(spec.a, spec.b)) cand.push_back(f);
    std::shuffle(cand.begin(), cand.end(), rng);
    for (std::size_t i = 0; i < std::min<std::size_t>(cand.size(), 3); ++i)
      spec.counts.emplace_back(cand[i], 1 + rng() % 3);
    auto piece = build_fingerprint_gadget(spec);
    auto dp = partial_solution_profile(piece.graph, piece.graph.boundary, piece.pd);
    std::map<std::string, mpz_class> got, want;
    for (const auto& [f, c] : dp.counts) {
      std::vector<std::pair<int, int>> pairs;
      for (auto [u, v] : f.matching.pairs()) pairs.emplace_back(u + 1, v + 1);
      got[Fingerprint(B, f.degree, Matching(pairs)).to_string()] = c;
    }
    for (const auto& [f, m] : spec.counts) want[f.to_string()] = m;
    CHECK(got == want);
  }
}

TEST_CASE("composition rejects mismatched boundaries") {
  auto prm = select_basis(6, 3, 1);
  auto a = build_base_case(prm, 1, {1});
  auto b = build_base_case(prm, 2, {1});
  CHECK_THROWS_AS(compose_clause(a, b), DomainError);
  CHECK_NOTHROW(compose_clause(a, build_base_case(prm, 1, {-1})));
}

TEST_CASE("reduction corpus") {
  auto p3 = select_basis(6, 3, 1), p5 = select_basis(6, 5, 1);
  CHECK(reduce_and_count({1, {{1}}}, p3) == 1);
  CHECK(reduce_and_count({1, {{1}, {-1}}}, p3) == 0);
  CHECK(reduce_and_count({2, {{1, -1}}}, p5) == 4);
  CHECK(reduce_and_count({2, {{1, 2}}}, p3) == 0);
  CHECK(reduce_and_count({2, {{1, 2}}}, p5) == 3);
  CHECK(reduce_and_count({2, {{}}}, p5) == 0);
  CHECK(reduce_and_count({2, {}}, p5, true) == 4);
  CHECK_THROWS_AS(assemble({2, {}}, p5), DomainError);
}

TEST_CASE("reduction on random formulas") {
  std::mt19937 rng(22);
  for (int t = 0; t < 12; ++t) {
    std::uint32_t p = t % 2 ? 5 : 3;
    int gamma = 1 + t % 3 / 2;
    auto prm = select_basis(6, p, gamma);
    Cnf c = random_cnf(rng, 1 + t % 3, 1 + t % 2);
    CHECK(reduce_and_count(c, prm) == c.count_models() % p);
  }
}

TEST_CASE("sidecar json") {
  auto out = assemble({1, {{1}}}, select_basis(6, 3, 1));
  auto js = sidecar_json(out);
  for (auto key : {"\"p\"", "\"beta\"", "\"gamma\"", "\"q\"", "\"width\"", "\"predicted_mod_p\""})
    CHECK(js.find(key) != std::string::npos);
}
