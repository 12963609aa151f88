#include "hcrank/amplify.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hcrank/errors.hpp"
#include "hcrank/linalg.hpp"

namespace hcrank {

ProductGraph build_product_graph(int B, int t) {
  if (B < 4 || B % 2) throw DomainError("block size B must be even and at least 4");
  if (t < 1) throw DomainError("copy count t must be at least 1");
  ProductGraph pg;
  pg.B = B;
  pg.t = t;
  pg.graph = Graph(B * t);
  for (int i = 1; i <= t; ++i)
    for (int a = 1; a <= B; ++a)
      for (int b = a + 1; b <= B; ++b) pg.graph.add_edge(ProductGraph::label(B, i, a) - 1, ProductGraph::label(B, i, b) - 1);
  for (int i = 1; i <= t; ++i) {
    int next = i % t + 1;
    for (int j = 2; j <= B; ++j) {
      int u = ProductGraph::label(B, i, j), v = ProductGraph::label(B, next, 1);
      pg.patch_edges.emplace_back(std::min(u, v), std::max(u, v));
      // with t = 1 the patch edge is already a clique edge
      if (!pg.graph.has_edge(u - 1, v - 1)) pg.graph.add_edge(u - 1, v - 1);
    }
  }
  return pg;
}

TensorFamily tensor_matchings(const std::vector<Matching>& base, int B, int t, TensorSide side) {
  TensorFamily fam{base, B, t, side, {}};
  if (B * t > kMaxMatchingOrder) throw CapacityError("tensor families: tB is capped at " + std::to_string(kMaxMatchingOrder));
  auto pg = build_product_graph(B, t);
  std::vector<int> all;
  for (int v = 1; v <= B; ++v) all.push_back(v);
  for (const auto& m : base)
    if (m.vertices() != all) throw DomainError("base matching " + m.to_string() + " is not a perfect matching of K_B");
  std::vector<int> all_t;
  for (int v = 1; v <= B * t; ++v) all_t.push_back(v);
  std::size_t total = 1;
  for (int i = 0; i < t; ++i) total *= base.size();
  std::vector<std::size_t> tuple(static_cast<std::size_t>(t), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= t; ++i) {
      const Matching& m = base[tuple[static_cast<std::size_t>(i - 1)]];
      int r = m.partner(1);
      for (auto [a, b] : m.pairs()) {
        if (side == TensorSide::Obar && a == 1) continue;
        pairs.emplace_back(ProductGraph::label(B, i, a), ProductGraph::label(B, i, b));
      }
      if (side == TensorSide::Obar) pairs.emplace_back(ProductGraph::label(B, i, r), ProductGraph::label(B, i % t + 1, 1));
    }
    Matching mm(pairs);
    if (mm.vertices() != all_t) throw ConstructionError("tensor member is not a perfect matching: " + mm.to_string());
    for (auto [a, b] : mm.pairs())
      if (!pg.graph.has_edge(a - 1, b - 1)) throw ConstructionError("tensor member uses a non-edge " + mm.to_string());
    fam.members.push_back(std::move(mm));
    for (int i = t - 1; i >= 0; --i) {
      if (++tuple[static_cast<std::size_t>(i)] < base.size()) break;
      tuple[static_cast<std::size_t>(i)] = 0;
    }
  }
  return fam;
}

ExactMatrix tensor_submatrix(const std::vector<Matching>& base, int B, int t, FieldSpec field) {
  if (B * t > kMaxMatrixOrder) throw CapacityError("tensor identity checked for tB <= 12");
  auto rows = tensor_matchings(base, B, t, TensorSide::Ominus);
  auto cols = tensor_matchings(base, B, t, TensorSide::Obar);
  ExactMatrix m(field, rows.members.size(), cols.members.size());
  for (std::size_t i = 0; i < rows.members.size(); ++i)
    for (std::size_t j = 0; j < cols.members.size(); ++j)
      if (is_single_cycle(rows.members[i], cols.members[j])) m.set(i, j, 1LL);
  return m;
}

bool verify_tensor_identity(int B, int t, const std::vector<Matching>& base) {
  ExactMatrix f(FieldSpec::rationals(), base.size(), base.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j)
      if (is_single_cycle(base[i], base[j])) f.set(i, j, 1LL);
  return tensor_submatrix(base, B, t, FieldSpec::rationals()) == kronecker_power(f, t);
}

std::vector<RankRow> mod_rank_report(std::uint32_t p, const std::vector<int>& ks, bool large) {
  auto field = FieldSpec::prime(p);
  std::vector<RankRow> out;
  for (int k : ks) {
    if (k == 12 && !large) throw CapacityError("k = 12 is the large tier; pass the large flag");
    if (k < 2 || k > 12 || k % 2) throw DomainError("rank report supports even k in [2, 12]");
    auto m = build_M(k, field);
    RankRow row;
    row.k = k;
    row.rank = rank(m);
    row.base = std::pow(static_cast<double>(row.rank), 1.0 / k);
    out.push_back(row);
  }
  return out;
}

std::string rank_report_csv(std::uint32_t p, const std::vector<RankRow>& rows) {
  std::ostringstream out;
  out << "p,k,rank,base\n";
  for (const auto& r : rows) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r.base);
    out << p << ',' << r.k << ',' << r.rank << ',' << buf << '\n';
  }
  return out.str();
}

}  // namespace hcrank
