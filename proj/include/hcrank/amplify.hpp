#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hcrank/exact_matrix.hpp"
#include "hcrank/graph.hpp"
#include "hcrank/matchings.hpp"

namespace hcrank {

// K_B^(t): t copies of K_B plus patch edges v_i^j v_{i+1}^1 (j != 1, indices mod t).
// Vertex v_i^j carries label (i-1)B + j; graph id is label - 1.
struct ProductGraph {
  int B = 0, t = 0;
  Graph graph;
  std::vector<std::pair<int, int>> patch_edges;  // labels

  static int label(int B, int i, int j) { return (i - 1) * B + j; }
};

ProductGraph build_product_graph(int B, int t);

enum class TensorSide { Ominus, Obar };

struct TensorFamily {
  std::vector<Matching> base;
  int B = 0, t = 0;
  TensorSide side = TensorSide::Ominus;
  std::vector<Matching> members;  // I^t in lexicographic tuple order
};

TensorFamily tensor_matchings(const std::vector<Matching>& base, int B, int t, TensorSide side);

// M_{tB}[I^(-)t, I^(/)t] with entries from the single-cycle predicate.
ExactMatrix tensor_submatrix(const std::vector<Matching>& base, int B, int t, FieldSpec field);
bool verify_tensor_identity(int B, int t, const std::vector<Matching>& base);

struct RankRow {
  int k = 0;
  std::size_t rank = 0;
  double base = 0;  // rank^(1/k)
};

// k in {4,6,8,10}; k = 12 needs large = true.
std::vector<RankRow> mod_rank_report(std::uint32_t p, const std::vector<int>& ks, bool large);
std::string rank_report_csv(std::uint32_t p, const std::vector<RankRow>& rows);

}  // namespace hcrank
