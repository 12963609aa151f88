#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hcrank/cnf.hpp"
#include "hcrank/exact_matrix.hpp"
#include "hcrank/graph.hpp"
#include "hcrank/matchings.hpp"

namespace hcrank {

// Default width-bound constant: emitted decompositions satisfy width <= q*beta + c*beta.
inline constexpr int kWidthConstant = 3;

struct ReductionParams {
  int beta = 0, gamma = 0;
  std::uint32_t p = 0;
  std::vector<Fingerprint> B_l, B_r;  // on labels 1..beta
  ExactMatrix F;                      // H_beta[B_l, B_r] mod p
  ExactMatrix F_inv;                  // rows B_r, cols B_l
  std::size_t greedy_rank = 0;        // rank before trimming to 2^gamma
  std::vector<unsigned> eta;          // eta[j]: assignment bits of B_r[j] (bit t = t-th variable of a block)
};

ReductionParams select_basis(int beta, std::uint32_t p, int gamma);

struct GadgetSpec {
  std::vector<int> boundary;
  std::vector<std::pair<Fingerprint, std::uint64_t>> counts;  // m_f, zeros ignored
  int a = 0, b = 0;
  void validate() const;
};

// A graph region between two glued vertex layers.
struct Piece {
  Graph graph;
  PathDecomposition pd;
  std::vector<int> left, right;
};

struct Expansion {
  Graph graph;
  std::vector<std::vector<int>> image;  // old vertex -> new vertices (9 for a label gadget)
};

Expansion expand_label_gadgets(const Graph& g);

// Standalone gadget: vertex i is spec.boundary[i]; graph.boundary lists them.
Piece build_fingerprint_gadget(const GadgetSpec& spec);

// One clause layer for q blocks: left = L (q*beta vertices), right = R.
Piece build_base_case(const ReductionParams& params, int q, const std::vector<int>& clause);

Piece compose_clause(const Piece& left, const Piece& right);

struct ReductionOutput {
  Graph graph;
  PathDecomposition pd;
  mpz_class predicted;  // #SAT mod p
  int beta = 0, gamma = 0, q = 0, width = 0, width_bound = 0, num_clauses = 0;
  std::uint32_t p = 0;
};

// Pads variables to a multiple of gamma (padding variables are fixed false by unit clauses).
ReductionOutput assemble(const Cnf& cnf, const ReductionParams& params, bool allow_empty = false);

std::string sidecar_json(const ReductionOutput& out);

}  // namespace hcrank
