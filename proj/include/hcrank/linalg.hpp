#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "hcrank/exact_matrix.hpp"

namespace hcrank {

// Over Q: full rank is certified by a rank computation mod 2^31-1 when possible,
// otherwise fraction-free elimination. Over Z_p: modular elimination.
std::size_t rank(const ExactMatrix& a);

// Fraction-free (Bareiss) rank over Q with no modular shortcut.
std::size_t rational_rank_bareiss(const ExactMatrix& a);

// Rank of a row-major residue array mod p; consumes the array.
std::size_t rank_mod_p(std::vector<std::uint32_t> data, std::size_t rows, std::size_t cols, std::uint32_t p);

mpq_class det(const ExactMatrix& a);
ExactMatrix inverse(const ExactMatrix& a);
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kronecker_power(const ExactMatrix& a, int t);
std::size_t nullity_shift(const ExactMatrix& a, const mpq_class& s);

using IndexFilter = std::function<bool(std::size_t)>;

struct SubmatrixSelection {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// Greedy scan in index order: keep a row (then a column) iff it raises the rank.
SubmatrixSelection full_rank_submatrix(const ExactMatrix& a, const IndexFilter& row_filter = {},
                                       const IndexFilter& col_filter = {});

// Greedy columns of a[rows, candidate_cols] that raise the rank (scan order preserved).
std::vector<std::size_t> greedy_independent_columns(const ExactMatrix& a, const std::vector<std::size_t>& rows,
                                                    const std::vector<std::size_t>& candidate_cols);

}  // namespace hcrank
