#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcrank/exact_matrix.hpp"
#include "hcrank/graph.hpp"
#include "hcrank/partition.hpp"

namespace hcrank {

inline constexpr int kMaxMatchingOrder = 16;
inline constexpr int kMaxMatrixOrder = 12;
inline constexpr int kMaxFingerprintBoundary = 16;
inline constexpr int kMaxFingerprintMatrixOrder = 8;

// Perfect matching on a finite label set. Canonical: pairs (min,max) sorted.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<std::pair<int, int>> pairs);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  std::vector<int> vertices() const;  // sorted
  bool contains(int a, int b) const;
  int partner(int v) const;  // -1 when v is unmatched

  Matching without(int a, int b) const;
  Matching with(int a, int b) const;

  std::string to_string() const;  // "1-2|3-4"
  static Matching parse(std::string_view text);

  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// All perfect matchings of the given (sorted) vertex list, canonical order.
std::vector<Matching> enumerate_matchings_of(const std::vector<int>& vertices);
// Perfect matchings of K_k on labels 1..k.
std::vector<Matching> enumerate_matchings(int k);

struct CycleType {
  Partition lambda;
};

CycleType union_cycle_type(const Matching& m1, const Matching& m2);
bool is_single_cycle(const Matching& m1, const Matching& m2);

ExactMatrix build_M(int k, FieldSpec field = FieldSpec::rationals());

struct Fingerprint {
  std::vector<int> boundary;
  std::vector<std::uint8_t> degree;  // aligned with boundary
  Matching matching;                 // perfect matching on degree^-1(1)

  Fingerprint() = default;
  Fingerprint(std::vector<int> boundary, std::vector<std::uint8_t> degree, Matching matching);

  int degree_of(int v) const;
  std::vector<int> vertices_with_degree(int d) const;

  // "d=<ternary>;M=<matching>"
  std::string to_string() const;
  // Boundary defaults to 1..|d| when not supplied.
  static Fingerprint parse(std::string_view text, std::vector<int> boundary = {});

  auto operator<=>(const Fingerprint&) const = default;
};

std::uint64_t fingerprint_count(int boundary_size);
std::vector<Fingerprint> enumerate_fingerprints(const std::vector<int>& boundary);
bool fingerprints_combine(const Fingerprint& f, const Fingerprint& g);

// H restricted to the given row and column fingerprint lists.
ExactMatrix fingerprint_matrix(const std::vector<Fingerprint>& rows, const std::vector<Fingerprint>& cols,
                               FieldSpec field = FieldSpec::rationals());
ExactMatrix build_H(int k, FieldSpec field = FieldSpec::rationals());

// G_F: boundary vertices 0..k-1 stand for labels 1..k (boundary order of F).
Graph boundaried_graph_for_fingerprint(const Fingerprint& f);

}  // namespace hcrank
