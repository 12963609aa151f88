#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcrank/graph.hpp"
#include "hcrank/matchings.hpp"

namespace hcrank {

inline constexpr int kMaxBruteforceVertices = 20;
inline constexpr int kMaxSubsetEdges = 24;

struct CountResult {
  mpz_class value;
  std::optional<std::uint32_t> modulus;
  std::size_t states_peak = 0;
};

struct PartialProfile {
  std::vector<int> boundary;
  std::map<Fingerprint, mpz_class> counts;  // only nonzero entries
  std::optional<std::uint32_t> modulus;
  std::size_t states_peak = 0;

  mpz_class count(const Fingerprint& f) const;
};

// Held-Karp subset DP; each undirected cycle counted once.
CountResult count_hc_bruteforce(const Graph& g);

// Sparse DP over a validated path decomposition.
CountResult count_hc_pathdp(const Graph& g, const PathDecomposition& pd,
                            std::optional<std::uint32_t> modulus = std::nullopt);

// All partial-solution counts on boundary B in one pass; B is added to every bag.
PartialProfile partial_solution_profile(const Graph& g, const std::vector<int>& boundary,
                                        const PathDecomposition& pd,
                                        std::optional<std::uint32_t> modulus = std::nullopt);

// Independent oracle: enumerate every edge subset (|E| <= 24).
PartialProfile partial_solution_profile_bruteforce(const Graph& g, const std::vector<int>& boundary);

// Uses the DP when pd is given, the subset oracle otherwise.
CountResult count_partial_solutions(const Graph& g, const std::vector<int>& boundary, const Fingerprint& f,
                                    const PathDecomposition* pd = nullptr,
                                    std::optional<std::uint32_t> modulus = std::nullopt);

// Calls visit(cycle) for every Hamiltonian cycle (vertex sequence starting at 0).
std::uint64_t enumerate_hamiltonian_cycles(const Graph& g,
                                           const std::function<void(const std::vector<int>&)>& visit);

}  // namespace hcrank
