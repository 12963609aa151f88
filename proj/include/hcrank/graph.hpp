#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace hcrank {

// Edge labels are 0 (none) or 1..4 at an annotated (label-gadget) endpoint.
struct Edge {
  int u = 0, v = 0;
  std::uint8_t label_u = 0, label_v = 0;
  std::uint8_t label_at(int x) const { return x == u ? label_u : label_v; }
  int other(int x) const { return x == u ? v : u; }
};

// Simple undirected graph with stable ids 0..n-1. Parallel edges are accepted only
// at annotated (label-gadget) vertices, which expansion turns into distinct vertices.
class Graph {
 public:
  explicit Graph(int n = 0);

  int add_vertex(bool annotated = false);
  void add_edge(int u, int v, std::uint8_t label_u = 0, std::uint8_t label_v = 0);
  bool has_edge(int u, int v) const;

  int num_vertices() const { return static_cast<int>(annotated_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool annotated(int v) const { return annotated_[static_cast<std::size_t>(v)]; }
  bool has_annotations() const;
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;

  std::vector<int> boundary;

 private:
  static std::uint64_t key(int u, int v);
  std::vector<bool> annotated_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

struct PathDecomposition {
  std::vector<std::vector<int>> bags;
  int width() const;  // max bag size - 1
};

// Throws DecompositionError naming the violated property.
void validate_decomposition(const Graph& g, const PathDecomposition& pd);

// Vertex-separation decomposition of an ordering: v lives from its position to its
// last neighbour; start_set vertices are live from the first bag, end_set to the last.
PathDecomposition decomposition_from_ordering(const Graph& g, const std::vector<int>& order,
                                              const std::vector<int>& start_set = {},
                                              const std::vector<int>& end_set = {});

// Disjoint union of a and b identifying a.boundary[i] with b.boundary[i].
// Result keeps a's ids; b's other vertices follow. image receives b's id map.
Graph glue(const Graph& a, const Graph& b, std::vector<int>* image = nullptr);

// "hcgraph v1", vertex count, "e u v" lines, "bag ..." lines; ids are 0-based.
std::string write_graph_file(const Graph& g, const PathDecomposition& pd);
void read_graph_file(std::string_view text, Graph& g, PathDecomposition& pd);

}  // namespace hcrank
