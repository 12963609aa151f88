#include "hcrank/graph.hpp"

#include <algorithm>
#include <sstream>

#include "hcrank/errors.hpp"

namespace hcrank {

Graph::Graph(int n) : annotated_(static_cast<std::size_t>(n), false) {}

std::uint64_t Graph::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

int Graph::add_vertex(bool annotated) {
  annotated_.push_back(annotated);
  return num_vertices() - 1;
}

void Graph::add_edge(int u, int v, std::uint8_t label_u, std::uint8_t label_v) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
    throw DomainError("edge endpoint out of range");
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  // parallel edges are allowed at label-gadget vertices; expansion separates them
  if (!edge_keys_.insert(key(u, v)).second && !annotated(u) && !annotated(v))
    throw DomainError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  edges_.push_back({u, v, label_u, label_v});
}

bool Graph::has_edge(int u, int v) const { return edge_keys_.count(key(u, v)) > 0; }

bool Graph::has_annotations() const { return std::find(annotated_.begin(), annotated_.end(), true) != annotated_.end(); }

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(annotated_.size());
  for (const auto& e : edges_) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(annotated_.size(), 0);
  for (const auto& e : edges_) {
    ++d[static_cast<std::size_t>(e.u)];
    ++d[static_cast<std::size_t>(e.v)];
  }
  return d;
}

int PathDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

void validate_decomposition(const Graph& g, const PathDecomposition& pd) {
  const int n = g.num_vertices();
  std::vector<int> first(static_cast<std::size_t>(n), -1), last(static_cast<std::size_t>(n), -1);
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    std::vector<int> seen;
    for (int v : pd.bags[i]) {
      if (v < 0 || v >= n) throw DecompositionError("bag " + std::to_string(i) + " names unknown vertex " + std::to_string(v));
      auto s = static_cast<std::size_t>(v);
      if (last[s] == static_cast<int>(i)) throw DecompositionError("vertex " + std::to_string(v) + " repeated in bag " + std::to_string(i));
      if (first[s] < 0) first[s] = static_cast<int>(i);
      else if (last[s] != static_cast<int>(i) - 1)
        throw DecompositionError("contiguity: vertex " + std::to_string(v) + " leaves and re-enters at bag " + std::to_string(i));
      last[s] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v)
    if (first[static_cast<std::size_t>(v)] < 0) throw DecompositionError("vertex coverage: vertex " + std::to_string(v) + " in no bag");
  for (const auto& e : g.edges()) {
    auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    if (std::max(first[u], first[v]) > std::min(last[u], last[v]))
      throw DecompositionError("edge coverage: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " in no bag");
  }
}

PathDecomposition decomposition_from_ordering(const Graph& g, const std::vector<int>& order,
                                              const std::vector<int>& start_set, const std::vector<int>& end_set) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) throw DecompositionError("ordering does not list every vertex once");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] >= 0) throw DecompositionError("ordering is not a permutation");
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<int> lo = pos, hi = pos;
  for (const auto& e : g.edges()) {
    auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    hi[u] = std::max(hi[u], pos[v]);
    hi[v] = std::max(hi[v], pos[u]);
  }
  for (int v : start_set) lo[static_cast<std::size_t>(v)] = 0;
  for (int v : end_set) hi[static_cast<std::size_t>(v)] = n - 1;
  PathDecomposition pd;
  pd.bags.resize(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> starts(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) starts[static_cast<std::size_t>(lo[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<int> live;
  for (int i = 0; i < n; ++i) {
    std::vector<int> next;
    for (int v : live)
      if (hi[static_cast<std::size_t>(v)] >= i) next.push_back(v);
    for (int v : starts[static_cast<std::size_t>(i)]) next.push_back(v);
    live = std::move(next);
    pd.bags[static_cast<std::size_t>(i)] = live;
  }
  return pd;
}

Graph glue(const Graph& a, const Graph& b, std::vector<int>* image) {
  if (a.boundary.size() != b.boundary.size()) throw DomainError("glue: boundary sizes differ");
  Graph g(0);
  for (int v = 0; v < a.num_vertices(); ++v) g.add_vertex(a.annotated(v));
  std::vector<int> map(static_cast<std::size_t>(b.num_vertices()), -1);
  for (std::size_t i = 0; i < b.boundary.size(); ++i) map[static_cast<std::size_t>(b.boundary[i])] = a.boundary[i];
  for (int v = 0; v < b.num_vertices(); ++v)
    if (map[static_cast<std::size_t>(v)] < 0) map[static_cast<std::size_t>(v)] = g.add_vertex(b.annotated(v));
  for (const auto& e : a.edges()) g.add_edge(e.u, e.v, e.label_u, e.label_v);
  for (const auto& e : b.edges())
    g.add_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)], e.label_u, e.label_v);
  g.boundary = a.boundary;
  if (image) *image = std::move(map);
  return g;
}

std::string write_graph_file(const Graph& g, const PathDecomposition& pd) {
  std::ostringstream out;
  out << "hcgraph v1\n" << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (const auto& bag : pd.bags) {
    out << "bag";
    for (int v : bag) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

void read_graph_file(std::string_view text, Graph& g, PathDecomposition& pd) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "hcgraph v1") throw ParseError("missing 'hcgraph v1' header");
  int n = -1;
  if (!std::getline(in, line)) throw ParseError("missing vertex count");
  std::istringstream(line) >> n;
  if (n < 0) throw ParseError("bad vertex count");
  g = Graph(n);
  pd.bags.clear();
  int lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "e") {
      int u, v;
      if (!(ls >> u >> v)) throw ParseError("line " + std::to_string(lineno) + ": bad edge");
      g.add_edge(u, v);
    } else if (tag == "bag") {
      std::vector<int> bag;
      int v;
      while (ls >> v) bag.push_back(v);
      pd.bags.push_back(std::move(bag));
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
    }
  }
}

}  // namespace hcrank
