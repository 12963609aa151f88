#include "hcrank/reduction.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <set>

#include <json.hpp>

#include "hcrank/errors.hpp"
#include "hcrank/linalg.hpp"
#include "hcrank/version.hpp"

namespace hcrank {

namespace {

// Label gadget: internal edges over v1..v9, and the placement order used
// for decompositions (follows the forced traversal so few vertices stay live).
constexpr int kGadgetEdges[10][2] = {{1, 5}, {5, 3}, {6, 7}, {7, 8}, {4, 9}, {9, 2}, {2, 8}, {1, 6}, {3, 8}, {6, 4}};
constexpr int kGadgetOrder[9] = {3, 5, 1, 6, 7, 8, 2, 9, 4};

struct Builder {
  Graph g;
  std::vector<int> order;
  std::vector<int> left, right;

  int vertex(bool annotated = false) { return g.add_vertex(annotated); }
  void place(int v) { order.push_back(v); }
  int placed(bool annotated = false) {
    int v = vertex(annotated);
    place(v);
    return v;
  }
};

Piece finish(const Builder& b) {
  Expansion ex = expand_label_gadgets(b.g);
  std::vector<int> order, left, right;
  for (int v : b.order)
    for (int w : ex.image[static_cast<std::size_t>(v)]) order.push_back(w);
  if (order.size() != static_cast<std::size_t>(ex.graph.num_vertices()))
    throw ConstructionError("internal: placement order misses vertices");
  for (int v : b.left) left.push_back(ex.image[static_cast<std::size_t>(v)].front());
  for (int v : b.right) right.push_back(ex.image[static_cast<std::size_t>(v)].front());
  Piece p;
  p.pd = decomposition_from_ordering(ex.graph, order, left, right);
  p.graph = std::move(ex.graph);
  p.graph.boundary.clear();
  p.left = std::move(left);
  p.right = std::move(right);
  return p;
}

// Steps 1-5 of the fingerprint gadget, attached to host vertices already in b.
void add_gadget(Builder& b, const GadgetSpec& spec) {
  spec.validate();
  const int a2 = b.placed(), a1 = b.placed(), c = b.placed();
  b.g.add_edge(spec.a, a2);
  b.g.add_edge(a2, a1);
  std::vector<const Fingerprint*> seq;
  for (const auto& [f, m] : spec.counts)
    for (std::uint64_t r = 0; r < m; ++r) seq.push_back(&f);
  std::vector<int> first, last;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Fingerprint& f = *seq[i];
    auto twos = f.vertices_with_degree(2);
    std::sort(twos.begin(), twos.end());
    std::vector<std::pair<int, int>> path_edges;
    int prev = a1;
    for (int t : twos) {
      path_edges.emplace_back(prev, t);
      prev = t;
    }
    path_edges.emplace_back(prev, c);
    for (auto e : f.matching.pairs())
      if (!(std::min(spec.a, spec.b) == e.first && std::max(spec.a, spec.b) == e.second)) path_edges.push_back(e);
    int prev_p = -1;
    for (std::size_t j = 0; j < path_edges.size(); ++j) {
      int p = b.placed(true);
      b.g.add_edge(p, path_edges[j].first, 1, 0);
      b.g.add_edge(p, path_edges[j].second, 2, 0);
      if (prev_p >= 0) b.g.add_edge(prev_p, p, 4, 3);
      if (j == 0) first.push_back(p);
      prev_p = p;
    }
    last.push_back(prev_p);
    if (i >= 1) b.g.add_edge(last[i - 1], first[i], 4, 3);
    if (i >= 2) b.g.add_edge(last[i - 2], first[i], 4, 3);
  }
  const std::size_t l = seq.size();
  b.g.add_edge(c, first[0], 0, 3);
  b.g.add_edge(c, first[1], 0, 3);
  b.g.add_edge(last[l - 2], spec.b, 4, 0);
  b.g.add_edge(last[l - 1], spec.b, 4, 0);
}

Fingerprint relabel(const Fingerprint& f, const std::vector<int>& host) {
  // f lives on labels 1..beta; host[label-1] is the host vertex
  std::vector<std::pair<int, int>> pairs;
  for (auto [u, v] : f.matching.pairs()) pairs.emplace_back(host[static_cast<std::size_t>(u - 1)], host[static_cast<std::size_t>(v - 1)]);
  return Fingerprint(host, f.degree, Matching(pairs));
}

Fingerprint join(const std::vector<Fingerprint>& parts, const std::vector<std::pair<int, std::uint8_t>>& extra_degrees,
                 const Matching& m) {
  std::vector<int> boundary;
  std::vector<std::uint8_t> d;
  for (const auto& f : parts) {
    boundary.insert(boundary.end(), f.boundary.begin(), f.boundary.end());
    d.insert(d.end(), f.degree.begin(), f.degree.end());
  }
  for (auto [v, deg] : extra_degrees) {
    boundary.push_back(v);
    d.push_back(deg);
  }
  return Fingerprint(std::move(boundary), std::move(d), m);
}

bool block_satisfies(const std::vector<int>& clause, int block, int gamma, unsigned bits) {
  for (int l : clause) {
    int v = std::abs(l) - 1 - block * gamma;
    if (v < 0 || v >= gamma) continue;
    bool val = (bits >> v) & 1u;
    if ((l > 0) == val) return true;
  }
  return false;
}

std::uint64_t residue(const ExactMatrix& m, std::size_t i, std::size_t j) {
  return m.residue_data()[i * m.cols() + j];
}

std::vector<std::vector<int>> make_layer(Builder& b, int q, int beta) {
  std::vector<std::vector<int>> layer(static_cast<std::size_t>(q));
  for (auto& block : layer)
    for (int j = 0; j < beta; ++j) block.push_back(b.vertex());
  return layer;
}

Piece build_left_end(const ReductionParams& prm, int q) {
  Builder b;
  auto L = make_layer(b, q, prm.beta);
  std::vector<int> z;
  for (int i = 0; i < q; ++i) z.push_back(b.vertex());
  const std::uint64_t p = prm.p;
  std::vector<std::uint64_t> weight(prm.B_l.size(), 0);
  for (std::size_t ja = 0; ja < prm.B_l.size(); ++ja)
    for (std::size_t jl = 0; jl < prm.B_r.size(); ++jl) weight[ja] = (weight[ja] + residue(prm.F_inv, jl, ja)) % p;
  for (int i = 0; i < q; ++i) {
    const auto& Li = L[static_cast<std::size_t>(i)];
    int t = z[static_cast<std::size_t>(i)], bot = z[static_cast<std::size_t>((i + 1) % q)];
    if (i == 0) b.place(t);
    for (int v : Li) b.place(v);
    if (i + 1 < q) b.place(bot);
    GadgetSpec spec;
    spec.boundary = Li;
    if (q == 1) {
      spec.boundary.push_back(t);
      spec.a = Li[0];
      spec.b = Li[2];
    } else {
      spec.boundary.push_back(t);
      spec.boundary.push_back(bot);
      spec.a = Li[0];
      spec.b = t;
    }
    for (std::size_t ja = 0; ja < prm.B_l.size(); ++ja) {
      if (!weight[ja]) continue;
      Fingerprint fa = relabel(prm.B_l[ja], Li);
      Fingerprint f;
      if (q == 1) {
        f = join({fa}, {{t, 2}}, fa.matching);
      } else {
        Matching m = fa.matching.without(Li[0], Li[2]).with(Li[0], t).with(Li[2], bot);
        f = join({fa}, {{t, 1}, {bot, 1}}, m);
      }
      spec.counts.emplace_back(f, weight[ja]);
    }
    if (spec.counts.size() < 2)
      throw ConstructionError("left-end gadget has fewer than 2 supported fingerprints for this basis");
    add_gadget(b, spec);
  }
  for (const auto& Li : L) b.right.insert(b.right.end(), Li.begin(), Li.end());
  return finish(b);
}

Piece build_right_end(const ReductionParams& prm, int q) {
  Builder b;
  auto R = make_layer(b, q, prm.beta);
  for (const auto& Ri : R) {
    b.left.insert(b.left.end(), Ri.begin(), Ri.end());
    for (int v : Ri) b.place(v);
  }
  for (const auto& Ri : R) {
    GadgetSpec spec;
    spec.boundary = Ri;
    spec.a = Ri[0];
    spec.b = Ri[1];
    for (const auto& f : prm.B_r) spec.counts.emplace_back(relabel(f, Ri), 1);
    add_gadget(b, spec);
  }
  return finish(b);
}

}  // namespace

ReductionParams select_basis(int beta, std::uint32_t p, int gamma) {
  if (beta < 4) throw DomainError("beta must be at least 4");
  if (gamma < 0 || gamma > 16) throw DomainError("gamma out of range");
  auto field = FieldSpec::prime(p);
  std::vector<int> labels;
  for (int i = 1; i <= beta; ++i) labels.push_back(i);
  std::vector<Fingerprint> rows, cols;
  for (auto& f : enumerate_fingerprints(labels)) {
    if (f.degree[0] != 1 || f.degree[1] != 1 || f.degree[2] != 1) continue;
    if (f.matching.contains(1, 3)) rows.push_back(f);
    if (f.matching.contains(1, 2)) cols.push_back(f);
  }
  auto h = fingerprint_matrix(rows, cols, field);
  auto sel = full_rank_submatrix(h);
  ReductionParams prm;
  prm.beta = beta;
  prm.gamma = gamma;
  prm.p = p;
  prm.greedy_rank = sel.rows.size();
  const std::size_t need = std::size_t{1} << gamma;
  if (sel.rows.size() < need)
    throw BasisTooSmallError("basis too small for gamma=" + std::to_string(gamma) + ": achieved " +
                                 std::to_string(sel.rows.size()) + ", need " + std::to_string(need) + " (raise beta)",
                             static_cast<int>(sel.rows.size()));
  std::vector<std::size_t> ri(sel.rows.begin(), sel.rows.begin() + static_cast<long>(need));
  std::vector<std::size_t> cand(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cand[j] = j;
  auto ci = greedy_independent_columns(h, ri, cand);
  for (auto i : ri) prm.B_l.push_back(rows[i]);
  for (auto j : ci) prm.B_r.push_back(cols[j]);
  prm.F = h.submatrix(ri, ci);
  prm.F_inv = inverse(prm.F);
  for (std::size_t j = 0; j < prm.B_r.size(); ++j) prm.eta.push_back(static_cast<unsigned>(j));
  return prm;
}

void GadgetSpec::validate() const {
  std::set<int> bset(boundary.begin(), boundary.end());
  if (bset.size() != boundary.size()) throw DomainError("gadget boundary repeats a vertex");
  if (!bset.count(a) || !bset.count(b) || a == b) throw DomainError("gadget anchors must be two distinct boundary vertices");
  std::set<Fingerprint> distinct;
  for (const auto& [f, m] : counts) {
    if (!m) continue;
    if (f.boundary != boundary)
      throw DomainError("fingerprint " + f.to_string() + " is not on the gadget boundary");
    if (!f.matching.contains(a, b))
      throw DomainError("fingerprint " + f.to_string() + " does not match the anchors " + std::to_string(a) + "-" + std::to_string(b));
    distinct.insert(f);
  }
  if (distinct.size() < 2) throw DomainError("fingerprint gadget needs at least 2 distinct supported fingerprints");
}

Expansion expand_label_gadgets(const Graph& g) {
  Expansion ex;
  std::vector<std::array<int, 10>> slot(static_cast<std::size_t>(g.num_vertices()));
  ex.image.resize(static_cast<std::size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto& img = ex.image[static_cast<std::size_t>(v)];
    if (!g.annotated(v)) {
      img.push_back(ex.graph.add_vertex());
      continue;
    }
    auto& s = slot[static_cast<std::size_t>(v)];
    for (int k : kGadgetOrder) {
      s[static_cast<std::size_t>(k)] = ex.graph.add_vertex();
      img.push_back(s[static_cast<std::size_t>(k)]);
    }
    for (const auto& e : kGadgetEdges) ex.graph.add_edge(s[static_cast<std::size_t>(e[0])], s[static_cast<std::size_t>(e[1])]);
  }
  auto endpoint = [&](int v, std::uint8_t label, const Edge& e) {
    if (!g.annotated(v)) return ex.image[static_cast<std::size_t>(v)].front();
    if (label < 1 || label > 4)
      throw ConstructionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is unlabeled at label gadget " +
                              std::to_string(v));
    return slot[static_cast<std::size_t>(v)][label];
  };
  for (const auto& e : g.edges()) ex.graph.add_edge(endpoint(e.u, e.label_u, e), endpoint(e.v, e.label_v, e));
  for (int v : g.boundary) ex.graph.boundary.push_back(ex.image[static_cast<std::size_t>(v)].front());
  return ex;
}

Piece build_fingerprint_gadget(const GadgetSpec& spec) {
  Builder b;
  std::map<int, int> host;
  for (int v : spec.boundary) {
    host[v] = b.placed();
    b.g.boundary.push_back(host[v]);
  }
  GadgetSpec hs;
  for (int v : spec.boundary) hs.boundary.push_back(host[v]);
  hs.a = host.count(spec.a) ? host[spec.a] : -1;
  hs.b = host.count(spec.b) ? host[spec.b] : -1;
  for (const auto& [f, m] : spec.counts) {
    if (f.boundary != spec.boundary) throw DomainError("fingerprint " + f.to_string() + " is not on the gadget boundary");
    std::vector<std::pair<int, int>> pairs;
    for (auto [u, v] : f.matching.pairs()) pairs.emplace_back(host[u], host[v]);
    hs.counts.emplace_back(Fingerprint(hs.boundary, f.degree, Matching(pairs)), m);
  }
  if (hs.a < 0 || hs.b < 0) throw DomainError("gadget anchors must be boundary vertices");
  add_gadget(b, hs);
  b.left = b.g.boundary;
  b.right = b.g.boundary;
  Piece p = finish(b);
  p.graph.boundary = p.left;
  return p;
}

Piece build_base_case(const ReductionParams& prm, int q, const std::vector<int>& clause) {
  if (q < 1) throw DomainError("need at least one block");
  Builder b;
  auto L = make_layer(b, q, prm.beta);
  auto R = make_layer(b, q, prm.beta);
  std::vector<int> y;
  for (int i = 0; i <= q; ++i) y.push_back(b.vertex());
  for (const auto& Li : L)
    for (int v : Li) {
      b.place(v);
      b.left.push_back(v);
    }
  b.place(y[0]);
  for (int i = 0; i < q; ++i) {
    const auto& Li = L[static_cast<std::size_t>(i)];
    const auto& Ri = R[static_cast<std::size_t>(i)];
    for (int v : Ri) b.place(v);
    const int bot = y[static_cast<std::size_t>(i)], top = y[static_cast<std::size_t>(i + 1)];
    b.place(top);
    GadgetSpec spec;
    spec.boundary = Li;
    spec.boundary.insert(spec.boundary.end(), Ri.begin(), Ri.end());
    spec.boundary.push_back(bot);
    spec.boundary.push_back(top);
    spec.a = Li[0];
    spec.b = Ri[0];
    for (std::size_t jl = 0; jl < prm.B_r.size(); ++jl)
      for (std::size_t jr = 0; jr < prm.B_l.size(); ++jr) {
        std::uint64_t w = residue(prm.F_inv, jl, jr);
        if (!w) continue;
        Fingerprint fl = relabel(prm.B_r[jl], Li), fr = relabel(prm.B_l[jr], Ri);
        const Matching ml = fl.matching.without(Li[0], Li[1]), mr = fr.matching.without(Ri[0], Ri[2]);
        std::vector<std::pair<int, int>> pairs = ml.pairs();
        pairs.insert(pairs.end(), mr.pairs().begin(), mr.pairs().end());
        pairs.emplace_back(Li[0], Ri[0]);
        pairs.emplace_back(Li[1], Ri[2]);
        Matching alt(pairs);
        bool sat = block_satisfies(clause, i, prm.gamma, prm.eta[jl]);
        // (d_t, d_b) options
        std::vector<std::pair<std::uint8_t, std::uint8_t>> cases =
            sat ? std::vector<std::pair<std::uint8_t, std::uint8_t>>{{2, 2}, {0, 2}}
                : std::vector<std::pair<std::uint8_t, std::uint8_t>>{{2, 0}, {0, 2}};
        for (auto [dt, db] : cases) spec.counts.emplace_back(join({fl, fr}, {{bot, db}, {top, dt}}, alt), w);
      }
    add_gadget(b, spec);
  }
  for (const auto& Ri : R) b.right.insert(b.right.end(), Ri.begin(), Ri.end());
  return finish(b);
}

Piece compose_clause(const Piece& left, const Piece& right) {
  if (left.right.size() != right.left.size())
    throw DomainError("compose: boundary sizes differ (" + std::to_string(left.right.size()) + " vs " +
                      std::to_string(right.left.size()) + ")");
  if (left.right.empty()) throw DomainError("compose: empty shared boundary");
  auto independent = [](const Graph& g, const std::vector<int>& set) {
    std::set<int> s(set.begin(), set.end());
    for (const auto& e : g.edges())
      if (s.count(e.u) && s.count(e.v)) return false;
    return true;
  };
  if (!independent(left.graph, left.right) || !independent(right.graph, right.left))
    throw DomainError("compose: shared boundary is not an independent set");
  Graph a = left.graph, b = right.graph;
  a.boundary = left.right;
  b.boundary = right.left;
  std::vector<int> img;
  Piece out;
  out.graph = glue(a, b, &img);
  out.graph.boundary.clear();
  out.pd = left.pd;
  for (const auto& bag : right.pd.bags) {
    std::vector<int> m;
    for (int v : bag) m.push_back(img[static_cast<std::size_t>(v)]);
    out.pd.bags.push_back(std::move(m));
  }
  out.left = left.left;
  for (int v : right.right) out.right.push_back(img[static_cast<std::size_t>(v)]);
  return out;
}

ReductionOutput assemble(const Cnf& cnf_in, const ReductionParams& prm, bool allow_empty) {
  cnf_in.validate();
  if (prm.gamma < 1) throw DomainError("assemble needs gamma >= 1");
  if (cnf_in.clauses.empty() && !allow_empty) throw DomainError("empty clause list (pass the allow-empty flag to compile it)");
  Cnf cnf = cnf_in;
  int padded = std::max(1, (cnf.num_vars + prm.gamma - 1) / prm.gamma) * prm.gamma;
  for (int v = cnf.num_vars + 1; v <= padded; ++v) cnf.clauses.push_back({-v});
  cnf.num_vars = padded;
  const int q = padded / prm.gamma;

  ReductionOutput out;
  out.beta = prm.beta;
  out.gamma = prm.gamma;
  out.p = prm.p;
  out.q = q;
  out.num_clauses = static_cast<int>(cnf.clauses.size());
  Piece acc;
  try {
    acc = build_left_end(prm, q);
  } catch (const std::exception& e) {
    throw ConstructionError(std::string("left end: ") + e.what());
  }
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    try {
      acc = compose_clause(acc, build_base_case(prm, q, cnf.clauses[j]));
    } catch (const std::exception& e) {
      throw ConstructionError("clause " + std::to_string(j + 1) + ": " + e.what());
    }
  }
  try {
    acc = compose_clause(acc, build_right_end(prm, q));
  } catch (const std::exception& e) {
    throw ConstructionError(std::string("right end: ") + e.what());
  }
  validate_decomposition(acc.graph, acc.pd);
  out.graph = std::move(acc.graph);
  out.pd = std::move(acc.pd);
  out.width = out.pd.width();
  out.width_bound = q * prm.beta + kWidthConstant * prm.beta;
  if (out.width > out.width_bound)
    throw ConstructionError("decomposition width " + std::to_string(out.width) + " exceeds bound " +
                            std::to_string(out.width_bound));
  out.predicted = cnf_in.count_models() % prm.p;
  return out;
}

std::string sidecar_json(const ReductionOutput& out) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["p"] = out.p;
  j["beta"] = out.beta;
  j["gamma"] = out.gamma;
  j["q"] = out.q;
  j["width"] = out.width;
  j["width_bound"] = out.width_bound;
  j["vertices"] = out.graph.num_vertices();
  j["edges"] = out.graph.edges().size();
  j["predicted_mod_p"] = out.predicted.get_ui();
  return j.dump(2) + "\n";
}

}  // namespace hcrank
