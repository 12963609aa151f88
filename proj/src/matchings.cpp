#include "hcrank/matchings.hpp"

#include <algorithm>
#include <map>

#include "hcrank/errors.hpp"

namespace hcrank {

Matching::Matching(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  for (auto& [a, b] : pairs_) {
    if (a == b) throw DomainError("matching pair joins a vertex to itself");
    if (a > b) std::swap(a, b);
  }
  std::sort(pairs_.begin(), pairs_.end());
  auto vs = vertices();
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw DomainError("matching pairs are not disjoint");
}

std::vector<int> Matching::vertices() const {
  std::vector<int> vs;
  for (auto [a, b] : pairs_) {
    vs.push_back(a);
    vs.push_back(b);
  }
  std::sort(vs.begin(), vs.end());
  return vs;
}

bool Matching::contains(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(pairs_.begin(), pairs_.end(), std::pair{a, b});
}

int Matching::partner(int v) const {
  for (auto [a, b] : pairs_) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return -1;
}

Matching Matching::without(int a, int b) const {
  if (!contains(a, b)) throw DomainError("matching lacks pair " + std::to_string(a) + "-" + std::to_string(b));
  if (a > b) std::swap(a, b);
  auto p = pairs_;
  p.erase(std::find(p.begin(), p.end(), std::pair{a, b}));
  return Matching(std::move(p));
}

Matching Matching::with(int a, int b) const {
  auto p = pairs_;
  p.emplace_back(a, b);
  return Matching(std::move(p));
}

std::string Matching::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) s += '|';
    s += std::to_string(pairs_[i].first) + "-" + std::to_string(pairs_[i].second);
  }
  return s;
}

Matching Matching::parse(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  if (text.empty()) return Matching();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t bar = text.find('|', pos);
    if (bar == std::string_view::npos) bar = text.size();
    std::string tok(text.substr(pos, bar - pos));
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw ParseError("bad matching pair '" + tok + "'");
    try {
      std::size_t used1 = 0, used2 = 0;
      int a = std::stoi(tok.substr(0, dash), &used1);
      int b = std::stoi(tok.substr(dash + 1), &used2);
      if (used1 != dash || used2 != tok.size() - dash - 1) throw ParseError("bad matching pair '" + tok + "'");
      pairs.emplace_back(a, b);
    } catch (const std::logic_error&) {
      throw ParseError("bad matching pair '" + tok + "'");
    }
    pos = bar + 1;
  }
  return Matching(std::move(pairs));
}

namespace {

void enumerate_rec(std::vector<int>& rest, std::vector<std::pair<int, int>>& cur, std::vector<Matching>& out) {
  if (rest.empty()) {
    out.emplace_back(cur);
    return;
  }
  int a = rest.front();
  for (std::size_t i = 1; i < rest.size(); ++i) {
    int b = rest[i];
    std::vector<int> next;
    next.reserve(rest.size() - 2);
    for (std::size_t j = 1; j < rest.size(); ++j)
      if (j != i) next.push_back(rest[j]);
    cur.emplace_back(a, b);
    enumerate_rec(next, cur, out);
    cur.pop_back();
  }
}

std::map<int, int> partner_map(const Matching& m) {
  std::map<int, int> p;
  for (auto [a, b] : m.pairs()) {
    p[a] = b;
    p[b] = a;
  }
  return p;
}

// Partner arrays over labels 1..k, used for the fast M_k build.
std::vector<std::vector<std::uint8_t>> partner_arrays(const std::vector<Matching>& ms, int k) {
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(ms.size());
  for (const auto& m : ms) {
    std::vector<std::uint8_t> p(static_cast<std::size_t>(k));
    for (auto [a, b] : m.pairs()) {
      p[static_cast<std::size_t>(a - 1)] = static_cast<std::uint8_t>(b - 1);
      p[static_cast<std::size_t>(b - 1)] = static_cast<std::uint8_t>(a - 1);
    }
    out.push_back(std::move(p));
  }
  return out;
}

bool single_cycle_fast(const std::uint8_t* p, const std::uint8_t* q, int k) {
  if (k == 0) return false;
  int x = 0, steps = 0;
  do {
    x = q[p[x]];
    steps += 2;
  } while (x != 0);
  return steps == k;
}

}  // namespace

std::vector<Matching> enumerate_matchings_of(const std::vector<int>& vertices) {
  if (vertices.size() % 2) throw DomainError("perfect matchings need an even vertex count");
  if (static_cast<int>(vertices.size()) > kMaxMatchingOrder)
    throw CapacityError("matching enumeration capped at k=" + std::to_string(kMaxMatchingOrder));
  std::vector<int> rest = vertices;
  std::sort(rest.begin(), rest.end());
  std::vector<Matching> out;
  std::vector<std::pair<int, int>> cur;
  enumerate_rec(rest, cur, out);
  return out;
}

std::vector<Matching> enumerate_matchings(int k) {
  if (k < 0 || k % 2) throw DomainError("k must be even and nonnegative, got " + std::to_string(k));
  if (k > kMaxMatchingOrder) throw CapacityError("matching enumeration capped at k=" + std::to_string(kMaxMatchingOrder));
  std::vector<int> vs(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) vs[static_cast<std::size_t>(i)] = i + 1;
  return enumerate_matchings_of(vs);
}

CycleType union_cycle_type(const Matching& m1, const Matching& m2) {
  if (m1.vertices() != m2.vertices()) throw DomainError("matchings cover different vertex sets");
  auto p1 = partner_map(m1), p2 = partner_map(m2);
  std::map<int, bool> seen;
  std::vector<int> parts;
  for (auto [v, _] : p1) {
    if (seen[v]) continue;
    int len = 0, x = v;
    do {
      int y = p1[x];
      seen[x] = seen[y] = true;
      x = p2[y];
      ++len;
    } while (x != v);
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return {Partition(std::move(parts))};
}

bool is_single_cycle(const Matching& m1, const Matching& m2) {
  return union_cycle_type(m1, m2).lambda.length() == 1;
}

ExactMatrix build_M(int k, FieldSpec field) {
  if (k > kMaxMatrixOrder) throw CapacityError("build_M materializes at most k=" + std::to_string(kMaxMatrixOrder));
  auto ms = enumerate_matchings(k);
  auto parr = partner_arrays(ms, k);
  const std::size_t n = ms.size();
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (single_cycle_fast(parr[i].data(), parr[j].data(), k)) {
        m.set(i, j, 1LL);
        m.set(j, i, 1LL);
      }
  if (n <= 1000) {
    std::vector<std::string> labels;
    for (const auto& x : ms) labels.push_back(x.to_string());
    m.set_labels(labels, labels);
  }
  return m;
}

Fingerprint::Fingerprint(std::vector<int> b, std::vector<std::uint8_t> d, Matching m)
    : boundary(std::move(b)), degree(std::move(d)), matching(std::move(m)) {
  if (boundary.size() != degree.size()) throw DomainError("fingerprint degree map does not match boundary");
  std::vector<int> ones;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (degree[i] > 2) throw DomainError("fingerprint degrees must lie in {0,1,2}");
    if (degree[i] == 1) ones.push_back(boundary[i]);
  }
  std::sort(ones.begin(), ones.end());
  if (matching.vertices() != ones)
    throw DomainError("fingerprint matching must cover exactly the degree-1 vertices");
}

int Fingerprint::degree_of(int v) const {
  for (std::size_t i = 0; i < boundary.size(); ++i)
    if (boundary[i] == v) return degree[i];
  throw DomainError("vertex " + std::to_string(v) + " not on the fingerprint boundary");
}

std::vector<int> Fingerprint::vertices_with_degree(int d) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < boundary.size(); ++i)
    if (degree[i] == d) out.push_back(boundary[i]);
  return out;
}

std::string Fingerprint::to_string() const {
  std::string s = "d=";
  for (auto d : degree) s += static_cast<char>('0' + d);
  return s + ";M=" + matching.to_string();
}

Fingerprint Fingerprint::parse(std::string_view text, std::vector<int> boundary) {
  auto semi = text.find(';');
  if (text.substr(0, 2) != "d=" || semi == std::string_view::npos || text.substr(semi + 1, 2) != "M=")
    throw ParseError("fingerprint must look like d=<ternary>;M=<matching>");
  auto dtext = text.substr(2, semi - 2);
  std::vector<std::uint8_t> d;
  for (char c : dtext) {
    if (c < '0' || c > '2') throw ParseError("fingerprint degree digits must be 0, 1 or 2");
    d.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (boundary.empty())
    for (std::size_t i = 0; i < d.size(); ++i) boundary.push_back(static_cast<int>(i) + 1);
  return Fingerprint(std::move(boundary), std::move(d), Matching::parse(text.substr(semi + 3)));
}

std::uint64_t fingerprint_count(int k) {
  std::uint64_t total = 0;
  for (int i = 0; i <= k; i += 2) {
    std::uint64_t binom = 1;
    for (int j = 0; j < i; ++j) binom = binom * static_cast<std::uint64_t>(k - j) / static_cast<std::uint64_t>(j + 1);
    std::uint64_t dfact = 1;
    for (int j = i - 1; j > 1; j -= 2) dfact *= static_cast<std::uint64_t>(j);
    total += binom * dfact * (1ULL << (k - i));
  }
  return total;
}

std::vector<Fingerprint> enumerate_fingerprints(const std::vector<int>& boundary) {
  const int k = static_cast<int>(boundary.size());
  if (k > kMaxFingerprintBoundary)
    throw CapacityError("fingerprint enumeration capped at |B|=" + std::to_string(kMaxFingerprintBoundary));
  std::vector<Fingerprint> out;
  std::vector<std::uint8_t> d(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<int> ones;
    for (int i = 0; i < k; ++i)
      if (d[static_cast<std::size_t>(i)] == 1) ones.push_back(boundary[static_cast<std::size_t>(i)]);
    if (ones.size() % 2 == 0)
      for (auto& m : enumerate_matchings_of(ones)) out.emplace_back(boundary, d, std::move(m));
    int i = k - 1;
    while (i >= 0 && d[static_cast<std::size_t>(i)] == 2) d[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++d[static_cast<std::size_t>(i)];
  }
  return out;
}

bool fingerprints_combine(const Fingerprint& f, const Fingerprint& g) {
  if (f.boundary != g.boundary) throw DomainError("fingerprints live on different boundaries");
  for (std::size_t i = 0; i < f.degree.size(); ++i)
    if (f.degree[i] + g.degree[i] != 2) return false;
  if (f.matching.empty() && g.matching.empty()) return true;
  return is_single_cycle(f.matching, g.matching);
}

ExactMatrix fingerprint_matrix(const std::vector<Fingerprint>& rows, const std::vector<Fingerprint>& cols,
                               FieldSpec field) {
  ExactMatrix h(field, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (fingerprints_combine(rows[i], cols[j])) h.set(i, j, 1LL);
  if (rows.size() <= 2000 && cols.size() <= 2000) {
    std::vector<std::string> rl, cl;
    for (const auto& f : rows) rl.push_back(f.to_string());
    for (const auto& f : cols) cl.push_back(f.to_string());
    h.set_labels(rl, cl);
  }
  return h;
}

ExactMatrix build_H(int k, FieldSpec field) {
  if (k < 0) throw DomainError("k must be nonnegative");
  if (k > kMaxFingerprintMatrixOrder)
    throw CapacityError("build_H materializes at most k=" + std::to_string(kMaxFingerprintMatrixOrder));
  std::vector<int> b;
  for (int i = 1; i <= k; ++i) b.push_back(i);
  auto fs = enumerate_fingerprints(b);
  return fingerprint_matrix(fs, fs, field);
}

Graph boundaried_graph_for_fingerprint(const Fingerprint& f) {
  const int k = static_cast<int>(f.boundary.size());
  auto index_of = [&](int label) {
    return static_cast<int>(std::find(f.boundary.begin(), f.boundary.end(), label) - f.boundary.begin());
  };
  std::vector<int> twos;
  for (int i = 0; i < k; ++i)
    if (f.degree[static_cast<std::size_t>(i)] == 2) twos.push_back(i);
  std::vector<std::pair<int, int>> raw;
  if (!f.matching.empty()) {
    auto pairs = f.matching.pairs();
    std::vector<int> path{index_of(pairs[0].first)};
    path.insert(path.end(), twos.begin(), twos.end());
    path.push_back(index_of(pairs[0].second));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) raw.emplace_back(path[i], path[i + 1]);
    for (std::size_t i = 1; i < pairs.size(); ++i) raw.emplace_back(index_of(pairs[i].first), index_of(pairs[i].second));
  } else if (!twos.empty()) {
    if (twos.size() <= 2)
      throw ConstructionError("G_F needs a cycle through " + std::to_string(twos.size()) +
                              " degree-2 vertices; no simple cycle exists (" + f.to_string() + ")");
    for (std::size_t i = 0; i < twos.size(); ++i) raw.emplace_back(twos[i], twos[(i + 1) % twos.size()]);
  }
  Graph g(k);
  for (int i = 0; i < k; ++i) g.boundary.push_back(i);
  for (auto [u, v] : raw) {
    int w = g.add_vertex();
    g.add_edge(u, w);
    g.add_edge(w, v);
  }
  return g;
}

}  // namespace hcrank
