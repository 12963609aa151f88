#include "hcrank/hcount.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "hcrank/errors.hpp"

namespace hcrank {

mpz_class PartialProfile::count(const Fingerprint& f) const {
  auto it = counts.find(f);
  return it == counts.end() ? mpz_class(0) : it->second;
}

namespace {

struct ModArith {
  using T = std::uint64_t;
  std::uint64_t p;
  T one() const { return 1; }
  void add_to(T& a, const T& b) const { a = (a + b) % p; }
  mpz_class to_mpz(const T& v) const { return mpz_class(static_cast<unsigned long>(v)); }
  bool is_zero(const T& v) const { return v == 0; }
};

struct BigArith {
  using T = mpz_class;
  T one() const { return 1; }
  void add_to(T& a, const T& b) const { a += b; }
  mpz_class to_mpz(const T& v) const { return v; }
  bool is_zero(const T& v) const { return sgn(v) == 0; }
};

// State: one byte per slot (0 = degree 0, 1 = degree 2, 2+j = degree 1 with the
// other end of its path at slot j) followed by a closed-cycle flag byte.
constexpr char kDeg0 = 0, kDeg2 = 1;

template <class Arith>
class PathDp {
 public:
  using T = typename Arith::T;
  using Table = std::unordered_map<std::string, T>;

  PathDp(const Graph& g, std::vector<bool> pinned, Arith arith)
      : g_(g), adj_(g.adjacency()), pinned_(std::move(pinned)), arith_(arith),
        slot_(static_cast<std::size_t>(g.num_vertices()), -1) {}

  void run(const std::vector<std::vector<int>>& bags) {
    std::size_t width = 0;
    for (const auto& b : bags) width = std::max(width, b.size());
    slots_ = width;
    free_.clear();
    for (std::size_t s = width; s-- > 0;) free_.push_back(static_cast<int>(s));
    table_.clear();
    table_[std::string(slots_ + 1, 0)] = arith_.one();
    std::vector<int> prev;
    for (const auto& bag : bags) {
      std::set<int> next(bag.begin(), bag.end());
      for (int v : prev)
        if (!next.count(v)) forget(v);
      std::set<int> before(prev.begin(), prev.end());
      for (int v : bag)
        if (!before.count(v)) introduce(v);
      prev = bag;
    }
    for (int v : prev)
      if (!pinned_[static_cast<std::size_t>(v)]) forget(v);
  }

  const Table& table() const { return table_; }
  int slot_of(int v) const { return slot_[static_cast<std::size_t>(v)]; }
  std::size_t states_peak() const { return peak_; }
  std::size_t slots() const { return slots_; }

 private:
  bool closed(const std::string& s) const { return s[slots_] != 0; }

  void note_size() { peak_ = std::max(peak_, table_.size()); }

  void introduce(int v) {
    if (free_.empty()) throw DecompositionError("bag bookkeeping overflow");
    int s = free_.back();
    free_.pop_back();
    slot_[static_cast<std::size_t>(v)] = s;
    present_.insert(v);
    if (!pinned_[static_cast<std::size_t>(v)]) {
      // a closed cycle cannot absorb a further vertex
      for (auto it = table_.begin(); it != table_.end();)
        it = closed(it->first) ? table_.erase(it) : std::next(it);
    }
    for (int u : adj_[static_cast<std::size_t>(v)])
      if (u != v && present_.count(u)) add_edge(u, v);
  }

  void add_edge(int u, int v) {
    const std::size_t su = static_cast<std::size_t>(slot_of(u)), sv = static_cast<std::size_t>(slot_of(v));
    Table next;
    next.reserve(table_.size() * 2);
    for (const auto& [key, cnt] : table_) {
      arith_.add_to(next[key], cnt);
      if (closed(key)) continue;
      char cu = key[su], cv = key[sv];
      if (cu == kDeg2 || cv == kDeg2) continue;
      std::string s = key;
      if (cu == kDeg0 && cv == kDeg0) {
        s[su] = static_cast<char>(2 + sv);
        s[sv] = static_cast<char>(2 + su);
      } else if (cu == kDeg0) {
        auto w = static_cast<std::size_t>(cv - 2);
        s[su] = static_cast<char>(2 + w);
        s[w] = static_cast<char>(2 + su);
        s[sv] = kDeg2;
      } else if (cv == kDeg0) {
        auto w = static_cast<std::size_t>(cu - 2);
        s[sv] = static_cast<char>(2 + w);
        s[w] = static_cast<char>(2 + sv);
        s[su] = kDeg2;
      } else if (static_cast<std::size_t>(cu - 2) == sv) {
        // closing the unique cycle: only when no other path is open
        bool open = false;
        for (std::size_t i = 0; i < slots_ && !open; ++i)
          open = i != su && i != sv && s[i] >= 2;
        if (open) continue;
        s[su] = s[sv] = kDeg2;
        s[slots_] = 1;
      } else {
        auto a = static_cast<std::size_t>(cu - 2), b = static_cast<std::size_t>(cv - 2);
        s[a] = static_cast<char>(2 + b);
        s[b] = static_cast<char>(2 + a);
        s[su] = s[sv] = kDeg2;
      }
      arith_.add_to(next[s], cnt);
    }
    table_.swap(next);
    prune_zero();
    note_size();
  }

  void forget(int v) {
    const std::size_t s = static_cast<std::size_t>(slot_of(v));
    Table next;
    next.reserve(table_.size());
    for (const auto& [key, cnt] : table_) {
      if (key[s] != kDeg2) continue;
      std::string k = key;
      k[s] = kDeg0;
      arith_.add_to(next[k], cnt);
    }
    table_.swap(next);
    prune_zero();
    present_.erase(v);
    free_.push_back(static_cast<int>(s));
    slot_[static_cast<std::size_t>(v)] = -1;
  }

  void prune_zero() {
    for (auto it = table_.begin(); it != table_.end();)
      it = arith_.is_zero(it->second) ? table_.erase(it) : std::next(it);
  }

  const Graph& g_;
  std::vector<std::vector<int>> adj_;
  std::vector<bool> pinned_;
  Arith arith_;
  std::vector<int> slot_;
  std::vector<int> free_;
  std::set<int> present_;
  std::size_t slots_ = 0;
  std::size_t peak_ = 0;
  Table table_;
};

template <class Arith>
CountResult hc_dp(const Graph& g, const PathDecomposition& pd, Arith arith) {
  PathDp<Arith> dp(g, std::vector<bool>(static_cast<std::size_t>(g.num_vertices()), false), arith);
  dp.run(pd.bags);
  CountResult r;
  r.value = 0;
  for (const auto& [key, cnt] : dp.table())
    if (key.back() != 0) r.value += arith.to_mpz(cnt);
  r.states_peak = dp.states_peak();
  return r;
}

template <class Arith>
PartialProfile ps_dp(const Graph& g, const std::vector<int>& boundary, const PathDecomposition& pd, Arith arith) {
  std::vector<bool> pinned(static_cast<std::size_t>(g.num_vertices()), false);
  for (int b : boundary) pinned[static_cast<std::size_t>(b)] = true;
  PathDecomposition aug;
  for (const auto& bag : pd.bags) {
    std::vector<int> a = boundary;
    for (int v : bag)
      if (!pinned[static_cast<std::size_t>(v)]) a.push_back(v);
    aug.bags.push_back(std::move(a));
  }
  if (aug.bags.empty()) aug.bags.push_back(boundary);
  PathDp<Arith> dp(g, pinned, arith);
  dp.run(aug.bags);
  PartialProfile prof;
  prof.boundary = boundary;
  prof.states_peak = dp.states_peak();
  std::vector<int> slot_vertex(dp.slots(), -1);
  for (int b : boundary) slot_vertex[static_cast<std::size_t>(dp.slot_of(b))] = b;
  for (const auto& [key, cnt] : dp.table()) {
    std::vector<std::uint8_t> d;
    std::vector<std::pair<int, int>> pairs;
    for (int b : boundary) {
      char c = key[static_cast<std::size_t>(dp.slot_of(b))];
      d.push_back(c == kDeg0 ? 0 : c == kDeg2 ? 2 : 1);
      if (c >= 2) {
        int other = slot_vertex[static_cast<std::size_t>(c - 2)];
        if (b < other) pairs.emplace_back(b, other);
      }
    }
    Fingerprint f(boundary, std::move(d), Matching(std::move(pairs)));
    prof.counts[f] += arith.to_mpz(cnt);
  }
  return prof;
}

void check_boundary(const Graph& g, const std::vector<int>& boundary) {
  std::set<int> seen;
  for (int b : boundary) {
    if (b < 0 || b >= g.num_vertices()) throw DomainError("boundary vertex " + std::to_string(b) + " not in graph");
    if (!seen.insert(b).second) throw DomainError("boundary lists vertex " + std::to_string(b) + " twice");
  }
}

}  // namespace

CountResult count_hc_bruteforce(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kMaxBruteforceVertices)
    throw CapacityError("brute-force HC count capped at " + std::to_string(kMaxBruteforceVertices) + " vertices");
  CountResult r;
  r.value = 0;
  if (n < 3) return r;
  auto adj = g.adjacency();
  std::vector<std::uint32_t> nb(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int u : adj[static_cast<std::size_t>(v)]) nb[static_cast<std::size_t>(v)] |= 1u << u;
  // paths from vertex 0; mask ranges over vertices 1..n-1
  const int m = n - 1;
  const std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<std::uint64_t> dp((full + 1) * static_cast<std::size_t>(m), 0);
  auto at = [&](std::size_t mask, int v) -> std::uint64_t& { return dp[mask * static_cast<std::size_t>(m) + static_cast<std::size_t>(v - 1)]; };
  for (int v = 1; v < n; ++v)
    if (nb[0] >> v & 1) at(std::size_t{1} << (v - 1), v) = 1;
  for (std::size_t mask = 1; mask <= full; ++mask)
    for (int v = 1; v < n; ++v) {
      if (!(mask >> (v - 1) & 1)) continue;
      std::uint64_t c = at(mask, v);
      if (!c) continue;
      for (int w = 1; w < n; ++w)
        if (!(mask >> (w - 1) & 1) && (nb[static_cast<std::size_t>(v)] >> w & 1)) at(mask | (std::size_t{1} << (w - 1)), w) += c;
    }
  mpz_class total = 0;
  for (int v = 1; v < n; ++v)
    if (nb[0] >> v & 1) total += mpz_class(static_cast<unsigned long>(at(full, v)));
  r.value = total / 2;
  return r;
}

CountResult count_hc_pathdp(const Graph& g, const PathDecomposition& pd, std::optional<std::uint32_t> modulus) {
  validate_decomposition(g, pd);
  if (g.num_vertices() < 3) return CountResult{0, modulus, 0};
  CountResult r = modulus ? hc_dp(g, pd, ModArith{*modulus}) : hc_dp(g, pd, BigArith{});
  r.modulus = modulus;
  if (modulus) r.value %= *modulus;
  return r;
}

PartialProfile partial_solution_profile(const Graph& g, const std::vector<int>& boundary, const PathDecomposition& pd,
                                        std::optional<std::uint32_t> modulus) {
  check_boundary(g, boundary);
  validate_decomposition(g, pd);
  PartialProfile p = modulus ? ps_dp(g, boundary, pd, ModArith{*modulus}) : ps_dp(g, boundary, pd, BigArith{});
  p.modulus = modulus;
  for (auto it = p.counts.begin(); it != p.counts.end();) {
    if (modulus) it->second %= *modulus;
    it = sgn(it->second) == 0 ? p.counts.erase(it) : std::next(it);
  }
  return p;
}

PartialProfile partial_solution_profile_bruteforce(const Graph& g, const std::vector<int>& boundary) {
  check_boundary(g, boundary);
  const auto& edges = g.edges();
  if (edges.size() > static_cast<std::size_t>(kMaxSubsetEdges))
    throw CapacityError("subset oracle capped at " + std::to_string(kMaxSubsetEdges) + " edges");
  const int n = g.num_vertices();
  std::vector<bool> on_b(static_cast<std::size_t>(n), false);
  for (int b : boundary) on_b[static_cast<std::size_t>(b)] = true;
  PartialProfile prof;
  prof.boundary = boundary;
  const std::uint32_t subsets = 1u << edges.size();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (auto& l : inc) l.clear();
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1) {
        ++deg[static_cast<std::size_t>(edges[i].u)];
        ++deg[static_cast<std::size_t>(edges[i].v)];
        inc[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<int>(i));
        inc[static_cast<std::size_t>(edges[i].v)].push_back(static_cast<int>(i));
      }
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      int d = deg[static_cast<std::size_t>(v)];
      ok = on_b[static_cast<std::size_t>(v)] ? d <= 2 : d == 2;
    }
    if (!ok) continue;
    // walk every path from a degree-1 endpoint
    std::vector<bool> used(edges.size(), false);
    std::vector<std::pair<int, int>> pairs;
    for (int b : boundary) {
      if (deg[static_cast<std::size_t>(b)] != 1) continue;
      int e = inc[static_cast<std::size_t>(b)][0];
      if (used[static_cast<std::size_t>(e)]) continue;
      int x = b;
      while (true) {
        used[static_cast<std::size_t>(e)] = true;
        x = edges[static_cast<std::size_t>(e)].other(x);
        if (deg[static_cast<std::size_t>(x)] == 1) break;
        const auto& l = inc[static_cast<std::size_t>(x)];
        e = used[static_cast<std::size_t>(l[0])] ? l[1] : l[0];
      }
      pairs.emplace_back(b, x);
    }
    std::size_t leftover = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((mask >> i & 1) && !used[i]) ++leftover;
    if (leftover) {
      // remaining edges form cycles; allowed only as one cycle that is all of H
      if (!pairs.empty()) continue;
      int start = -1;
      for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 2) {
          start = v;
          break;
        }
      std::size_t len = 0;
      int x = start, e = inc[static_cast<std::size_t>(start)][0];
      std::vector<bool> seen(edges.size(), false);
      do {
        seen[static_cast<std::size_t>(e)] = true;
        ++len;
        x = edges[static_cast<std::size_t>(e)].other(x);
        const auto& l = inc[static_cast<std::size_t>(x)];
        e = seen[static_cast<std::size_t>(l[0])] ? l[1] : l[0];
      } while (x != start);
      if (len != leftover) continue;
    }
    std::vector<std::uint8_t> d;
    for (int b : boundary) d.push_back(static_cast<std::uint8_t>(deg[static_cast<std::size_t>(b)]));
    prof.counts[Fingerprint(boundary, std::move(d), Matching(std::move(pairs)))] += 1;
  }
  return prof;
}

CountResult count_partial_solutions(const Graph& g, const std::vector<int>& boundary, const Fingerprint& f,
                                    const PathDecomposition* pd, std::optional<std::uint32_t> modulus) {
  if (f.boundary != boundary) throw DomainError("fingerprint boundary differs from B");
  PartialProfile p = pd ? partial_solution_profile(g, boundary, *pd, modulus)
                        : partial_solution_profile_bruteforce(g, boundary);
  CountResult r;
  r.value = p.count(f);
  if (modulus) r.value %= *modulus;
  r.modulus = modulus;
  r.states_peak = p.states_peak;
  return r;
}

std::uint64_t enumerate_hamiltonian_cycles(const Graph& g, const std::function<void(const std::vector<int>&)>& visit) {
  const int n = g.num_vertices();
  if (n < 3) return 0;
  auto adj = g.adjacency();
  for (auto& l : adj) std::sort(l.begin(), l.end());
  std::vector<int> path{0};
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  on[0] = true;
  std::uint64_t found = 0;
  std::function<void()> rec = [&]() {
    int x = path.back();
    if (static_cast<int>(path.size()) == n) {
      // count each cycle once: orientation with path[1] < last
      if (path[1] < path.back() && g.has_edge(x, 0)) {
        ++found;
        if (visit) visit(path);
      }
      return;
    }
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (on[static_cast<std::size_t>(y)]) continue;
      on[static_cast<std::size_t>(y)] = true;
      path.push_back(y);
      rec();
      path.pop_back();
      on[static_cast<std::size_t>(y)] = false;
    }
  };
  rec();
  return found;
}

}  // namespace hcrank
