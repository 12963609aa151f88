#include "hcrank/tableaux.hpp"

#include <set>
#include <sstream>

#include "hcrank/errors.hpp"
#include "hcrank/linalg.hpp"
#include "hcrank/matchings.hpp"

namespace hcrank {

namespace {

void partitions_rec(int rest, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rest - p, p, cur, out);
    cur.pop_back();
  }
}

// Count fillings by growing the shape one corner at a time.
mpz_class syt_rec(std::vector<int>& filled, const Partition& target, int remaining) {
  if (remaining == 0) return 1;
  mpz_class total = 0;
  for (int r = 0; r < target.length(); ++r) {
    auto rs = static_cast<std::size_t>(r);
    if (filled[rs] >= target.part(r)) continue;
    if (r > 0 && filled[rs - 1] <= filled[rs]) continue;
    ++filled[rs];
    total += syt_rec(filled, target, remaining - 1);
    --filled[rs];
  }
  return total;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw DomainError("partitions of a negative integer");
  if (n > kMaxPartitionN) throw CapacityError("partitions capped at n=" + std::to_string(kMaxPartitionN));
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

bool covers(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (lambda.part(i) < mu.part(i)) return false;
  return true;
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
  auto t = lambda.transpose();
  std::vector<std::vector<int>> h;
  for (int r = 0; r < lambda.length(); ++r) {
    std::vector<int> row;
    for (int c = 0; c < lambda.part(r); ++c) row.push_back((lambda.part(r) - c - 1) + (t.part(c) - r - 1) + 1);
    h.push_back(std::move(row));
  }
  return h;
}

mpz_class f_lambda(const Partition& lambda) {
  mpz_class num, den = 1;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
  for (const auto& row : hook_lengths(lambda))
    for (int h : row) den *= h;
  return num / den;
}

mpz_class enumerate_syt(const Partition& lambda) {
  if (lambda.size() > kMaxSytN) throw CapacityError("SYT enumeration capped at n=" + std::to_string(kMaxSytN));
  std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
  return syt_rec(filled, lambda, lambda.size());
}

mpz_class rational_rank_formula(int n) {
  const Partition two_cubed({2, 2, 2});
  mpz_class total = 0;
  for (const auto& l : partitions(n))
    if (!covers(l, two_cubed)) total += f_lambda(l.doubled());
  return total;
}

mpz_class double_factorial(int n) {
  mpz_class r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class catalan(int n) { return binomial(2 * n, n) / (n + 1); }

BipartiteRank bipartite_rank_check(int n) {
  if (n < 1) throw DomainError("bipartite_rank_check needs n >= 1");
  if (n > 5) throw CapacityError("bipartite rank computed for n <= 5");
  BipartiteRank r;
  r.formula = binomial(2 * n - 2, n - 1);
  auto ms = enumerate_matchings(2 * n);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool crossing = true;
    for (auto [a, b] : ms[i].pairs()) crossing = crossing && a <= n && b > n;
    if (crossing) idx.push_back(i);
  }
  auto m = build_M(2 * n);
  r.computed = rank(m.submatrix(idx, idx));
  return r;
}

DominoHookReport domino_hook_report(int n) {
  if (n < 2) throw DomainError("domino_hook_report needs n >= 2");
  DominoHookReport rep;
  rep.n = n;
  std::set<Partition> shapes;
  for (int k = 0; 2 * k <= n; ++k) {
    std::vector<int> parts;
    if (k > 0) parts = {k, k};
    for (int i = 0; i < n - 2 * k; ++i) parts.push_back(1);
    shapes.insert(Partition(parts));
  }
  rep.literal_sum = 0;
  for (const auto& l : shapes) rep.literal_sum += f_lambda(l.doubled());
  rep.catalan_product = catalan(n - 1) * catalan(n);
  rep.noncover_sum = rational_rank_formula(n);
  return rep;
}

std::string domino_hook_csv(const std::vector<DominoHookReport>& rows) {
  std::ostringstream out;
  out << "n,literal_sum,catalan_product,noncover_sum\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.literal_sum << ',' << r.catalan_product << ',' << r.noncover_sum << '\n';
  return out.str();
}

}  // namespace hcrank
