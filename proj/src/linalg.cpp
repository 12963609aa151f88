#include "hcrank/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "hcrank/errors.hpp"

namespace hcrank {

namespace {

constexpr std::uint32_t kCertPrime = 2147483647u;  // 2^31 - 1

struct QOps {
  using T = mpq_class;
  static bool zero(const T& x) { return sgn(x) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  T one() const { return 1; }
  T from(const mpq_class& v) const { return v; }
  mpq_class to(const T& v) const { return v; }
};

struct POps {
  using T = std::uint32_t;
  std::uint32_t p;
  static bool zero(T x) { return x == 0; }
  T add(T a, T b) const { return static_cast<T>((std::uint64_t(a) + b) % p); }
  T sub(T a, T b) const { return static_cast<T>((std::uint64_t(a) + p - b) % p); }
  T mul(T a, T b) const { return static_cast<T>(std::uint64_t(a) * b % p); }
  T inv(T a) const { return inv_mod(a, p); }
  T one() const { return 1; }
  T to_t(const mpq_class& v) const { return static_cast<T>(v.get_num().get_ui()); }
  mpq_class to(T v) const { return mpq_class(v); }
};

template <class Ops>
std::vector<typename Ops::T> load(const ExactMatrix& a, const Ops&) {
  if constexpr (std::is_same_v<Ops, QOps>)
    return a.rational_data();
  else
    return a.residue_data();
}

// Gauss-Jordan inverse; returns false if singular.
template <class Ops>
bool gauss_jordan_inverse(std::vector<typename Ops::T>& m, std::vector<typename Ops::T>& inv, std::size_t n,
                          const Ops& ops) {
  using T = typename Ops::T;
  inv.assign(n * n, T(0));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = ops.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && Ops::zero(m[piv * n + c])) ++piv;
    if (piv == n) return false;
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m[piv * n + j], m[c * n + j]);
        std::swap(inv[piv * n + j], inv[c * n + j]);
      }
    T s = ops.inv(m[c * n + c]);
    for (std::size_t j = 0; j < n; ++j) {
      m[c * n + j] = ops.mul(m[c * n + j], s);
      inv[c * n + j] = ops.mul(inv[c * n + j], s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || Ops::zero(m[i * n + c])) continue;
      T f = m[i * n + c];
      for (std::size_t j = 0; j < n; ++j) {
        if (!Ops::zero(m[c * n + j])) m[i * n + j] = ops.sub(m[i * n + j], ops.mul(f, m[c * n + j]));
        if (!Ops::zero(inv[c * n + j])) inv[i * n + j] = ops.sub(inv[i * n + j], ops.mul(f, inv[c * n + j]));
      }
    }
  }
  return true;
}

// Incrementally maintained echelon basis.
template <class Ops>
class Echelon {
 public:
  using T = typename Ops::T;
  Echelon(std::size_t dim, Ops ops) : dim_(dim), ops_(std::move(ops)) {}

  bool try_add(std::vector<T> v) {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      std::size_t c = pivots_[k];
      if (Ops::zero(v[c])) continue;
      T f = v[c];
      for (std::size_t j = 0; j < dim_; ++j)
        if (!Ops::zero(basis_[k][j])) v[j] = ops_.sub(v[j], ops_.mul(f, basis_[k][j]));
    }
    std::size_t c = 0;
    while (c < dim_ && Ops::zero(v[c])) ++c;
    if (c == dim_) return false;
    T s = ops_.inv(v[c]);
    for (auto& x : v) x = ops_.mul(x, s);
    basis_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
  }

 private:
  std::size_t dim_;
  Ops ops_;
  std::vector<std::vector<T>> basis_;
  std::vector<std::size_t> pivots_;
};

template <class Ops>
std::vector<std::size_t> greedy_rows(const ExactMatrix& a, const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& cols, const Ops& ops, bool transpose) {
  using T = typename Ops::T;
  auto data = load(a, ops);
  Echelon<Ops> ech(cols.size(), ops);
  std::vector<std::size_t> kept;
  for (auto r : rows) {
    std::vector<T> v(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      v[j] = transpose ? data[cols[j] * a.cols() + r] : data[r * a.cols() + cols[j]];
    if (ech.try_add(std::move(v))) kept.push_back(r);
  }
  return kept;
}

std::vector<mpz_class> integer_rows(const ExactMatrix& a, mpz_class* scale_product) {
  std::vector<mpz_class> out(a.rows() * a.cols());
  if (scale_product) *scale_product = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& v = a.rational_data()[i * a.cols() + j];
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& v = a.rational_data()[i * a.cols() + j];
      out[i * a.cols() + j] = v.get_num() * (l / v.get_den());
    }
    if (scale_product) *scale_product *= l;
  }
  return out;
}

// Fraction-free elimination in place; returns rank, tracks row-swap parity.
std::size_t bareiss(std::vector<mpz_class>& m, std::size_t rows, std::size_t cols, bool* odd_swaps) {
  mpz_class prev = 1, t;
  std::size_t r = 0;
  bool odd = false;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
      odd = !odd;
    }
    const mpz_class& p = m[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpz_class f = m[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class& x = m[i * cols + j];
        x *= p;
        t = f * m[r * cols + j];
        x -= t;
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m[i * cols + c] = 0;
    }
    prev = p;
    ++r;
  }
  if (odd_swaps) *odd_swaps = odd;
  return r;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::uint32_t> data, std::size_t rows, std::size_t cols, std::uint32_t p) {
  if (rows == 0 || cols == 0) return 0;
  const bool lazy = p < (1u << 16);
  // Rows are u64 accumulators; with p < 2^16 each update adds < 2^32, so
  // reduction can wait until an entry is inspected or becomes a pivot row.
  std::vector<std::uint64_t> m(data.begin(), data.end());
  data.clear();
  data.shrink_to_fit();
  std::vector<std::uint64_t*> row(rows);
  for (std::size_t i = 0; i < rows; ++i) row[i] = m.data() + i * cols;
  std::vector<std::uint32_t> prow(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      row[i][c] %= p;
      if (row[i][c]) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    std::swap(row[piv], row[r]);
    std::uint64_t* pr = row[r];
    const std::uint64_t s = inv_mod(static_cast<std::uint32_t>(pr[c]), p);
    for (std::size_t j = c; j < cols; ++j) prow[j] = static_cast<std::uint32_t>(pr[j] % p * s % p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t* x = row[i];
      const std::uint64_t f = x[c] % p;
      if (!f) continue;
      const std::uint64_t g = p - f;
      if (lazy) {
        for (std::size_t j = c + 1; j < cols; ++j) x[j] += g * prow[j];
      } else {
        for (std::size_t j = c + 1; j < cols; ++j) x[j] = (x[j] + g * prow[j]) % p;
      }
      x[c] = 0;
    }
    ++r;
  }
  return r;
}

std::size_t rational_rank_bareiss(const ExactMatrix& a) {
  if (a.field().is_prime_field()) throw DomainError("rational_rank_bareiss needs a matrix over Q");
  auto m = integer_rows(a, nullptr);
  return bareiss(m, a.rows(), a.cols(), nullptr);
}

std::size_t rank(const ExactMatrix& a) {
  if (a.field().is_prime_field()) return rank_mod_p(a.residue_data(), a.rows(), a.cols(), a.field().p());
  const std::size_t full = std::min(a.rows(), a.cols());
  if (full == 0) return 0;
  bool reducible = std::all_of(a.rational_data().begin(), a.rational_data().end(), [](const mpq_class& v) {
    return mpz_fdiv_ui(v.get_den_mpz_t(), kCertPrime) != 0;
  });
  if (reducible) {
    auto mp = a.in_field(FieldSpec::prime(kCertPrime));
    if (rank_mod_p(mp.residue_data(), a.rows(), a.cols(), kCertPrime) == full) return full;
  }
  return rational_rank_bareiss(a);
}

mpq_class det(const ExactMatrix& a) {
  if (!a.square()) throw DomainError("det: matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (a.field().is_prime_field()) {
    POps ops{a.field().p()};
    auto m = a.residue_data();
    std::uint32_t d = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && m[piv * n + c] == 0) ++piv;
      if (piv == n) return 0;
      if (piv != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
        d = ops.sub(0, d);
      }
      d = ops.mul(d, m[c * n + c]);
      std::uint32_t s = ops.inv(m[c * n + c]);
      for (std::size_t i = c + 1; i < n; ++i) {
        std::uint32_t f = ops.mul(m[i * n + c], s);
        if (!f) continue;
        for (std::size_t j = c; j < n; ++j) m[i * n + j] = ops.sub(m[i * n + j], ops.mul(f, m[c * n + j]));
      }
    }
    return mpq_class(d);
  }
  mpz_class scale;
  auto m = integer_rows(a, &scale);
  bool odd = false;
  if (bareiss(m, n, n, &odd) < n) return 0;
  mpq_class d(m[n * n - 1], scale);
  d.canonicalize();
  return odd ? mpq_class(-d) : d;
}

ExactMatrix inverse(const ExactMatrix& a) {
  if (!a.square()) throw DomainError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  ExactMatrix out(a.field(), n, n);
  bool ok;
  if (a.field().is_prime_field()) {
    POps ops{a.field().p()};
    auto m = a.residue_data();
    std::vector<std::uint32_t> inv;
    ok = gauss_jordan_inverse(m, inv, n, ops);
    if (ok) out.residue_data() = std::move(inv);
  } else {
    QOps ops;
    auto m = a.rational_data();
    std::vector<mpq_class> inv;
    ok = gauss_jordan_inverse(m, inv, n, ops);
    if (ok)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, inv[i * n + j]);
  }
  if (!ok) {
    std::string f = a.field().is_prime_field() ? "Z_" + std::to_string(a.field().p()) : "Q";
    throw SingularMatrixError("matrix is singular over " + f);
  }
  out.set_labels(a.col_labels(), a.row_labels());
  return out;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field() == b.field())) throw DomainError("kronecker: field mismatch");
  ExactMatrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  const bool pf = a.field().is_prime_field();
  const std::uint64_t p = a.field().p();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (pf) {
        std::uint64_t x = a.residue_data()[i * a.cols() + j];
        if (!x) continue;
        for (std::size_t u = 0; u < b.rows(); ++u)
          for (std::size_t v = 0; v < b.cols(); ++v)
            k.residue_data()[(i * b.rows() + u) * k.cols() + j * b.cols() + v] =
                static_cast<std::uint32_t>(x * b.residue_data()[u * b.cols() + v] % p);
      } else {
        const mpq_class& x = a.rational_data()[i * a.cols() + j];
        if (sgn(x) == 0) continue;
        for (std::size_t u = 0; u < b.rows(); ++u)
          for (std::size_t v = 0; v < b.cols(); ++v)
            k.set(i * b.rows() + u, j * b.cols() + v, mpq_class(x * b.rational_data()[u * b.cols() + v]));
      }
    }
  auto pair_labels = [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
    std::vector<std::string> out;
    if (x.empty() || y.empty()) return out;
    for (const auto& s : x)
      for (const auto& t : y) out.push_back("(" + s + "," + t + ")");
    return out;
  };
  k.set_labels(pair_labels(a.row_labels(), b.row_labels()), pair_labels(a.col_labels(), b.col_labels()));
  return k;
}

ExactMatrix kronecker_power(const ExactMatrix& a, int t) {
  if (t < 1) throw DomainError("kronecker_power: t must be >= 1");
  ExactMatrix k = a;
  for (int i = 1; i < t; ++i) k = kronecker(k, a);
  return k;
}

std::size_t nullity_shift(const ExactMatrix& a, const mpq_class& s) {
  if (!a.square()) throw DomainError("nullity_shift: matrix is not square");
  ExactMatrix shifted = a;
  for (std::size_t i = 0; i < a.rows(); ++i) shifted.set(i, i, mpq_class(a.at(i, i) - s));
  return a.rows() - rank(shifted);
}

std::vector<std::size_t> greedy_independent_columns(const ExactMatrix& a, const std::vector<std::size_t>& rows,
                                                    const std::vector<std::size_t>& candidate_cols) {
  if (a.field().is_prime_field()) return greedy_rows(a, candidate_cols, rows, POps{a.field().p()}, true);
  return greedy_rows(a, candidate_cols, rows, QOps{}, true);
}

SubmatrixSelection full_rank_submatrix(const ExactMatrix& a, const IndexFilter& row_filter,
                                       const IndexFilter& col_filter) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!row_filter || row_filter(i)) rows.push_back(i);
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!col_filter || col_filter(j)) cols.push_back(j);
  SubmatrixSelection sel;
  if (a.field().is_prime_field())
    sel.rows = greedy_rows(a, rows, cols, POps{a.field().p()}, false);
  else
    sel.rows = greedy_rows(a, rows, cols, QOps{}, false);
  sel.cols = greedy_independent_columns(a, sel.rows, cols);
  return sel;
}

}  // namespace hcrank
