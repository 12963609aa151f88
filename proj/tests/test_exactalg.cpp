#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hcrank/errors.hpp"
#include "hcrank/linalg.hpp"
#include "hcrank/matchings.hpp"

using namespace hcrank;

namespace {

ExactMatrix random_matrix(std::mt19937& rng, FieldSpec f, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  ExactMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<long long>(d(rng)));
  return m;
}

// Low-rank matrices make the rank tests meaningful.
ExactMatrix random_low_rank(std::mt19937& rng, FieldSpec f, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(rng, f, r, k, -3, 3) * random_matrix(rng, f, k, c, -3, 3);
}

mpq_class leibniz_det(const ExactMatrix& a) {
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    mpq_class term = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= a.at(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a.canonical(total);
}

// Textbook Gaussian elimination in the field of the matrix.
std::size_t naive_rank(const ExactMatrix& a) {
  std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
  auto reduce = [&](mpq_class v) { return a.canonical(v); };
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && m[piv][c] == 0) ++piv;
    if (piv == a.rows()) continue;
    std::swap(m[piv], m[r]);
    mpq_class inv = a.field().is_prime_field()
                        ? mpq_class(inv_mod(static_cast<std::uint32_t>(m[r][c].get_num().get_ui()), a.field().p()))
                        : mpq_class(1 / m[r][c]);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      mpq_class f = reduce(m[i][c] * inv);
      if (f == 0) continue;
      for (std::size_t j = c; j < a.cols(); ++j) m[i][j] = reduce(m[i][j] - f * m[r][j]);
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("matrix text round trip") {
  std::mt19937 rng(1);
  auto q = random_matrix(rng, FieldSpec::rationals(), 3, 4, -5, 5);
  q.set(0, 0, mpq_class(-7, 3));
  CHECK(ExactMatrix::parse_text(q.to_text()) == q);
  auto p = random_matrix(rng, FieldSpec::prime(7), 4, 2, 0, 20);
  CHECK(ExactMatrix::parse_text(p.to_text()) == p);
  CHECK_THROWS_AS(ExactMatrix::parse_text("2 2 q\n1 2\n3"), ParseError);
}

TEST_CASE("residues stay canonical") {
  ExactMatrix m(FieldSpec::prime(5), 1, 2);
  m.set(0, 0, -1LL);
  m.set(0, 1, mpq_class(1, 2));
  CHECK(m.at(0, 0) == 4);
  CHECK(m.at(0, 1) == 3);
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(2);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + t % 6;
    auto q = random_matrix(rng, FieldSpec::rationals(), n, n, -4, 4);
    if (t % 5 == 0) q.set(0, 0, mpq_class(3, 7));
    CHECK(det(q) == leibniz_det(q));
    auto p = q.in_field(FieldSpec::prime(11));
    CHECK(det(p) == leibniz_det(p));
  }
}

TEST_CASE("rank agrees with plain Gaussian elimination") {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 2 + t % 7, c = 2 + (t * 3) % 8, k = 1 + t % 5;
    auto q = random_low_rank(rng, FieldSpec::rationals(), r, c, k);
    std::size_t want = naive_rank(q);
    CHECK(rank(q) == want);
    CHECK(rational_rank_bareiss(q) == want);
    for (std::uint32_t p : {2u, 3u, 13u}) {
      auto m = q.in_field(FieldSpec::prime(p));
      CHECK(rank(m) == naive_rank(m));
    }
  }
}

TEST_CASE("modular rank never exceeds rational rank") {
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    auto q = random_matrix(rng, FieldSpec::rationals(), 7, 7, -2, 2);
    for (std::uint32_t p : {2u, 3u, 5u}) CHECK(rank(q.in_field(FieldSpec::prime(p))) <= rank(q));
  }
}

TEST_CASE("inverse") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto q = random_matrix(rng, FieldSpec::rationals(), 5, 5, -5, 5);
    if (det(q) == 0) continue;
    CHECK(q * inverse(q) == ExactMatrix::identity(q.field(), 5));
    auto p = q.in_field(FieldSpec::prime(7));
    if (det(p) == 0) continue;
    CHECK(inverse(p) * p == ExactMatrix::identity(p.field(), 5));
  }
}

TEST_CASE("M_4 examples") {
  auto m4 = build_M(4);
  CHECK(rank(m4) == 3);
  CHECK(det(m4) == 2);
  auto inv3 = inverse(build_M(4, FieldSpec::prime(3)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(inv3.at(i, j) == (i == j ? 1 : 2));
  CHECK_THROWS_WITH_AS(inverse(build_M(4, FieldSpec::prime(2))), "matrix is singular over Z_2", SingularMatrixError);
  CHECK(nullity_shift(m4, -1) == 2);
  CHECK(nullity_shift(m4, 2) == 1);
  CHECK(nullity_shift(m4, 5) == 0);
}

TEST_CASE("kronecker") {
  auto m4 = build_M(4);
  auto k = kronecker(m4, m4);
  CHECK(k.rows() == 9);
  CHECK(k.at(4, 8) == m4.at(1, 2) * m4.at(1, 2));
  CHECK(det(k) == 64);  // det(A (x) B) = det(A)^3 det(B)^3 for 3x3 factors
  CHECK(kronecker_power(m4, 3).rows() == 27);
  CHECK(rank(kronecker(build_M(6, FieldSpec::prime(5)), build_M(6, FieldSpec::prime(5)))) == 225);
  CHECK_THROWS_AS(kronecker(m4, build_M(4, FieldSpec::prime(3))), DomainError);
}

TEST_CASE("full rank submatrix") {
  auto s6 = full_rank_submatrix(build_M(6, FieldSpec::prime(3)));
  CHECK(s6.rows.size() == 15);
  CHECK(s6.cols.size() == 15);
  auto s4 = full_rank_submatrix(build_M(4, FieldSpec::prime(2)));
  CHECK(s4.rows == std::vector<std::size_t>{0, 1});
  CHECK(s4.cols.size() == 2);

  std::mt19937 rng(6);
  for (int t = 0; t < 15; ++t) {
    auto a = random_low_rank(rng, FieldSpec::prime(5), 8, 9, 1 + t % 6);
    auto odd = [](std::size_t i) { return i % 2 == 1; };
    auto s = full_rank_submatrix(a, t % 2 ? IndexFilter(odd) : IndexFilter{});
    CHECK(s.rows.size() == s.cols.size());
    CHECK(rank(a.submatrix(s.rows, s.cols)) == s.rows.size());
    if (t % 2 == 0) {
      CHECK(s.rows.size() == rank(a));
    } else {
      std::vector<std::size_t> rows, all(a.cols());
      std::iota(all.begin(), all.end(), 0);
      for (std::size_t i = 1; i < a.rows(); i += 2) rows.push_back(i);
      CHECK(s.rows.size() == rank(a.submatrix(rows, all)));
    }
  }
}
