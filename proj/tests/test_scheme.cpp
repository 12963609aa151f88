#include <map>

#include "doctest.h"
#include "hcrank/errors.hpp"
#include "hcrank/linalg.hpp"
#include "hcrank/matchings.hpp"
#include "hcrank/scheme.hpp"
#include "hcrank/tableaux.hpp"

using namespace hcrank;

TEST_CASE("sphere sizes match enumeration") {
  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_matchings(2 * n);
    std::map<Partition, long> seen;
    for (const auto& m : all) ++seen[union_cycle_type(all.front(), m).lambda];
    for (const auto& lam : partitions(n)) CHECK(sphere_size(lam) == seen[lam]);
  }
  mpz_class total = 0;
  for (const auto& lam : partitions(3)) total += sphere_size(lam);
  CHECK(total == 15);
}

TEST_CASE("class matrices partition J") {
  auto all = enumerate_matchings(6);
  ExactMatrix sum(FieldSpec::rationals(), 15, 15);
  for (const auto& lam : partitions(3)) {
    auto c = build_class_matrix(3, lam);
    for (std::size_t i = 0; i < 15; ++i)
      for (std::size_t j = 0; j < 15; ++j)
        CHECK(c.matrix.at(i, j) == (union_cycle_type(all[i], all[j]).lambda == lam ? 1 : 0));
    sum = sum + c.matrix;
  }
  for (std::size_t i = 0; i < 15; ++i)
    for (std::size_t j = 0; j < 15; ++j) CHECK(sum.at(i, j) == 1);
  CHECK(build_class_matrix(3, Partition({3})).matrix == build_M(6));
  CHECK(build_class_matrix(3, Partition({1, 1, 1})).matrix == ExactMatrix::identity(FieldSpec::rationals(), 15));
}

TEST_CASE("scheme axioms") {
  for (int n = 1; n <= 4; ++n) {
    auto r = verify_scheme_axioms(n);
    CHECK_MESSAGE(r.all(), r.failure);
  }
  CHECK_THROWS_AS(verify_scheme_axioms(6), CapacityError);
}

TEST_CASE("eigenvalues") {
  CHECK(eigenvalue_eta(6, Partition({2, 2, 2})) == 0);
  CHECK(eigenvalue_eta(3, Partition({3})) == 8);
  CHECK(eigenvalue_eta(3, Partition({2, 1})) == -2);
  CHECK(eigenvalue_eta(3, Partition({1, 1, 1})) == 2);
  CHECK(eigenvalue_eta(2, Partition({2})) == 2);
  CHECK(eigenvalue_eta(2, Partition({1, 1})) == -1);
  CHECK(eigenvalue_omega(3, Partition({3})) == 1);
  CHECK(eigenvalue_omega(3, Partition({2, 1})) == mpq_class(-1, 4));
  // The top eigenvalue is the valency of the single-cycle class.
  for (int n = 1; n <= 8; ++n) CHECK(eigenvalue_eta(n, Partition({n})) == sphere_size(Partition({n})));
  // eta vanishes exactly on shapes containing the cell (3,2).
  for (int n = 1; n <= 10; ++n)
    for (const auto& lam : partitions(n)) CHECK((eigenvalue_eta(n, lam) == 0) == (lam.part(2) >= 2));
}

TEST_CASE("spectrum certificates") {
  auto c2 = certify_spectrum(2);
  CHECK(c2.pass);
  std::map<std::string, std::pair<mpq_class, mpz_class>> lines;
  for (const auto& l : c2.lines) lines[l.lambda.to_string()] = {l.eta, l.multiplicity};
  CHECK(lines["2"] == std::make_pair(mpq_class(2), mpz_class(1)));
  CHECK(lines["1+1"] == std::make_pair(mpq_class(-1), mpz_class(2)));

  auto c4 = certify_spectrum(4);
  CHECK(c4.pass);
  for (const auto& l : c4.lines) CHECK(l.nullity_measured == l.multiplicity.get_ui());
  CHECK(spectrum_csv(c4).rfind("lambda,eta,multiplicity", 0) == 0);
  CHECK_THROWS_AS(certify_spectrum(5), CapacityError);
}

TEST_CASE("multiplicities sum to the matrix order") {
  for (int n = 1; n <= 8; ++n) {
    mpz_class total = 0;
    for (const auto& lam : partitions(n)) total += f_lambda(lam.doubled());
    CHECK(total == double_factorial(2 * n - 1));
  }
}
