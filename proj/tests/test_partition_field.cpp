#include "doctest.h"
#include "hcrank/errors.hpp"
#include "hcrank/field.hpp"
#include "hcrank/partition.hpp"

using namespace hcrank;

TEST_CASE("partition basics") {
  Partition p({4, 3, 1, 1});
  CHECK(p.size() == 9);
  CHECK(p.length() == 4);
  CHECK(p.to_string() == "4+3+1+1");
  CHECK(p.transpose().parts() == std::vector<int>{4, 2, 2, 1});
  CHECK(p.transpose().transpose() == p);
  CHECK(p.doubled().parts() == std::vector<int>{8, 6, 2, 2});
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.multiplicity(2) == 0);
  CHECK(p.cells().size() == 9u);
  CHECK(Partition::parse("4+3+1+1") == p);
  CHECK(Partition({3, 1}).cells().back() == Cell{2, 1});
}

TEST_CASE("partition rejects bad input") {
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
  CHECK_THROWS_AS(Partition::parse("3+x"), ParseError);
}

TEST_CASE("primality against trial division") {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == slow(n));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ull));
}

TEST_CASE("modular inverse") {
  for (std::uint32_t p : {2u, 3u, 7u, 1009u, 2147483647u})
    for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 200); ++a)
      CHECK(static_cast<std::uint64_t>(a) * inv_mod(a, p) % p == 1);
  CHECK(pow_mod(3, 4, 7) == 4);
}

TEST_CASE("field spec") {
  CHECK(FieldSpec::rationals().to_string() == "q");
  CHECK(FieldSpec::prime(7).to_string() == "p:7");
  CHECK(FieldSpec::parse("p:13") == FieldSpec::prime(13));
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK_THROWS_AS(FieldSpec::prime(9), DomainError);
  CHECK_THROWS_AS(FieldSpec::prime(1ull << 32), CapacityError);
  CHECK_THROWS(FieldSpec::parse("p:x"));
}
