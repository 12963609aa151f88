#include "hcrank/field.hpp"

#include <charconv>

#include "hcrank/errors.hpp"

namespace hcrank {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : small) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all 64-bit n.
  for (auto a : small) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  return static_cast<std::uint32_t>(powmod64(base, exp, p));
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw SingularMatrixError("zero has no inverse in Z_" + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw CapacityError("prime modulus must be below 2^31");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind_ = Kind::Prime;
  f.p_ = static_cast<std::uint32_t>(p);
  return f;
}

std::string FieldSpec::to_string() const {
  return kind_ == Kind::Rationals ? "q" : "p:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "p:") {
    std::uint64_t p = 0;
    auto body = text.substr(2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
  }
  throw ParseError("bad field spec '" + std::string(text) + "' (expected q or p:<prime>)");
}

}  // namespace hcrank
