#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hcrank {

bool is_prime(std::uint64_t n);

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

class FieldSpec {
 public:
  enum class Kind { Rationals, Prime };

  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  // p must be prime and below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::Prime; }
  std::uint32_t p() const { return p_; }

  // "q" or "p:<prime>"
  std::string to_string() const;
  static FieldSpec parse(std::string_view text);

  bool operator==(const FieldSpec&) const = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

}  // namespace hcrank
