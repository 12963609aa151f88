#pragma once

#include <stdexcept>
#include <string>

namespace hcrank {

// Input outside the mathematical domain of an operation (odd k, bad label set, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds a configured size ceiling.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested object cannot be built (e.g. G_F for an empty matching with 1-2 degree-2 vertices).
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BasisTooSmallError : public std::runtime_error {
 public:
  BasisTooSmallError(const std::string& what, int achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  int achieved() const { return achieved_; }

 private:
  int achieved_;
};

}  // namespace hcrank
