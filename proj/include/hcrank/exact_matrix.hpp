#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcrank/field.hpp"

namespace hcrank {

// Dense matrix over Q (mpq, lowest terms) or Z_p (least nonnegative residues).
// Scalars cross the API as mpq_class; over Z_p they are integers in [0, p).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(FieldSpec field, std::size_t n);
  static ExactMatrix from_integers(FieldSpec field, std::size_t rows, std::size_t cols,
                                   std::span<const long long> values);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  mpq_class at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const mpq_class& v);
  void set(std::size_t i, std::size_t j, long long v);

  // Canonical residue of an arbitrary rational in this field.
  mpq_class canonical(const mpq_class& v) const;

  // Raw storage, row-major. Only the one matching field() is populated.
  const std::vector<mpq_class>& rational_data() const { return q_; }
  const std::vector<std::uint32_t>& residue_data() const { return r_; }
  std::vector<std::uint32_t>& residue_data() { return r_; }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  void set_labels(std::vector<std::string> rows, std::vector<std::string> cols);

  ExactMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  ExactMatrix transpose() const;
  // Map a Q matrix into Z_p (denominators must be invertible) or re-reduce.
  ExactMatrix in_field(FieldSpec target) const;

  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const;

  // Interchange text: "rows cols field" then one row per line.
  std::string to_text() const;
  static ExactMatrix parse_text(std::string_view text);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpq_class> q_;
  std::vector<std::uint32_t> r_;
  std::vector<std::string> row_labels_, col_labels_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix scale(const ExactMatrix& a, const mpq_class& c);

std::string scalar_to_string(const mpq_class& v);

}  // namespace hcrank
