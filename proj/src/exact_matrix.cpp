#include "hcrank/exact_matrix.hpp"

#include <sstream>

#include "hcrank/errors.hpp"

namespace hcrank {

namespace {

std::uint32_t residue_of(const mpq_class& v, std::uint32_t p) {
  mpz_class n = v.get_num(), d = v.get_den();
  auto nr = static_cast<std::uint32_t>(mpz_fdiv_ui(n.get_mpz_t(), p));
  auto dr = static_cast<std::uint32_t>(mpz_fdiv_ui(d.get_mpz_t(), p));
  if (dr == 0) throw DomainError("denominator divisible by p=" + std::to_string(p));
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(nr) * inv_mod(dr, p) % p);
}

void require_same_field(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (!(a.field() == b.field()))
    throw DomainError(std::string(op) + ": field mismatch " + a.field().to_string() + " vs " +
                      b.field().to_string());
}

}  // namespace

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_prime_field())
    r_.assign(rows * cols, 0);
  else
    q_.assign(rows * cols, mpq_class(0));
}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1LL);
  return m;
}

ExactMatrix ExactMatrix::from_integers(FieldSpec field, std::size_t rows, std::size_t cols,
                                       std::span<const long long> values) {
  if (values.size() != rows * cols) throw DomainError("from_integers: size mismatch");
  ExactMatrix m(field, rows, cols);
  for (std::size_t k = 0; k < values.size(); ++k) m.set(k / cols, k % cols, values[k]);
  return m;
}

mpq_class ExactMatrix::at(std::size_t i, std::size_t j) const {
  if (field_.is_prime_field()) return mpq_class(r_[i * cols_ + j]);
  return q_[i * cols_ + j];
}

mpq_class ExactMatrix::canonical(const mpq_class& v) const {
  if (field_.is_prime_field()) return mpq_class(residue_of(v, field_.p()));
  mpq_class c = v;
  c.canonicalize();
  return c;
}

void ExactMatrix::set(std::size_t i, std::size_t j, const mpq_class& v) {
  if (field_.is_prime_field())
    r_[i * cols_ + j] = residue_of(v, field_.p());
  else {
    q_[i * cols_ + j] = v;
    q_[i * cols_ + j].canonicalize();
  }
}

void ExactMatrix::set(std::size_t i, std::size_t j, long long v) {
  if (field_.is_prime_field()) {
    long long p = field_.p();
    long long r = v % p;
    if (r < 0) r += p;
    r_[i * cols_ + j] = static_cast<std::uint32_t>(r);
  } else {
    q_[i * cols_ + j] = mpq_class(static_cast<long>(v));
  }
}

void ExactMatrix::set_labels(std::vector<std::string> rows, std::vector<std::string> cols) {
  if ((!rows.empty() && rows.size() != rows_) || (!cols.empty() && cols.size() != cols_))
    throw DomainError("label count does not match dimensions");
  row_labels_ = std::move(rows);
  col_labels_ = std::move(cols);
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> rows,
                                   std::span<const std::size_t> cols) const {
  ExactMatrix s(field_, rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) {
      if (field_.is_prime_field())
        s.r_[a * cols.size() + b] = r_[rows[a] * cols_ + cols[b]];
      else
        s.q_[a * cols.size() + b] = q_[rows[a] * cols_ + cols[b]];
    }
  std::vector<std::string> rl, cl;
  if (!row_labels_.empty())
    for (auto r : rows) rl.push_back(row_labels_[r]);
  if (!col_labels_.empty())
    for (auto c : cols) cl.push_back(col_labels_[c]);
  s.row_labels_ = std::move(rl);
  s.col_labels_ = std::move(cl);
  return s;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime_field())
        t.r_[j * rows_ + i] = r_[i * cols_ + j];
      else
        t.q_[j * rows_ + i] = q_[i * cols_ + j];
    }
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

ExactMatrix ExactMatrix::in_field(FieldSpec target) const {
  if (target == field_) return *this;
  if (field_.is_prime_field() && !target.is_prime_field())
    throw DomainError("cannot lift a Z_p matrix to Q");
  ExactMatrix m(target, rows_, cols_);
  for (std::size_t k = 0; k < rows_ * cols_; ++k) {
    if (field_.is_prime_field())
      m.r_[k] = r_[k] % target.p();
    else
      m.r_[k] = residue_of(q_[k], target.p());
  }
  m.row_labels_ = row_labels_;
  m.col_labels_ = col_labels_;
  return m;
}

bool ExactMatrix::is_zero() const {
  if (field_.is_prime_field()) {
    for (auto v : r_)
      if (v) return false;
    return true;
  }
  for (const auto& v : q_)
    if (sgn(v) != 0) return false;
  return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && q_ == o.q_ && r_ == o.r_;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b, "multiply");
  if (a.cols() != b.rows()) throw DomainError("multiply: inner dimensions differ");
  ExactMatrix c(a.field(), a.rows(), b.cols());
  if (a.field().is_prime_field()) {
    const std::uint64_t p = a.field().p();
    const auto& ar = a.residue_data();
    const auto& br = b.residue_data();
    auto& cr = c.residue_data();
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        std::uint64_t x = ar[i * a.cols() + k];
        if (!x) continue;
        for (std::size_t j = 0; j < b.cols(); ++j)
          cr[i * b.cols() + j] =
              static_cast<std::uint32_t>((cr[i * b.cols() + j] + x * br[k * b.cols() + j]) % p);
      }
    return c;
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      mpq_class s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const auto& x = a.rational_data()[i * a.cols() + k];
        if (sgn(x) == 0) continue;
        s += x * b.rational_data()[k * b.cols() + j];
      }
      c.set(i, j, s);
    }
  return c;
}

static ExactMatrix combine(const ExactMatrix& a, const ExactMatrix& b, int sign, const char* op) {
  require_same_field(a, b, op);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError(std::string(op) + ": shape mismatch");
  ExactMatrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.set(i, j, sign > 0 ? mpq_class(a.at(i, j) + b.at(i, j)) : mpq_class(a.at(i, j) - b.at(i, j)));
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) { return combine(a, b, 1, "add"); }
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return combine(a, b, -1, "subtract"); }

ExactMatrix scale(const ExactMatrix& a, const mpq_class& c) {
  ExactMatrix s(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s.set(i, j, mpq_class(a.at(i, j) * c));
  return s;
}

std::string scalar_to_string(const mpq_class& v) { return v.get_str(); }

std::string ExactMatrix::to_text() const {
  std::ostringstream out;
  out << rows_ << ' ' << cols_ << ' ' << field_.to_string() << '\n';
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      if (field_.is_prime_field())
        out << r_[i * cols_ + j];
      else
        out << q_[i * cols_ + j].get_str();
    }
    out << '\n';
  }
  return out.str();
}

ExactMatrix ExactMatrix::parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t rows = 0, cols = 0;
  std::string field;
  if (!(in >> rows >> cols >> field)) throw ParseError("matrix header must be 'rows cols field'");
  ExactMatrix m(FieldSpec::parse(field), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::string tok;
      if (!(in >> tok)) throw ParseError("matrix body truncated");
      mpq_class v;
      if (v.set_str(tok, 10) != 0 || sgn(v.get_den()) == 0) throw ParseError("bad scalar '" + tok + "'");
      v.canonicalize();
      m.set(i, j, v);
    }
  std::string extra;
  if (in >> extra) throw ParseError("trailing data after matrix body");
  return m;
}

}  // namespace hcrank
