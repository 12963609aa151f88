#include "hcrank/scheme.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hcrank/errors.hpp"
#include "hcrank/linalg.hpp"
#include "hcrank/matchings.hpp"
#include "hcrank/tableaux.hpp"

namespace hcrank {

namespace {

std::vector<std::vector<int>> class_index(int n, std::vector<Partition>& classes) {
  classes = partitions(n);
  std::map<Partition, int> id;
  for (std::size_t i = 0; i < classes.size(); ++i) id[classes[i]] = static_cast<int>(i);
  auto ms = enumerate_matchings(2 * n);
  std::vector<std::vector<int>> cls(ms.size(), std::vector<int>(ms.size()));
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i; j < ms.size(); ++j) cls[i][j] = cls[j][i] = id[union_cycle_type(ms[i], ms[j]).lambda];
  return cls;
}

}  // namespace

mpz_class sphere_size(const Partition& lambda) {
  const int n = lambda.size();
  mpz_class num, z = 1, f;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
  num <<= static_cast<mp_bitcnt_t>(n);
  for (int i = 1; i <= n; ++i) {
    int m = lambda.multiplicity(i);
    if (!m) continue;
    mpz_class ip;
    mpz_ui_pow_ui(ip.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    z *= ip * f;
  }
  z <<= static_cast<mp_bitcnt_t>(lambda.length());
  return num / z;
}

SchemeClass build_class_matrix(int n, const Partition& lambda) {
  if (2 * n > kMaxMatrixOrder) throw CapacityError("class matrices built for 2n <= 12");
  if (lambda.size() != n) throw DomainError("lambda must partition n");
  auto ms = enumerate_matchings(2 * n);
  ExactMatrix a(FieldSpec::rationals(), ms.size(), ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i; j < ms.size(); ++j)
      if (union_cycle_type(ms[i], ms[j]).lambda == lambda) {
        a.set(i, j, 1LL);
        a.set(j, i, 1LL);
      }
  return {lambda, a};
}

AxiomReport verify_scheme_axioms(int n) {
  if (2 * n > 10) throw CapacityError("axiom check limited to 2n <= 10");
  AxiomReport rep;
  std::vector<Partition> classes;
  auto cls = class_index(n, classes);
  const std::size_t N = cls.size(), C = classes.size();
  const int ident = static_cast<int>(C) - 1;  // (1^n) is last in reverse-lex order

  rep.identity = true;
  for (std::size_t i = 0; i < N && rep.identity; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if ((cls[i][j] == ident) != (i == j)) {
        rep.identity = false;
        rep.failure = "A_(1^n) != I at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
  // Every pair lands in exactly one class by construction of cls.
  rep.sums_to_j = true;
  rep.symmetric = true;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (cls[i][j] != cls[j][i]) rep.symmetric = false;

  // (A_a A_b)[x][y] must depend only on the class of (x,y); those values are the
  // structure constants. cnt[a][b][y] accumulates row x of every product at once.
  rep.closed = rep.commutative = true;
  std::vector<long> coeff(C * C * C, -1);
  std::vector<long> cnt(C * C * N);
  for (std::size_t x = 0; x < N; ++x) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (std::size_t z = 0; z < N; ++z) {
      auto a = static_cast<std::size_t>(cls[x][z]);
      for (std::size_t y = 0; y < N; ++y) ++cnt[(a * C + static_cast<std::size_t>(cls[z][y])) * N + y];
    }
    for (std::size_t a = 0; a < C; ++a)
      for (std::size_t b = 0; b < C; ++b)
        for (std::size_t y = 0; y < N; ++y) {
          long ab = cnt[(a * C + b) * N + y];
          if (ab != cnt[(b * C + a) * N + y] && rep.commutative) {
            rep.commutative = false;
            if (rep.failure.empty())
              rep.failure = "A_" + classes[a].to_string() + " and A_" + classes[b].to_string() + " do not commute";
          }
          long& c = coeff[(a * C + b) * C + static_cast<std::size_t>(cls[x][y])];
          if (c < 0) c = ab;
          else if (c != ab && rep.closed) {
            rep.closed = false;
            if (rep.failure.empty())
              rep.failure = "A_" + classes[a].to_string() + " A_" + classes[b].to_string() + " not in the span";
          }
        }
  }
  return rep;
}

mpq_class eigenvalue_eta(int n, const Partition& lambda) {
  if (lambda.size() != n) throw DomainError("lambda must partition n");
  mpz_class eta = 1;
  for (const auto& c : lambda.cells()) {
    if (c.row == 1 && c.col == 1) continue;
    eta *= 2 * (c.col - 1) - (c.row - 1);
  }
  return mpq_class(eta);
}

mpq_class eigenvalue_omega(int n, const Partition& lambda) {
  std::vector<int> full{n};
  return eigenvalue_eta(n, lambda) / mpq_class(sphere_size(Partition(full)));
}

SpectrumCertificate certify_spectrum(int n, FieldSpec field) {
  if (n < 1 || 2 * n > 10) throw CapacityError("spectrum certification covers 2 <= 2n <= 10");
  if (n == 5 && !field.is_prime_field()) throw CapacityError("n = 5 is certified over a prime field");
  SpectrumCertificate cert;
  cert.n = n;
  cert.field = field;
  auto m = build_M(2 * n, field);
  const mpz_class dim = double_factorial(2 * n - 1);
  const mpz_class top = sphere_size(Partition(std::vector<int>{n}));

  // Eigenvalues that coincide in the field share one eigenspace.
  std::map<mpq_class, mpz_class> grouped;
  auto reduce = [&](const mpq_class& v) { return m.canonical(v); };
  for (const auto& l : partitions(n)) {
    SpectralLine line{l, eigenvalue_eta(n, l), f_lambda(l.doubled())};
    grouped[reduce(line.eta)] += line.multiplicity;
    cert.lines.push_back(line);
  }
  std::map<mpq_class, std::size_t> measured;
  mpz_class total = 0;
  mpq_class trace = 0, trace2 = 0;
  cert.pass = true;
  for (auto& line : cert.lines) {
    auto key = reduce(line.eta);
    if (!measured.count(key)) measured[key] = nullity_shift(m, line.eta);
    line.nullity_measured = measured[key];
    line.pass = mpz_class(static_cast<unsigned long>(line.nullity_measured)) == grouped[key];
    if (!line.pass && cert.failure.empty())
      cert.failure = "eigenspace of lambda=" + line.lambda.to_string() + " has nullity " +
                     std::to_string(line.nullity_measured) + ", expected " + grouped[key].get_str();
    cert.pass = cert.pass && line.pass;
    total += line.multiplicity;
    trace += line.eta * line.multiplicity;
    trace2 += line.eta * line.eta * line.multiplicity;
  }
  cert.dimension_ok = total == dim;
  cert.trace_ok = trace == 0;
  cert.trace_square_ok = trace2 == mpq_class(dim * top);
  if (!cert.dimension_ok && cert.failure.empty()) cert.failure = "multiplicities do not sum to (2n-1)!!";
  if (!cert.trace_ok && cert.failure.empty()) cert.failure = "trace identity fails";
  if (!cert.trace_square_ok && cert.failure.empty()) cert.failure = "trace-of-square identity fails";
  cert.pass = cert.pass && cert.dimension_ok && cert.trace_ok && cert.trace_square_ok;
  return cert;
}

std::string spectrum_csv(const SpectrumCertificate& cert) {
  std::ostringstream out;
  out << "lambda,eta,multiplicity,nullity_measured,pass\n";
  for (const auto& l : cert.lines)
    out << l.lambda.to_string() << ',' << l.eta.get_str() << ',' << l.multiplicity << ',' << l.nullity_measured
        << ',' << (l.pass ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace hcrank
