#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hcrank/exact_matrix.hpp"
#include "hcrank/partition.hpp"

namespace hcrank {

struct SchemeClass {
  Partition lambda;
  ExactMatrix matrix;
};

struct SpectralLine {
  Partition lambda;
  mpq_class eta;
  mpz_class multiplicity;  // f^{2 lambda}
  std::size_t nullity_measured = 0;
  bool pass = false;
};

struct SpectrumCertificate {
  int n = 0;
  FieldSpec field;
  std::vector<SpectralLine> lines;
  bool dimension_ok = false, trace_ok = false, trace_square_ok = false;
  bool pass = false;
  std::string failure;
};

struct AxiomReport {
  bool identity = false, sums_to_j = false, symmetric = false, closed = false, commutative = false;
  std::string failure;  // first failing axiom and pair
  bool all() const { return identity && sums_to_j && symmetric && closed && commutative; }
};

mpz_class sphere_size(const Partition& lambda);
SchemeClass build_class_matrix(int n, const Partition& lambda);
AxiomReport verify_scheme_axioms(int n);

// eta_lambda = prod over cells other than (1,1) of (2 w(c) - n(c)).
mpq_class eigenvalue_eta(int n, const Partition& lambda);
// omega = eta / |Omega_(n)|
mpq_class eigenvalue_omega(int n, const Partition& lambda);

// Q tier for n <= 4; a prime field is required for n = 5.
SpectrumCertificate certify_spectrum(int n, FieldSpec field = FieldSpec::rationals());
std::string spectrum_csv(const SpectrumCertificate& cert);

}  // namespace hcrank
