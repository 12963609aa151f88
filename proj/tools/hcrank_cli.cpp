// hcrank: command-line front end. Exit 0 when every requested check passes,
// 1 on a certification failure, 2 on invalid input.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcrank/acceptance.hpp"
#include "hcrank/amplify.hpp"
#include "hcrank/cnf.hpp"
#include "hcrank/errors.hpp"
#include "hcrank/hcount.hpp"
#include "hcrank/linalg.hpp"
#include "hcrank/matchings.hpp"
#include "hcrank/reduction.hpp"
#include "hcrank/scheme.hpp"
#include "hcrank/tableaux.hpp"
#include "hcrank/version.hpp"

using namespace hcrank;
using json = nlohmann::ordered_json;

namespace {

constexpr int kCertificationFailure = 1;
constexpr int kValidationFailure = 2;

struct CertificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

std::string csv_header(const std::string& command, const std::string& params, const FieldSpec& field) {
  return "# hcrank " + std::string(kVersion) + " " + command + " " + params + " field=" + field.to_string() + "\n";
}

// Dense k=12 work needs two 10395x10395 residue copies.
void check_memory_ceiling(std::size_t bytes) {
  const char* env = std::getenv("HCRANK_MAX_MEMORY_MB");
  if (!env) return;
  std::size_t limit = std::strtoull(env, nullptr, 10) << 20;
  if (bytes > limit)
    throw CapacityError("needs about " + std::to_string(bytes >> 20) + " MB, above HCRANK_MAX_MEMORY_MB=" + env);
}

std::size_t matrix_bytes(int k, bool fingerprint) {
  std::size_t n = fingerprint ? fingerprint_count(k) : double_factorial(k - 1).get_ui();
  return 2 * n * n * sizeof(std::uint32_t);
}

ExactMatrix load_matrix(const std::string& in, int k, bool fingerprint, const FieldSpec& field, bool large) {
  if (!in.empty()) {
    auto m = ExactMatrix::parse_text(read_file(in));
    return m.field() == field ? m : m.in_field(field);
  }
  if (k == 12 && !fingerprint && !large) throw CapacityError("k = 12 is the large tier; pass --large");
  check_memory_ceiling(matrix_bytes(k, fingerprint));
  return fingerprint ? build_H(k, field) : build_M(k, field);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank, spectrum and reduction toolkit for matchings connectivity matrices"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  bool large = false;
  app.add_flag("--large", large, "Enable the 10395-dimension tier");

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Build and export M_k (or H_k)");
  int mk = 6;
  bool fingerprint = false;
  std::string field_text = "q", out_path;
  matrix->add_option("--k", mk, "Order k")->required();
  matrix->add_flag("--fingerprint", fingerprint, "Build H_k instead of M_k");
  matrix->add_option("--field", field_text, "q or p:<prime>");
  matrix->add_option("--out", out_path, "Output file (default stdout)");

  // rank
  auto* rankc = app.add_subcommand("rank", "Rank of M_k, H_k or a matrix file");
  std::string in_path;
  rankc->add_option("--k", mk, "Order k");
  rankc->add_option("--in", in_path, "Matrix file instead of --k");
  rankc->add_flag("--fingerprint", fingerprint, "Use H_k");
  rankc->add_option("--field", field_text, "q or p:<prime>");
  std::string expect;
  rankc->add_option("--expect", expect, "Fail with exit 1 unless the rank equals this");

  // det
  auto* detc = app.add_subcommand("det", "Determinant of M_k or a matrix file");
  detc->add_option("--k", mk, "Order k");
  detc->add_option("--in", in_path, "Matrix file instead of --k");
  detc->add_option("--field", field_text, "q or p:<prime>");

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "Certify the eigenvalues of M_2n");
  int sn = 3;
  spec->add_option("n", sn, "Half order n")->required();
  spec->add_option("--field", field_text, "q or p:<prime> (n = 5 needs a prime)");
  spec->add_option("--out", out_path, "CSV file (default stdout)");

  // tableaux
  auto* tab = app.add_subcommand("tableaux", "Rank formula and domino-hook report for 2..n");
  int tn = 8;
  tab->add_option("n", tn, "Largest n")->required();
  tab->add_option("--out", out_path, "CSV file (default stdout)");

  // amplify
  auto* amp = app.add_subcommand("amplify", "Tensor identity on K_B^(t) and rank of the tensor block");
  int ab = 6, at = 2;
  std::uint64_t ap = 5;
  amp->add_option("--B", ab, "Block size")->required();
  amp->add_option("--t", at, "Number of copies")->required();
  amp->add_option("--p", ap, "Prime for the rank")->required();

  // rank-report
  auto* rr = app.add_subcommand("rank-report", "Rank of M_k mod p for k = 4..10 (12 with --large)");
  rr->add_option("--p", ap, "Prime")->required();
  rr->add_option("--out", out_path, "CSV file (default stdout)");

  // basis
  auto* bas = app.add_subcommand("basis", "Select the reduction basis (B_l, B_r, F)");
  int beta = 6, gamma = 1;
  bas->add_option("--beta", beta, "Boundary size");
  bas->add_option("--gamma", gamma, "Variables per block");
  bas->add_option("--p", ap, "Prime")->required();

  // reduce
  auto* red = app.add_subcommand("reduce", "Compile a CNF into a graph whose #HC is #SAT mod p");
  std::string cnf_path;
  bool allow_empty = false;
  red->add_option("--cnf", cnf_path, "DIMACS file")->required();
  red->add_option("--p", ap, "Prime")->required();
  red->add_option("--beta", beta, "Boundary size");
  red->add_option("--gamma", gamma, "Variables per block");
  red->add_option("--out", out_path, "Graph file (sidecar JSON goes to <out>.json)")->required();
  red->add_flag("--allow-empty", allow_empty, "Accept a formula with no clauses");

  // count
  auto* cnt = app.add_subcommand("count", "Count Hamiltonian cycles of a graph file");
  std::string graph_path;
  std::uint64_t mod = 0;
  bool brute = false;
  cnt->add_option("--graph", graph_path, "hcgraph file")->required();
  cnt->add_option("--mod", mod, "Count modulo this prime");
  cnt->add_flag("--brute", brute, "Use the subset DP (at most 20 vertices)");

  // verify
  auto* ver = app.add_subcommand("verify", "Run acceptance suites");
  std::string suite = "all";
  ver->add_option("suite", suite, "all, a number, or a suite name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kValidationFailure;
  }

  try {
    FieldSpec field = FieldSpec::parse(field_text);

    if (*matrix) {
      emit(out_path, load_matrix("", mk, fingerprint, field, large).to_text());
    } else if (*rankc) {
      if (in_path.empty() && !rankc->count("--k")) throw DomainError("rank needs --k or --in");
      std::size_t r = rank(load_matrix(in_path, mk, fingerprint, field, large));
      std::cout << r << "\n";
      if (!expect.empty() && std::to_string(r) != expect)
        throw CertificationFailure("rank " + std::to_string(r) + " differs from expected " + expect);
    } else if (*detc) {
      if (in_path.empty() && !detc->count("--k")) throw DomainError("det needs --k or --in");
      std::cout << scalar_to_string(det(load_matrix(in_path, mk, false, field, large))) << "\n";
    } else if (*spec) {
      auto cert = certify_spectrum(sn, field);
      emit(out_path, csv_header("spectrum", "n=" + std::to_string(sn), field) + spectrum_csv(cert));
      if (!cert.pass) throw CertificationFailure("spectrum certificate for n=" + std::to_string(sn) + ": " + cert.failure);
    } else if (*tab) {
      std::ostringstream s;
      s << csv_header("tableaux", "n=" + std::to_string(tn), FieldSpec::rationals());
      s << "n,rank_formula,double_factorial,catalan_product,lower_bound_ok\n";
      std::vector<DominoHookReport> rows;
      bool ok = true;
      for (int n = 2; n <= tn; ++n) {
        auto r = domino_hook_report(n);
        mpz_class f = rational_rank_formula(n), pw, cube = n * n * n;
        mpz_ui_pow_ui(pw.get_mpz_t(), 4, static_cast<unsigned long>(n));
        bool chain = f >= r.catalan_product && r.catalan_product * cube >= pw;
        ok = ok && chain;
        s << n << ',' << f << ',' << double_factorial(2 * n - 1) << ',' << r.catalan_product << ','
          << (chain ? "true" : "false") << '\n';
        rows.push_back(r);
      }
      s << domino_hook_csv(rows);
      emit(out_path, s.str());
      if (!ok) throw CertificationFailure("Catalan lower-bound chain fails");
    } else if (*amp) {
      auto base = enumerate_matchings(ab);
      bool id = verify_tensor_identity(ab, at, base);
      FieldSpec fp = FieldSpec::prime(ap);
      std::size_t r = rank(tensor_submatrix(base, ab, at, fp));
      std::size_t want = 1, rb = rank(build_M(ab, fp));
      for (int i = 0; i < at; ++i) want *= rb;
      json j;
      j["version"] = kVersion;
      j["B"] = ab;
      j["t"] = at;
      j["field"] = fp.to_string();
      j["tensor_identity"] = id;
      j["rank"] = r;
      j["rank_M_B_power_t"] = want;
      std::cout << j.dump(2) << "\n";
      if (!id || r != want) throw CertificationFailure("tensor identity / rank multiplicativity");
    } else if (*rr) {
      std::vector<int> ks{4, 6, 8, 10};
      if (large) {
        check_memory_ceiling(matrix_bytes(12, false));
        ks.push_back(12);
      }
      auto rows = mod_rank_report(static_cast<std::uint32_t>(ap), ks, large);
      emit(out_path, csv_header("rank-report", "p=" + std::to_string(ap), FieldSpec::prime(ap)) +
                         rank_report_csv(static_cast<std::uint32_t>(ap), rows));
    } else if (*bas) {
      auto prm = select_basis(beta, static_cast<std::uint32_t>(ap), gamma);
      json j;
      j["version"] = kVersion;
      j["beta"] = beta;
      j["gamma"] = gamma;
      j["p"] = ap;
      j["greedy_rank"] = prm.greedy_rank;
      for (const auto& f : prm.B_l) j["B_l"].push_back(f.to_string());
      for (const auto& f : prm.B_r) j["B_r"].push_back(f.to_string());
      j["F"] = prm.F.to_text();
      j["F_inv"] = prm.F_inv.to_text();
      j["eta"] = prm.eta;
      std::cout << j.dump(2) << "\n";
    } else if (*red) {
      Cnf cnf = parse_dimacs(read_file(cnf_path));
      auto prm = select_basis(beta, static_cast<std::uint32_t>(ap), gamma);
      auto out = assemble(cnf, prm, allow_empty);
      write_file(out_path, write_graph_file(out.graph, out.pd));
      write_file(out_path + ".json", sidecar_json(out));
      std::cout << sidecar_json(out);
    } else if (*cnt) {
      Graph g;
      PathDecomposition pd;
      read_graph_file(read_file(graph_path), g, pd);
      auto t0 = std::chrono::steady_clock::now();
      CountResult r;
      if (brute) {
        r = count_hc_bruteforce(g);
        if (mod) r.value %= static_cast<unsigned long>(mod), r.modulus = static_cast<std::uint32_t>(mod);
      } else {
        if (mod) FieldSpec::prime(mod);
        r = count_hc_pathdp(g, pd, mod ? std::optional<std::uint32_t>(static_cast<std::uint32_t>(mod)) : std::nullopt);
      }
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      json j;
      j["version"] = kVersion;
      if (r.modulus) {
        j["residue"] = r.value.get_str();
        j["modulus"] = *r.modulus;
      } else {
        j["count"] = r.value.get_str();
        j["modulus"] = nullptr;
      }
      j["states_peak"] = r.states_peak;
      j["runtime_ms"] = ms;
      std::cout << j.dump(2) << "\n";
    } else if (*ver) {
      AcceptanceOptions opts;
      opts.large = large;
      if (large) check_memory_ceiling(matrix_bytes(12, false));
      int failed = 0;
      for (int id : resolve_suite(suite)) {
        auto r = run_criterion(id, opts);
        std::cout << format_result(r) << std::endl;
        failed += !r.pass;
      }
      if (failed) throw CertificationFailure(std::to_string(failed) + " acceptance criteria failed");
    }
  } catch (const CertificationFailure& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return kCertificationFailure;
  } catch (const SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCertificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
  return 0;
}
