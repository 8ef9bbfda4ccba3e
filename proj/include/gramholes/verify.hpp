#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gramholes/gram.hpp"
#include "gramholes/polynomial.hpp"
#include "gramholes/symdet.hpp"

namespace gramholes {

enum class Verdict { kPass, kFail, kSkipped };
std::string verdict_name(Verdict v);

struct VerificationReport {
  std::string claim;
  std::string statement;
  nlohmann::json scope = nlohmann::json::object();  // n, k, substitutions
  Verdict verdict = Verdict::kSkipped;
  nlohmann::json witness = nlohmann::json::object();
  double seconds = 0;

  bool passed() const { return verdict == Verdict::kPass; }
};

nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& rs);
std::string summary_table(const std::vector<VerificationReport>& rs);

// Memoized expensive objects (full determinants, block determinants) shared
// by several claims. Safe to use from several threads.
class Workbench {
 public:
  explicit Workbench(int jobs = 1) : jobs_(jobs) {}
  int jobs() const { return jobs_; }

  // full det G_n for k = 2; n <= 2
  const Polynomial& det_g(int n);
  // determinants of the Catalan blocks of G_n, in catalan_blocks order
  const std::vector<Polynomial>& block_dets(int n);
  // product of the block determinants
  const Polynomial& h_det(int n);

 private:
  int jobs_;
  std::mutex mu_;
  std::map<int, Polynomial> det_;
  std::map<int, std::vector<Polynomial>> blocks_;
  std::map<int, Polynomial> h_;
};

// ---- individual checks

struct DiagonalExponents {
  std::uint64_t alpha = 0;  // exponent of d
  std::uint64_t beta = 0;   // exponent of z1
  bool pure = true;         // every diagonal entry lies in d, z1 only
};
DiagonalExponents delta_diag(int n);

// T_0 = 2, T_1 = d, T_i = d T_{i-1} - T_{i-2}
Polynomial chebyshev_T(int i, const VarSetPtr& vars);

// Named involutions of the k = 2 ring: h1 h2 h3 ht g1 g2 g3 g1g2 g1g3 g2g3 g1g2g3.
SignedPermutation involution(const std::string& name);
std::vector<std::string> involution_names();

// Simultaneous permutation p with ours(p[i], p[j]) == printed(i, j), if any.
std::optional<std::vector<std::size_t>> match_simultaneous_permutation(const PolyMatrix& printed,
                                                                       const PolyMatrix& ours);

// p = unit * Π basis[i]^exponents[i] when complete.
struct FactorExponents {
  bool complete = false;
  Int unit;
  std::vector<unsigned> exponents;
};
FactorExponents factor_over(const Polynomial& p, const std::vector<Polynomial>& basis);

// Symbolic determinant vs integer elimination at random points in [-5, 5].
struct OracleResult {
  bool ok = true;
  std::size_t points = 0;
  std::vector<Int> failing_point;
};
OracleResult evaluation_oracle(const PolyMatrix& m, const Polynomial& det, std::size_t points, std::uint64_t seed);

VerificationReport count_check();
VerificationReport g1_check(Workbench& wb);
VerificationReport det_g2_check(Workbench& wb);
VerificationReport delta_check(int max_table_n = 4, int max_closed_n = 8);
VerificationReport type_b_check(int n, int jobs = 1);
VerificationReport involution_suite(int n, Workbench& wb);
VerificationReport highest_terms_check(int n, Workbench& wb);
VerificationReport divisibility_check(Workbench& wb);
VerificationReport reduction_check(Workbench& wb);
VerificationReport specialized_g3_check(int jobs = 1);
VerificationReport three_holes_check();

// property laws, exhaustive at the given size
VerificationReport transpose_law(int n);
VerificationReport degree_criterion(int n);
VerificationReport embedding_laws(int n_minus_1);
VerificationReport diagonal_purity(int n);
VerificationReport engine_agreement(int n, Workbench& wb);

struct ConjectureCandidates {
  std::vector<Polynomial> h_factors;  // for kNewFactorPowers
  std::optional<Polynomial> u, v;     // for kDifferenceOfSquares
};

enum class Conjecture {
  kG1Powers,             // det G_1^C(2n, n-1) | det G_n
  kNewFactorPowers,      // H_1^4 | det G_2
  kDifferenceOfSquares,  // det G_n = u^2 - v^2, u in R1, v in R2
  kThreeHoleDiagonal,    // k = 3 diagonal is d^a (x{1,-1} x{2,-2} x{3,-3})^b
};
VerificationReport conjecture_harness(Conjecture which, int n, const ConjectureCandidates& c, Workbench& wb);

// The two printed factors A, B of det G_1 give u = (A+B)/2, v = (A-B)/2.
ConjectureCandidates det_g1_candidates();

// ---- registry

struct ClaimInfo {
  std::string id;
  std::string statement;
  int default_n;
  std::function<VerificationReport(int n, Workbench&)> run;
};
const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo* find_claim(const std::string& id);

}  // namespace gramholes
