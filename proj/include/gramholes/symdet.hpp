#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gramholes/diagrams.hpp"
#include "gramholes/polymatrix.hpp"
#include "gramholes/polynomial.hpp"

namespace gramholes {

// An exact division inside an elimination failed; always a bug.
class InternalDivisionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MemoryGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fraction-free elimination. Pivot = first nonzero entry of the column at or
// below the diagonal; rows are swapped with sign tracking.
Polynomial det_bareiss(const PolyMatrix& m);

struct MinorsOptions {
  std::size_t memory_limit_bytes = std::size_t{3} << 30;
  int jobs = 1;
  bool progress = false;  // per-level sizes on stderr
};

// Laplace expansion row by row; level r keeps one polynomial per column set
// that the first r rows can occupy with a nonzero product.
Polynomial det_minors(const PolyMatrix& m, const MinorsOptions& opt = {});

// Integer determinant by fraction-free elimination (oracle for evaluations).
Int det_integer(std::vector<Int> a, std::size_t n);

enum class Engine { kAuto, kBareiss, kMinors };
Engine parse_engine(const std::string& s);
std::string engine_name(Engine e);

struct DetResult {
  Polynomial det;
  Engine engine;
  double seconds = 0;
};

// Splits into independent diagonal blocks when rows and columns decompose,
// then runs the chosen engine per block.
DetResult determinant(const PolyMatrix& m, Engine engine = Engine::kAuto, int jobs = 1);

// Row/column sets of the connected components of the bipartite graph of
// nonzero entries.
struct BlockSplit {
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::size_t>> cols;
};
BlockSplit block_split(const PolyMatrix& m);

// ---- localization at (1 - d^2)

// numerator / (1 - d^2)^denom_power, kept with numerator coprime to 1 - d^2
// whenever denom_power > 0.
struct LocalizedEntry {
  Polynomial numerator;
  unsigned denom_power = 0;

  static LocalizedEntry make(Polynomial num, unsigned power);
  bool is_zero() const { return numerator.is_zero(); }
  friend LocalizedEntry operator+(const LocalizedEntry& a, const LocalizedEntry& b);
  friend LocalizedEntry operator-(const LocalizedEntry& a, const LocalizedEntry& b);
  friend LocalizedEntry operator*(const LocalizedEntry& a, const LocalizedEntry& b);
  friend bool operator==(const LocalizedEntry& a, const LocalizedEntry& b);
};

// 1 - d^2 in the ring of vars (variable "d")
Polynomial one_minus_d2(const VarSetPtr& vars);

// ---- structured reduction

struct EliminationStep {
  std::size_t row;          // position in the reordered basis
  std::size_t source;       // row subtracted (its position)
  Polynomial scalar;        // row -= scalar * source
  std::string scalar_name;  // "1", "d", "x1", ...
};

// Second pass: row -= (first_scalar * first - second_scalar * second) / (1 - d^2)
struct LocalizedStep {
  std::size_t row;
  std::size_t first;
  Polynomial first_scalar;
  std::size_t second;
  Polynomial second_scalar;
};

struct EmbedReduction {
  int n = 0;
  int k = 0;
  std::vector<Diagram> order;  // i0 images, i1 images, then the rest
  std::size_t m = 0;           // |B_{n-1}|
  PolyMatrix gram;             // reordered Gram matrix
  PolyMatrix g_prime;          // after subtracting i1-image rows
  std::vector<EliminationStep> steps;
  std::vector<LocalizedStep> localized_steps;
  std::vector<std::vector<LocalizedEntry>> g_bar;  // rest x rest
  std::vector<unsigned> row_denominator;           // max power per row of g_bar
  // det G_n = sign * (1-d^2)^m * det(G_{n-1})^2 * det(g_bar)
  int sign = 1;
};

EmbedReduction embed_reduce(int n, int jobs = 1);

// g_bar with row i multiplied by (1-d^2)^row_denominator[i], so
// det(cleared) = (1-d^2)^cleared_power(r) * det(g_bar).
PolyMatrix cleared_g_bar(const EmbedReduction& r);
unsigned cleared_power(const EmbedReduction& r);

struct DividesResult {
  bool divides = false;
  unsigned achieved = 0;  // largest e <= power with q^e | p
  std::vector<Polynomial> quotients;  // p/q, p/q^2, ...
};
DividesResult divides_check(const Polynomial& p, const Polynomial& q, unsigned power);

}  // namespace gramholes
