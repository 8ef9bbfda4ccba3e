#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gramholes/integer.hpp"
#include "gramholes/varset.hpp"

namespace gramholes {

// Exponent vector aligned with a VarSet.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint64_t degree() const;
  bool is_one() const;

  // throws std::overflow_error past 32 bits
  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  // e.g. "d^2*z1", "1" for the empty product
  std::string to_string(const VarSet& vars) const;

 private:
  std::vector<std::uint32_t> exps_;
};

// Variable i goes to sign[i] * x_{target[i]}.
struct SignedPermutation {
  std::vector<std::size_t> target;
  std::vector<int> sign;

  static SignedPermutation identity(std::size_t n);
  bool is_involution() const;
  SignedPermutation then(const SignedPermutation& next) const;  // apply *this, then next
};

class Polynomial;

// One summand of Polynomial::sum_of_products: (negate ? -1 : 1) * a * b.
struct Product {
  const Polynomial* a;
  const Polynomial* b;
  bool negate = false;
};

// Sparse polynomial with arbitrary-precision integer coefficients.
//
// Terms are kept sorted in decreasing graded reverse-lexicographic order.
// Each exponent vector is packed into 16-bit lanes (total degree first,
// then the variables from last to first) so that comparison, multiplication
// and divisibility tests are word operations. Exponents and total degree are
// limited to 32767; exceeding that throws std::overflow_error.
class Polynomial {
 public:
  Polynomial() = default;  // zero with no ring attached; combines with anything
  explicit Polynomial(VarSetPtr vars);

  static Polynomial constant(VarSetPtr vars, const Int& c);
  static Polynomial variable(VarSetPtr vars, std::size_t index);
  static Polynomial variable(VarSetPtr vars, std::string_view name);
  static Polynomial monomial(VarSetPtr vars, const Monomial& m, const Int& c = Int(1));
  static Polynomial from_terms(VarSetPtr vars, std::vector<std::pair<Monomial, Int>> terms);

  // Σ ±a_i * b_i in one heap merge.
  static Polynomial sum_of_products(const VarSetPtr& vars, std::span<const Product> products);
  // Same sum through a hash table; better when there are many long products
  // whose terms collide heavily.
  static Polynomial sum_of_products_hashed(const VarSetPtr& vars, std::span<const Product> products);

  const VarSetPtr& vars() const { return vars_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  // -1 for zero
  int total_degree() const;
  int min_total_degree() const;
  Monomial monomial_at(std::size_t i) const;
  const Int& coeff_at(std::size_t i) const { return coeffs_[i]; }
  std::uint32_t exponent_at(std::size_t i, std::size_t var) const;
  std::uint32_t degree_at(std::size_t i) const;
  const Int& leading_coeff() const { return coeffs_.front(); }
  std::vector<std::pair<Monomial, Int>> terms() const;
  // variables that occur with positive exponent
  std::vector<std::size_t> support() const;
  std::size_t max_coeff_bits() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Int& c) const;
  Polynomial times_monomial(const Monomial& m, const Int& c = Int(1)) const;
  Polynomial pow(unsigned e) const;

  // Simultaneous substitution; throws std::invalid_argument on unknown names.
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;
  Polynomial substitute_index(const std::map<std::size_t, Polynomial>& bindings) const;
  // throws std::invalid_argument unless m is an involution of this ring
  Polynomial var_map(const SignedPermutation& m) const;
  // Terms of total degree exactly `degree`.
  Polynomial h_truncate(unsigned degree) const;
  // Same polynomial over a ring whose names are a superset/reordering.
  Polynomial rebase(const VarSetPtr& target) const;

  Int evaluate(std::span<const Int> point) const;
  // point values and result are residues mod p, p < 2^63
  std::uint64_t evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t p) const;

  // Canonical form: every term has an explicit coefficient, e.g.
  // "1*d^2*z1-3*x1+2"; zero is "0".
  std::string to_string() const;
  // Human form without unit coefficients, e.g. "d^2*z1 - 3*x1 + 2".
  std::string to_pretty_string() const;
  // Accepts the canonical form plus parentheses, implicit products, powers of
  // subexpressions, spaces, and x_1 / x_{1,2} spellings.
  static Polynomial parse(const VarSetPtr& vars, std::string_view text);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Exact quotient p / q, or nullopt when q does not divide p.
  // throws std::domain_error when q is zero
  friend std::optional<Polynomial> exact_div(const Polynomial& p, const Polynomial& q);

 private:
  friend class PolyBuilder;
  std::size_t words() const { return words_; }
  const std::uint64_t* key(std::size_t i) const { return keys_.data() + i * words_; }
  void bind(const VarSetPtr& vars);

  VarSetPtr vars_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace gramholes
