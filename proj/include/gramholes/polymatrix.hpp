#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gramholes/polynomial.hpp"

namespace gramholes {

// Dense row-major matrix of polynomials over one ring.
struct PolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  VarSetPtr vars;
  std::vector<Polynomial> data;

  PolyMatrix() = default;
  PolyMatrix(std::size_t r, std::size_t c, VarSetPtr v);

  static PolyMatrix from_monomials(const VarSetPtr& v, std::size_t r, std::size_t c,
                                   const std::vector<Monomial>& entries);

  Polynomial& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  bool square() const { return rows == cols; }
  bool all_monomial() const;  // every entry has at most one term

  PolyMatrix substitute(const std::map<std::string, Polynomial>& bindings) const;
  PolyMatrix var_map(const SignedPermutation& m) const;
  PolyMatrix transpose() const;
  PolyMatrix select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;
  // integer matrix at a point, row-major
  std::vector<Int> evaluate(std::span<const Int> point) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
};

}  // namespace gramholes
