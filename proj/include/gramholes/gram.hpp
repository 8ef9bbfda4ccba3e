#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gramholes/diagrams.hpp"
#include "gramholes/polymatrix.hpp"
#include "gramholes/polynomial.hpp"

namespace gramholes {

// Thrown when a requested object exceeds a configured size limit.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultBuildCap = 400;

struct GramMatrix {
  int n = 0;
  int k = 0;
  VarSetPtr vars;
  std::vector<Diagram> order;
  std::vector<Monomial> entries;  // row-major

  std::size_t dim() const { return order.size(); }
  const Monomial& at(std::size_t i, std::size_t j) const { return entries[i * order.size() + j]; }
  PolyMatrix to_poly() const;
};

GramMatrix gram_matrix(int n, int k, std::size_t cap = kDefaultBuildCap, int jobs = 1);

// entries pair(A[i], B[j]), row-major
std::vector<Monomial> submatrix(const std::vector<Diagram>& a, const std::vector<Diagram>& b);
PolyMatrix submatrix_poly(const std::vector<Diagram>& a, const std::vector<Diagram>& b);

struct CatalanBlock {
  CatalanState state;
  std::vector<Diagram> diagrams;
  PolyMatrix matrix;
};

// Diagonal blocks of the Gram matrix, grouped by underlying Catalan state.
std::vector<CatalanBlock> catalan_blocks(int n, int k = 2);

nlohmann::json gram_to_json(const GramMatrix& g);
GramMatrix gram_from_json(const nlohmann::json& j);
std::string gram_to_csv(const GramMatrix& g);

nlohmann::json diagram_to_json(const Diagram& b);
Diagram diagram_from_json(const nlohmann::json& j);

}  // namespace gramholes
