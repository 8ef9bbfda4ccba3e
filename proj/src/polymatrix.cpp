#include "gramholes/polymatrix.hpp"

#include <cstdlib>
#include <stdexcept>

#include "gramholes/parallel.hpp"

namespace gramholes {

int default_jobs() {
  if (const char* s = std::getenv("GRAMHOLES_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

PolyMatrix::PolyMatrix(std::size_t r, std::size_t c, VarSetPtr v)
    : rows(r), cols(c), vars(std::move(v)), data(r * c, Polynomial(vars)) {}

PolyMatrix PolyMatrix::from_monomials(const VarSetPtr& v, std::size_t r, std::size_t c,
                                      const std::vector<Monomial>& entries) {
  if (entries.size() != r * c) throw std::invalid_argument("entry count does not match shape");
  PolyMatrix m(r, c, v);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data[i] = Polynomial::monomial(v, entries[i]);
  return m;
}

bool PolyMatrix::all_monomial() const {
  for (const auto& p : data)
    if (p.size() > 1) return false;
  return true;
}

PolyMatrix PolyMatrix::substitute(const std::map<std::string, Polynomial>& bindings) const {
  PolyMatrix m(rows, cols, vars);
  for (std::size_t i = 0; i < data.size(); ++i) m.data[i] = data[i].substitute(bindings);
  return m;
}

PolyMatrix PolyMatrix::var_map(const SignedPermutation& p) const {
  PolyMatrix m(rows, cols, vars);
  for (std::size_t i = 0; i < data.size(); ++i) m.data[i] = data[i].var_map(p);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix m(cols, rows, vars);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
  return m;
}

PolyMatrix PolyMatrix::select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
  PolyMatrix m(row_idx.size(), col_idx.size(), vars);
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) m.at(i, j) = at(row_idx[i], col_idx[j]);
  return m;
}

std::vector<Int> PolyMatrix::evaluate(std::span<const Int> point) const {
  std::vector<Int> out;
  out.reserve(data.size());
  for (const auto& p : data) out.push_back(p.evaluate(point));
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

}  // namespace gramholes
