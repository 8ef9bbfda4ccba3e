#pragma once

#include <string>
#include <vector>

#include "gramholes/polymatrix.hpp"
#include "gramholes/polynomial.hpp"

namespace gramholes {

// Published reference data, transcribed into the polynomial grammar.

struct GoldenFactor {
  std::string text;
  unsigned power;
};

// sign * Π factor^power
struct GoldenProduct {
  int sign;
  std::vector<GoldenFactor> factors;
};

// Matrices as printed (rows of entry strings); k = 2 unless noted.
const std::vector<std::vector<std::string>>& printed_g1();
const std::vector<std::vector<std::string>>& printed_g2();
const std::vector<std::vector<std::string>>& printed_g1_three_holes();  // k = 3

const GoldenProduct& printed_det_g1();
const GoldenProduct& printed_det_g2();
const GoldenProduct& printed_h_det_g2();
const GoldenProduct& printed_h_det_g3();
// x1 = x2 = y1 = y2 = z2 = 0
const GoldenProduct& printed_specialized_det_g3();
// k = 3, n = 1, every one- and two-label variable set to 0
const GoldenProduct& printed_three_holes_specialized_det();

PolyMatrix parse_matrix(const VarSetPtr& vars, const std::vector<std::vector<std::string>>& rows);
std::vector<Polynomial> parse_factors(const VarSetPtr& vars, const GoldenProduct& g);
Polynomial expand(const VarSetPtr& vars, const GoldenProduct& g);

}  // namespace gramholes
