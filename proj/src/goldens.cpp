#include "gramholes/goldens.hpp"

namespace gramholes {

const std::vector<std::vector<std::string>>& printed_g1() {
  static const std::vector<std::vector<std::string>> m = {
      {"d", "y2", "x2", "z2"},
      {"y1", "z1", "z3", "x1"},
      {"x1", "z3", "z1", "y1"},
      {"z2", "x2", "y2", "d"},
  };
  return m;
}

const GoldenProduct& printed_det_g1() {
  static const GoldenProduct p{1, {
      {"(d+z2)(z1+z3)-(x1+y1)(x2+y2)", 1},
      {"(d-z2)(z1-z3)-(x1-y1)(x2-y2)", 1},
  }};
  return p;
}

const std::vector<std::vector<std::string>>& printed_g2() {
  static const std::vector<std::vector<std::string>> m = {
      {"d^2", "d y2", "d x2", "d z2", "z2", "x2", "y2", "d", "y2 z2", "x2 z2", "z2^2", "z2", "x2", "y2", "y2^2", "x2^2", "z2", "z2"},
      {"d y1", "d z1", "d z3", "d x1", "x1", "z3", "z1", "y1", "x1 y2", "x1 x2", "x1 z2", "x1", "z3", "z1", "y2 z1", "x2 z3", "x1", "x1"},
      {"d x1", "d z3", "d z1", "d y1", "y1", "z1", "z3", "x1", "y1 y2", "x2 y1", "y1 z2", "y1", "z1", "z3", "y2 z3", "x2 z1", "y1", "y1"},
      {"d z2", "d x2", "d y2", "d^2", "d", "y2", "x2", "z2", "d y2", "d x2", "d z2", "d", "y2", "x2", "x2 y2", "x2 y2", "d", "d"},
      {"z2", "x2", "y2", "d", "d^2", "d y2", "d x2", "d z2", "y2", "x2", "z2", "z2^2", "x2 z2", "y2 z2", "z2", "z2", "x2^2", "y2^2"},
      {"x1", "z3", "z1", "y1", "d y1", "d z1", "d z3", "d x1", "z1", "z3", "x1", "x1 z2", "x1 x2", "x1 y2", "x1", "x1", "x2 z3", "y2 z1"},
      {"y1", "z1", "z3", "x1", "d x1", "d z3", "d z1", "d y1", "z3", "z1", "y1", "y1 z2", "x2 y1", "y1 y2", "y1", "y1", "x2 z1", "y2 z3"},
      {"d", "y2", "x2", "z2", "d z2", "d x2", "d y2", "d^2", "x2", "y2", "d", "d z2", "d x2", "d y2", "d", "d", "x2 y2", "x2 y2"},
      {"y1 z2", "x2 y1", "y1 y2", "d y1", "y1", "z1", "z3", "x1", "d z1", "d z3", "d x1", "y1", "z1", "z3", "x2 z1", "y2 z3", "y1", "y1"},
      {"x1 z2", "x1 x2", "x1 y2", "d x1", "x1", "z3", "z1", "y1", "d z3", "d z1", "d y1", "x1", "z3", "z1", "x2 z3", "y2 z1", "x1", "x1"},
      {"z2^2", "x2 z2", "y2 z2", "d z2", "z2", "x2", "y2", "d", "d x2", "d y2", "d^2", "z2", "x2", "y2", "x2^2", "y2^2", "z2", "z2"},
      {"z2", "x2", "y2", "d", "z2^2", "x2 z2", "y2 z2", "d z2", "y2", "x2", "z2", "d^2", "d y2", "d x2", "z2", "z2", "y2^2", "x2^2"},
      {"x1", "z3", "z1", "y1", "x1 z2", "x1 x2", "x1 y2", "d x1", "z1", "z3", "x1", "d y1", "d z1", "d z3", "x1", "x1", "y2 z1", "x2 z3"},
      {"y1", "z1", "z3", "x1", "y1 z2", "x2 y1", "y1 y2", "d y1", "z3", "z1", "y1", "d x1", "d z3", "d z1", "y1", "y1", "y2 z3", "x2 z1"},
      {"y1^2", "y1 z1", "y1 z3", "x1 y1", "z2", "x2", "y2", "d", "x1 z1", "x1 z3", "x1^2", "z2", "x2", "y2", "z1^2", "z3^2", "z2", "z2"},
      {"x1^2", "x1 z3", "x1 z1", "x1 y1", "z2", "x2", "y2", "d", "y1 z3", "y1 z1", "y1^2", "z2", "x2", "y2", "z3^2", "z1^2", "z2", "z2"},
      {"z2", "x2", "y2", "d", "x1^2", "x1 z3", "x1 z1", "x1 y1", "y2", "x2", "z2", "y1^2", "y1 z1", "y1 z3", "z2", "z2", "z1^2", "z3^2"},
      {"z2", "x2", "y2", "d", "y1^2", "y1 z1", "y1 z3", "x1 y1", "y2", "x2", "z2", "x1^2", "x1 z3", "x1 z1", "z2", "z2", "z3^2", "z1^2"},
  };
  return m;
}

const GoldenProduct& printed_det_g2() {
  static const GoldenProduct p{-1, {
      {"d", 2},
      {"-x1 x2+x2 y1+x1 y2-y1 y2+d z1-z1 z2-d z3+z2 z3", 4},
      {"-x1 x2-x2 y1-x1 y2-y1 y2+d z1+z1 z2+d z3+z2 z3", 4},
      {"-x1 x2 z1-y1 y2 z1+d z1^2+x2 y1 z3+x1 y2 z3-d z3^2", 2},
      {"8 d^2-2 d^4-8 x1^2+2 d^2 x1^2-8 x2^2+2 d^2 x2^2+2 x1^2 x2^2+8 d x1 y1-2 d^3 x1 y1- 2 d x1 x2^2 y1-8 y1^2+2 d^2 y1^2+2 x2^2 y1^2+ 8 d x2 y2-2 d^3 x2 y2-2 d x1^2 x2 y2+2 d^2 x1 x2 y1 y2-2 d x2 y1^2 y2-8 y2^2+2 d^2 y2^2+2 x1^2 y2^2-2 d x1 y1 y2^2+2 y1^2 y2^2+ 2 d x1 x2 z1-d^3 x1 x2 z1-4 x2 y1 z1+2 d^2 x2 y1 z1-4 x1 y2 z1+2 d^2 x1 y2 z1+2 d y1 y2 z1-d^3 y1 y2 z1+8 z1^2-6 d^2 z1^2+d^4 z1^2- 8 d^2 z2+2 d^4 z2+d x1 x2 z1 z2-2 x2 y1 z1 z2-2 x1 y2 z1 z2+d y1 y2 z1 z2+4 z1^2 z2-d^2 z1^2 z2+8 z2^2-2 d^2 z2^2-4 x1 x2 z3+ 2 d^2 x1 x2 z3+2 d x2 y1 z3-d^3 x2 y1 z3+2 d x1 y2 z3-d^3 x1 y2 z3-4 y1 y2 z3+2 d^2 y1 y2 z3-2 x1 x2 z2 z3+d x2 y1 z2 z3+d x1 y2 z2 z3- 2 y1 y2 z2 z3+8 z3^2-6 d^2 z3^2+d^4 z3^2+4 z2 z3^2-d^2 z2 z3^2", 1},
      {"8 d^2-2 d^4-8 x1^2+2 d^2 x1^2-8 x2^2+2 d^2 x2^2+2 x1^2 x2^2-8 d x1 y1+2 d^3 x1 y1+2 d x1 x2^2 y1-8 y1^2+2 d^2 y1^2+2 x2^2 y1^2- 8 d x2 y2+2 d^3 x2 y2+2 d x1^2 x2 y2+2 d^2 x1 x2 y1 y2+2 d x2 y1^2 y2-8 y2^2+2 d^2 y2^2+2 x1^2 y2^2+2 d x1 y1 y2^2+2 y1^2 y2^2+ 2 d x1 x2 z1-d^3 x1 x2 z1+4 x2 y1 z1-2 d^2 x2 y1 z1+4 x1 y2 z1-2 d^2 x1 y2 z1+2 d y1 y2 z1-d^3 y1 y2 z1+8 z1^2-6 d^2 z1^2+d^4 z1^2+ 8 d^2 z2-2 d^4 z2-d x1 x2 z1 z2-2 x2 y1 z1 z2-2 x1 y2 z1 z2-d y1 y2 z1 z2-4 z1^2 z2+d^2 z1^2 z2+8 z2^2-2 d^2 z2^2+4 x1 x2 z3- 2 d^2 x1 x2 z3+2 d x2 y1 z3-d^3 x2 y1 z3+2 d x1 y2 z3-d^3 x1 y2 z3+4 y1 y2 z3-2 d^2 y1 y2 z3-2 x1 x2 z2 z3-d x2 y1 z2 z3-d x1 y2 z2 z3- 2 y1 y2 z2 z3+8 z3^2-6 d^2 z3^2+d^4 z3^2-4 z2 z3^2+d^2 z2 z3^2", 1},
  }};
  return p;
}

const GoldenProduct& printed_h_det_g2() {
  static const GoldenProduct p{1, {
      {"d", 6},
      {"x1 x2+x2 y1+x1 y2+y1 y2-d z1-z1 z2-d z3-z2 z3", 4},
      {"-x1 x2+x2 y1+x1 y2-y1 y2+d z1-z1 z2-d z3+z2 z3", 4},
      {"-x1 x2 z1-y1 y2 z1+d z1^2+x2 y1 z3+x1 y2 z3-d z3^2", 2},
      {"-2 x1 x2 y1 y2+d x1 x2 z1+d y1 y2 z1-d^2 z1^2+d x2 y1 z3+d x1 y2 z3-d^2 z3^2", 2},
  }};
  return p;
}

const GoldenProduct& printed_h_det_g3() {
  static const GoldenProduct p{1, {
      {"d", 66},
      {"-x1 x2+x2 y1+x1 y2-y1 y2+d z1-z1 z2-d z3+z2 z3", 15},
      {"-x1 x2-x2 y1-x1 y2-y1 y2+d z1+z1 z2+d z3+z2 z3", 15},
      {"-x1 x2 z1-y1 y2 z1+d z1^2+x2 y1 z3+x1 y2 z3-d z3^2", 12},
      {"2 x1 x2 y1 y2-d x1 x2 z1-d y1 y2 z1+d^2 z1^2-d x2 y1 z3-d x1 y2 z3+d^2 z3^2", 12},
      {"x1 x2 y1 y2 z1-d x1 x2 z1^2-d y1 y2 z1^2+d^2 z1^3-x1 x2 y1 y2 z3+d x2 y1 z3^2+d x1 y2 z3^2-d^2 z3^3", 3},
      {"x1 x2 y1 y2 z1-d x1 x2 z1^2-d y1 y2 z1^2+d^2 z1^3+x1 x2 y1 y2 z3-d x2 y1 z3^2-d x1 y2 z3^2+d^2 z3^3", 3},
  }};
  return p;
}

const GoldenProduct& printed_specialized_det_g3() {
  static const GoldenProduct p{1, {
      {"-2 + d", 16},
      {"-1 + d", 4},
      {"d", 60},
      {"1 + d", 4},
      {"2 + d", 16},
      {"-3 + d^2", 6},
      {"z1 - z3", 30},
      {"z1 + z3", 30},
      {"z1^2 - z1 z3 + z3^2", 1},
      {"z1^2 + z1 z3 + z3^2", 1},
      {"-2 d^2 - 2 z1^2 + d^2 z1^2 - 2 z3^2 + d^2 z3^2", 12},
      {"-3 d^2 - z1^2 + d^2 z1^2 + z1 z3 - d^2 z1 z3 - z3^2 + d^2 z3^2", 2},
      {"-3 d^2 - z1^2 + d^2 z1^2 - z1 z3 + d^2 z1 z3 - z3^2 + d^2 z3^2", 2},
  }};
  return p;
}

const std::vector<std::vector<std::string>>& printed_g1_three_holes() {
  static const std::vector<std::vector<std::string>> m = {
      {"d", "x{-3}", "x{-2}", "x{-2,-3}", "x{-1}", "x{-1,-3}", "x{-1,-2}", "x{1,2,3}"},
      {"x{3}", "x{3,-3}", "x{-2,3}", "x{1,-1,2}", "x{-1,3}", "x{1,2,-2}", "x{1,2,-3}", "x{1,2}"},
      {"x{2}", "x{2,-3}", "x{2,-2}", "x{1,-1,3}", "x{-1,2}", "x{1,-2,3}", "x{1,3,-3}", "x{1,3}"},
      {"x{2,3}", "x{1,-1,-2}", "x{1,-1,-3}", "x{1,-1}", "x{1,-2,-3}", "x{1,-2}", "x{1,-3}", "x{1}"},
      {"x{1}", "x{1,-3}", "x{1,-2}", "x{1,-2,-3}", "x{1,-1}", "x{1,-1,-3}", "x{1,-1,-2}", "x{2,3}"},
      {"x{1,3}", "x{1,3,-3}", "x{1,-2,3}", "x{-1,2}", "x{1,-1,3}", "x{2,-2}", "x{2,-3}", "x{2}"},
      {"x{1,2}", "x{1,2,-3}", "x{1,2,-2}", "x{1,-3}", "x{1,-1,2}", "x{-2,3}", "x{3,-3}", "x{3}"},
      {"x{1,2,3}", "x{-1,-2}", "x{-1,-3}", "x{-1}", "x{-2,-3}", "x{-2}", "x{-3}", "d"},
  };
  return m;
}

const GoldenProduct& printed_three_holes_specialized_det() {
  static const GoldenProduct p{-1, {
      {"d-x{1,2,3}", 1},
      {"d+x{1,2,3}", 1},
      {"x{1,2,-2} x{1,-1,3} x{1,-1,-2}+x{1,3,-3} x{1,-1,2} x{1,-1,-3}-x{1,2,-3} x{1,-1,3} x{1,-1,-3}- x{1,-1,-2} x{1,-1,-2} x{1,-2,3}-x{1,2,-2} x{1,3,-3} x{1,-2,-3}+x{1,2,-3} x{1,-2,3} x{1,-2,-3}", 2},
  }};
  return p;
}

PolyMatrix parse_matrix(const VarSetPtr& vars, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t r = rows.size(), c = r ? rows.front().size() : 0;
  PolyMatrix m(r, c, vars);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Polynomial::parse(vars, rows[i][j]);
  }
  return m;
}

std::vector<Polynomial> parse_factors(const VarSetPtr& vars, const GoldenProduct& g) {
  std::vector<Polynomial> out;
  for (const auto& f : g.factors) out.push_back(Polynomial::parse(vars, f.text));
  return out;
}

Polynomial expand(const VarSetPtr& vars, const GoldenProduct& g) {
  Polynomial acc = Polynomial::constant(vars, Int(g.sign));
  for (const auto& f : g.factors) acc *= Polynomial::parse(vars, f.text).pow(f.power);
  return acc;
}

}  // namespace gramholes
