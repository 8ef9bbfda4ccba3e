#include "gramholes/gram.hpp"

#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "gramholes/pairing.hpp"
#include "gramholes/parallel.hpp"

namespace gramholes {

PolyMatrix GramMatrix::to_poly() const { return PolyMatrix::from_monomials(vars, dim(), dim(), entries); }

GramMatrix gram_matrix(int n, int k, std::size_t cap, int jobs) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (k < 0 || k > kMaxHoles) throw std::invalid_argument("k must be in [0, 4]");
  const std::uint64_t dim = diagram_count(n, k);
  if (dim > cap)
    throw ResourceCapError("Gram dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
  GramMatrix g;
  g.n = n;
  g.k = k;
  g.vars = VarSet::for_holes(k);
  g.order = enumerate_diagrams(n, k);
  const std::size_t d = g.order.size();
  g.entries.assign(d * d, Monomial());
  parallel_for(d, jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < d; ++j) g.entries[i * d + j] = pair(g.order[i], g.order[j]);
  });
  return g;
}

std::vector<Monomial> submatrix(const std::vector<Diagram>& a, const std::vector<Diagram>& b) {
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.n() != y.n() || x.k != y.k) throw std::invalid_argument("submatrix needs diagrams of one size");
      out.push_back(pair(x, y));
    }
  return out;
}

PolyMatrix submatrix_poly(const std::vector<Diagram>& a, const std::vector<Diagram>& b) {
  if (a.empty() || b.empty()) return PolyMatrix(a.size(), b.size(), nullptr);
  return PolyMatrix::from_monomials(VarSet::for_holes(a.front().k), a.size(), b.size(), submatrix(a, b));
}

std::vector<CatalanBlock> catalan_blocks(int n, int k) {
  std::vector<CatalanBlock> out;
  std::map<CatalanState, std::vector<Diagram>> groups;
  for (auto& b : enumerate_diagrams(n, k)) groups[b.catalan].push_back(b);
  for (auto& [state, ds] : groups) out.push_back({state, ds, submatrix_poly(ds, ds)});
  return out;
}

nlohmann::json diagram_to_json(const Diagram& b) {
  nlohmann::json holes = nlohmann::json::array();
  for (RegionId r : b.holes) {
    if (r == kOuter)
      holes.push_back("outer");
    else
      holes.push_back(r);
  }
  return {{"n", b.n()}, {"k", b.k}, {"matching", b.catalan.matching}, {"holes", holes}};
}

Diagram diagram_from_json(const nlohmann::json& j) {
  Diagram b;
  b.catalan = CatalanState::from_matching(j.at("matching").get<std::vector<int>>());
  if (j.contains("n") && j.at("n").get<int>() != b.catalan.n) throw std::invalid_argument("diagram n mismatch");
  b.k = j.at("k").get<int>();
  for (const auto& h : j.at("holes")) {
    if (h.is_string()) {
      if (h.get<std::string>() != "outer") throw std::invalid_argument("bad hole region");
      b.holes.push_back(kOuter);
    } else {
      b.holes.push_back(h.get<int>());
    }
  }
  if (!b.valid()) throw std::invalid_argument("invalid diagram");
  return b;
}

nlohmann::json gram_to_json(const GramMatrix& g) {
  nlohmann::json order = nlohmann::json::array();
  for (const auto& b : g.order) order.push_back(diagram_to_json(b));
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < g.dim(); ++j) row.push_back(g.at(i, j).to_string(*g.vars));
    rows.push_back(std::move(row));
  }
  return {{"n", g.n}, {"k", g.k}, {"variables", g.vars->names()}, {"order", order}, {"entries", rows}};
}

GramMatrix gram_from_json(const nlohmann::json& j) {
  GramMatrix g;
  g.n = j.at("n").get<int>();
  g.k = j.at("k").get<int>();
  g.vars = VarSet::for_holes(g.k);
  if (j.contains("variables") && j.at("variables").get<std::vector<std::string>>() != g.vars->names())
    throw std::invalid_argument("variable list does not match k");
  for (const auto& b : j.at("order")) g.order.push_back(diagram_from_json(b));
  const std::size_t d = g.order.size();
  const auto& rows = j.at("entries");
  if (rows.size() != d) throw std::invalid_argument("entry rows do not match order");
  for (const auto& row : rows) {
    if (row.size() != d) throw std::invalid_argument("entry row has wrong length");
    for (const auto& e : row) {
      Polynomial p = Polynomial::parse(g.vars, e.get<std::string>());
      if (p.size() != 1 || !p.leading_coeff().is_one()) throw std::invalid_argument("entry is not a monomial");
      g.entries.push_back(p.monomial_at(0));
    }
  }
  return g;
}

std::string gram_to_csv(const GramMatrix& g) {
  auto field = [](const std::string& s) {
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
  };
  std::ostringstream os;
  os << "# n=" << g.n << " k=" << g.k << "\n# order:";
  for (const auto& b : g.order) os << ' ' << to_string(b) << ';';
  os << '\n';
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (j) os << ',';
      os << field(g.at(i, j).to_string(*g.vars));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace gramholes
