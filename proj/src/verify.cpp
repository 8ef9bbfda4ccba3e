#include "gramholes/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "gramholes/diagrams.hpp"
#include "gramholes/goldens.hpp"
#include "gramholes/pairing.hpp"

namespace gramholes {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped-infeasible";
  }
  return "?";
}

nlohmann::json report_to_json(const VerificationReport& r) {
  return {{"claim", r.claim},         {"statement", r.statement}, {"scope", r.scope},
          {"verdict", verdict_name(r.verdict)}, {"witness", r.witness},     {"seconds", r.seconds}};
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& rs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rs) a.push_back(report_to_json(r));
  return a;
}

std::string summary_table(const std::vector<VerificationReport>& rs) {
  std::size_t w = 5;
  for (const auto& r : rs) w = std::max(w, r.claim.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w)) << "claim" << "  " << std::setw(18) << "verdict"
     << "  seconds  scope\n";
  for (const auto& r : rs) {
    os << std::left << std::setw(static_cast<int>(w)) << r.claim << "  " << std::setw(18) << verdict_name(r.verdict)
       << "  " << std::right << std::setw(7) << std::fixed << std::setprecision(2) << r.seconds << "  "
       << r.scope.dump() << '\n';
  }
  return os.str();
}

// ---- workbench

const Polynomial& Workbench::det_g(int n) {
  std::lock_guard lock(mu_);
  auto it = det_.find(n);
  if (it != det_.end()) return it->second;
  if (n < 1 || n > 2) throw std::invalid_argument("full determinants are computed for n = 1, 2 only");
  return det_[n] = determinant(gram_matrix(n, 2).to_poly(), Engine::kAuto, jobs_).det;
}

const std::vector<Polynomial>& Workbench::block_dets(int n) {
  std::lock_guard lock(mu_);
  auto it = blocks_.find(n);
  if (it != blocks_.end()) return it->second;
  std::vector<Polynomial> out;
  for (const auto& b : catalan_blocks(n, 2)) out.push_back(determinant(b.matrix, Engine::kAuto, jobs_).det);
  return blocks_[n] = std::move(out);
}

const Polynomial& Workbench::h_det(int n) {
  const auto& blocks = block_dets(n);
  std::lock_guard lock(mu_);
  auto it = h_.find(n);
  if (it != h_.end()) return it->second;
  Polynomial acc = Polynomial::constant(VarSet::for_holes(2), Int(1));
  for (const auto& b : blocks) acc *= b;
  return h_[n] = std::move(acc);
}

// ---- helpers

namespace {

using Clock = std::chrono::steady_clock;

// Runs body, fills timing, and turns exceptions into a failing verdict.
template <class F>
VerificationReport timed(std::string claim, std::string statement, nlohmann::json scope, F&& body) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.statement = std::move(statement);
  r.scope = std::move(scope);
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const ResourceCapError& e) {
    r.verdict = Verdict::kSkipped;
    r.witness["error"] = e.what();
  } catch (const std::exception& e) {
    r.verdict = Verdict::kFail;
    r.witness["error"] = e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

void settle(VerificationReport& r, bool ok) { r.verdict = ok ? Verdict::kPass : Verdict::kFail; }

VarSetPtr ring2() { return VarSet::for_holes(2); }

Polynomial one(const VarSetPtr& v) { return Polynomial::constant(v, Int(1)); }

Monomial map_monomial(const Monomial& m, const SignedPermutation& p) {
  Monomial out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[p.target[i]] = m[i];
  return out;
}

std::string poly_id(const Polynomial& p) {
  return std::to_string(p.size()) + " terms, degree " + std::to_string(p.total_degree());
}

}  // namespace

// ---- diagonal

DiagonalExponents delta_diag(int n) {
  const VarSetPtr v = ring2();
  const std::size_t d = *v->index_of("d"), z1 = *v->index_of("z1");
  DiagonalExponents e;
  for (const auto& b : enumerate_diagrams(n, 2)) {
    const Monomial m = pair(b, b);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != d && i != z1 && m[i] != 0) e.pure = false;
    e.alpha += m[d];
    e.beta += m[z1];
  }
  return e;
}

Polynomial chebyshev_T(int i, const VarSetPtr& vars) {
  if (i < 0) throw std::invalid_argument("Chebyshev index must be non-negative");
  const Polynomial d = Polynomial::variable(vars, "d");
  Polynomial prev = Polynomial::constant(vars, Int(2));
  if (i == 0) return prev;
  Polynomial cur = d;
  for (int j = 2; j <= i; ++j) {
    Polynomial next = d * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// ---- involutions

std::vector<std::string> involution_names() {
  return {"h1", "h2", "h3", "ht", "g1", "g2", "g3", "g1g2", "g1g3", "g2g3", "g1g2g3"};
}

SignedPermutation involution(const std::string& name) {
  const VarSetPtr v = ring2();
  auto idx = [&](const char* s) { return *v->index_of(s); };
  auto swaps = [&](std::initializer_list<std::pair<const char*, const char*>> ps) {
    SignedPermutation p = SignedPermutation::identity(v->size());
    for (auto [a, b] : ps) std::swap(p.target[idx(a)], p.target[idx(b)]);
    return p;
  };
  auto negs = [&](std::initializer_list<const char*> ns) {
    SignedPermutation p = SignedPermutation::identity(v->size());
    for (auto s : ns) p.sign[idx(s)] = -1;
    return p;
  };
  if (name == "h1") return swaps({{"x1", "y1"}, {"z1", "z3"}});
  if (name == "h2") return swaps({{"x2", "y2"}, {"z1", "z3"}});
  if (name == "h3") return involution("h1").then(involution("h2"));
  if (name == "ht") return swaps({{"x1", "x2"}, {"y1", "y2"}});
  if (name == "g1") return negs({"x1", "x2", "z2", "z3"});
  if (name == "g2") return negs({"y1", "y2", "z2", "z3"});
  if (name == "g3") return negs({"x1", "y2", "z1", "z2"});
  if (name == "g1g2") return involution("g1").then(involution("g2"));
  if (name == "g1g3") return involution("g1").then(involution("g3"));
  if (name == "g2g3") return involution("g2").then(involution("g3"));
  if (name == "g1g2g3") return involution("g1g2").then(involution("g3"));
  throw std::invalid_argument("unknown involution " + name);
}

// ---- matching and factoring

std::optional<std::vector<std::size_t>> match_simultaneous_permutation(const PolyMatrix& printed,
                                                                       const PolyMatrix& ours) {
  if (!printed.square() || !ours.square() || printed.rows != ours.rows) return std::nullopt;
  const std::size_t n = printed.rows;
  std::vector<std::size_t> p(n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || !(ours.at(c, c) == printed.at(i, i))) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = ours.at(c, p[j]) == printed.at(i, j) && ours.at(p[j], c) == printed.at(j, i);
      if (!ok) continue;
      used[c] = 1;
      p[i] = c;
      if (go(i + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return p;
}

FactorExponents factor_over(const Polynomial& p, const std::vector<Polynomial>& basis) {
  FactorExponents f;
  f.exponents.assign(basis.size(), 0);
  if (p.is_zero()) return f;
  Polynomial rest = p;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_constant()) continue;
    while (true) {
      auto q = exact_div(rest, basis[i]);
      if (!q) break;
      rest = std::move(*q);
      ++f.exponents[i];
    }
  }
  f.complete = rest.is_constant();
  if (f.complete) f.unit = rest.leading_coeff();
  return f;
}

OracleResult evaluation_oracle(const PolyMatrix& m, const Polynomial& det, std::size_t points, std::uint64_t seed) {
  OracleResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  const std::size_t nv = m.vars ? m.vars->size() : 0;
  for (std::size_t t = 0; t < points; ++t) {
    std::vector<Int> pt(nv);
    for (auto& x : pt) x = Int(dist(rng));
    const Int expect = det_integer(m.evaluate(pt), m.rows);
    const Int got = det.is_zero() ? Int(0) : det.evaluate(pt);
    ++r.points;
    if (!(expect == got)) {
      r.ok = false;
      r.failing_point = pt;
      return r;
    }
  }
  return r;
}

// ---- criteria

VerificationReport count_check() {
  return timed("diagram-counts", "|B_{n,2}| = (n+1) C(2n,n); Catalan numbers; |B_{1,3}| = 8", {{"n", "1..5"}},
               [](VerificationReport& r) {
                 const std::uint64_t b2[] = {4, 18, 80, 350};
                 const std::uint64_t cat[] = {1, 2, 5, 14, 42};
                 bool ok = true;
                 nlohmann::json w;
                 for (int n = 1; n <= 4; ++n) {
                   const auto got = enumerate_diagrams(n, 2).size();
                   w["B2"].push_back(got);
                   ok = ok && got == b2[n - 1] && diagram_count(n, 2) == got;
                 }
                 for (int n = 1; n <= 5; ++n) {
                   const auto got = enumerate_catalan(n).size();
                   w["catalan"].push_back(got);
                   ok = ok && got == cat[n - 1] && catalan_number(n) == got;
                 }
                 const auto b13 = enumerate_diagrams(1, 3).size();
                 w["B13"] = b13;
                 ok = ok && b13 == 8;
                 r.witness = w;
                 settle(r, ok);
               });
}

VerificationReport g1_check(Workbench& wb) {
  return timed("g1-display", "G_1 matches the printed 4x4 matrix; det G_1 is the printed product", {{"n", 1}, {"k", 2}},
               [&](VerificationReport& r) {
                 const VarSetPtr v = ring2();
                 const auto p = match_simultaneous_permutation(parse_matrix(v, printed_g1()), gram_matrix(1, 2).to_poly());
                 const Polynomial& det = wb.det_g(1);
                 const bool det_ok = det == expand(v, printed_det_g1());
                 r.witness = {{"permutation", p ? nlohmann::json(*p) : nlohmann::json(nullptr)},
                              {"det", det.to_string()},
                              {"det_matches", det_ok}};
                 settle(r, p.has_value() && det_ok);
               });
}

VerificationReport det_g2_check(Workbench& wb) {
  return timed("det-g2", "det G_2 equals the printed factorization; G_2 matches the printed 18x18 matrix",
               {{"n", 2}, {"k", 2}}, [&](VerificationReport& r) {
                 const VarSetPtr v = ring2();
                 const auto p = match_simultaneous_permutation(parse_matrix(v, printed_g2()), gram_matrix(2, 2).to_poly());
                 const Polynomial& det = wb.det_g(2);
                 const Polynomial printed = expand(v, printed_det_g2());
                 const bool det_ok = det == printed;
                 r.witness = {{"permutation", p ? nlohmann::json(*p) : nlohmann::json(nullptr)},
                              {"det", poly_id(det)},
                              {"det_matches", det_ok}};
                 if (!det_ok) {
                   // tell a sign slip apart from a real mismatch, and say which
                   // side the printed matrix is on
                   r.witness["det_matches_negated"] = det == -printed;
                   r.witness["printed_matrix_det_matches_computed"] =
                       evaluation_oracle(parse_matrix(v, printed_g2()), det, 20, 2).ok;
                 }
                 settle(r, p.has_value() && det_ok);
               });
}

VerificationReport delta_check(int max_table_n, int max_closed_n) {
  return timed("diagonal-product",
               "product of the diagonal is d^alpha z1^beta, beta = 2n 4^(n-1), alpha + beta = n(n+1) C(2n,n)",
               {{"n", "1.." + std::to_string(std::max(max_table_n, max_closed_n))}, {"k", 2}},
               [&](VerificationReport& r) {
                 const std::map<int, std::pair<std::uint64_t, std::uint64_t>> table = {
                     {1, {2, 2}}, {2, {20, 16}}, {3, {144, 96}}, {4, {888, 512}}};
                 bool ok = true;
                 for (int n = 1; n <= std::max(max_table_n, max_closed_n); ++n) {
                   const auto e = delta_diag(n);
                   const std::uint64_t beta = 2ULL * n * (std::uint64_t{1} << (2 * (n - 1)));
                   const std::uint64_t total = static_cast<std::uint64_t>(n) * (n + 1) * binomial(2 * n, n);
                   bool row = e.pure;
                   if (n <= max_closed_n) row = row && e.beta == beta && e.alpha + e.beta == total;
                   if (n <= max_table_n && table.count(n))
                     row = row && e.alpha == table.at(n).first && e.beta == table.at(n).second;
                   r.witness[std::to_string(n)] = {{"alpha", e.alpha}, {"beta", e.beta}, {"pure", e.pure}};
                   ok = ok && row;
                 }
                 settle(r, ok);
               });
}

VerificationReport type_b_check(int n, int jobs) {
  return timed("type-b", "k = 1 determinant equals prod_i (T_i(d)^2 - a^2)^C(2n, n-i)", {{"n", n}, {"k", 1}},
               [&](VerificationReport& r) {
                 if (n < 1 || n > 3) throw std::invalid_argument("type B check covers n = 1..3");
                 const VarSetPtr v = VarSet::for_holes(1);
                 const Polynomial det = determinant(gram_matrix(n, 1).to_poly(), Engine::kAuto, jobs).det;
                 const Polynomial a = Polynomial::variable(v, "a");
                 Polynomial expect = one(v);
                 for (int i = 1; i <= n; ++i) {
                   const Polynomial t = chebyshev_T(i, v);
                   expect *= (t * t - a * a).pow(static_cast<unsigned>(binomial(2 * n, n - i)));
                 }
                 r.witness = {{"det", poly_id(det)}};
                 if (n == 1) r.witness["det_text"] = det.to_string();
                 settle(r, det == expect);
               });
}

VerificationReport involution_suite(int n, Workbench& wb) {
  return timed("involutions", "det under h1 h2 h3 ht and the seven sign maps", {{"n", n}, {"k", 2}},
               [&](VerificationReport& r) {
                 if (n < 1 || n > 2) {
                   r.verdict = Verdict::kSkipped;
                   r.witness["reason"] = "full determinant needed";
                   return;
                 }
                 const Polynomial& det = wb.det_g(n);
                 const GramMatrix g = gram_matrix(n, 2);
                 const PolyMatrix gm = g.to_poly();
                 bool ok = true;
                 for (const auto& name : involution_names()) {
                   const SignedPermutation s = involution(name);
                   const int expect = (n == 1 && (name == "h1" || name == "h2")) ? -1 : 1;
                   const Polynomial mapped = det.var_map(s);
                   bool good = mapped == (expect < 0 ? -det : det);
                   nlohmann::json w = {{"expected_sign", expect}, {"det_relation", good}};
                   if (n == 1) {
                     // the matrix route, independent of the automorphism argument
                     const bool direct = determinant(gm.var_map(s)).det == (expect < 0 ? -det : det);
                     w["direct"] = direct;
                     good = good && direct;
                   }
                   if (name == "h1" || name == "h2") {
                     // h1 permutes rows, h2 permutes columns; the permutation sign is the det sign
                     const PolyMatrix hm = name == "h1" ? gm.var_map(s) : gm.var_map(s).transpose();
                     const PolyMatrix base = name == "h1" ? gm : gm.transpose();
                     std::map<std::vector<std::string>, std::size_t> rows;
                     auto row_key = [](const PolyMatrix& m, std::size_t i) {
                       std::vector<std::string> k;
                       for (std::size_t j = 0; j < m.cols; ++j) k.push_back(m.at(i, j).to_string());
                       return k;
                     };
                     for (std::size_t i = 0; i < base.rows; ++i) rows[row_key(base, i)] = i;
                     std::vector<std::size_t> perm;
                     for (std::size_t i = 0; i < hm.rows; ++i) {
                       auto it = rows.find(row_key(hm, i));
                       if (it == rows.end()) break;
                       perm.push_back(it->second);
                     }
                     int sign = 0;
                     if (perm.size() == hm.rows) {
                       std::vector<char> seen(perm.size(), 0);
                       sign = 1;
                       for (std::size_t i = 0; i < perm.size(); ++i) {
                         if (seen[i]) continue;
                         std::size_t len = 0;
                         for (std::size_t j = i; !seen[j]; j = perm[j], ++len) seen[j] = 1;
                         if (len % 2 == 0) sign = -sign;
                       }
                     }
                     w["permutation_sign"] = sign;
                     good = good && sign == expect;
                   }
                   r.witness[name] = w;
                   ok = ok && good;
                 }
                 settle(r, ok);
               });
}

VerificationReport highest_terms_check(int n, Workbench& wb) {
  return timed(
      "highest-terms", "maximal-degree part of det G_n is the product of the Catalan block determinants",
      {{"n", n}, {"k", 2}}, [&](VerificationReport& r) {
        const VarSetPtr v = ring2();
        if (n == 1) {
          const Polynomial& h = wb.h_det(1);
          settle(r, h == wb.det_g(1) && h.min_total_degree() == 4 && h.total_degree() == 4);
          r.witness["h"] = h.to_string();
          return;
        }
        if (n == 2) {
          const Polynomial& h = wb.h_det(2);
          const auto& blocks = wb.block_dets(2);
          const bool printed = h == expand(v, printed_h_det_g2());
          const bool truncation = h == wb.det_g(2).h_truncate(36);
          const bool equal_blocks = blocks.size() == 2 && blocks[0] == blocks[1];
          r.witness = {{"h", poly_id(h)},
                       {"matches_printed", printed},
                       {"equals_truncation", truncation},
                       {"blocks_equal", equal_blocks}};
          settle(r, printed && truncation && equal_blocks);
          return;
        }
        if (n == 3) {
          // Factor every block over the printed factors; the claimed identities then
          // become exponent arithmetic, with no division by det G_1^9.
          const GoldenProduct& gp = printed_h_det_g3();
          const std::vector<Polynomial> basis = parse_factors(v, gp);
          std::vector<long long> total(basis.size(), 0);
          Int unit(1);
          bool ok = true;
          nlohmann::json per_block = nlohmann::json::array();
          for (const auto& b : wb.block_dets(3)) {
            const FactorExponents f = factor_over(b, basis);
            ok = ok && f.complete && b.total_degree() == 48 && b.min_total_degree() == 48;
            per_block.push_back({{"exponents", f.exponents}, {"complete", f.complete}});
            if (!f.complete) continue;
            unit = unit * f.unit;
            for (std::size_t i = 0; i < basis.size(); ++i) total[i] += f.exponents[i];
          }
          bool display = ok && unit == Int(gp.sign);
          for (std::size_t i = 0; i < basis.size(); ++i) display = display && total[i] == gp.factors[i].power;

          // h(det G_3) det G_1^9 = h(det G_2)^6 d^30 w^3 wbar^3 with w, wbar the two quintic factors
          const FactorExponents g1 = factor_over(wb.det_g(1), basis);
          const FactorExponents h2 = factor_over(wb.h_det(2), basis);
          bool identity = g1.complete && h2.complete && ok;
          if (identity) {
            identity = unit * g1.unit.pow(9) == h2.unit.pow(6);
            for (std::size_t i = 0; i < basis.size(); ++i) {
              long long rhs = 6LL * h2.exponents[i];
              const int deg = basis[i].total_degree();
              if (basis[i] == Polynomial::variable(v, "d")) rhs += 30;
              if (deg == 5) rhs += 3;
              identity = identity && total[i] + 9LL * g1.exponents[i] == rhs;
            }
          }
          r.witness = {{"blocks", per_block}, {"total", total},      {"unit", unit.to_string()},
                       {"matches_printed", display}, {"quotient_identity", identity}};
          settle(r, display && identity);
          return;
        }
        r.verdict = Verdict::kSkipped;
        r.witness["reason"] = "block determinants beyond n = 3 are not attempted";
      });
}

VerificationReport divisibility_check(Workbench& wb) {
  return timed("divisibility", "det G_1 divides det G_2; det G_1^4 | det G_2; det G_1^5 does not",
               {{"n", 2}, {"k", 2}}, [&](VerificationReport& r) {
                 const Polynomial& g1 = wb.det_g(1);
                 const Polynomial& g2 = wb.det_g(2);
                 const bool once = exact_div(g2, g1).has_value();
                 const DividesResult four = divides_check(g2, g1, 4);
                 const DividesResult five = divides_check(g2, g1, 5);
                 r.witness = {{"divides_once", once},
                              {"power4", four.divides},
                              {"power5", five.divides},
                              {"max_power", five.achieved}};
                 settle(r, once && four.divides && !five.divides && five.achieved == 4);
               });
}

VerificationReport reduction_check(Workbench& wb) {
  return timed(
      "reduction", "(1-d^2)^4 det(G_1)^2 det(Gbar_2) = det G_2 with Gbar_2 of size 10", {{"n", 2}, {"k", 2}},
      [&](VerificationReport& r) {
        const VarSetPtr v = ring2();
        const EmbedReduction red = embed_reduce(2, wb.jobs());
        const std::set<std::string> allowed = {"1", "d", "x1", "y1", "z2"};
        std::map<std::string, int> used;
        bool scalars_ok = true;
        for (const auto& s : red.steps) {
          ++used[s.scalar_name];
          scalars_ok = scalars_ok && allowed.count(s.scalar_name);
        }
        const PolyMatrix cleared = cleared_g_bar(red);
        const Polynomial dc = determinant(cleared, Engine::kAuto, wb.jobs()).det;
        const Polynomial& g1 = wb.det_g(1);
        const Polynomial& g2 = wb.det_g(2);
        const Polynomial q = one_minus_d2(v);
        // (1-d^2)^m g1^2 det(cleared) = sign g2 (1-d^2)^cp, cancelled to the smaller power
        const unsigned cp = cleared_power(red);
        const auto m = static_cast<unsigned>(red.m);
        Polynomial lhs = g1 * g1 * dc;
        Polynomial rhs = red.sign < 0 ? -g2 : g2;
        if (cp >= m)
          rhs *= q.pow(cp - m);
        else
          lhs *= q.pow(m - cp);
        const bool identity = lhs == rhs;
        // smallest k with det G_1^2 | det G_2 (1-d^2)^k
        int min_k = -1;
        const Polynomial g1sq = g1 * g1;
        for (unsigned k = 0; k <= m && min_k < 0; ++k)
          if (exact_div(g2 * q.pow(k), g1sq)) min_k = static_cast<int>(k);
        const OracleResult safety = evaluation_oracle(red.g_prime, g2, 20, 0x5eed);
        r.witness = {{"gbar_dim", red.g_bar.size()},
                     {"scalars", used},
                     {"sign", red.sign},
                     {"cleared_power", cp},
                     {"det_cleared", poly_id(dc)},
                     {"identity", identity},
                     {"observed_min_power", min_k},
                     {"g_prime_det_preserved_at_points", safety.ok}};
        settle(r, red.g_bar.size() == 10 && scalars_ok && identity && safety.ok);
      });
}

VerificationReport specialized_g3_check(int jobs) {
  return timed("specialization-g3", "det G_3 at x1=x2=y1=y2=z2=0 equals the printed factorization",
               {{"n", 3}, {"k", 2}, {"substitutions", "x1=0,x2=0,y1=0,y2=0,z2=0"}}, [&](VerificationReport& r) {
                 const VarSetPtr v = ring2();
                 const Polynomial zero(v);
                 const std::map<std::string, Polynomial> b = {
                     {"x1", zero}, {"x2", zero}, {"y1", zero}, {"y2", zero}, {"z2", zero}};
                 const PolyMatrix m = gram_matrix(3, 2).to_poly().substitute(b);
                 const BlockSplit split = block_split(m);
                 std::vector<std::size_t> sizes;
                 for (const auto& rows : split.rows) sizes.push_back(rows.size());
                 const DetResult det = determinant(m, Engine::kAuto, jobs);
                 const Polynomial expect = expand(v, printed_specialized_det_g3());
                 r.witness = {{"blocks", sizes}, {"det", poly_id(det.det)}, {"engine", engine_name(det.engine)}};
                 settle(r, det.det == expect);
               });
}

VerificationReport three_holes_check() {
  return timed("specialization-three-holes",
               "three-hole G_1 with one- and two-label curves set to 0 has the printed determinant",
               {{"n", 1}, {"k", 3}, {"substitutions", "all one- and two-label variables = 0"}},
               [&](VerificationReport& r) {
                 const VarSetPtr v = VarSet::for_holes(3);
                 const PolyMatrix g = gram_matrix(1, 3).to_poly();
                 const auto p = match_simultaneous_permutation(parse_matrix(v, printed_g1_three_holes()), g);
                 std::map<std::string, Polynomial> b;
                 for (std::size_t i = 0; i < v->size(); ++i) {
                   const int labels = std::popcount(v->subset_of(i));
                   if (labels == 1 || labels == 2) b[v->name(i)] = Polynomial(v);
                 }
                 const Polynomial det = determinant(g.substitute(b)).det;
                 const bool det_ok = det == expand(v, printed_three_holes_specialized_det());
                 r.witness = {{"permutation", p ? nlohmann::json(*p) : nlohmann::json(nullptr)},
                              {"det", poly_id(det)},
                              {"det_matches", det_ok}};
                 if (!det_ok) {
                   r.witness["printed_matrix_det_matches_computed"] =
                       determinant(parse_matrix(v, printed_g1_three_holes()).substitute(b)).det == det;
                   // the printed squared factor repeats x{1,-1,-2}; try the other reading
                   GoldenProduct alt = printed_three_holes_specialized_det();
                   const std::string twice = "x{1,-1,-2} x{1,-1,-2}";
                   for (auto& f : alt.factors)
                     if (const auto at = f.text.find(twice); at != std::string::npos)
                       f.text.replace(at, twice.size(), "x{1,-1,2} x{1,-1,-2}");
                   r.witness["det_matches_with_x{1,-1,2}_for_repeated_factor"] = det == expand(v, alt);
                 }
                 if (!p) {
                   // the printed matrix uses our order; list where it differs
                   const PolyMatrix printed = parse_matrix(v, printed_g1_three_holes());
                   nlohmann::json diff = nlohmann::json::array();
                   for (std::size_t i = 0; i < g.rows; ++i)
                     for (std::size_t j = 0; j < g.cols; ++j)
                       if (!(printed.at(i, j) == g.at(i, j)))
                         diff.push_back({{"row", i}, {"col", j}, {"printed", printed.at(i, j).to_string()},
                                         {"computed", g.at(i, j).to_string()}});
                   r.witness["printed_matrix_differences"] = diff;
                 }
                 settle(r, det_ok);
               });
}

// ---- property laws

VerificationReport transpose_law(int n) {
  return timed("transpose-law", "<b_i, b_j> = ht(<b_j, b_i>) for all pairs", {{"n", n}, {"k", 2}},
               [&](VerificationReport& r) {
                 const auto bs = enumerate_diagrams(n, 2);
                 const SignedPermutation ht = involution("ht");
                 std::size_t checked = 0;
                 for (const auto& a : bs)
                   for (const auto& b : bs) {
                     ++checked;
                     if (!(pair(a, b) == map_monomial(pair(b, a), ht))) {
                       r.witness = {{"left", diagram_to_json(a)}, {"right", diagram_to_json(b)}};
                       settle(r, false);
                       return;
                     }
                   }
                 r.witness["pairs"] = checked;
                 settle(r, true);
               });
}

VerificationReport degree_criterion(int n) {
  return timed("degree-criterion", "deg <b_i, b_j> = n exactly when the underlying Catalan states agree",
               {{"n", n}, {"k", 2}}, [&](VerificationReport& r) {
                 const auto bs = enumerate_diagrams(n, 2);
                 std::size_t checked = 0;
                 for (const auto& a : bs)
                   for (const auto& b : bs) {
                     ++checked;
                     const auto deg = pair(a, b).degree();
                     const bool same = a.catalan == b.catalan;
                     if (deg > static_cast<std::uint64_t>(n) || (deg == static_cast<std::uint64_t>(n)) != same) {
                       r.witness = {{"left", diagram_to_json(a)}, {"right", diagram_to_json(b)}, {"degree", deg}};
                       settle(r, false);
                       return;
                     }
                   }
                 r.witness["pairs"] = checked;
                 settle(r, true);
               });
}

VerificationReport embedding_laws(int m) {
  return timed(
      "embedding-laws",
      "<i1 a, i0 b> = <i0 a, i1 b> = <a, b>; <i0 a, i0 b> = <i1 a, i1 b> = d <a, b>; "
      "<c, i0 b> = marker * <p0 c, b>",
      {{"n", m + 1}, {"k", 2}}, [&](VerificationReport& r) {
        const VarSetPtr v = ring2();
        const std::size_t d = *v->index_of("d");
        // at m = 0 both embeddings give the single chord, so start at 1
        if (m < 1) throw std::invalid_argument("embedding laws need n >= 2");
        std::size_t checked = 0;
        for (int mm = 1; mm <= m; ++mm) {
        const auto small = enumerate_diagrams(mm, 2);
        auto fail = [&](const char* law, const Diagram& a, const Diagram& b) {
          r.witness = {{"law", law}, {"left", diagram_to_json(a)}, {"right", diagram_to_json(b)}};
          settle(r, false);
        };
        for (const auto& a : small)
          for (const auto& b : small) {
            const Monomial base = pair(a, b);
            Monomial dbase = base;
            ++dbase[d];
            const Diagram a0 = embed_i(a, 0), a1 = embed_i(a, 1), b0 = embed_i(b, 0), b1 = embed_i(b, 1);
            checked += 4;
            if (!(pair(a1, b0) == base)) return fail("i1-i0", a, b);
            if (!(pair(a0, b1) == base)) return fail("i0-i1", a, b);
            if (!(pair(a0, b0) == dbase)) return fail("i0-i0", a, b);
            if (!(pair(a1, b1) == dbase)) return fail("i1-i1", a, b);
          }
        for (const auto& c : enumerate_diagrams(mm + 1, 2)) {
          const Contraction ct = contract_p(c, 0);
          for (const auto& b : small) {
            Monomial expect = pair(ct.diagram, b);
            if (ct.closed) ++expect[v->index_of_subset(*ct.closed)];
            ++checked;
            if (!(pair(c, embed_i(b, 0)) == expect)) return fail("contraction", c, b);
          }
        }
        }
        r.witness["identities"] = checked;
        settle(r, true);
      });
}

VerificationReport diagonal_purity(int n) {
  return timed("diagonal-purity",
               "diagonal entries lie in d, z1; no other same-state pair gives a d, z1-only monomial",
               {{"n", n}, {"k", 2}}, [&](VerificationReport& r) {
                 const VarSetPtr v = ring2();
                 const std::size_t d = *v->index_of("d"), z1 = *v->index_of("z1");
                 auto pure = [&](const Monomial& mo) {
                   for (std::size_t i = 0; i < mo.size(); ++i)
                     if (i != d && i != z1 && mo[i]) return false;
                   return true;
                 };
                 std::map<CatalanState, std::vector<Diagram>> groups;
                 for (auto& b : enumerate_diagrams(n, 2)) groups[b.catalan].push_back(b);
                 std::size_t checked = 0;
                 for (const auto& [_, g] : groups)
                   for (const auto& a : g)
                     for (const auto& b : g) {
                       ++checked;
                       if (pure(pair(a, b)) != (a == b)) {
                         r.witness = {{"left", diagram_to_json(a)}, {"right", diagram_to_json(b)}};
                         settle(r, false);
                         return;
                       }
                     }
                 r.witness["pairs"] = checked;
                 settle(r, true);
               });
}

VerificationReport engine_agreement(int n, Workbench& wb) {
  return timed(
      "engine-agreement", "elimination and minor expansion agree; symbolic determinants match integer evaluation",
      {{"n", n}, {"k", 2}}, [&](VerificationReport& r) {
        bool ok = true;
        std::uint64_t seed = 1000 + static_cast<std::uint64_t>(n);
        auto check = [&](const std::string& label, const PolyMatrix& m, const Polynomial* known, bool both) {
          const Polynomial det = known ? *known : det_minors(m);
          nlohmann::json w;
          if (both) {
            const bool agree = det_bareiss(m) == det;
            w["engines_agree"] = agree;
            ok = ok && agree;
          }
          const OracleResult o = evaluation_oracle(m, det, 20, seed++);
          w["oracle_points"] = o.points;
          w["oracle_ok"] = o.ok;
          ok = ok && o.ok;
          r.witness[label] = w;
        };
        if (n == 1) {
          check("G1", gram_matrix(1, 2).to_poly(), nullptr, true);
          // random monomial matrices over the k = 2 ring
          const VarSetPtr v = ring2();
          std::mt19937_64 rng(77);
          for (std::size_t size = 1; size <= 8; ++size) {
            PolyMatrix m(size, size, v);
            for (auto& e : m.data) {
              if (rng() % 4 == 0) continue;
              Monomial mo(v->size());
              for (int t = 0; t < 3; ++t) ++mo[rng() % v->size()];
              e = Polynomial::monomial(v, mo, Int(static_cast<long long>(rng() % 7) - 3));
            }
            check("random" + std::to_string(size), m, nullptr, true);
          }
        } else if (n == 2) {
          const auto blocks = catalan_blocks(2, 2);
          for (std::size_t i = 0; i < blocks.size(); ++i)
            check("block" + std::to_string(i), blocks[i].matrix, &wb.block_dets(2)[i], true);
          check("G2", gram_matrix(2, 2).to_poly(), &wb.det_g(2), false);
        } else if (n == 3) {
          const auto blocks = catalan_blocks(3, 2);
          for (std::size_t i = 0; i < blocks.size(); ++i)
            check("block" + std::to_string(i), blocks[i].matrix, &wb.block_dets(3)[i], false);
        } else {
          r.verdict = Verdict::kSkipped;
          return;
        }
        settle(r, ok);
      });
}

// ---- conjectures

ConjectureCandidates det_g1_candidates() {
  const VarSetPtr v = ring2();
  const auto f = parse_factors(v, printed_det_g1());
  const Polynomial two = Polynomial::constant(v, Int(2));
  auto u = exact_div(f[0] + f[1], two);
  auto w = exact_div(f[0] - f[1], two);
  if (!u || !w) throw std::domain_error("(A +- B)/2 is not integral");
  ConjectureCandidates c;
  c.h_factors = f;
  c.u = *u;
  c.v = *w;
  return c;
}

VerificationReport conjecture_harness(Conjecture which, int n, const ConjectureCandidates& c, Workbench& wb) {
  static const char* const ids[] = {"g1-power-divides", "new-factor-powers", "difference-of-squares",
                                    "three-hole-diagonal"};
  const auto w = static_cast<std::size_t>(which);
  if (w >= std::size(ids)) throw std::invalid_argument("unknown conjecture check");
  const bool three = which == Conjecture::kThreeHoleDiagonal;
  return timed(ids[w], "checkable instance of a conjectured property", {{"n", n}, {"k", three ? 3 : 2}},
               [&](VerificationReport& r) {
                 const VarSetPtr v = ring2();
                 switch (which) {
                   case Conjecture::kG1Powers: {
                     r.statement = "det G_1^C(2n, n-1) divides det G_n";
                     if (n < 1 || n > 2) {
                       r.verdict = Verdict::kSkipped;
                       return;
                     }
                     const auto power = static_cast<unsigned>(binomial(2 * n, n - 1));
                     const DividesResult d = divides_check(wb.det_g(n), wb.det_g(1), power);
                     r.witness = {{"power", power}, {"achieved", d.achieved}};
                     settle(r, d.divides);
                     return;
                   }
                   case Conjecture::kNewFactorPowers: {
                     r.statement = "H_{n-1}^(2n) divides det G_n, H_1 given by its factors";
                     if (c.h_factors.empty()) throw std::invalid_argument("the new-factor check needs candidate factors of H");
                     if (n != 2) {
                       r.verdict = Verdict::kSkipped;
                       return;
                     }
                     Polynomial h = one(v);
                     for (const auto& f : c.h_factors) h *= f.rebase(v);
                     const DividesResult d = divides_check(wb.det_g(2), h, 4);
                     r.witness = {{"H", h.to_string()}, {"achieved", d.achieved}};
                     settle(r, d.divides);
                     return;
                   }
                   case Conjecture::kDifferenceOfSquares: {
                     r.statement = "det G_n = u^2 - v^2 with u in R1 and v in R2";
                     if (!c.u || !c.v) throw std::invalid_argument("the difference-of-squares check needs candidates u and v");
                     if (n < 1 || n > 2) {
                       r.verdict = Verdict::kSkipped;
                       return;
                     }
                     const Polynomial u = c.u->rebase(v), w = c.v->rebase(v);
                     const bool product = wb.det_g(n) == u * u - w * w;
                     bool u_in = true, w_in = true;
                     nlohmann::json maps;
                     for (const char* name : {"h1", "h2", "ht", "g1", "g2", "g3"}) {
                       const SignedPermutation s = involution(name);
                       const bool anti = std::string(name) == "h1" || std::string(name) == "h2";
                       const bool ui = u.var_map(s) == u;
                       const bool wi = w.var_map(s) == (anti ? -w : w);
                       maps[name] = {{"u_invariant", ui}, {"v_expected", wi}};
                       u_in = u_in && ui;
                       w_in = w_in && wi;
                     }
                     // u^2 - v^2 is h1-invariant for any such pair, so an
                     // h1-odd determinant rules the shape out entirely
                     const Polynomial& det = wb.det_g(n);
                     r.witness = {{"difference_of_squares", product}, {"u_in_R1", u_in}, {"v_in_R2", w_in},
                                  {"maps", maps}, {"det_h1_odd", det.var_map(involution("h1")) == -det}};
                     settle(r, product && u_in && w_in);
                     return;
                   }
                   case Conjecture::kThreeHoleDiagonal: {
                     r.statement = "three-hole diagonal is d^alpha (x{1,-1} x{2,-2} x{3,-3})^beta, beta = n(n+1)4^(n-1)";
                     if (n < 1 || n > 3) {
                       r.verdict = Verdict::kSkipped;
                       return;
                     }
                     const VarSetPtr v3 = VarSet::for_holes(3);
                     Monomial prod(v3->size());
                     for (const auto& b : enumerate_diagrams(n, 3)) prod *= pair(b, b);
                     const std::uint64_t beta = static_cast<std::uint64_t>(n) * (n + 1) << (2 * (n - 1));
                     const std::uint64_t total =
                         static_cast<std::uint64_t>(n) * (n + 1) * (n + 1) * binomial(2 * n, n);
                     bool ok = true;
                     const std::size_t d = *v3->index_of("d");
                     for (std::size_t i = 0; i < v3->size(); ++i) {
                       const std::string& nm = v3->name(i);
                       const bool pair_var = nm == "x{1,-1}" || nm == "x{2,-2}" || nm == "x{3,-3}";
                       if (pair_var)
                         ok = ok && prod[i] == beta;
                       else if (i != d)
                         ok = ok && prod[i] == 0;
                     }
                     ok = ok && prod[d] + 3 * beta == total;
                     r.witness = {{"diagonal", prod.to_string(*v3)}, {"beta_expected", beta}};
                     settle(r, ok);
                     return;
                   }
                   default:
                     throw std::invalid_argument("unknown conjecture check");
                 }
               });
}

// ---- registry

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> reg = [] {
    std::vector<ClaimInfo> c;
    auto add = [&](std::string id, std::string st, int n, std::function<VerificationReport(int, Workbench&)> f) {
      c.push_back({std::move(id), std::move(st), n, std::move(f)});
    };
    add("diagram-counts", "basis sizes and Catalan numbers", 0, [](int, Workbench&) { return count_check(); });
    add("g1-display", "G_1 and det G_1 as printed", 1, [](int, Workbench& wb) { return g1_check(wb); });
    add("det-g2", "det G_2 and G_2 as printed", 2, [](int, Workbench& wb) { return det_g2_check(wb); });
    add("diagonal-product", "diagonal product exponents", 0, [](int n, Workbench&) {
      return n > 0 ? delta_check(std::min(n, 4), n) : delta_check(4, 8);
    });
    add("highest-terms", "maximal-degree part from Catalan blocks", 2,
        [](int n, Workbench& wb) { return highest_terms_check(n, wb); });
    add("divisibility", "powers of det G_1 in det G_2", 2, [](int, Workbench& wb) { return divisibility_check(wb); });
    add("reduction", "embedding reduction identity", 2, [](int, Workbench& wb) { return reduction_check(wb); });
    add("involutions", "determinant under the involutions", 2,
        [](int n, Workbench& wb) { return involution_suite(n, wb); });
    add("type-b", "annulus determinant as a Chebyshev product", 3,
        [](int n, Workbench& wb) { return type_b_check(n, wb.jobs()); });
    add("specialization-g3", "specialized det G_3", 3, [](int, Workbench& wb) { return specialized_g3_check(wb.jobs()); });
    add("specialization-three-holes", "specialized three-hole det G_1", 1,
        [](int, Workbench&) { return three_holes_check(); });
    add("transpose-law", "transpose equals ht", 3, [](int n, Workbench&) { return transpose_law(n); });
    add("degree-criterion", "maximal degree iff same Catalan state", 3,
        [](int n, Workbench&) { return degree_criterion(n); });
    add("embedding-laws", "pairings of embedded diagrams", 3, [](int n, Workbench&) { return embedding_laws(n - 1); });
    add("diagonal-purity", "diagonal in d, z1 and unique", 5, [](int n, Workbench&) { return diagonal_purity(n); });
    add("engine-agreement", "engines and integer oracle agree", 2,
        [](int n, Workbench& wb) { return engine_agreement(n, wb); });
    add("g1-power-divides", "det G_1^C(2n,n-1) | det G_n", 2,
        [](int n, Workbench& wb) { return conjecture_harness(Conjecture::kG1Powers, n, {}, wb); });
    add("new-factor-powers", "H_1^4 | det G_2 with H_1 the printed factors of det G_1", 2,
        [](int n, Workbench& wb) { return conjecture_harness(Conjecture::kNewFactorPowers, n, det_g1_candidates(), wb); });
    add("difference-of-squares", "det G_n = u^2 - v^2, u in R1, v in R2, from the printed factors of det G_1", 1,
        [](int n, Workbench& wb) {
          return conjecture_harness(Conjecture::kDifferenceOfSquares, n, det_g1_candidates(), wb);
        });
    add("three-hole-diagonal", "three-hole diagonal shape", 2,
        [](int n, Workbench& wb) { return conjecture_harness(Conjecture::kThreeHoleDiagonal, n, {}, wb); });
    std::sort(c.begin(), c.end(), [](const ClaimInfo& a, const ClaimInfo& b) { return a.id < b.id; });
    return c;
  }();
  return reg;
}

const ClaimInfo* find_claim(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace gramholes
