#include "gramholes/symdet.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <iostream>
#include <numeric>
#include <unordered_map>

#include <map>

#include "gramholes/gram.hpp"
#include "gramholes/pairing.hpp"
#include "gramholes/parallel.hpp"

namespace gramholes {

Polynomial det_bareiss(const PolyMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return Polynomial::constant(m.vars, Int(1));
  std::vector<Polynomial> a = m.data;
  auto at = [&](std::size_t i, std::size_t j) -> Polynomial& { return a[i * n + j]; };
  int sign = 1;
  Polynomial prev = Polynomial::constant(m.vars, Int(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && at(p, k).is_zero()) ++p;
    if (p == n) return Polynomial(m.vars);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(k, j));
      sign = -sign;
    }
    const Polynomial& piv = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Polynomial& lead = at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num;
        if (lead.is_zero() || at(k, j).is_zero()) {
          num = piv * at(i, j);
        } else {
          const Product pr[2] = {{&piv, &at(i, j), false}, {&lead, &at(k, j), true}};
          num = Polynomial::sum_of_products(m.vars, pr);
        }
        if (k == 0) {
          at(i, j) = std::move(num);
        } else {
          auto q = exact_div(num, prev);
          if (!q) throw InternalDivisionError("Bareiss step " + std::to_string(k) + " left a remainder");
          at(i, j) = std::move(*q);
        }
      }
      at(i, k) = Polynomial(m.vars);
    }
    prev = at(k, k);
  }
  Polynomial d = at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

namespace {

using Set = std::uint64_t;
using Level = std::unordered_map<Set, Polynomial>;

std::size_t approx_bytes(const Polynomial& p) {
  const std::size_t nv = p.vars() ? p.vars()->size() : 0;
  return 64 + p.size() * (8 + 8 * ((nv + 4) / 4));
}

Set all_columns(std::size_t n) { return n == 64 ? ~Set{0} : ((Set{1} << n) - 1); }

// Expands the listed rows in order. The result maps each column set S to the
// determinant of the submatrix (listed rows, S) with rows in listed order and
// columns ascending. keep(step, set) may discard sets that cannot matter.
template <class Keep>
Level expand_rows(const PolyMatrix& m, const std::vector<std::size_t>& rows, Keep keep, const MinorsOptions& opt,
                  const char* tag) {
  const std::size_t n = m.cols;
  Level level;
  level.emplace(0, Polynomial::constant(m.vars, Int(1)));
  for (std::size_t step = 0; step < rows.size(); ++step) {
    const std::size_t r = rows[step];
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < n; ++c)
      if (!m.at(r, c).is_zero()) nz.push_back(c);
    std::vector<Set> targets;
    {
      std::unordered_map<Set, char> seen;
      for (const auto& [s, _] : level)
        for (std::size_t c : nz)
          if (!(s >> c & 1U)) {
            const Set t = s | (Set{1} << c);
            if (seen.count(t)) continue;
            seen.emplace(t, 0);
            if (keep(step, t)) targets.push_back(t);
          }
    }
    std::sort(targets.begin(), targets.end());
    std::vector<Polynomial> values(targets.size());
    parallel_for(targets.size(), opt.jobs, [&](std::size_t ti) {
      const Set t = targets[ti];
      std::vector<Product> prods;
      for (std::size_t c : nz) {
        if (!(t >> c & 1U)) continue;
        const Set s = t & ~(Set{1} << c);
        auto it = level.find(s);
        if (it == level.end()) continue;
        // rows already placed in larger columns are inversions
        const bool neg = std::popcount(s >> c) & 1;
        prods.push_back({&m.at(r, c), &it->second, neg});
      }
      values[ti] = Polynomial::sum_of_products(m.vars, prods);
    });
    Level next;
    std::size_t bytes = 0;
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
      if (values[ti].is_zero()) continue;
      bytes += approx_bytes(values[ti]);
      next.emplace(targets[ti], std::move(values[ti]));
    }
    if (bytes > opt.memory_limit_bytes)
      throw MemoryGuardError(std::string("minor expansion (") + tag + ") step " + std::to_string(step + 1) +
                             " needs about " + std::to_string(bytes >> 20) + " MiB");
    if (opt.progress) {
      std::size_t terms = 0, biggest = 0;
      for (const auto& [_, v] : next) {
        terms += v.size();
        biggest = std::max(biggest, v.size());
      }
      std::cerr << "minors " << tag << " step " << step + 1 << ": " << next.size() << " sets, " << terms
                << " terms, max " << biggest << ", ~" << (bytes >> 20) << " MiB\n";
    }
    level = std::move(next);
    if (level.empty()) break;
  }
  return level;
}

// closed[r]: columns with no nonzero entry in rows after r.
std::vector<Set> closed_after(const PolyMatrix& m) {
  const std::size_t n = m.rows;
  std::vector<Set> closed(n);
  Set open = 0;
  for (std::size_t r = n; r-- > 0;) {
    closed[r] = all_columns(m.cols) & ~open;
    for (std::size_t c = 0; c < m.cols; ++c)
      if (!m.at(r, c).is_zero()) open |= Set{1} << c;
  }
  return closed;
}

// Below this size one pass over all rows is cheap enough.
constexpr std::size_t kSplitThreshold = 12;

}  // namespace

Polynomial det_minors(const PolyMatrix& m, const MinorsOptions& opt) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return Polynomial::constant(m.vars, Int(1));
  if (n > 64) throw std::invalid_argument("minor expansion supports at most 64 columns");
  const Set full = all_columns(n);
  const std::vector<Set> closed = closed_after(m);

  if (n < kSplitThreshold) {
    std::vector<std::size_t> rows(n);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    Level level = expand_rows(
        m, rows, [&](std::size_t step, Set t) { return (t & closed[step]) == closed[step]; }, opt, "rows");
    auto it = level.find(full);
    return it == level.end() ? Polynomial(m.vars) : it->second;
  }

  // Generalized Laplace expansion along the top h rows:
  // det = Σ_S (-1)^(h(h-1)/2 + Σ S) det(top, S) det(bottom, S^c).
  const std::size_t h = n / 2;
  std::vector<std::size_t> top_rows(h), bottom_rows(n - h);
  std::iota(top_rows.begin(), top_rows.end(), std::size_t{0});
  // bottom rows are expanded last row first, which reverses their order
  for (std::size_t i = 0; i < n - h; ++i) bottom_rows[i] = n - 1 - i;

  Level top = expand_rows(
      m, top_rows, [&](std::size_t step, Set t) { return (t & closed[step]) == closed[step]; }, opt, "top");
  if (top.empty()) return Polynomial(m.vars);
  std::vector<Set> complements;
  complements.reserve(top.size());
  for (const auto& [s, _] : top) complements.push_back(full & ~s);
  std::sort(complements.begin(), complements.end());

  // a bottom set survives only inside the complement of some top set
  Level bottom = expand_rows(
      m, bottom_rows,
      [&](std::size_t, Set t) {
        for (Set c : complements)
          if ((t & ~c) == 0) return true;
        return false;
      },
      opt, "bottom");

  const std::size_t mrows = n - h;
  const bool bottom_flip = (mrows * (mrows - 1) / 2) % 2 == 1;
  const bool base_flip = (h * (h - 1) / 2) % 2 == 1;
  std::vector<Set> keys;
  for (const auto& [s, _] : top)
    if (bottom.count(full & ~s)) keys.push_back(s);
  std::sort(keys.begin(), keys.end());
  std::vector<Product> prods;
  prods.reserve(keys.size());
  for (Set s : keys) {
    unsigned colsum = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (s >> c & 1U) colsum += static_cast<unsigned>(c);
    const bool neg = base_flip ^ bottom_flip ^ ((colsum & 1U) != 0);
    prods.push_back({&top.at(s), &bottom.at(full & ~s), neg});
  }
  if (opt.progress) std::cerr << "minors combine: " << prods.size() << " products\n";
  return Polynomial::sum_of_products_hashed(m.vars, prods);
}

Int det_integer(std::vector<Int> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("integer matrix has wrong size");
  if (n == 0) return Int(1);
  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p * n + k].is_zero()) ++p;
    if (p == n) return Int(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a[k * n + k] * a[i * n + j];
        v.sub_mul(a[i * n + k], a[k * n + j]);
        a[i * n + j] = v.div_exact(prev);
      }
      a[i * n + k] = Int(0);
    }
    prev = a[k * n + k];
  }
  Int d = a[n * n - 1];
  return sign < 0 ? -d : d;
}

Engine parse_engine(const std::string& s) {
  if (s == "auto") return Engine::kAuto;
  if (s == "bareiss") return Engine::kBareiss;
  if (s == "minors") return Engine::kMinors;
  throw std::invalid_argument("unknown engine " + s);
}

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::kAuto:
      return "auto";
    case Engine::kBareiss:
      return "bareiss";
    case Engine::kMinors:
      return "minors";
  }
  return "?";
}

BlockSplit block_split(const PolyMatrix& m) {
  const std::size_t r = m.rows, c = m.cols;
  std::vector<std::size_t> parent(r + c);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!m.at(i, j).is_zero()) parent[find(i)] = find(r + j);
  std::vector<std::size_t> comp_of(r + c);
  std::vector<std::size_t> roots;
  BlockSplit out;
  // components ordered by their smallest row (then column) index
  for (std::size_t x = 0; x < r + c; ++x) {
    const std::size_t root = find(x);
    auto it = std::find(roots.begin(), roots.end(), root);
    std::size_t id;
    if (it == roots.end()) {
      id = roots.size();
      roots.push_back(root);
      out.rows.emplace_back();
      out.cols.emplace_back();
    } else {
      id = static_cast<std::size_t>(it - roots.begin());
    }
    if (x < r)
      out.rows[id].push_back(x);
    else
      out.cols[id].push_back(x - r);
  }
  return out;
}

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Polynomial run_engine(const PolyMatrix& m, Engine e, int jobs) {
  // minors wins on dense matrices up to ~20; past that only sparse blocks show up and elimination copes
  if (e == Engine::kAuto) e = m.rows <= 20 ? Engine::kMinors : Engine::kBareiss;
  if (e == Engine::kMinors) {
    MinorsOptions opt;
    opt.jobs = jobs;
    return det_minors(m, opt);
  }
  return det_bareiss(m);
}

}  // namespace

DetResult determinant(const PolyMatrix& m, Engine engine, int jobs) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const auto t0 = std::chrono::steady_clock::now();
  DetResult res{Polynomial(m.vars), engine, 0};
  const BlockSplit split = block_split(m);
  bool singular = false;
  std::vector<std::size_t> row_order, col_order;
  for (std::size_t b = 0; b < split.rows.size(); ++b) {
    if (split.rows[b].size() != split.cols[b].size()) singular = true;
    row_order.insert(row_order.end(), split.rows[b].begin(), split.rows[b].end());
    col_order.insert(col_order.end(), split.cols[b].begin(), split.cols[b].end());
  }
  if (!singular) {
    Polynomial acc = Polynomial::constant(m.vars, Int(permutation_sign(row_order) * permutation_sign(col_order)));
    for (std::size_t b = 0; b < split.rows.size() && !acc.is_zero(); ++b)
      acc = acc * run_engine(m.select(split.rows[b], split.cols[b]), engine, jobs);
    res.det = std::move(acc);
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

DividesResult divides_check(const Polynomial& p, const Polynomial& q, unsigned power) {
  if (q.is_zero()) throw std::domain_error("divides_check by zero polynomial");
  DividesResult r;
  Polynomial cur = p;
  for (unsigned e = 1; e <= power; ++e) {
    auto quo = exact_div(cur, q);
    if (!quo) break;
    r.quotients.push_back(*quo);
    r.achieved = e;
    cur = std::move(*quo);
  }
  r.divides = r.achieved == power;
  return r;
}

}  // namespace gramholes

// ---- localization

namespace gramholes {

Polynomial one_minus_d2(const VarSetPtr& vars) {
  Polynomial d = Polynomial::variable(vars, "d");
  return Polynomial::constant(vars, Int(1)) - d * d;
}

LocalizedEntry LocalizedEntry::make(Polynomial num, unsigned power) {
  if (num.is_zero()) return {std::move(num), 0};
  if (power > 0) {
    const Polynomial q = one_minus_d2(num.vars());
    while (power > 0) {
      auto quo = exact_div(num, q);
      if (!quo) break;
      num = std::move(*quo);
      --power;
    }
  }
  return {std::move(num), power};
}

namespace {

Polynomial lift(const LocalizedEntry& e, unsigned to) {
  if (e.numerator.is_zero() || to == e.denom_power) return e.numerator;
  return e.numerator * one_minus_d2(e.numerator.vars()).pow(to - e.denom_power);
}

}  // namespace

LocalizedEntry operator+(const LocalizedEntry& a, const LocalizedEntry& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const unsigned p = std::max(a.denom_power, b.denom_power);
  return LocalizedEntry::make(lift(a, p) + lift(b, p), p);
}

LocalizedEntry operator-(const LocalizedEntry& a, const LocalizedEntry& b) {
  return a + LocalizedEntry{-b.numerator, b.denom_power};
}

LocalizedEntry operator*(const LocalizedEntry& a, const LocalizedEntry& b) {
  return LocalizedEntry::make(a.numerator * b.numerator, a.denom_power + b.denom_power);
}

bool operator==(const LocalizedEntry& a, const LocalizedEntry& b) {
  const unsigned p = std::max(a.denom_power, b.denom_power);
  return lift(a, p) == lift(b, p);
}

// ---- structured reduction

namespace {

Polynomial marker_scalar(const VarSetPtr& vars, const std::optional<LabelMask>& closed, std::string& name) {
  if (!closed) {
    name = "1";
    return Polynomial::constant(vars, Int(1));
  }
  const std::size_t v = vars->index_of_subset(*closed);
  name = vars->name(v);
  return Polynomial::variable(vars, v);
}

}  // namespace

EmbedReduction embed_reduce(int n, int jobs) {
  if (n < 2) throw std::invalid_argument("reduction needs n >= 2");
  const int k = 2;
  EmbedReduction r;
  r.n = n;
  r.k = k;
  const VarSetPtr vars = VarSet::for_holes(k);
  const auto prev = enumerate_diagrams(n - 1, k);
  r.m = prev.size();
  std::map<Diagram, std::size_t> pos;
  auto push = [&](const Diagram& b) {
    if (!pos.emplace(b, r.order.size()).second) throw std::logic_error("embedding images overlap");
    r.order.push_back(b);
  };
  for (const auto& b : prev) push(embed_i(b, 0));
  for (const auto& b : prev) push(embed_i(b, 1));
  for (const auto& b : enumerate_diagrams(n, k))
    if (!pos.count(b)) push(b);
  const std::size_t dim = r.order.size();
  const std::size_t m = r.m;
  if (dim < 2 * m) throw std::logic_error("basis smaller than its embedded parts");

  std::vector<Monomial> entries(dim * dim);
  parallel_for(dim, jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < dim; ++j) entries[i * dim + j] = pair(r.order[i], r.order[j]);
  });
  r.gram = PolyMatrix::from_monomials(vars, dim, dim, entries);

  // rows outside the i1 block lose their i0 columns
  r.g_prime = r.gram;
  std::vector<std::size_t> alpha(dim), alpha1(dim);
  std::vector<Polynomial> c(dim), c1(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (i >= m && i < 2 * m) continue;
    const Contraction ct = contract_p(r.order[i], 0);
    const std::size_t src = pos.at(embed_i(ct.diagram, 1));
    EliminationStep st{i, src, Polynomial(), ""};
    st.scalar = marker_scalar(vars, ct.closed, st.scalar_name);
    for (std::size_t j = 0; j < dim; ++j) r.g_prime.at(i, j) -= st.scalar * r.gram.at(src, j);
    for (std::size_t j = 0; j < m; ++j)
      if (!r.g_prime.at(i, j).is_zero())
        throw std::logic_error("row " + std::to_string(i) + " keeps an i0 column after reduction");
    alpha[i] = src - m;
    c[i] = st.scalar;
    r.steps.push_back(std::move(st));
  }
  for (std::size_t i = 2 * m; i < dim; ++i) {
    const Contraction ct = contract_p(r.order[i], 1);
    std::string unused;
    alpha1[i] = pos.at(embed_i(ct.diagram, 0));
    c1[i] = marker_scalar(vars, ct.closed, unused);
  }

  // i0 rows now carry (1-d^2) G_{n-1} on the i1 columns; clear the rest rows there
  const Polynomial q = one_minus_d2(vars);
  const Polynomial d = Polynomial::variable(vars, "d");
  const std::size_t rest = dim - 2 * m;
  r.g_bar.assign(rest, std::vector<LocalizedEntry>(rest));
  r.row_denominator.assign(rest, 0);
  for (std::size_t i = 2 * m; i < dim; ++i) {
    LocalizedStep st{i, alpha1[i], c1[i], alpha[i], d * c[i]};
    auto reduced = [&](std::size_t j) {
      return LocalizedEntry::make(q * r.g_prime.at(i, j) - st.first_scalar * r.g_prime.at(st.first, j) +
                                      st.second_scalar * r.g_prime.at(st.second, j),
                                  1);
    };
    for (std::size_t j = m; j < 2 * m; ++j)
      if (!reduced(j).is_zero())
        throw std::logic_error("row " + std::to_string(i) + " keeps an i1 column after localized reduction");
    for (std::size_t j = 2 * m; j < dim; ++j) {
      LocalizedEntry e = reduced(j);
      if (e.numerator.is_zero()) e.numerator = Polynomial(vars);
      r.row_denominator[i - 2 * m] = std::max(r.row_denominator[i - 2 * m], e.denom_power);
      r.g_bar[i - 2 * m][j - 2 * m] = std::move(e);
    }
    r.localized_steps.push_back(std::move(st));
  }
  r.sign = (m % 2) ? -1 : 1;
  return r;
}

PolyMatrix cleared_g_bar(const EmbedReduction& r) {
  const std::size_t rest = r.g_bar.size();
  const VarSetPtr vars = VarSet::for_holes(r.k);
  PolyMatrix out(rest, rest, vars);
  const Polynomial q = one_minus_d2(vars);
  for (std::size_t i = 0; i < rest; ++i)
    for (std::size_t j = 0; j < rest; ++j) {
      const auto& e = r.g_bar[i][j];
      out.at(i, j) = e.is_zero() ? Polynomial(vars) : e.numerator * q.pow(r.row_denominator[i] - e.denom_power);
    }
  return out;
}

unsigned cleared_power(const EmbedReduction& r) {
  unsigned s = 0;
  for (unsigned e : r.row_denominator) s += e;
  return s;
}

}  // namespace gramholes
