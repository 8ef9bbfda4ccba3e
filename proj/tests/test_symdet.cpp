#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gramholes/goldens.hpp"
#include "gramholes/gram.hpp"
#include "gramholes/symdet.hpp"

using namespace gramholes;

namespace {

VarSetPtr R() { return VarSet::for_holes(2); }
Polynomial P(std::string_view s) { return Polynomial::parse(R(), s); }

// Leibniz sum over all permutations
Int leibniz(const std::vector<Int>& a, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Int total;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    Int t(1);
    for (std::size_t i = 0; i < n; ++i) t *= a[i * n + p[i]];
    total += inv % 2 ? -t : t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double density) {
  PolyMatrix m(n, n, R());
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> c(-3, 3), var(0, 7), e(0, 2);
  for (auto& x : m.data) {
    if (u(rng) > density) continue;
    Monomial mo(8);
    mo[var(rng)] = e(rng);
    mo[var(rng)] += e(rng);
    x = Polynomial::monomial(R(), mo, Int(c(rng))) + Polynomial::monomial(R(), Monomial(8), Int(c(rng)));
  }
  return m;
}

std::vector<Int> random_point(std::mt19937_64& rng, std::size_t nv) {
  std::uniform_int_distribution<int> pt(-5, 5);
  std::vector<Int> x;
  for (std::size_t i = 0; i < nv; ++i) x.emplace_back(pt(rng));
  return x;
}

}  // namespace

TEST(IntegerDet, MatchesLeibniz) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> c(-9, 9);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 10; ++t) {
      std::vector<Int> a(n * n);
      for (auto& x : a) x = Int(rng() % 4 == 0 ? 0 : c(rng));
      EXPECT_EQ(det_integer(a, n), leibniz(a, n));
    }
}

TEST(SymbolicDet, Diagonal) {
  for (std::size_t m = 1; m <= 6; ++m) {
    PolyMatrix a(m, m, R());
    for (std::size_t i = 0; i < m; ++i) a.at(i, i) = P("d");
    for (Engine e : {Engine::kBareiss, Engine::kMinors, Engine::kAuto})
      EXPECT_EQ(determinant(a, e).det, P("d").pow(static_cast<unsigned>(m)));
  }
}

TEST(SymbolicDet, G1MatchesPrintedFactors) {
  const PolyMatrix g = gram_matrix(1, 2).to_poly();
  const Polynomial expect = P("((d+z2)*(z1+z3)-(x1+y1)*(x2+y2))*((d-z2)*(z1-z3)-(x1-y1)*(x2-y2))");
  EXPECT_EQ(det_bareiss(g), expect);
  EXPECT_EQ(det_minors(g), expect);
  EXPECT_EQ(expand(R(), printed_det_g1()), expect);
}

TEST(SymbolicDet, EnginesAgreeWithIntegerOracle) {
  std::mt19937_64 rng(22);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 6; ++t) {
      const PolyMatrix m = random_matrix(rng, n, t % 2 ? 0.5 : 0.9);
      const Polynomial b = det_bareiss(m), mi = det_minors(m);
      EXPECT_EQ(b, mi);
      EXPECT_EQ(determinant(m).det, b);
      for (int k = 0; k < 5; ++k) {
        const auto x = random_point(rng, 8);
        EXPECT_EQ(b.evaluate(x), det_integer(m.evaluate(x), n));
      }
    }
}

TEST(SymbolicDet, SingularAndZeroColumns) {
  PolyMatrix m(3, 3, R());
  m.at(0, 0) = P("d");
  m.at(1, 0) = P("x1");
  m.at(0, 1) = P("d*z1");
  m.at(1, 1) = P("x1*z1");
  m.at(2, 2) = P("1");
  EXPECT_TRUE(det_bareiss(m).is_zero());
  EXPECT_TRUE(det_minors(m).is_zero());
  PolyMatrix z(2, 2, R());
  z.at(0, 0) = P("d");
  EXPECT_TRUE(determinant(z).det.is_zero());
}

TEST(SymbolicDet, ParallelMinorsMatchSerial) {
  std::mt19937_64 rng(23);
  const PolyMatrix m = random_matrix(rng, 7, 0.6);
  MinorsOptions two;
  two.jobs = 2;
  EXPECT_EQ(det_minors(m, two), det_minors(m));
}

TEST(SymbolicDet, MemoryGuard) {
  std::mt19937_64 rng(24);
  const PolyMatrix m = random_matrix(rng, 8, 1.0);
  MinorsOptions tiny;
  tiny.memory_limit_bytes = 1024;
  EXPECT_THROW(det_minors(m, tiny), MemoryGuardError);
}

TEST(BlockSplit, FindsComponents) {
  PolyMatrix m(4, 4, R());
  m.at(0, 2) = P("d");
  m.at(2, 0) = P("x1");
  m.at(1, 1) = P("z1");
  m.at(1, 3) = P("z2");
  m.at(3, 1) = P("z3");
  m.at(3, 3) = P("d");
  const BlockSplit s = block_split(m);
  // {r0, c2}, {r2, c0}, {r1 r3, c1 c3}
  ASSERT_EQ(s.rows.size(), 3u);
  // det = -(d*x1) * (z1*d - z2*z3)
  EXPECT_EQ(determinant(m).det, P("-d*x1*(z1*d - z2*z3)"));
  EXPECT_EQ(determinant(m, Engine::kBareiss).det, det_bareiss(m));
}

TEST(SymbolicDet, CatalanBlocksOfG2) {
  const auto blocks = catalan_blocks(2);
  for (const auto& b : blocks) {
    const Polynomial bar = det_bareiss(b.matrix);
    EXPECT_EQ(det_minors(b.matrix), bar);
    EXPECT_EQ(bar.min_total_degree(), bar.total_degree());
  }
}

TEST(Localized, MakeReducesPowers) {
  const Polynomial q = one_minus_d2(R());
  EXPECT_EQ(q, P("1 - d^2"));
  const LocalizedEntry e = LocalizedEntry::make(q * q * P("x1"), 3);
  EXPECT_EQ(e.denom_power, 1u);
  EXPECT_EQ(e.numerator, P("x1"));
  const LocalizedEntry f = LocalizedEntry::make(q * P("z1"), 1);
  EXPECT_EQ(f.denom_power, 0u);
  const LocalizedEntry a = LocalizedEntry::make(P("1"), 1), b = LocalizedEntry::make(P("-d^2"), 1);
  const LocalizedEntry s = a + b;
  EXPECT_EQ(s.denom_power, 0u);
  EXPECT_EQ(s.numerator, P("1"));
  EXPECT_EQ((a * a).denom_power, 2u);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Reduction, ShapeAndScalars) {
  const EmbedReduction r = embed_reduce(2);
  EXPECT_EQ(r.m, 4u);
  EXPECT_EQ(r.g_bar.size(), 10u);
  for (const auto& row : r.g_bar) EXPECT_EQ(row.size(), 10u);
  const std::set<std::string> allowed = {"1", "d", "x1", "y1", "z2"};
  for (const auto& s : r.steps) EXPECT_TRUE(allowed.count(s.scalar_name)) << s.scalar_name;
  // the first 2m rows are the embedded copies
  for (std::size_t i = 0; i < r.m; ++i) {
    EXPECT_EQ(r.order[i].catalan.matching[0], 3);
    EXPECT_EQ(r.order[r.m + i].catalan.matching[0], 1);
  }
}

TEST(Reduction, IdentityAtRandomPoints) {
  // det G_2 (1-d^2)^c = sign (1-d^2)^m det(G_1)^2 det(cleared g_bar), pointwise
  const EmbedReduction r = embed_reduce(2);
  const PolyMatrix cleared = cleared_g_bar(r);
  const unsigned c = cleared_power(r);
  const PolyMatrix g2 = gram_matrix(2, 2).to_poly(), g1 = gram_matrix(1, 2).to_poly();
  std::mt19937_64 rng(25);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_point(rng, 8);
    const Int q = Int(1) - x[0] * x[0];
    const Int lhs = det_integer(g2.evaluate(x), 18) * q.pow(c);
    const Int d1 = det_integer(g1.evaluate(x), 4);
    const Int rhs = Int(r.sign) * q.pow(static_cast<unsigned>(r.m)) * d1 * d1 * det_integer(cleared.evaluate(x), 10);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Divides, Powers) {
  const Polynomial q = P("d - z1");
  const Polynomial p = q.pow(3) * P("x1 + 2");
  const DividesResult r = divides_check(p, q, 3);
  EXPECT_TRUE(r.divides);
  EXPECT_EQ(r.achieved, 3u);
  EXPECT_EQ(r.quotients.size(), 3u);
  EXPECT_EQ(r.quotients.back(), P("x1 + 2"));
  const DividesResult s = divides_check(p, q, 5);
  EXPECT_FALSE(s.divides);
  EXPECT_EQ(s.achieved, 3u);
}

TEST(Engine, Names) {
  EXPECT_EQ(parse_engine("auto"), Engine::kAuto);
  EXPECT_EQ(parse_engine("bareiss"), Engine::kBareiss);
  EXPECT_EQ(engine_name(parse_engine("minors")), "minors");
  EXPECT_THROW(parse_engine("lu"), std::invalid_argument);
}
