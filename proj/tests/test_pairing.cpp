#include <gtest/gtest.h>

#include <set>

#include "gramholes/diagrams.hpp"
#include "gramholes/pairing.hpp"
#include "gramholes/varset.hpp"

using namespace gramholes;

namespace {

// cycles of the point permutation cj o ci; each loop of the glued picture
// gives two of them (one per orientation)
std::size_t loops_oracle(const CatalanState& ci, const CatalanState& cj) {
  const int n2 = 2 * ci.n;
  std::vector<char> seen(n2, 0);
  std::size_t cycles = 0;
  for (int s = 0; s < n2; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int p = s; !seen[p]; p = cj.matching[ci.matching[p]]) seen[p] = 1;
  }
  return cycles / 2;
}

Diagram make(std::vector<int> matching, std::vector<RegionId> holes) {
  Diagram b;
  b.catalan = CatalanState::from_matching(std::move(matching));
  b.k = static_cast<int>(holes.size());
  b.holes = std::move(holes);
  return b;
}

std::string text(const Diagram& a, const Diagram& b) { return pair_poly(a, b).to_string(); }

// label +h <-> -h
LabelMask flip(LabelMask m) { return ((m & 0x55555555u) << 1) | ((m >> 1) & 0x55555555u); }

}  // namespace

TEST(Cycles, HandTraced) {
  const auto side = CatalanState::from_matching({1, 0, 3, 2});
  const auto nested = CatalanState::from_matching({3, 2, 1, 0});
  const auto c = union_cycles(side, nested);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].points.size(), 4u);
  EXPECT_EQ(c[0].points[0], 0);
  EXPECT_EQ(union_cycles(side, side).size(), 2u);
}

TEST(Cycles, MatchPermutationOracle) {
  for (int n = 1; n <= 4; ++n) {
    const auto states = enumerate_catalan(n);
    for (const auto& a : states)
      for (const auto& b : states) {
        const auto cycles = union_cycles(a, b);
        EXPECT_EQ(cycles.size(), loops_oracle(a, b));
        // every point once, alternating chords
        std::vector<int> hits(2 * n, 0);
        for (const auto& cy : cycles) {
          EXPECT_EQ(cy.points.size() % 2, 0u);
          for (std::size_t i = 0; i < cy.points.size(); ++i) {
            ++hits[cy.points[i]];
            const int next = cy.points[(i + 1) % cy.points.size()];
            EXPECT_EQ(next, (i % 2 == 0 ? a : b).matching[cy.points[i]]);
          }
        }
        for (int h : hits) EXPECT_EQ(h, 1);
      }
  }
}

TEST(Pair, G1Entries) {
  const Diagram both_out = make({1, 0}, {kOuter, kOuter});
  EXPECT_EQ(text(both_out, both_out), "1*d");
  const Diagram x_in = make({1, 0}, {0, kOuter});
  EXPECT_EQ(text(x_in, x_in), "1*z1");
  std::set<std::string> seen;
  for (const auto& a : enumerate_diagrams(1, 2))
    for (const auto& b : enumerate_diagrams(1, 2)) seen.insert(text(a, b));
  EXPECT_EQ(seen, (std::set<std::string>{"1*d", "1*x1", "1*x2", "1*y1", "1*y2", "1*z1", "1*z2", "1*z3"}));
}

TEST(Pair, DegreeIsLoopCount) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : enumerate_diagrams(n, 2))
      for (const auto& b : enumerate_diagrams(n, 2))
        EXPECT_EQ(pair(a, b).degree(), loops_oracle(a.catalan, b.catalan));
}

TEST(Pair, LoopsWithoutHolesAreD) {
  const VarSetPtr v = VarSet::for_holes(0);
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : enumerate_diagrams(n, 0))
      for (const auto& b : enumerate_diagrams(n, 0)) {
        const Monomial m = pair(a, b);
        EXPECT_EQ(m[*v->index_of("d")], loops_oracle(a.catalan, b.catalan));
      }
}

TEST(Pair, TransposeSwapsSigns) {
  // pair(b, a) relabels every curve type by +h <-> -h
  for (int k = 1; k <= 3; ++k) {
    const VarSetPtr v = VarSet::for_holes(k);
    for (int n = 1; n <= (k == 3 ? 2 : 3); ++n) {
      const auto all = enumerate_diagrams(n, k);
      for (const auto& a : all)
        for (const auto& b : all) {
          const Monomial ab = pair(a, b), ba = pair(b, a);
          Monomial mapped(v->size());
          for (std::size_t i = 0; i < v->size(); ++i)
            if (ab[i]) mapped[v->index_of_subset(canonical_subset(flip(v->subset_of(i)), k))] += ab[i];
          EXPECT_EQ(mapped, ba);
        }
    }
  }
}

TEST(Pair, CurveBitsAreSeparationSets) {
  // a curve around nothing contributes d; a single hole on its far side gives
  // that hole's one-label class
  const Diagram a = make({1, 0}, {0, kOuter});
  const Diagram b = make({1, 0}, {kOuter, kOuter});
  const auto cycles = union_cycles(a.catalan, b.catalan);
  ASSERT_EQ(cycles.size(), 1u);
  const LabelMask bits = curve_bits(cycles[0], a, b);
  EXPECT_EQ(classify_curve(bits, 2), label_bit(1));
  EXPECT_EQ(text(a, b), "1*x1");
}

TEST(Pair, ThreeHoleDiagonal) {
  const VarSetPtr v = VarSet::for_holes(3);
  Monomial prod(v->size());
  for (const auto& b : enumerate_diagrams(1, 3)) prod *= pair(b, b);
  EXPECT_EQ(prod.to_string(*v), "d^2*x{1,-1}^2*x{2,-2}^2*x{3,-3}^2");
}
