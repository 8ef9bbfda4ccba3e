#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "gramholes/diagrams.hpp"
#include "gramholes/varset.hpp"

using namespace gramholes;

namespace {

// all fixed-point-free involutions of 2n points, then the crossing filter
std::set<std::vector<int>> brute_force_catalan(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> m(2 * n, -1);
  std::function<void()> go = [&] {
    auto it = std::find(m.begin(), m.end(), -1);
    if (it == m.end()) {
      bool crossing = false;
      for (int a = 0; a < 2 * n; ++a)
        for (int c = 0; c < 2 * n; ++c) {
          const int b = m[a], d = m[c];
          if (a < c && c < b && b < d) crossing = true;
        }
      if (!crossing) out.insert(m);
      return;
    }
    const int p = static_cast<int>(it - m.begin());
    for (int q = p + 1; q < 2 * n; ++q) {
      if (m[q] != -1) continue;
      m[p] = q;
      m[q] = p;
      go();
      m[p] = m[q] = -1;
    }
  };
  go();
  return out;
}

// chord p (p < m[p]) encloses chord q iff q sits strictly between its ends
ChordMask nesting_oracle(const CatalanState& c, int q) {
  ChordMask out = ChordMask{1} << q;
  for (int p = 0; p < 2 * c.n; ++p)
    if (p < c.matching[p] && p < q && q < c.matching[p]) out |= ChordMask{1} << p;
  return out;
}

Diagram make(std::vector<int> matching, std::vector<RegionId> holes) {
  Diagram b;
  b.catalan = CatalanState::from_matching(std::move(matching));
  b.k = static_cast<int>(holes.size());
  b.holes = std::move(holes);
  return b;
}

}  // namespace

TEST(Counting, DiagramCountsTwoHoles) {
  const std::uint64_t expect[] = {4, 18, 80, 350};
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(diagram_count(n, 2), expect[n - 1]);
    EXPECT_EQ(enumerate_diagrams(n, 2).size(), expect[n - 1]);
  }
  EXPECT_EQ(diagram_count(1, 3), 8u);
  EXPECT_EQ(enumerate_diagrams(1, 3).size(), 8u);
}

TEST(Counting, FormulaAgainstEnumeration) {
  for (int k = 0; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n) {
      std::uint64_t pw = 1;
      for (int i = 1; i < k; ++i) pw *= n + 1;
      const std::uint64_t formula = k == 0 ? catalan_number(n) : pw * binomial(2 * n, n);
      EXPECT_EQ(enumerate_diagrams(n, k).size(), formula) << "n=" << n << " k=" << k;
    }
}

TEST(Catalan, CountsAndBruteForce) {
  const std::uint64_t expect[] = {1, 2, 5, 14, 42};
  for (int n = 1; n <= 5; ++n) {
    const auto states = enumerate_catalan(n);
    EXPECT_EQ(states.size(), expect[n - 1]);
    std::set<std::vector<int>> got;
    for (const auto& s : states) got.insert(s.matching);
    EXPECT_EQ(got, brute_force_catalan(n)) << "n=" << n;
    EXPECT_TRUE(std::is_sorted(states.begin(), states.end()));
  }
}

TEST(Catalan, RejectsBadMatchings) {
  EXPECT_FALSE(is_noncrossing({2, 3, 0, 1}));
  EXPECT_FALSE(is_fixed_point_free_involution({0, 1}));
  EXPECT_FALSE(is_fixed_point_free_involution({1, 2, 0}));
  EXPECT_THROW(CatalanState::from_matching({2, 3, 0, 1}), std::invalid_argument);
}

TEST(Regions, SingleChord) {
  const auto c = CatalanState::from_matching({1, 0});
  const auto r = regions(c);
  EXPECT_EQ(r.ids, (std::vector<RegionId>{kOuter, 0}));
  EXPECT_EQ(ancestry(c, 0), ChordMask{1});
  EXPECT_EQ(ancestry(c, kOuter), ChordMask{0});
}

TEST(Regions, NestedAndSideBySide) {
  const auto nested = CatalanState::from_matching({3, 2, 1, 0});
  EXPECT_EQ(ancestry(nested, 1), ChordMask{0b11});
  const auto side = CatalanState::from_matching({1, 0, 3, 2});
  EXPECT_EQ(ancestry(side, 2), ChordMask{0b100});
}

TEST(Regions, AncestryMatchesNestingOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : enumerate_catalan(n))
      for (int p = 0; p < 2 * n; ++p)
        if (p < c.matching[p]) EXPECT_EQ(ancestry(c, p), nesting_oracle(c, p)) << to_string(c) << " chord " << p;
}

TEST(Regions, ArcsLandInFacesTheyTouch) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : enumerate_catalan(n)) {
      EXPECT_EQ(region_of_arc(c, 2 * n - 1), kOuter);
      const auto arcs = arc_regions(c);
      ASSERT_EQ(arcs.size(), static_cast<std::size_t>(2 * n));
      // every face touches the boundary somewhere
      std::set<RegionId> seen(arcs.begin(), arcs.end());
      EXPECT_EQ(seen.size(), static_cast<std::size_t>(n + 1));
    }
}

TEST(Gamma, ForgetsHoles) {
  for (const auto& b : enumerate_diagrams(2, 2))
    if (std::all_of(b.holes.begin(), b.holes.end(), [](RegionId r) { return r == kOuter; }))
      EXPECT_EQ(gamma(b), b.catalan);
  for (const auto& b : enumerate_diagrams(1, 2)) EXPECT_EQ(gamma(b), enumerate_catalan(1)[0]);
  std::map<CatalanState, int> fibers;
  for (const auto& b : enumerate_diagrams(2, 2)) ++fibers[gamma(b)];
  ASSERT_EQ(fibers.size(), 2u);
  for (const auto& [s, c] : fibers) EXPECT_EQ(c, 9);
}

TEST(Rotate, IdentitiesAndExample) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& b : enumerate_diagrams(n, 2)) {
      EXPECT_EQ(rotate(b, 0), b);
      EXPECT_EQ(rotate(b, 2 * n), b);
      EXPECT_EQ(rotate(rotate(b, 1), 2 * n - 1), b);
      EXPECT_TRUE(rotate(b, 1).valid());
    }
  const Diagram side = make({1, 0, 3, 2}, {kOuter, kOuter});
  const Diagram r = rotate(side, 1);
  EXPECT_EQ(r.catalan.matching, (std::vector<int>{3, 2, 1, 0}));
  EXPECT_TRUE(is_noncrossing(r.catalan.matching));
}

TEST(Rotate, PermutesTheBasis) {
  for (int n = 1; n <= 3; ++n) {
    const auto all = enumerate_diagrams(n, 2);
    std::set<Diagram> img;
    for (const auto& b : all) img.insert(rotate(b, 1));
    EXPECT_EQ(img, std::set<Diagram>(all.begin(), all.end()));
  }
}

TEST(Embed, ImageOfB1InB2) {
  std::set<Diagram> img;
  for (const auto& b : enumerate_diagrams(1, 2)) {
    const Diagram e = embed_i(b, 0);
    EXPECT_TRUE(e.valid());
    EXPECT_EQ(e.n(), 2);
    img.insert(e);
  }
  EXPECT_EQ(img.size(), 4u);
}

TEST(Embed, InjectiveAndNewChordEmpty) {
  for (int m = 1; m <= 3; ++m) {
    const auto small = enumerate_diagrams(m, 2);
    for (int pos = 0; pos < 2 * (m + 1); ++pos) {
      std::set<Diagram> img;
      for (const auto& b : small) {
        const Diagram e = embed_i(b, pos);
        ASSERT_TRUE(e.valid());
        const int n = m + 1;
        const int a = (pos + 2 * n - 1) % (2 * n);
        EXPECT_EQ(e.catalan.matching[pos], a);
        // no hole in the sliver cut off by the new chord
        const RegionId sliver = region_of_arc(e.catalan, a);
        for (RegionId h : e.holes) EXPECT_NE(h, sliver);
        img.insert(e);
      }
      EXPECT_EQ(img.size(), small.size());
    }
  }
}

TEST(Contract, RoundTrips) {
  const VarSetPtr v = VarSet::for_holes(2);
  for (int m = 1; m <= 3; ++m)
    for (const auto& b : enumerate_diagrams(m, 2)) {
      const Contraction c1 = contract_p(embed_i(b, 1), 0);
      EXPECT_EQ(c1.diagram, b);
      EXPECT_FALSE(c1.closed.has_value());
      // the new chord itself closes up with the glued one
      const Contraction c0 = contract_p(embed_i(b, 0), 0);
      EXPECT_EQ(c0.diagram, b);
      ASSERT_TRUE(c0.closed.has_value());
      EXPECT_EQ(v->name(v->index_of_subset(*c0.closed)), "d");
    }
}

TEST(Contract, ClosedCurveClasses) {
  const VarSetPtr v = VarSet::for_holes(2);
  auto name = [&](const Diagram& b) {
    const Contraction c = contract_p(b, 0);
    return c.closed ? v->name(v->index_of_subset(*c.closed)) : std::string("none");
  };
  // chord a_0 - a_3 around the whole n = 2 picture; the loop it closes with
  // the glued chord encloses the reference side
  EXPECT_EQ(name(make({3, 2, 1, 0}, {kOuter, 0})), "x1");
  EXPECT_EQ(name(make({3, 2, 1, 0}, {kOuter, 1})), "x1");
  EXPECT_EQ(name(make({3, 2, 1, 0}, {kOuter, kOuter})), "z2");
  EXPECT_EQ(name(make({3, 2, 1, 0}, {0, 1})), "d");
  EXPECT_EQ(name(make({3, 2, 1, 0}, {1, kOuter})), "y1");
  EXPECT_EQ(name(make({1, 0, 3, 2}, {0, kOuter})), "none");
}
