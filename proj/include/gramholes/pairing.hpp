#pragma once

#include <vector>

#include "gramholes/diagrams.hpp"
#include "gramholes/polynomial.hpp"
#include "gramholes/varset.hpp"

namespace gramholes {

// Boundary points visited by one closed curve of b_i ∘ b_j*, alternating a
// chord of b_i and a chord of b_j.
struct Cycle {
  std::vector<int> points;
  ChordMask chords_i = 0;  // smaller endpoints of b_i chords on the curve
  ChordMask chords_j = 0;
};

// Starts each curve at its smallest unvisited point, first step along ci.
std::vector<Cycle> union_cycles(const CatalanState& ci, const CatalanState& cj);

// Canonical representative of a bipartition of the signed labels.
inline LabelMask classify_curve(LabelMask bits, int k) { return canonical_subset(bits, k); }

// Labels separated by the curve from the reference arc.
LabelMask curve_bits(const Cycle& cycle, const Diagram& bi, const Diagram& bj);

// ⟨b_i, b_j⟩ as an exponent vector over VarSet::for_holes(k).
Monomial pair(const Diagram& bi, const Diagram& bj);

// Same, as a one-term polynomial.
Polynomial pair_poly(const Diagram& bi, const Diagram& bj);

}  // namespace gramholes
