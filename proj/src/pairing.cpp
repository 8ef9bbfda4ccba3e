#include "gramholes/pairing.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gramholes {

std::vector<Cycle> union_cycles(const CatalanState& ci, const CatalanState& cj) {
  if (ci.n != cj.n) throw std::invalid_argument("pairing needs states with equal chord counts");
  const int size = 2 * ci.n;
  std::vector<char> seen(size, 0);
  std::vector<Cycle> out;
  for (int s = 0; s < size; ++s) {
    if (seen[s]) continue;
    Cycle cyc;
    int p = s;
    do {
      const int q = ci.matching[p];
      seen[p] = seen[q] = 1;
      cyc.points.push_back(p);
      cyc.points.push_back(q);
      cyc.chords_i |= ChordMask{1} << std::min(p, q);
      const int r = cj.matching[q];
      cyc.chords_j |= ChordMask{1} << std::min(q, r);
      p = r;
    } while (p != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

LabelMask curve_bits(const Cycle& cycle, const Diagram& bi, const Diagram& bj) {
  // A hole lies across the curve from the reference arc iff a path from it to
  // the arc crosses the curve an odd number of times; that path crosses
  // exactly the chords enclosing the hole's face.
  LabelMask bits = 0;
  for (int h = 0; h < bi.k; ++h) {
    if (std::popcount(ancestry(bi.catalan, bi.holes[h]) & cycle.chords_i) & 1) bits |= label_bit(h + 1);
    if (std::popcount(ancestry(bj.catalan, bj.holes[h]) & cycle.chords_j) & 1) bits |= label_bit(-(h + 1));
  }
  return bits;
}

Monomial pair(const Diagram& bi, const Diagram& bj) {
  if (bi.n() != bj.n() || bi.k != bj.k) throw std::invalid_argument("pairing needs diagrams of equal size");
  const auto vars = VarSet::for_holes(bi.k);
  Monomial m(vars->size());
  for (const Cycle& c : union_cycles(bi.catalan, bj.catalan))
    ++m[vars->index_of_subset(classify_curve(curve_bits(c, bi, bj), bi.k))];
  return m;
}

Polynomial pair_poly(const Diagram& bi, const Diagram& bj) {
  return Polynomial::monomial(VarSet::for_holes(bi.k), pair(bi, bj));
}

}  // namespace gramholes
