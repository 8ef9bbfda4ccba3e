#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gramholes/varset.hpp"

namespace gramholes {

// Non-crossing perfect matching of the boundary points a_0..a_{2n-1},
// numbered counter-clockwise. The reference arc sits between a_{2n-1} and a_0.
struct CatalanState {
  int n = 0;
  std::vector<int> matching;

  static CatalanState from_matching(std::vector<int> matching);  // validates
  bool valid() const;
  friend bool operator==(const CatalanState&, const CatalanState&) = default;
  friend auto operator<=>(const CatalanState& a, const CatalanState& b) { return a.matching <=> b.matching; }
};

bool is_fixed_point_free_involution(const std::vector<int>& m);
bool is_noncrossing(const std::vector<int>& m);

// Lexicographic on the matching array.
std::vector<CatalanState> enumerate_catalan(int n);

// A face of the disk cut by the chords: kOuter is the face touching the
// reference arc; otherwise the face just inside chord {p, m[p]}, named by its
// smaller endpoint p, on the side away from the reference arc.
using RegionId = int;
constexpr RegionId kOuter = -1;

// Bit p set for every chord (smaller endpoint p) enclosing the region; a
// chord's own region includes that chord. Limits n to 32.
using ChordMask = std::uint64_t;

struct RegionInfo {
  std::vector<RegionId> ids;        // kOuter first, then chords by smaller endpoint
  std::vector<ChordMask> ancestry;  // aligned with ids
};

RegionInfo regions(const CatalanState& c);
ChordMask ancestry(const CatalanState& c, RegionId r);
// region containing the boundary arc between a_p and a_{p+1}
RegionId region_of_arc(const CatalanState& c, int p);
std::vector<RegionId> arc_regions(const CatalanState& c);

struct Diagram {
  CatalanState catalan;
  int k = 0;
  std::vector<RegionId> holes;  // holes[h-1] is the region of hole h

  int n() const { return catalan.n; }
  bool valid() const;
  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& a, const Diagram& b) {
    if (auto c = a.catalan <=> b.catalan; c != 0) return c;
    return a.holes <=> b.holes;
  }
};

// (n+1)^(k-1) * C(2n, n) diagrams, lexicographic on (matching, placement)
// with kOuter before chord regions.
std::vector<Diagram> enumerate_diagrams(int n, int k);
std::uint64_t diagram_count(int n, int k);
std::uint64_t catalan_number(int n);
std::uint64_t binomial(int n, int r);

CatalanState gamma(const Diagram& b);

// Relabels a_p as a_{p+j mod 2n}; holes stay in their faces.
Diagram rotate(const Diagram& b, int j);

// Inserts a chord joining a_{pos-1} and a_pos of the enlarged boundary, cutting
// off an empty sliver along the boundary.
Diagram embed_i(const Diagram& b, int pos);

// Glues a chord across a_{pos-1}, a_pos from outside and pushes it in. When
// those points were joined a closed curve appears and is reported as a
// canonical curve type; otherwise closed is empty.
struct Contraction {
  Diagram diagram;
  std::optional<LabelMask> closed;
};
Contraction contract_p(const Diagram& b, int pos);

std::string to_string(const CatalanState& c);
std::string to_string(const Diagram& b);

}  // namespace gramholes
