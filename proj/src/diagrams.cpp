#include "gramholes/diagrams.hpp"

#include <algorithm>
#include <stdexcept>

namespace gramholes {

namespace {

constexpr int kMaxChords = 32;

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

void catalan_rec(std::vector<int>& m, std::vector<CatalanState>& out, int n) {
  // first unmatched point
  int p = 0;
  while (p < 2 * n && m[p] >= 0) ++p;
  if (p == 2 * n) {
    out.push_back(CatalanState{n, m});
    return;
  }
  // p pairs with q such that the points strictly between can match among
  // themselves: q - p odd and the gap holds no already matched point
  for (int q = p + 1; q < 2 * n; q += 2) {
    if (m[q] >= 0) break;
    bool clear = true;
    for (int r = p + 1; r < q; ++r)
      if (m[r] >= 0) {
        clear = false;
        break;
      }
    if (!clear) break;
    m[p] = q;
    m[q] = p;
    catalan_rec(m, out, n);
    m[p] = m[q] = -1;
  }
}

}  // namespace

bool is_fixed_point_free_involution(const std::vector<int>& m) {
  const int size = static_cast<int>(m.size());
  if (size % 2) return false;
  for (int p = 0; p < size; ++p) {
    const int q = m[p];
    if (q < 0 || q >= size || q == p || m[q] != p) return false;
  }
  return true;
}

bool is_noncrossing(const std::vector<int>& m) {
  const int size = static_cast<int>(m.size());
  for (int p = 0; p < size; ++p) {
    const int r = m[p];
    if (r < p) continue;
    for (int q = p + 1; q < r; ++q)
      if (m[q] < p || m[q] > r) return false;
  }
  return true;
}

bool CatalanState::valid() const {
  return n >= 0 && static_cast<int>(matching.size()) == 2 * n && is_fixed_point_free_involution(matching) &&
         is_noncrossing(matching);
}

CatalanState CatalanState::from_matching(std::vector<int> matching) {
  CatalanState c{static_cast<int>(matching.size() / 2), std::move(matching)};
  if (!c.valid()) throw std::invalid_argument("not a non-crossing perfect matching");
  if (c.n > kMaxChords) throw std::invalid_argument("at most 32 chords supported");
  return c;
}

std::vector<CatalanState> enumerate_catalan(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > kMaxChords) throw std::invalid_argument("at most 32 chords supported");
  std::vector<CatalanState> out;
  std::vector<int> m(2 * n, -1);
  catalan_rec(m, out, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RegionId> arc_regions(const CatalanState& c) {
  const int size = 2 * c.n;
  std::vector<RegionId> out(size, kOuter);
  std::vector<int> stack;
  for (int p = 0; p < size; ++p) {
    if (c.matching[p] > p)
      stack.push_back(p);
    else
      stack.pop_back();
    out[p] = stack.empty() ? kOuter : stack.back();
  }
  return out;
}

RegionId region_of_arc(const CatalanState& c, int p) { return arc_regions(c).at(mod(p, 2 * c.n)); }

ChordMask ancestry(const CatalanState& c, RegionId r) {
  if (r == kOuter) return 0;
  if (r < 0 || r >= 2 * c.n || c.matching[r] < r) throw std::invalid_argument("not a region of this state");
  // chords {a,b} with a <= r < b enclose the face of chord r (or are chord r)
  ChordMask mask = 0;
  for (int a = 0; a <= r; ++a)
    if (c.matching[a] > r) mask |= ChordMask{1} << a;
  return mask;
}

RegionInfo regions(const CatalanState& c) {
  RegionInfo info;
  info.ids.push_back(kOuter);
  info.ancestry.push_back(0);
  std::vector<int> stack;
  ChordMask open = 0;
  for (int p = 0; p < 2 * c.n; ++p) {
    if (c.matching[p] > p) {
      open |= ChordMask{1} << p;
      info.ids.push_back(p);
      info.ancestry.push_back(open);
    } else {
      open &= ~(ChordMask{1} << c.matching[p]);
    }
  }
  return info;
}

bool Diagram::valid() const {
  if (!catalan.valid() || k < 0 || static_cast<int>(holes.size()) != k) return false;
  for (RegionId r : holes) {
    if (r == kOuter) continue;
    if (r < 0 || r >= 2 * catalan.n || catalan.matching[r] < r) return false;
  }
  return true;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 v = 1;
  for (int i = 1; i <= r; ++i) v = v * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(v);
}

std::uint64_t catalan_number(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

std::uint64_t diagram_count(int n, int k) {
  std::uint64_t c = catalan_number(n);
  for (int i = 0; i < k; ++i) c *= static_cast<std::uint64_t>(n + 1);
  return c;
}

std::vector<Diagram> enumerate_diagrams(int n, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  std::vector<Diagram> out;
  for (const CatalanState& c : enumerate_catalan(n)) {
    const std::vector<RegionId> ids = regions(c).ids;  // kOuter first, ascending
    std::vector<std::size_t> digit(k, 0);
    for (;;) {
      Diagram b{c, k, std::vector<RegionId>(k)};
      for (int h = 0; h < k; ++h) b.holes[h] = ids[digit[h]];
      out.push_back(std::move(b));
      int h = k - 1;
      while (h >= 0 && ++digit[h] == ids.size()) digit[h--] = 0;
      if (h < 0) break;
    }
  }
  return out;
}

CatalanState gamma(const Diagram& b) { return b.catalan; }

namespace {

// Arc lying in face r: kOuter owns the reference arc, chord p owns arc p.
int representative_arc(const CatalanState& c, RegionId r) { return r == kOuter ? 2 * c.n - 1 : r; }

}  // namespace

Diagram rotate(const Diagram& b, int j) {
  const int size = 2 * b.n();
  if (size == 0) return b;
  j = mod(j, size);
  if (j == 0) return b;
  CatalanState c{b.n(), std::vector<int>(size)};
  for (int p = 0; p < size; ++p) c.matching[mod(p + j, size)] = mod(b.catalan.matching[p] + j, size);
  const std::vector<RegionId> arcs = arc_regions(c);
  Diagram out{c, b.k, b.holes};
  for (RegionId& r : out.holes) r = arcs[mod(representative_arc(b.catalan, r) + j, size)];
  return out;
}

namespace {

Diagram embed_zero(const Diagram& b) {
  const int size = 2 * b.n() + 2;
  CatalanState c{b.n() + 1, std::vector<int>(size)};
  c.matching[0] = size - 1;
  c.matching[size - 1] = 0;
  for (int q = 0; q < size - 2; ++q) c.matching[q + 1] = b.catalan.matching[q] + 1;
  Diagram out{c, b.k, b.holes};
  for (RegionId& r : out.holes) r = r == kOuter ? 0 : r + 1;
  return out;
}

Contraction contract_zero(const Diagram& b) {
  const int size = 2 * b.n();
  if (size == 0) throw std::invalid_argument("cannot contract a diagram without chords");
  const std::vector<int>& m = b.catalan.matching;
  CatalanState c{b.n() - 1, std::vector<int>(size - 2)};
  Contraction res{Diagram{}, std::nullopt};
  std::vector<RegionId> holes = b.holes;
  if (m[0] == size - 1) {
    for (int q = 1; q < size - 1; ++q) c.matching[q - 1] = m[q] - 1;
    LabelMask outside = 0;
    for (int h = 0; h < b.k; ++h)
      if (holes[h] == kOuter) outside |= label_bit(h + 1);
    res.closed = canonical_subset(outside, b.k);
    for (RegionId& r : holes) r = (r == kOuter || r == 0) ? kOuter : r - 1;
  } else {
    const int j = m[0], mm = m[size - 1];
    for (int q = 1; q < size - 1; ++q) {
      if (q == j || q == mm) continue;
      c.matching[q - 1] = m[q] - 1;
    }
    c.matching[j - 1] = mm - 1;
    c.matching[mm - 1] = j - 1;
    for (RegionId& r : holes) {
      if (r == kOuter)
        r = std::min(j, mm) - 1;
      else if (r == 0 || r == mm)
        r = kOuter;
      else
        r = r - 1;
    }
  }
  res.diagram = Diagram{c, b.k, holes};
  return res;
}

}  // namespace

Diagram embed_i(const Diagram& b, int pos) {
  const int size = 2 * b.n() + 2;
  pos = mod(pos, size);
  return rotate(embed_zero(rotate(b, -pos)), pos);
}

Contraction contract_p(const Diagram& b, int pos) {
  const int size = 2 * b.n();
  if (size == 0) throw std::invalid_argument("cannot contract a diagram without chords");
  pos = mod(pos, size);
  Contraction r = contract_zero(rotate(b, -pos));
  r.diagram = rotate(r.diagram, pos);
  return r;
}

std::string to_string(const CatalanState& c) {
  std::string s = "{";
  bool first = true;
  for (int p = 0; p < 2 * c.n; ++p) {
    if (c.matching[p] < p) continue;
    if (!first) s += ", ";
    s += std::to_string(p) + "-" + std::to_string(c.matching[p]);
    first = false;
  }
  return s + "}";
}

std::string to_string(const Diagram& b) {
  std::string s = to_string(b.catalan) + " [";
  for (int h = 0; h < b.k; ++h) {
    if (h) s += ", ";
    s += b.holes[h] == kOuter ? std::string("outer") : std::to_string(b.holes[h]);
  }
  return s + "]";
}

}  // namespace gramholes
