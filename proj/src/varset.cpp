#include "gramholes/varset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>

namespace gramholes {

LabelMask canonical_subset(LabelMask mask, int holes) {
  const LabelMask full = holes == 0 ? 0 : ((LabelMask{1} << (2 * holes)) - 1);
  mask &= full;
  const LabelMask comp = full ^ mask;
  const int a = std::popcount(mask), b = std::popcount(comp);
  if (a != b) return a < b ? mask : comp;
  return (mask & 1U) ? mask : comp;
}

std::vector<int> labels_of(LabelMask mask) {
  std::vector<int> out;
  for (int bit = 0; bit < 32; ++bit) {
    if (!(mask >> bit & 1U)) continue;
    const int hole = bit / 2 + 1;
    out.push_back(bit % 2 == 0 ? hole : -hole);
  }
  return out;
}

namespace {

std::string subset_name(LabelMask mask, int holes) {
  if (mask == 0) return "d";
  if (holes == 1) return "a";
  if (holes == 2) {
    static const std::array<std::pair<LabelMask, const char*>, 7> kNames{{
        {label_bit(1), "x1"},
        {label_bit(-1), "x2"},
        {label_bit(2), "y1"},
        {label_bit(-2), "y2"},
        {label_bit(1) | label_bit(-1), "z1"},
        {label_bit(1) | label_bit(2), "z2"},
        {label_bit(1) | label_bit(-2), "z3"},
    }};
    for (auto [m, n] : kNames)
      if (m == mask) return n;
  }
  std::string s = "x{";
  bool first = true;
  for (int l : labels_of(mask)) {
    if (!first) s += ',';
    s += std::to_string(l);
    first = false;
  }
  return s + "}";
}

}  // namespace

std::shared_ptr<const VarSet> VarSet::custom(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("variable set must not be empty");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw std::invalid_argument("duplicate variable name " + names[i]);
  std::shared_ptr<VarSet> vs(new VarSet());
  vs->names_ = std::move(names);
  return vs;
}

std::shared_ptr<const VarSet> VarSet::for_holes(int k) {
  if (k < 0 || k > kMaxHoles)
    throw std::invalid_argument("hole count must be in [0, " + std::to_string(kMaxHoles) + "]");
  static std::mutex mu;
  static std::array<VarSetPtr, kMaxHoles + 1> cache;
  std::lock_guard lock(mu);
  if (cache[k]) return cache[k];

  // Canonical subsets ordered by size, then lexicographically by label rank.
  const LabelMask full = k == 0 ? 0 : ((LabelMask{1} << (2 * k)) - 1);
  std::vector<LabelMask> subsets;
  for (LabelMask m = 0;; ++m) {
    if (canonical_subset(m, k) == m) subsets.push_back(m);
    if (m == full) break;
  }
  auto ranks = [](LabelMask m) {
    std::vector<int> r;
    for (int bit = 0; bit < 32; ++bit)
      if (m >> bit & 1U) r.push_back(bit);
    return r;
  };
  std::sort(subsets.begin(), subsets.end(), [&](LabelMask a, LabelMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return ranks(a) < ranks(b);
  });

  std::shared_ptr<VarSet> vs(new VarSet());
  vs->holes_ = k;
  vs->subsets_ = subsets;
  vs->index_by_mask_.assign(static_cast<std::size_t>(full) + 1, -1);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    vs->names_.push_back(subset_name(subsets[i], k));
    vs->index_by_mask_[subsets[i]] = static_cast<std::int32_t>(i);
  }
  cache[k] = vs;
  return vs;
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarSet::index_of_subset(LabelMask canonical) const {
  if (holes_ < 0 || canonical >= index_by_mask_.size() || index_by_mask_[canonical] < 0)
    throw std::invalid_argument("not a canonical curve type for this ring");
  return static_cast<std::size_t>(index_by_mask_[canonical]);
}

bool same_ring(const VarSetPtr& a, const VarSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace gramholes
