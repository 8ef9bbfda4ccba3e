#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gramholes {

// Signed hole labels +1..+k (holes of the left diagram) and -1..-k (inverted
// holes of the right diagram) are packed into bit masks: label +h is bit
// 2(h-1), label -h is bit 2(h-1)+1. This is also the canonical label order
// +1, -1, +2, -2, ...
using LabelMask = std::uint32_t;

constexpr int kMaxHoles = 4;

constexpr LabelMask label_bit(int label) {
  return label > 0 ? LabelMask{1} << (2 * (label - 1)) : LabelMask{1} << (2 * (-label - 1) + 1);
}

// Picks the representative of {mask, complement}: fewer labels wins, ties go
// to the side containing +1.
LabelMask canonical_subset(LabelMask mask, int holes);

// Labels of a mask in canonical label order.
std::vector<int> labels_of(LabelMask mask);

// Ordered variable names of a polynomial ring.
//
// Ring variables for a disk with k holes are the closed-curve types: "d" for
// curves with every hole on one side, then the other canonical subsets by
// size and then lexicographically in label order. k = 1 uses {d, a}; k = 2
// uses d, x1, x2, y1, y2, z1, z2, z3; k >= 3 names subsets x{1,-2,...}.
class VarSet {
 public:
  static std::shared_ptr<const VarSet> for_holes(int k);
  static std::shared_ptr<const VarSet> custom(std::vector<std::string> names);

  // -1 for a custom variable set.
  int holes() const { return holes_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // Curve type <-> variable index; only meaningful when holes() >= 0.
  std::size_t index_of_subset(LabelMask canonical) const;
  LabelMask subset_of(std::size_t var) const { return subsets_.at(var); }

  friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

 private:
  VarSet() = default;
  int holes_ = -1;
  std::vector<std::string> names_;
  std::vector<LabelMask> subsets_;
  std::vector<std::int32_t> index_by_mask_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

bool same_ring(const VarSetPtr& a, const VarSetPtr& b);

}  // namespace gramholes
