#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "dforms/scalar.hpp"

namespace dforms {

// A strictly increasing tuple of distinct indices in 1..n is a subset of
// {1..n}; bit k-1 of the mask stands for index k. The empty mask is the
// degree-0 (scalar) slot.
using IndexMask = std::uint32_t;

constexpr int kMaxDim = 30;

inline int mask_degree(IndexMask m) { return std::popcount(m); }

inline IndexMask bit_of(int index_1based) {
  return IndexMask{1} << (index_1based - 1);
}

// Sign of sorting the concatenation (a, b) into increasing order; 0 if the
// masks overlap.
inline int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  int inversions = 0;
  IndexMask rest = b;
  while (rest) {
    int k = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(a >> (k + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

// Sign picked up when the covector at 1-based position `index` is pulled out
// of the front of the increasing product `m`; requires the index present.
inline int removal_sign(int index_1based, IndexMask m) {
  IndexMask below = m & (bit_of(index_1based) - 1);
  return (std::popcount(below) & 1) ? -1 : 1;
}

std::vector<int> mask_indices(IndexMask m);
IndexMask mask_from_indices(const std::vector<int>& indices, int n);

// All degree-k masks on {1..n} in lexicographic index order.
std::vector<IndexMask> basis_masks(int n, int k);

// Thin value wrapper used at API and serialization boundaries.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::vector<int> indices, int n)
      : mask_(mask_from_indices(indices, n)) {}
  explicit MultiIndex(IndexMask m) : mask_(m) {}

  IndexMask mask() const { return mask_; }
  int degree() const { return mask_degree(mask_); }
  std::vector<int> indices() const { return mask_indices(mask_); }

  auto operator<=>(const MultiIndex&) const = default;

 private:
  IndexMask mask_ = 0;
};

}  // namespace dforms
