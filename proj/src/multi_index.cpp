#include "dforms/multi_index.hpp"

#include <string>

namespace dforms {

std::vector<int> mask_indices(IndexMask m) {
  std::vector<int> out;
  out.reserve(mask_degree(m));
  while (m) {
    int k = std::countr_zero(m);
    m &= m - 1;
    out.push_back(k + 1);
  }
  return out;
}

IndexMask mask_from_indices(const std::vector<int>& indices, int n) {
  IndexMask m = 0;
  int prev = 0;
  for (int i : indices) {
    if (i <= prev)
      throw std::invalid_argument("multi-index must be strictly increasing");
    if (i < 1 || i > n)
      throw std::invalid_argument("multi-index entry " + std::to_string(i) +
                                  " out of range 1.." + std::to_string(n));
    m |= bit_of(i);
    prev = i;
  }
  return m;
}

std::vector<IndexMask> basis_masks(int n, int k) {
  std::vector<IndexMask> out;
  if (k < 0 || k > n) return out;
  // Gosper-style walk would do, but an explicit recursion keeps the order
  // lexicographic in the index tuples.
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      IndexMask m = 0;
      for (int i : cur) m |= bit_of(i);
      out.push_back(m);
      return;
    }
    for (int i = next; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace dforms
