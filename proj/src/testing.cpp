#include "dforms/testing.hpp"

namespace dforms::testing {

DoubleForm leibniz_extend_left(const DoubleForm& h, const DoubleForm& omega) {
  int n = omega.dim();
  DoubleForm out(n, omega.left_degree(), omega.right_degree(), omega.mode());
  for (const auto& [key, v] : omega.entries()) {
    IndexMask slots = key.left;
    while (slots) {
      int m = std::countr_zero(slots) + 1;
      slots &= slots - 1;
      IndexMask rest = key.left & ~bit_of(m);
      int pull = removal_sign(m, key.left);
      for (int k = 1; k <= n; ++k) {
        Scalar hv = h.coefficient(bit_of(m), bit_of(k));
        if (hv.is_zero() || (rest & bit_of(k))) continue;
        int s = pull * wedge_sign(bit_of(k), rest);
        Scalar w = v * hv;
        if (s < 0) w = -w;
        out.add_entry(rest | bit_of(k), key.right, w);
      }
    }
  }
  return out;
}

DoubleForm leibniz_extend_right(const DoubleForm& h, const DoubleForm& omega) {
  int n = omega.dim();
  DoubleForm out(n, omega.left_degree(), omega.right_degree(), omega.mode());
  for (const auto& [key, v] : omega.entries()) {
    IndexMask slots = key.right;
    while (slots) {
      int m = std::countr_zero(slots) + 1;
      slots &= slots - 1;
      IndexMask rest = key.right & ~bit_of(m);
      int pull = removal_sign(m, key.right);
      for (int k = 1; k <= n; ++k) {
        Scalar hv = h.coefficient(bit_of(m), bit_of(k));
        if (hv.is_zero() || (rest & bit_of(k))) continue;
        int s = pull * wedge_sign(bit_of(k), rest);
        Scalar w = v * hv;
        if (s < 0) w = -w;
        out.add_entry(key.left, rest | bit_of(k), w);
      }
    }
  }
  return out;
}

Scalar evaluate(const DoubleForm& omega, const std::vector<int>& left_args,
                const std::vector<int>& right_args) {
  auto fold = [](const std::vector<int>& args) -> std::pair<int, IndexMask> {
    IndexMask m = 0;
    int sign = 1;
    for (int i : args) {
      if (m & bit_of(i)) return {0, 0};
      sign *= wedge_sign(bit_of(i), m);
      m |= bit_of(i);
    }
    return {sign, m};
  };
  auto [sl, left] = fold(left_args);
  auto [sr, right] = fold(right_args);
  if (sl == 0 || sr == 0) return Scalar::zero(omega.mode());
  Scalar v = omega.coefficient(left, right);
  if (sl * sr < 0) v = -v;
  return v;
}

}  // namespace dforms::testing
