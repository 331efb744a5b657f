#include "dforms/clifford.hpp"

#include <string>
#include <utility>

#include "dforms/composition.hpp"

namespace dforms {

namespace {

// Sign s in e^A . e^B = s e^{A xor B}: fold the generators of A onto B from
// the innermost one outwards, each step either wedging or contracting.
int clifford_sign(IndexMask a, IndexMask b) {
  int sign = 1;
  IndexMask cur = b;
  while (a) {
    int k = 31 - std::countl_zero(a);  // highest set bit
    a &= ~(IndexMask{1} << k);
    int idx = k + 1;
    if (cur & bit_of(idx)) {
      sign *= -removal_sign(idx, cur);
      cur &= ~bit_of(idx);
    } else {
      sign *= wedge_sign(bit_of(idx), cur);
      cur |= bit_of(idx);
    }
  }
  return sign;
}

// Commutator of two basis monomials: zero or +-2 e^{A xor B}.
std::pair<int, IndexMask> mask_commutator(IndexMask a, IndexMask b) {
  int s1 = clifford_sign(a, b);
  int s2 = clifford_sign(b, a);
  if (s1 == s2) return {0, 0};
  return {2 * s1, a ^ b};
}

}  // namespace

CliffordElement CliffordElement::from_form(const DoubleForm& form) {
  if (!form.is_zero() && form.right_degree() != 0)
    throw DegreeError("Clifford elements come from (p,0) double forms");
  CliffordElement c(form.dim(), form.mode());
  for (const auto& [k, v] : form.entries()) c.add_term(k.left, v);
  return c;
}

void CliffordElement::add_term(IndexMask m, const Scalar& v) {
  if (v.mode() != mode_) throw ModeError("term mode differs from element mode");
  if (v.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  for (const auto& [m, v] : o.terms_) add_term(m, v);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  for (const auto& [m, v] : o.terms_) add_term(m, -v);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool CliffordElement::operator==(const CliffordElement& o) const {
  return n_ == o.n_ && mode_ == o.mode_ && terms_ == o.terms_;
}

DoubleForm CliffordElement::grade(int k) const {
  DoubleForm out(n_, k, 0, mode_);
  for (const auto& [m, v] : terms_)
    if (mask_degree(m) == k) out.add_entry(m, 0, v);
  return out;
}

DoubleForm CliffordElement::to_form() const {
  if (terms_.empty()) return DoubleForm(n_, 0, 0, mode_);
  int k = mask_degree(terms_.begin()->first);
  for (const auto& [m, v] : terms_)
    if (mask_degree(m) != k)
      throw DegreeError("mixed-degree Clifford element is not a single form");
  return grade(k);
}

CliffordElement clifford_mul(const CliffordElement& a,
                             const CliffordElement& b) {
  if (a.dim() != b.dim())
    throw DimensionError("Clifford product across different dimensions");
  if (a.mode() != b.mode())
    throw ModeError("Clifford product across scalar modes");
  CliffordElement out(a.dim(), a.mode());
  for (const auto& [ma, va] : a.terms()) {
    for (const auto& [mb, vb] : b.terms()) {
      int s = clifford_sign(ma, mb);
      Scalar v = va * vb;
      if (s < 0) v = -v;
      out.add_term(ma ^ mb, v);
    }
  }
  return out;
}

CliffordElement clifford_commutator(const CliffordElement& a,
                                    const CliffordElement& b) {
  CliffordElement out = clifford_mul(a, b);
  out -= clifford_mul(b, a);
  return out;
}

DoubleForm ad(const DoubleForm& alpha, const DoubleForm& omega) {
  if (!alpha.is_zero() &&
      (alpha.left_degree() != 2 || alpha.right_degree() != 0))
    throw DegreeError("ad expects a homogeneous 2-form");
  CliffordElement c = clifford_commutator(CliffordElement::from_form(alpha),
                                          CliffordElement::from_form(omega));
  DoubleForm out = c.grade(omega.left_degree());
  return out;
}

DoubleForm compose_bracket(const DoubleForm& a, const DoubleForm& b) {
  check_same_space(a, b);
  DoubleForm ha = rho(a), hb = rho(b);
  DoubleForm comm = compose(ha, hb) - compose(hb, ha);
  return rho_inverse(comm) * Scalar::of_int(2, a.mode()).inv();
}

DoubleForm sharp(const DoubleForm& a, const DoubleForm& b) {
  check_same_space(a, b);
  std::map<std::pair<int, int>, DoubleForm> buckets;
  for (const auto& [ka, va] : a.entries()) {
    for (const auto& [kb, vb] : b.entries()) {
      auto [s1, m1] = mask_commutator(ka.left, kb.left);
      if (s1 == 0) continue;
      auto [s2, m2] = mask_commutator(ka.right, kb.right);
      if (s2 == 0) continue;
      Scalar v = va * vb * Scalar::of_int(static_cast<long>(s1) * s2, a.mode());
      auto key = std::make_pair(mask_degree(m1), mask_degree(m2));
      auto it = buckets.find(key);
      if (it == buckets.end())
        it = buckets
                 .emplace(key, DoubleForm(a.dim(), key.first, key.second,
                                          a.mode()))
                 .first;
      it->second.add_entry(m1, m2, v);
    }
  }
  DoubleForm out(a.dim(), 0, 0, a.mode());
  bool found = false;
  for (auto& [deg, form] : buckets) {
    if (form.is_zero()) continue;
    if (found)
      throw DegreeError("sharp product produced a mixed-bidegree result");
    out = std::move(form);
    found = true;
  }
  return out;
}

}  // namespace dforms
