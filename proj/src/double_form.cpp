#include "dforms/double_form.hpp"

#include <string>

namespace dforms {

DoubleForm::DoubleForm(int n, int p, int q, ScalarMode mode)
    : n_(n), p_(p), q_(q), mode_(mode) {
  if (n < 0 || n > kMaxDim)
    throw DimensionError("dimension out of range: " + std::to_string(n));
}

DoubleForm DoubleForm::basis_element(int n, IndexMask left, IndexMask right,
                                     const Scalar& coeff) {
  DoubleForm f(n, mask_degree(left), mask_degree(right), coeff.mode());
  f.add_entry(left, right, coeff);
  return f;
}

DoubleForm DoubleForm::constant(int n, const Scalar& value) {
  DoubleForm f(n, 0, 0, value.mode());
  f.add_entry(0, 0, value);
  return f;
}

Scalar DoubleForm::coefficient(IndexMask left, IndexMask right) const {
  auto it = entries_.find(FormKey{left, right});
  return it == entries_.end() ? Scalar::zero(mode_) : it->second;
}

void DoubleForm::check_key(IndexMask left, IndexMask right) const {
  IndexMask full = (IndexMask{1} << n_) - 1;
  if ((left & ~full) || (right & ~full))
    throw DimensionError("multi-index exceeds ambient dimension");
  if (mask_degree(left) != p_ || mask_degree(right) != q_)
    throw DegreeError("entry degree does not match form bidegree");
}

void DoubleForm::add_entry(IndexMask left, IndexMask right, const Scalar& v) {
  if (v.mode() != mode_) throw ModeError("entry mode differs from form mode");
  if (v.is_zero()) return;
  check_key(left, right);
  FormKey k{left, right};
  auto [it, inserted] = entries_.try_emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

DoubleForm& DoubleForm::operator+=(const DoubleForm& o) {
  check_same_space(*this, o);
  if (o.is_zero()) return *this;
  if (is_zero()) {
    p_ = o.p_;
    q_ = o.q_;
    entries_ = o.entries_;
    return *this;
  }
  if (p_ != o.p_ || q_ != o.q_)
    throw DegreeError("adding double forms of different bidegrees");
  for (const auto& [k, v] : o.entries_) add_entry(k.left, k.right, v);
  return *this;
}

DoubleForm& DoubleForm::operator-=(const DoubleForm& o) {
  return *this += -o;
}

DoubleForm& DoubleForm::operator*=(const Scalar& c) {
  if (c.mode() != mode_) throw ModeError("scaling with mismatched scalar mode");
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= c;
  return *this;
}

DoubleForm DoubleForm::operator-() const {
  DoubleForm f = *this;
  for (auto& [k, v] : f.entries_) v = -v;
  return f;
}

bool DoubleForm::operator==(const DoubleForm& o) const {
  check_same_space(*this, o);
  if (is_zero() && o.is_zero()) return true;
  if (p_ != o.p_ || q_ != o.q_) return false;
  return entries_ == o.entries_;
}

bool DoubleForm::approx_equal(const DoubleForm& o, double tol) const {
  check_same_space(*this, o);
  if (!is_zero() && !o.is_zero() && (p_ != o.p_ || q_ != o.q_)) return false;
  for (const auto& [k, v] : entries_)
    if (!v.approx_equal(o.coefficient(k.left, k.right), tol)) return false;
  for (const auto& [k, v] : o.entries_)
    if (!coefficient(k.left, k.right).approx_equal(v, tol)) return false;
  return true;
}

DoubleForm DoubleForm::to_float() const {
  if (mode_ == ScalarMode::Float64) return *this;
  DoubleForm f(n_, p_, q_, ScalarMode::Float64);
  for (const auto& [k, v] : entries_)
    f.add_entry(k.left, k.right, Scalar::real(v.to_double()));
  return f;
}

Scalar DoubleForm::scalar_value() const {
  if (!is_zero() && (p_ != 0 || q_ != 0))
    throw DegreeError("scalar_value on a form of positive degree");
  return coefficient(0, 0);
}

void check_same_space(const DoubleForm& a, const DoubleForm& b) {
  if (a.dim() != b.dim())
    throw DimensionError("double forms live on spaces of different dimension");
  if (a.mode() != b.mode())
    throw ModeError("mixing exact and float double forms");
}

}  // namespace dforms
