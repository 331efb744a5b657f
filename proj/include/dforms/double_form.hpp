#pragma once

#include <map>
#include <utility>

#include "dforms/multi_index.hpp"
#include "dforms/scalar.hpp"

namespace dforms {

struct FormKey {
  IndexMask left = 0;
  IndexMask right = 0;
  auto operator<=>(const FormKey&) const = default;
};

// Sparse double form of bidegree (p, q) on an n-dimensional Euclidean space,
// expanded over the orthonormal basis e^I (x) e^J with I, J strictly
// increasing. Zero coefficients are never stored, so entry-wise equality is
// structural equality. Every algebra operation returns a fresh value; a form
// is never mutated once built, which makes sharing across threads safe.
//
// A form with no entries compares equal to any other empty form of the same
// dimension regardless of its nominal bidegree: the zero form lives in every
// component, and the degree conventions of the algebra (g^{-1} = 0, exterior
// powers past n, interior products past degree 0) all funnel through it.
class DoubleForm {
 public:
  DoubleForm(int n, int p, int q, ScalarMode mode);

  static DoubleForm basis_element(int n, IndexMask left, IndexMask right,
                                  const Scalar& coeff);
  static DoubleForm constant(int n, const Scalar& value);

  int dim() const { return n_; }
  int left_degree() const { return p_; }
  int right_degree() const { return q_; }
  ScalarMode mode() const { return mode_; }
  bool is_zero() const { return entries_.empty(); }
  bool square() const { return p_ == q_; }

  const std::map<FormKey, Scalar>& entries() const { return entries_; }
  Scalar coefficient(IndexMask left, IndexMask right) const;

  // Accumulates into the map, erasing entries that cancel to zero.
  void add_entry(IndexMask left, IndexMask right, const Scalar& v);

  DoubleForm& operator+=(const DoubleForm& o);
  DoubleForm& operator-=(const DoubleForm& o);
  DoubleForm& operator*=(const Scalar& c);
  DoubleForm operator-() const;

  friend DoubleForm operator+(DoubleForm a, const DoubleForm& b) {
    return a += b;
  }
  friend DoubleForm operator-(DoubleForm a, const DoubleForm& b) {
    return a -= b;
  }
  friend DoubleForm operator*(DoubleForm a, const Scalar& c) { return a *= c; }
  friend DoubleForm operator*(const Scalar& c, DoubleForm a) { return a *= c; }

  bool operator==(const DoubleForm& o) const;
  bool operator!=(const DoubleForm& o) const { return !(*this == o); }

  // Entry-wise |a-b| <= tol; degrees must agree unless one side is zero.
  bool approx_equal(const DoubleForm& o, double tol) const;

  DoubleForm to_float() const;

  Scalar scalar_value() const;  // value of a (0,0) form (zero if empty)

 private:
  int n_, p_, q_;
  ScalarMode mode_;
  std::map<FormKey, Scalar> entries_;

  void check_key(IndexMask left, IndexMask right) const;
};

void check_same_space(const DoubleForm& a, const DoubleForm& b);

}  // namespace dforms
