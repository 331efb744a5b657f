#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dforms {

// Numeric mode of a computation. Exact mode is rational arithmetic with no
// rounding; Float64 is IEEE double. The mode is a property of a whole
// computation: combining values of different modes throws ModeError rather
// than converting silently.
enum class ScalarMode { Exact, Float64 };

struct ModeError : std::logic_error {
  using std::logic_error::logic_error;
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dual-mode number: an exact rational (GMP) or a double, tagged by mode.
class Scalar {
 public:
  Scalar() : mode_(ScalarMode::Exact) {}

  static Scalar exact(long num, long den = 1);
  static Scalar exact(mpq_class q);
  static Scalar real(double v) {
    Scalar s;
    s.mode_ = ScalarMode::Float64;
    s.d_ = v;
    return s;
  }
  static Scalar of_int(long v, ScalarMode m) {
    return m == ScalarMode::Exact ? exact(v) : real(static_cast<double>(v));
  }
  static Scalar zero(ScalarMode m) { return of_int(0, m); }
  static Scalar one(ScalarMode m) { return of_int(1, m); }

  ScalarMode mode() const { return mode_; }
  bool is_exact() const { return mode_ == ScalarMode::Exact; }
  bool is_zero() const {
    return is_exact() ? q_.get_num() == 0 : d_ == 0.0;
  }
  bool is_negative() const { return is_exact() ? q_ < 0 : d_ < 0.0; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;

  Scalar inv() const { return one(mode_) / *this; }
  Scalar abs() const { return is_negative() ? -*this : *this; }

  // Exact within 0, otherwise |a-b| <= tol in either mode.
  bool approx_equal(const Scalar& o, double tol) const;

  double to_double() const { return is_exact() ? q_.get_d() : d_; }
  const mpq_class& rational() const;

  std::string str() const;
  static Scalar parse(std::string_view text, ScalarMode m);

 private:
  mpq_class q_;
  double d_ = 0.0;
  ScalarMode mode_;

  void require_mode(const Scalar& o) const {
    if (mode_ != o.mode_) throw ModeError("mixed exact/float scalars");
  }
};

}  // namespace dforms
