#include "dforms/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dforms {

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Scalar s;
  s.mode_ = ScalarMode::Exact;
  s.q_ = mpq_class(num, den);
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::exact(mpq_class q) {
  Scalar s;
  s.mode_ = ScalarMode::Exact;
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_mode(o);
  if (is_exact())
    q_ += o.q_;
  else
    d_ += o.d_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_mode(o);
  if (is_exact())
    q_ -= o.q_;
  else
    d_ -= o.d_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_mode(o);
  if (is_exact())
    q_ *= o.q_;
  else
    d_ *= o.d_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_mode(o);
  if (o.is_zero()) throw std::domain_error("scalar division by zero");
  if (is_exact())
    q_ /= o.q_;
  else
    d_ /= o.d_;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (is_exact())
    s.q_ = -s.q_;
  else
    s.d_ = -s.d_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  require_mode(o);
  return is_exact() ? q_ == o.q_ : d_ == o.d_;
}

bool Scalar::operator<(const Scalar& o) const {
  require_mode(o);
  return is_exact() ? q_ < o.q_ : d_ < o.d_;
}

bool Scalar::approx_equal(const Scalar& o, double tol) const {
  require_mode(o);
  if (is_exact()) return q_ == o.q_;
  return std::abs(d_ - o.d_) <= tol;
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) throw ModeError("float scalar has no exact rational value");
  return q_;
}

std::string Scalar::str() const {
  if (is_exact()) return q_.get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d_);
  return buf;
}

Scalar Scalar::parse(std::string_view text, ScalarMode m) {
  std::string t(text);
  if (m == ScalarMode::Float64) {
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end == t.c_str() || *end != '\0')
      throw std::invalid_argument("bad float literal: " + t);
    return real(v);
  }
  try {
    mpq_class q(t);
    if (q.get_den() == 0)
      throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return exact(std::move(q));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + t);
  }
}

}  // namespace dforms
