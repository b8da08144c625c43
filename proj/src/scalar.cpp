#include "periodrel/scalar.hpp"

#include <cmath>

#include "periodrel/errors.hpp"

namespace periodrel {

Scalar Scalar::quadratic(long d, Rational a, Rational b) {
  if (d == 0 || d == 1 || !is_squarefree(d)) {
    throw PreconditionError("quadratic field parameter must be squarefree and not 0 or 1, got " +
                            std::to_string(d));
  }
  Scalar s;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.d_ = d;
  return s;
}

const Rational& Scalar::to_rational() const {
  if (!b_.is_zero()) throw PreconditionError("scalar " + str() + " is not rational");
  return a_;
}

long Scalar::common_field(const Scalar& x, const Scalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
  throw FieldMismatchError("cannot mix Q(sqrt " + std::to_string(x.d_) + ") and Q(sqrt " +
                           std::to_string(y.d_) + ")");
}

Scalar Scalar::conjugate() const {
  Scalar s = *this;
  s.b_ = -b_;
  return s;
}

Rational Scalar::norm() const {
  if (b_.is_zero()) return a_ * a_;
  return a_ * a_ - Rational(d_) * b_ * b_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  if (b_.is_zero()) {
    Scalar s = *this;
    s.a_ = a_.inverse();
    return s;
  }
  const Rational n_inv = norm().inverse();
  Scalar s = conjugate();
  s.a_ *= n_inv;
  s.b_ *= n_inv;
  return s;
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result = Scalar(1);
  result.d_ = d_;
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::complex<double> Scalar::embed(Embedding e) const {
  const double a = a_.to_double();
  if (b_.is_zero()) return {a, 0.0};
  const double b = b_.to_double() * (e == Embedding::sigma ? 1.0 : -1.0);
  if (d_ > 0) return {a + b * std::sqrt(static_cast<double>(d_)), 0.0};
  return {a, b * std::sqrt(static_cast<double>(-d_))};
}

std::string Scalar::str() const {
  if (b_.is_zero()) return a_.str();
  return a_.str() + " + " + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = common_field(*this, o);
  a_ += o.a_;
  if (!o.b_.is_zero()) b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = common_field(*this, o);
  a_ -= o.a_;
  if (!o.b_.is_zero()) b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const long d = common_field(*this, o);
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
  } else {
    Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
  }
  d_ = d;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  common_field(*this, o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.a_ = -a_;
  s.b_ = -b_;
  return s;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_.is_zero() || x.d_ == y.d_;
}

}  // namespace periodrel
