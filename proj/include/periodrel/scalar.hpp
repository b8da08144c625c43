#pragma once

#include <complex>
#include <concepts>
#include <string>

#include "periodrel/rational.hpp"

namespace periodrel {

/// Which complex embedding of Q(sqrt d) to use: sigma sends sqrt d to the
/// principal root, tau to its negative.
enum class Embedding { sigma, tau };

/// An element a + b*sqrt(d) of Q or of a quadratic field Q(sqrt d).
///
/// d == 0 tags a plain rational. Any rational mixes freely with any
/// quadratic field; two quadratic scalars with different d never mix and
/// raise FieldMismatchError instead.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational r) : a_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Scalar(I n) : a_(n) {}  // NOLINT(google-explicit-constructor)

  /// Requires d squarefree and d != 0, 1.
  static Scalar quadratic(long d, Rational a, Rational b);
  /// sqrt(d) itself.
  static Scalar sqrt_of(long d) { return quadratic(d, 0, 1); }

  long d() const { return d_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// True when the value lies in Q (b == 0), whatever the field tag.
  bool is_rational() const { return b_.is_zero(); }
  /// Throws PreconditionError when b != 0.
  const Rational& to_rational() const;

  /// a + b sqrt d  ->  a - b sqrt d.
  Scalar conjugate() const;
  /// x * conjugate(x), always rational.
  Rational norm() const;
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  std::complex<double> embed(Embedding e = Embedding::sigma) const;

  /// "n/d" for rationals, "a + b*sqrt(d)" otherwise.
  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar operator-() const;

  /// Value equality; the field tag is ignored when both b parts vanish.
  friend bool operator==(const Scalar& x, const Scalar& y);

 private:
  static long common_field(const Scalar& x, const Scalar& y);

  Rational a_;
  Rational b_;
  long d_ = 0;
};

}  // namespace periodrel
