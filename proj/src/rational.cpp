#include "periodrel/rational.hpp"

#include <cstdlib>

#include "periodrel/errors.hpp"

namespace periodrel {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
  if (value_.get_den() == 0) throw PreconditionError("zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    mpz_class z;
    std::string buf(s);
    if (buf.empty() || z.set_str(buf, 10) != 0) {
      throw PreconditionError("malformed rational: '" + std::string(text) + "'");
    }
    return z;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  value_ /= o.value_;
  return *this;
}
Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

int valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw PreconditionError("valuation of zero undefined");
  if (p < 2) throw PreconditionError("valuation needs a prime p >= 2");
  mpz_class rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const Rational& x, const mpz_class& p) {
  if (x.is_zero()) throw PreconditionError("valuation of zero undefined");
  return valuation(x.num(), p) - valuation(x.den(), p);
}

bool is_prime(const mpz_class& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_squarefree(long n) {
  unsigned long m = static_cast<unsigned long>(std::labs(n));
  if (m == 0) return false;
  for (unsigned long q = 2; q * q <= m; ++q) {
    if (m % (q * q) == 0) return false;
    if (m % q == 0) m /= q;
  }
  return true;
}

}  // namespace periodrel
