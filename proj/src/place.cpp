#include "periodrel/place.hpp"

#include <cmath>
#include <complex>

#include "periodrel/errors.hpp"

namespace periodrel {

Place Place::archimedean(Embedding e) {
  Place v;
  v.embedding_ = e;
  return v;
}

Place Place::finite(long p) {
  if (!is_prime(mpz_class(p))) {
    throw PreconditionError("finite place needs a prime, got " + std::to_string(p));
  }
  Place v;
  v.prime_ = p;
  return v;
}

std::string Place::str() const {
  if (!is_archimedean()) return "finite(" + std::to_string(prime_) + ")";
  return embedding_ == Embedding::sigma ? "arch(sigma)" : "arch(tau)";
}

int splitting_type(long d, long p) {
  if (p == 2) {
    const long r = ((d % 8) + 8) % 8;
    if (r == 1) return 1;
    if (r == 5) return -1;
    return 0;
  }
  return mpz_kronecker_si(mpz_class(d).get_mpz_t(), p);
}

namespace {

double p_power(long p, int v) { return std::pow(static_cast<double>(p), -v); }

}  // namespace

double abs_at_place(const Scalar& x, const Place& v) {
  if (x.is_zero()) return 0.0;
  if (v.is_archimedean()) return std::abs(x.embed(v.embedding()));
  const mpz_class p(v.prime());
  if (x.is_rational()) return p_power(v.prime(), valuation(x.a(), p));
  if (splitting_type(x.d(), v.prime()) == 1) {
    throw PreconditionError("p = " + std::to_string(v.prime()) +
                            " splits in Q(sqrt " + std::to_string(x.d()) +
                            "); choose a p-adic embedding explicitly");
  }
  // Unique place above p: |x| = |N(x)|_p^(1/2).
  return std::sqrt(p_power(v.prime(), valuation(x.norm(), p)));
}

}  // namespace periodrel
