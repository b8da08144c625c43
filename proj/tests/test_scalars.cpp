#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "periodrel/errors.hpp"
#include "periodrel/place.hpp"
#include "periodrel/scalar.hpp"
#include "test_support.hpp"

using namespace periodrel;

TEST_CASE("valuation examples") {
  CHECK(valuation(Rational(1), 7) == 0);
  CHECK(valuation(Rational(1), 2) == 0);
  CHECK(valuation(Rational::parse("8/3"), 2) == 3);
  CHECK(valuation(Rational::parse("8/3"), 3) == -1);

  mpz_class fact = 1;
  for (int k = 2; k <= 100; ++k) fact *= k;
  CHECK(valuation(Rational(fact), 7) == oracle::factorial_valuation(100, 7));
  CHECK(oracle::factorial_valuation(100, 7) == 16);

  CHECK_THROWS_WITH_AS(valuation(Rational(0), 5), "valuation of zero undefined", PreconditionError);
}

TEST_CASE("valuation is additive on products") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rational x = support::random_rational(rng, 500), y = support::random_rational(rng, 500);
    if (x.is_zero() || y.is_zero()) continue;
    for (long p : {2L, 3L, 5L, 7L, 11L}) CHECK(valuation(x * y, p) == valuation(x, p) + valuation(y, p));
  }
}

TEST_CASE("abs_at_place examples") {
  CHECK(abs_at_place(Scalar(Rational::parse("-3/2")), Place::archimedean()) == doctest::Approx(1.5));
  CHECK(abs_at_place(Scalar(Rational::parse("8/3")), Place::finite(2)) == 0.125);
  const Scalar x = Scalar::quadratic(2, 1, 1);
  CHECK(abs_at_place(x, Place::archimedean(Embedding::tau)) ==
        doctest::Approx(std::abs(1.0 - std::sqrt(2.0))).epsilon(1e-14));
  CHECK(abs_at_place(Scalar(0), Place::finite(3)) == 0.0);
  CHECK(abs_at_place(Scalar(0), Place::archimedean()) == 0.0);
}

TEST_CASE("abs_at_place is multiplicative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Scalar x(support::random_rational(rng, 300)), y(support::random_rational(rng, 300));
    for (const Place& v : {Place::archimedean(), Place::finite(2), Place::finite(3), Place::finite(7)})
      CHECK(abs_at_place(x * y, v) == doctest::Approx(abs_at_place(x, v) * abs_at_place(y, v)).epsilon(1e-12));
  }
}

TEST_CASE("product formula in exact form") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational x = support::random_rational(rng, 1000);
    if (x.is_zero()) continue;
    // |x|_inf * prod_p p^(-v_p(x)) = 1  <=>  prod_p p^(v_p(x)) = |x|.
    Rational prod = 1;
    for (long p : oracle::primes_up_to(1000)) {
      const int v = valuation(x, p);
      prod *= Rational(p).pow(v);
    }
    CHECK(prod == x.abs());
  }
}

TEST_CASE("conjugate and norm") {
  CHECK(Scalar::quadratic(5, 3, 0).conjugate() == Scalar(3));
  CHECK(Scalar::quadratic(5, 1, 2).conjugate() == Scalar::quadratic(5, 1, -2));
  // (1 + 2 sqrt5)(1 - 2 sqrt5) = 1 - 4 * 5.
  CHECK(Scalar::quadratic(5, 1, 2).norm() == Rational(1 - 4 * 5));
  const Scalar x = Scalar::quadratic(7, Rational::parse("2/3"), Rational::parse("-5/4"));
  CHECK(x.conjugate().conjugate() == x);
  CHECK((x * x.conjugate()).is_rational());
}

TEST_CASE("quadratic arithmetic agrees with both embeddings") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> n(-1000, 1000), dd(1, 1000);
  for (long d : {2L, 3L, 5L, -1L, -3L}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Scalar x = Scalar::quadratic(d, Rational(mpz_class(n(rng)), mpz_class(dd(rng))), Rational(n(rng)));
      const Scalar y = Scalar::quadratic(d, Rational(n(rng)), Rational(mpz_class(n(rng)), mpz_class(dd(rng))));
      for (Embedding e : {Embedding::sigma, Embedding::tau}) {
        const auto fx = x.embed(e), fy = y.embed(e);
        auto close = [](std::complex<double> a, std::complex<double> b) {
          return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
        };
        CHECK(close((x + y).embed(e), fx + fy));
        CHECK(close((x * y).embed(e), fx * fy));
        CHECK(close((x - y).embed(e), fx - fy));
        if (!y.is_zero()) CHECK(close((x / y).embed(e), fx / fy));
      }
    }
  }
}

TEST_CASE("field discipline") {
  CHECK_THROWS_AS(Scalar::quadratic(2, 1, 1) + Scalar::quadratic(3, 1, 1), FieldMismatchError);
  CHECK_NOTHROW(Scalar::quadratic(2, 1, 1) + Scalar(Rational::parse("1/2")));
  CHECK_THROWS_AS(Scalar::quadratic(4, 1, 1), PreconditionError);
  CHECK_THROWS_AS(Scalar::quadratic(1, 1, 1), PreconditionError);
  CHECK_THROWS_AS(Place::finite(9), PreconditionError);
  CHECK(Rational::parse("6/-4") == Rational::parse("-3/2"));
  CHECK(Rational::parse("-3/2").str() == "-3/2");
  CHECK(Rational(5).str() == "5/1");
}
