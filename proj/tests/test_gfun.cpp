#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "periodrel/errors.hpp"
#include "periodrel/gfun.hpp"
#include "test_support.hpp"

using namespace periodrel;

namespace {

TruncatedSeries from_q(const std::vector<oracle::Q>& c) {
  std::vector<Scalar> s;
  for (const auto& q : c) s.emplace_back(Rational(q));
  return TruncatedSeries(std::move(s));
}

TruncatedSeries poly(std::vector<Scalar> c, int order) {
  c.resize(static_cast<std::size_t>(order) + 1);
  return TruncatedSeries(std::move(c));
}

GFunMatrix hypergeometric_matrix(int order) {
  return GFunMatrix(1, {from_q(oracle::hypergeometric_half_half(static_cast<std::size_t>(order)))});
}

GFunMatrix random_gfun(std::size_t g, int order, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::vector<TruncatedSeries> e;
  for (std::size_t k = 0; k < g * g; ++k)
    e.push_back(TruncatedSeries::generate(order, [&](int) { return Scalar(c(rng)); }));
  return GFunMatrix(g, std::move(e));
}

Matrix exact_values(const GFunMatrix& m, const Scalar& x, const Place& v) {
  Matrix out(m.g(), m.g());
  for (std::size_t i = 0; i < m.g(); ++i)
    for (std::size_t j = 0; j < m.g(); ++j) out(i, j) = eval_with_tail_bound(m(i, j), x, v, true).partial_sum;
  return out;
}

}  // namespace

TEST_CASE("derive_G with the identity family returns F") {
  std::mt19937_64 rng(3);
  const GFunMatrix f = random_gfun(2, 12, rng);
  GaussManinCoefficients a = GaussManinCoefficients::zero(2, 0, 12);
  a.set(0, 0, 0, TruncatedSeries::constant(1, 12));
  a.set(1, 0, 1, TruncatedSeries::constant(1, 12));
  CHECK(derive_G(f, a) == f);
}

TEST_CASE("derive_G with a single derivative term") {
  std::mt19937_64 rng(4);
  const GFunMatrix f = random_gfun(2, 10, rng);
  GaussManinCoefficients a = GaussManinCoefficients::zero(2, 1, 10);
  a.set(0, 1, 1, TruncatedSeries::constant(1, 10));  // G_1j = F_2j'
  const GFunMatrix g = derive_G(f, a);
  CHECK(g.order() == 9);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(g(0, j) == f(1, j).derivative().truncate(9));
    CHECK(g(1, j).is_zero());
    CHECK(g.integral(0, j));
  }
}

TEST_CASE("hypergeometric fixture: the Picard-Fuchs operator annihilates F") {
  const int order = 32;
  const GFunMatrix f = hypergeometric_matrix(order);
  GaussManinCoefficients pf(1, 2,
                            {TruncatedSeries::constant(Rational(-1, 4), order),
                             poly({1, -2}, order), poly({0, 1, -1}, order)});
  const GFunMatrix g = derive_G(f, pf);
  CHECK(g.order() == 30);
  CHECK(g(0, 0).is_zero());

  // a1 = X alone gives X F', whose coefficients are n c_n.
  GaussManinCoefficients euler(1, 1, {TruncatedSeries::zero(order), poly({0, 1}, order)});
  const GFunMatrix xf = derive_G(f, euler);
  const auto c = oracle::hypergeometric_half_half(order);
  for (int n = 0; n <= xf.order(); ++n)
    CHECK(xf(0, 0)[static_cast<std::size_t>(n)] == Scalar(Rational(c[static_cast<std::size_t>(n)] * n)));
  CHECK_FALSE(xf.integral(0, 0));
}

TEST_CASE("derive_G rejects insufficient precision") {
  const GFunMatrix f(1, {TruncatedSeries::constant(1, 2)});
  const GaussManinCoefficients a = GaussManinCoefficients::zero(1, 3, 2);
  CHECK_THROWS_WITH_AS(derive_G(f, a), "insufficient precision", PreconditionError);
  const GaussManinCoefficients short_a = GaussManinCoefficients::zero(1, 1, 0);
  CHECK_THROWS_WITH_AS(derive_G(GFunMatrix(1, {TruncatedSeries::constant(1, 5)}), short_a),
                       "insufficient precision", PreconditionError);
  CHECK_THROWS_AS(GaussManinCoefficients(2, 1, {}), DimensionError);
}

TEST_CASE("derive_G is linear in F") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-3, 3);
  GaussManinCoefficients a = GaussManinCoefficients::zero(2, 2, 14);
  for (std::size_t i = 0; i < 2; ++i)
    for (int k = 0; k <= 2; ++k)
      for (std::size_t l = 0; l < 2; ++l)
        a.set(i, k, l, TruncatedSeries::generate(14, [&](int) { return Scalar(c(rng)); }));
  const GFunMatrix f1 = random_gfun(2, 14, rng), f2 = random_gfun(2, 14, rng);
  CHECK(derive_G(f1 + f2, a) == derive_G(f1, a) + derive_G(f2, a));
}

TEST_CASE("second derivative agrees with two first derivatives") {
  std::mt19937_64 rng(11);
  const GFunMatrix f = random_gfun(1, 16, rng);
  GaussManinCoefficients d1 = GaussManinCoefficients::zero(1, 1, 16);
  d1.set(0, 1, 0, TruncatedSeries::constant(1, 16));
  GaussManinCoefficients d2 = GaussManinCoefficients::zero(1, 2, 16);
  d2.set(0, 2, 0, TruncatedSeries::constant(1, 16));
  CHECK(derive_G(derive_G(f, d1), d1)(0, 0) == derive_G(f, d2)(0, 0));
}

TEST_CASE("radii examples") {
  const GaussManinCoefficients zero = GaussManinCoefficients::zero(1, 1, 10);
  for (long p : {2L, 3L, 5L, 7L}) {
    const auto r = compute_radii(zero, {Scalar(p)}, {Place::finite(p)});
    REQUIRE(r.size() == 1);
    CHECK(r[0].r == doctest::Approx(1.0 / double(p)));
    CHECK(r[0].certified);
  }
  const auto arch = compute_radii(zero, {Scalar(Rational(1, 3)), Scalar(5)}, {Place::archimedean()});
  CHECK(arch[0].r == doctest::Approx(1.0 / 3.0));
  const auto plain = compute_radii(zero, {}, {Place::finite(3), Place::archimedean()});
  CHECK(plain[0].r == 1.0);
  CHECK(plain[1].r == 1.0);
  CHECK_THROWS_AS(compute_radii(zero, {Scalar(0)}, {Place::finite(3)}), PreconditionError);

  // Coefficient 1/(1 - 4X) has radius 1/4 at the real place.
  GaussManinCoefficients geo = GaussManinCoefficients::zero(1, 0, 30);
  geo.set(0, 0, 0, TruncatedSeries::generate(30, [](int n) { return Scalar(4).pow(n); }));
  const auto rg = compute_radii(geo, {}, {Place::archimedean()});
  CHECK(rg[0].r == doctest::Approx(0.25).epsilon(0.05));
  CHECK_FALSE(rg[0].certified);
}

TEST_CASE("radii are monotone in the excluded set") {
  const GaussManinCoefficients zero = GaussManinCoefficients::zero(2, 1, 10);
  const std::vector<Place> places{Place::finite(2), Place::finite(3), Place::archimedean()};
  std::vector<Scalar> excluded;
  std::vector<double> previous(places.size(), 1.0);
  for (const Scalar& x : {Scalar(6), Scalar(Rational(1, 2)), Scalar(9), Scalar(Rational(2, 7))}) {
    excluded.push_back(x);
    const auto r = compute_radii(zero, excluded, places);
    for (std::size_t k = 0; k < places.size(); ++k) {
      CHECK(r[k].r <= previous[k]);
      CHECK(r[k].r > 0.0);
      previous[k] = r[k].r;
    }
  }
}

TEST_CASE("check_period_equation examples") {
  const Place p3 = Place::finite(3);
  // Constant series against matching constants.
  SyntheticPeriodData consts{2, Matrix::identity(2), Matrix({{1, 2}, {3, 4}}), Matrix({{0, 1}, {1, 0}})};
  auto const_series = [](const Matrix& m) {
    std::vector<TruncatedSeries> e;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) e.push_back(TruncatedSeries::constant(m(i, j), 5));
    return GFunMatrix(2, std::move(e));
  };
  const PeriodCheckReport c = check_period_equation(const_series(consts.F), const_series(consts.G), consts, 3, p3, 0.0);
  CHECK(c.consistent);
  CHECK(c.entries.size() == 8);
  for (const auto& e : c.entries) CHECK(e.discrepancy == 0.0);

  // Self-consistency: data taken from the series themselves.
  std::mt19937_64 rng(21);
  const GFunMatrix f = random_gfun(2, 20, rng);
  GaussManinCoefficients a = GaussManinCoefficients::zero(2, 1, 20);
  a.set(0, 1, 0, TruncatedSeries::constant(1, 20));
  a.set(1, 0, 1, TruncatedSeries::constant(2, 20));
  const GFunMatrix g = derive_G(f, a);
  SyntheticPeriodData data{2, Matrix::identity(2), exact_values(f, 3, p3), exact_values(g, 3, p3)};
  const PeriodCheckReport ok = check_period_equation(f, g, data, 3, p3, 1e-12);
  CHECK(ok.consistent);

  // Corrupting one entry by a unit is flagged.
  data.G(1, 0) += Scalar(1);
  const PeriodCheckReport bad = check_period_equation(f, g, data, 3, p3, 1e-12);
  CHECK_FALSE(bad.consistent);
  int flagged = 0;
  for (const auto& e : bad.entries)
    if (e.flagged) {
      ++flagged;
      CHECK(e.matrix == 'G');
      CHECK(e.row == 2);
      CHECK(e.col == 1);
    }
  CHECK(flagged == 1);

  // Real place: the exponential at 1/2 against a longer partial sum.
  const TruncatedSeries expo = TruncatedSeries::generate(30, [](int n) {
    mpz_class fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    return Scalar(Rational(mpz_class(1), fact));
  });
  const Scalar half = Rational(1, 2);
  const Scalar reference = eval_with_tail_bound(expo, half, Place::archimedean(), false).partial_sum;
  SyntheticPeriodData real{1, Matrix::identity(1), Matrix({{reference}}), Matrix({{reference}})};
  const GFunMatrix e20(1, {expo.truncate(20)});
  CHECK(check_period_equation(e20, e20, real, half, Place::archimedean(), 1e-12).consistent);
  real.F(0, 0) += Scalar(Rational(1, 1000));
  CHECK_FALSE(check_period_equation(e20, e20, real, half, Place::archimedean(), 1e-12).consistent);
}
