#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "periodrel/errors.hpp"
#include "periodrel/groebner.hpp"
#include "periodrel/polymatrix.hpp"
#include "periodrel/symplectic.hpp"
#include "periodrel/trivial_ideal.hpp"
#include "test_support.hpp"

using namespace periodrel;

namespace {

MultiPoly Y(int i, int j) { return MultiPoly::variable(VarId::y(i, j)); }
MultiPoly Z(int i, int j) { return MultiPoly::variable(VarId::z(i, j)); }

PolyMatrix random_poly_matrix(std::size_t n, std::mt19937_64& rng) {
  // Mix of constants and single variables so the expansion stays small.
  std::uniform_int_distribution<int> kind(0, 3), c(-3, 3), idx(1, 3);
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      switch (kind(rng)) {
        case 0: m(i, j) = MultiPoly(Scalar(c(rng))); break;
        case 1: m(i, j) = Scalar(c(rng)) * Y(idx(rng), idx(rng)); break;
        case 2: m(i, j) = Z(idx(rng), idx(rng)) + MultiPoly(Scalar(c(rng))); break;
        default: m(i, j) = Y(idx(rng), idx(rng)) * Z(idx(rng), idx(rng)); break;
      }
    }
  return m;
}

}  // namespace

TEST_CASE("degrevlex order with Y_11 smallest") {
  const Monomial y11 = Monomial::of(VarId::y(1, 1)), y12 = Monomial::of(VarId::y(1, 2));
  const Monomial z11 = Monomial::of(VarId::z(1, 1));
  CHECK(degrevlex_compare(y11, y12) < 0);
  CHECK(degrevlex_compare(y12, z11) < 0);
  CHECK(degrevlex_compare(z11, y11 * y11) < 0);  // degree first
  // Same degree: the monomial with more of the smallest variable is smaller.
  CHECK(degrevlex_compare(y11 * z11, y12 * y12) < 0);
  CHECK(degrevlex_compare(y12 * z11, y11 * Monomial::of(VarId::z(2, 2))) > 0);
  const MultiPoly p = Y(1, 1) + Z(1, 1) * Y(1, 2) + Y(1, 2);
  CHECK(p.leading_monomial() == Monomial::of(VarId::z(1, 1)) * y12);
}

TEST_CASE("polynomial matrix basics") {
  std::mt19937_64 rng(1);
  const PolyMatrix m = random_poly_matrix(3, rng);
  CHECK(m.transpose().transpose() == m);
  CHECK(m * PolyMatrix::identity(3) == m);
  CHECK(PolyMatrix::identity(3) * m == m);

  const PolyMatrix yz = PolyMatrix::symbolic(Block::Y, 2).transpose() * PolyMatrix::symbolic(Block::Z, 2);
  CHECK(yz(0, 0) == Y(1, 1) * Z(1, 1) + Y(2, 1) * Z(2, 1));
  CHECK_THROWS_AS(PolyMatrix(2, 3) * PolyMatrix(2, 3), DimensionError);
}

TEST_CASE("determinant and adjugate examples") {
  CHECK(determinant(PolyMatrix::identity(4)) == MultiPoly(Scalar(1)));
  const MultiPoly a = Y(1, 1), b = Y(1, 2), c = Y(2, 1), d = Y(2, 2);
  PolyMatrix m(2, 2);
  m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
  PolyMatrix expected(2, 2);
  expected(0, 0) = d; expected(0, 1) = -b; expected(1, 0) = -c; expected(1, 1) = a;
  CHECK(adjugate(m) == expected);
  CHECK_THROWS_AS(determinant(PolyMatrix(2, 3)), DimensionError);
}

TEST_CASE("symbolic determinant matches the Leibniz oracle") {
  for (std::size_t g = 1; g <= 4; ++g) {
    const PolyMatrix y = PolyMatrix::symbolic(Block::Y, g);
    const std::size_t nv = 2 * g * g;
    std::vector<std::vector<oracle::Poly>> om(g, std::vector<oracle::Poly>(g));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) om[i][j] = oracle::Poly::var(i * g + j, nv);
    CHECK(support::to_oracle(determinant(y), g) == oracle::leibniz_det(om));
  }
  // Y^t adj(Y^t) = det(Y) I for g = 3.
  const PolyMatrix yt = PolyMatrix::symbolic(Block::Y, 3).transpose();
  const MultiPoly det = determinant(yt);
  CHECK(yt * adjugate(yt) == det * PolyMatrix::identity(3));
  CHECK(det.total_degree() == 3);
  CHECK(det.size() == 6);
}

TEST_CASE("M adj(M) = det(M) I for random symbolic and rational matrices") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const PolyMatrix m = random_poly_matrix(n, rng);
      const MultiPoly det = determinant(m);
      CHECK(m * adjugate(m) == det * PolyMatrix::identity(n));
      CHECK(adjugate(m) * m == det * PolyMatrix::identity(n));
    }
  for (std::size_t n = 1; n <= 5; ++n) {
    const Matrix a = support::random_matrix(n, n, -5, 5, rng);
    const PolyMatrix m = PolyMatrix::from_numeric(a);
    CHECK(m * adjugate(m) == determinant(m) * PolyMatrix::identity(n));
  }
  CHECK_THROWS_AS(determinant(PolyMatrix::symbolic(Block::Y, 5)), PreconditionError);
}

TEST_CASE("numeric determinants: transpose, product and Leibniz") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix a = support::random_matrix(n, n, -6, 6, rng);
    const Matrix b = support::random_matrix(n, n, -6, 6, rng);
    CHECK(a.transpose().determinant() == a.determinant());
    CHECK((a * b).determinant() == a.determinant() * b.determinant());
    std::vector<std::vector<oracle::Q>> q(n, std::vector<oracle::Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q[i][j] = a(i, j).to_rational().value();
    CHECK(a.determinant().to_rational().value() == oracle::leibniz_det(q));
  }
}

TEST_CASE("buchberger_reduce examples") {
  for (std::size_t g : {2u, 3u}) {
    const TrivialIdeal I(g);
    const auto& gens = I.generators();
    CHECK(buchberger_reduce(gens.front(), gens).in_ideal);
    CHECK_FALSE(buchberger_reduce(Y(1, 1), gens).in_ideal);
  }
  const TrivialIdeal I2(2);
  CHECK(buchberger_reduce(Y(1, 1) * I2.f(1, 2) + Z(2, 2) * I2.f(1, 2), I2.generators()).in_ideal);
  const TrivialIdeal I3(3);
  const MultiPoly combo = Y(1, 1) * I3.f(1, 2) + Z(2, 2) * I3.f(1, 3);
  const ReductionResult r = buchberger_reduce(combo, I3.generators());
  CHECK(r.in_ideal);
  CHECK(r.remainder.is_zero());
  CHECK_FALSE(buchberger_reduce(combo + Y(1, 1) * Y(2, 2), I3.generators()).in_ideal);
}

TEST_CASE("Groebner basis satisfies Buchberger's criterion") {
  const TrivialIdeal I(3);
  const auto basis = groebner_basis(I.generators());
  for (const auto& f : I.generators()) CHECK(normal_form(f, basis).is_zero());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(basis[i].leading_coefficient() == Scalar(1));
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      const MultiPoly s = basis[i].mul_term(Scalar(1), l.quotient(basis[i].leading_monomial())) -
                          basis[j].mul_term(Scalar(1), l.quotient(basis[j].leading_monomial()));
      CHECK(normal_form(s, basis).is_zero());
    }
  }
}

TEST_CASE("Groebner membership agrees with evaluation on V") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> c(-2, 2), idx(1, 2);
  const TrivialIdeal I(2);
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly p = (Scalar(c(rng)) * Y(idx(rng), idx(rng)) + Z(idx(rng), idx(rng))) * I.f(1, 2);
    p += Scalar(c(rng)) * Z(idx(rng), idx(rng)) * Z(idx(rng), idx(rng)) * I.f(1, 2);
    if (!buchberger_reduce(p, I.generators()).in_ideal) continue;
    for (std::uint64_t s = 0; s < 20; ++s) {
      const IsotropicFrame fr = project_to_V(sample_symplectic(2, 1000 + s));
      CHECK(evaluate_at(p, fr.y(), fr.z()).is_zero());
    }
  }
}

TEST_CASE("resource caps turn into undecided") {
  const TrivialIdeal I(3);
  GroebnerLimits tight;
  tight.max_pairs = 1;
  CHECK_THROWS_WITH_AS(buchberger_reduce(Y(1, 1), I.generators(), tight),
                       "membership undecided at this scale; use probabilistic nonmembership", UndecidedError);
  GroebnerLimits few_vars;
  few_vars.max_variables = 4;
  CHECK_THROWS_AS(buchberger_reduce(Y(1, 1), I.generators(), few_vars), UndecidedError);
  CHECK_THROWS_AS(buchberger_reduce(Y(1, 1).pow(5), I.generators()), UndecidedError);
  CHECK_THROWS_AS(buchberger_reduce(Y(1, 1), {}), PreconditionError);
}

TEST_CASE("substitution, renaming and derivatives") {
  const MultiPoly p = Y(1, 1) * Y(1, 1) * Z(1, 2) - Scalar(3) * Z(2, 2);
  CHECK(p.derivative(VarId::y(1, 1)) == Scalar(2) * Y(1, 1) * Z(1, 2));
  CHECK(p.derivative(VarId::y(2, 2)).is_zero());
  std::unordered_map<std::uint32_t, MultiPoly> sub{{VarId::y(1, 1).key(), Y(1, 1) + Z(1, 1)}};
  CHECK(p.substitute(sub) == (Y(1, 1) + Z(1, 1)).pow(2) * Z(1, 2) - Scalar(3) * Z(2, 2));
  const MultiPoly q = p.rename([](VarId v) { v.row = static_cast<std::uint8_t>(3 - v.row); return v; });
  CHECK(q == Y(2, 1) * Y(2, 1) * Z(2, 2) - Scalar(3) * Z(1, 2));
  CHECK(p.is_homogeneous() == false);
  CHECK((Y(1, 1) * Z(1, 1) - Y(2, 2) * Z(2, 2)).is_homogeneous());
}
