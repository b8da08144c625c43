#include <doctest.h>

#include "periodrel/errors.hpp"
#include "periodrel/symplectic.hpp"
#include "test_support.hpp"

using namespace periodrel;

namespace {

// Independent check of W^t J W = 0 through explicit sums.
bool isotropic_by_sums(const Matrix& y, const Matrix& z) {
  const std::size_t g = y.rows();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      Scalar s;
      for (std::size_t k = 0; k < g; ++k) s += y(k, i) * z(k, j) - z(k, i) * y(k, j);
      if (!s.is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("standard J") {
  const Matrix j = standard_J(2);
  CHECK(j == Matrix({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}));
  CHECK(j * j == -Matrix::identity(4));
  CHECK(is_symplectic_similitude(Matrix::identity(4), 1));
  CHECK(is_symplectic_similitude(Scalar(3) * Matrix::identity(4), 9));
  CHECK_FALSE(is_symplectic_similitude(Scalar(3) * Matrix::identity(4), 3));
}

TEST_CASE("samples are symplectic") {
  for (std::size_t g = 1; g <= 4; ++g)
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const SymplecticSample s = sample_symplectic(g, seed);
      const Matrix& m = s.matrix();
      CHECK(s.multiplier() == Rational(1));
      CHECK(m.transpose() * standard_J(g) * m == standard_J(g));
      CHECK(m.determinant() == Scalar(1));
    }
  CHECK(sample_symplectic(3, 42).matrix() == sample_symplectic(3, 42).matrix());
  CHECK_FALSE(sample_symplectic(3, 42).matrix() == sample_symplectic(3, 43).matrix());
}

TEST_CASE("with_multiplier scales the form") {
  const SymplecticSample s = with_multiplier(sample_symplectic(2, 5), Rational(-2, 5));
  CHECK(s.multiplier() == Rational(-2, 5));
  const Matrix& m = s.matrix();
  CHECK(m.transpose() * standard_J(2) * m == Scalar(Rational(-2, 5)) * standard_J(2));
  const SymplecticSample t = with_multiplier(s, Rational(3));
  CHECK(t.multiplier() == Rational(-6, 5));
  CHECK(is_symplectic_similitude(t.matrix(), Rational(-6, 5)));
}

TEST_CASE("checked constructors reject bad input") {
  CHECK_THROWS_AS(SymplecticSample(Matrix::identity(4), Rational(2)), InvariantViolation);
  CHECK_THROWS_AS(IsotropicFrame(Matrix::identity(2), Matrix({{0, 1}, {0, 0}})), InvariantViolation);
  CHECK_NOTHROW(IsotropicFrame(Matrix::identity(2), Matrix({{1, 2}, {2, 5}})));
}

TEST_CASE("projection lands on V") {
  for (std::size_t g = 1; g <= 4; ++g)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const IsotropicFrame f = project_to_V(sample_symplectic(g, seed));
      CHECK(isotropic_by_sums(f.y(), f.z()));
      CHECK(f.columns().rank() == g);
    }
}

TEST_CASE("completion recovers a symplectic basis") {
  for (std::size_t g = 1; g <= 4; ++g)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const IsotropicFrame f = project_to_V(sample_symplectic(g, 300 + seed));
      const SymplecticSample s = complete_to_symplectic_basis(f);
      CHECK(s.matrix().block(0, 0, 2 * g, g) == f.columns());
      CHECK(s.matrix().transpose() * standard_J(g) * s.matrix() == standard_J(g));
    }
  const IsotropicFrame e1(Matrix::identity(2), Matrix::zero(2, 2));
  CHECK(complete_to_symplectic_basis(e1).matrix() == Matrix::identity(4));
  const IsotropicFrame degenerate(Matrix({{1, 1}, {0, 0}}), Matrix::zero(2, 2));
  CHECK_THROWS_WITH_AS(complete_to_symplectic_basis(degenerate), "frame not full rank", PreconditionError);
}

TEST_CASE("density proxy: Y is usually invertible") {
  // Heuristic stand-in for Zariski density of the sampled frames. Small integer
  // words put real mass on det(Y) = 0, so the default length clears 80% and
  // longer words clear 95% once g >= 2.
  auto invertible_count = [](std::size_t g, int word_length) {
    int n = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed)
      if (!project_to_V(sample_symplectic(g, seed, word_length)).y().determinant().is_zero()) ++n;
    return n;
  };
  for (std::size_t g = 1; g <= 3; ++g) {
    const int n = invertible_count(g, 8);
    MESSAGE("g=" << g << " word length 8, invertible Y: " << n << "/200");
    CHECK(n >= 160);
  }
  for (std::size_t g = 2; g <= 3; ++g) CHECK(invertible_count(g, 24) >= 190);
}
