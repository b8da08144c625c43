#include "periodrel/symplectic.hpp"

#include <random>

#include "periodrel/errors.hpp"

namespace periodrel {

Matrix standard_J(std::size_t g) {
  Matrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = Scalar(1);
    j(g + i, i) = Scalar(-1);
  }
  return j;
}

bool is_symplectic_similitude(const Matrix& m, const Scalar& mu) {
  if (!m.is_square() || m.rows() % 2 != 0) return false;
  const Matrix j = standard_J(m.rows() / 2);
  return m.transpose() * j * m == mu * j;
}

SymplecticSample::SymplecticSample(Matrix m, Rational multiplier)
    : m_(std::move(m)), mu_(std::move(multiplier)) {
  if (mu_.is_zero()) throw PreconditionError("symplectic multiplier must be nonzero");
  if (!m_.all_rational()) throw PreconditionError("symplectic samples are rational");
  if (!is_symplectic_similitude(m_, Scalar(mu_)))
    throw InvariantViolation("matrix is not a symplectic similitude with the stated multiplier");
}

namespace {

Matrix random_unimodular(std::size_t g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<std::size_t> index(0, g - 1);
  Matrix a = Matrix::identity(g);
  if (g == 1) {
    if (rng() & 1u) a(0, 0) = Scalar(-1);
    return a;
  }
  for (std::size_t step = 0; step < g + 1; ++step) {
    const std::size_t i = index(rng);
    std::size_t j = index(rng);
    if (i == j) j = (j + 1) % g;
    const Scalar c(coeff(rng));
    // Row operation r_i += c r_j keeps det = 1.
    for (std::size_t k = 0; k < g; ++k) a(i, k) += c * a(j, k);
  }
  return a;
}

// Generator kinds: 0 block diagonal, 1 upper shear, 2 J.
Matrix random_generator(std::size_t g, int previous_kind, int& kind_out, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (;;) {
    const int k = kind(rng);
    // J J = -I: a repeated J is a degenerate draw.
    if (k == 2 && previous_kind == 2) continue;
    kind_out = k;
    switch (k) {
      case 0: {
        const Matrix a = random_unimodular(g, rng);
        return Matrix::from_blocks(a, Matrix::zero(g, g), Matrix::zero(g, g),
                                   a.inverse().transpose());
      }
      case 1: {
        Matrix b(g, g);
        // B = 0 is the identity, a degenerate draw.
        while (b.is_zero())
          for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = i; j < g; ++j) b(i, j) = b(j, i) = Scalar(coeff(rng));
        return Matrix::from_blocks(Matrix::identity(g), b, Matrix::zero(g, g), Matrix::identity(g));
      }
      default:
        return standard_J(g);
    }
  }
}

}  // namespace

SymplecticSample sample_symplectic(std::size_t g, std::uint64_t seed, int word_length) {
  if (g < 1) throw PreconditionError("sample_symplectic requires g >= 1");
  if (word_length < 0) throw PreconditionError("word length must be nonnegative");
  std::mt19937_64 rng(seed);
  Matrix m = Matrix::identity(2 * g);
  int previous = -1;
  for (int step = 0; step < word_length; ++step) m = m * random_generator(g, previous, previous, rng);
  return SymplecticSample(std::move(m), Rational(1));
}

SymplecticSample with_multiplier(const SymplecticSample& s, const Rational& mu) {
  if (mu.is_zero()) throw PreconditionError("multiplier must be nonzero");
  const std::size_t g = s.g();
  Matrix d = Matrix::identity(2 * g);
  for (std::size_t i = g; i < 2 * g; ++i) d(i, i) = Scalar(mu);
  return SymplecticSample(s.matrix() * d, s.multiplier() * mu);
}

IsotropicFrame::IsotropicFrame(Matrix y, Matrix z) : y_(std::move(y)), z_(std::move(z)) {
  if (!y_.is_square() || y_.rows() != z_.rows() || y_.cols() != z_.cols())
    throw DimensionError("isotropic frame blocks must be equal square matrices");
  if (!(y_.transpose() * z_ == z_.transpose() * y_))
    throw InvariantViolation("frame is not isotropic: Y^t Z != Z^t Y");
}

IsotropicFrame project_to_V(const SymplecticSample& s) {
  const std::size_t g = s.g();
  return IsotropicFrame(s.matrix().block(0, 0, g, g), s.matrix().block(g, 0, g, g));
}

SymplecticSample complete_to_symplectic_basis(const IsotropicFrame& frame) {
  const std::size_t g = frame.g();
  const Matrix w = frame.columns();
  if (w.rank() < g) throw PreconditionError("frame not full rank");
  const Matrix j = standard_J(g);
  const Matrix wtj = w.transpose() * j;  // g x 2g, rank g

  // Pivot columns of W^t J, scanned in index order.
  std::vector<std::size_t> pivots;
  Matrix chosen(g, 0);
  for (std::size_t c = 0; c < 2 * g && pivots.size() < g; ++c) {
    Matrix trial = Matrix::hstack(chosen, wtj.block(0, c, g, 1));
    if (trial.rank() == pivots.size() + 1) {
      chosen = std::move(trial);
      pivots.push_back(c);
    }
  }
  // U0 = E_P C with (W^t J E_P) C = I, so W^t J U0 = I.
  const Matrix c = chosen.inverse();
  Matrix u0(2 * g, g);
  for (std::size_t k = 0; k < g; ++k)
    for (std::size_t col = 0; col < g; ++col) u0(pivots[k], col) = c(k, col);
  // U = U0 + W K / 2 with K = U0^t J U0 makes U isotropic and keeps W^t J U = I.
  const Matrix k = u0.transpose() * j * u0;
  const Matrix u = u0 + Scalar(Rational(1, 2)) * (w * k);
  return SymplecticSample(Matrix::hstack(w, u), Rational(1));
}

}  // namespace periodrel
