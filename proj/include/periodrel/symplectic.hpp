#pragma once

#include <cstdint>
#include <cstddef>

#include "periodrel/matrix.hpp"
#include "periodrel/rational.hpp"

namespace periodrel {

/// J = [[0, I_g], [-I_g, 0]].
Matrix standard_J(std::size_t g);

/// M^t J M == mu J, exactly.
bool is_symplectic_similitude(const Matrix& m, const Scalar& mu);

/// A 2g x 2g rational matrix with M^t J M = mu J. Construction re-checks the
/// identity and throws InvariantViolation when it fails.
class SymplecticSample {
 public:
  SymplecticSample(Matrix m, Rational multiplier);

  const Matrix& matrix() const { return m_; }
  const Rational& multiplier() const { return mu_; }
  std::size_t g() const { return m_.rows() / 2; }

 private:
  Matrix m_;
  Rational mu_;
};

/// Product of word_length random generators drawn from
/// diag(A, A^{-t}) with A unimodular, [[I, B], [0, I]] with B symmetric,
/// and J itself; entries of the building blocks lie in {-2, ..., 2}.
SymplecticSample sample_symplectic(std::size_t g, std::uint64_t seed, int word_length = 8);

/// s * diag(I_g, mu I_g); the multiplier becomes s.multiplier() * mu.
SymplecticSample with_multiplier(const SymplecticSample& s, const Rational& mu);

/// The stacked pair (Y; Z) of g x g blocks with Y^t Z - Z^t Y = 0.
class IsotropicFrame {
 public:
  /// Throws InvariantViolation unless Y^t Z = Z^t Y.
  IsotropicFrame(Matrix y, Matrix z);

  const Matrix& y() const { return y_; }
  const Matrix& z() const { return z_; }
  std::size_t g() const { return y_.rows(); }
  /// (Y; Z) as a 2g x g matrix.
  Matrix columns() const { return Matrix::vstack(y_, z_); }

 private:
  Matrix y_;
  Matrix z_;
};

/// First g columns of the sample.
IsotropicFrame project_to_V(const SymplecticSample& s);

/// Extends a full-rank isotropic frame W to M = [W | U] with M^t J M = J.
/// Dual vectors start from standard basis vectors chosen in index order.
SymplecticSample complete_to_symplectic_basis(const IsotropicFrame& frame);

}  // namespace periodrel
