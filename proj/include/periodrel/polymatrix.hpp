#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "periodrel/matrix.hpp"
#include "periodrel/multipoly.hpp"

namespace periodrel {

/// Largest size for which symbolic determinants are expanded.
inline constexpr std::size_t kSymbolicDeterminantCap = 4;

/// Dense matrix of polynomials. Indices are 0-based.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);

  static PolyMatrix identity(std::size_t n);
  /// The g x g matrix of variables (block_ij).
  static PolyMatrix symbolic(Block block, std::size_t g);
  static PolyMatrix from_numeric(const Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix transpose() const;
  bool is_zero() const;
  /// Numeric matrix with each entry evaluated at (Y, Z).
  Matrix evaluate_at(const Matrix& y, const Matrix& z) const;
  /// Entrywise simultaneous substitution.
  PolyMatrix substitute(const std::unordered_map<std::uint32_t, MultiPoly>& images) const;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const MultiPoly& c, const PolyMatrix& m);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MultiPoly> data_;
};

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix transpose(const PolyMatrix& m);
PolyMatrix scalar_mul(const MultiPoly& c, const PolyMatrix& m);

/// Exact determinant. Constant matrices use Bareiss elimination; symbolic
/// ones use memoised cofactor expansion up to kSymbolicDeterminantCap.
MultiPoly determinant(const PolyMatrix& m);

/// Transposed cofactor matrix: m * adjugate(m) = det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);

}  // namespace periodrel
