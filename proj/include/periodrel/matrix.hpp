#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "periodrel/scalar.hpp"

namespace periodrel {

/// Dense row-major matrix of exact scalars. Indices are 0-based.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// diag(values...)
  static Matrix diagonal(const std::vector<Scalar>& values);
  /// Matrix unit E_ij (0-based).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  static Matrix hstack(const Matrix& left, const Matrix& right);
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  /// [[a, b], [c, d]] from equally sized square blocks.
  static Matrix from_blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

  bool is_zero() const;
  bool is_scalar_multiple_of_identity() const;
  bool is_diagonal() const;
  bool is_symmetric() const;
  bool all_rational() const;

  /// Fraction-free (Bareiss) elimination; exact.
  Scalar determinant() const;
  std::size_t rank() const;
  /// Throws PreconditionError when singular.
  Matrix inverse() const;

  /// Kronecker product.
  static Matrix kron(const Matrix& a, const Matrix& b);
  /// Column-major vectorisation vec(X).
  Matrix vec() const;
  static Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Result of solving A x = b exactly.
struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  /// A particular solution (free variables set as requested); empty when inconsistent.
  Matrix solution;
  /// Indices of free (non-pivot) unknowns.
  std::vector<std::size_t> free_columns;
};

/// Gauss-Jordan over the exact field. `free_values`, when given, supplies
/// the value of each free unknown in order (defaults to zero).
LinearSolution solve_linear(const Matrix& a, const Matrix& b,
                            const std::vector<Scalar>& free_values = {});

}  // namespace periodrel
