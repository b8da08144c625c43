#include "periodrel/matrix.hpp"

#include <sstream>
#include <utility>

#include "periodrel/errors.hpp"

namespace periodrel {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionError("block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  if (left.rows_ != right.rows_) throw DimensionError("hstack: row counts differ");
  Matrix m(left.rows_, left.cols_ + right.cols_);
  m.set_block(0, 0, left);
  m.set_block(0, left.cols_, right);
  return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw DimensionError("vstack: column counts differ");
  Matrix m(top.rows_ + bottom.rows_, top.cols_);
  m.set_block(0, 0, top);
  m.set_block(top.rows_, 0, bottom);
  return m;
}

Matrix Matrix::from_blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_scalar_multiple_of_identity() const {
  if (!is_square() || !is_diagonal()) return false;
  for (std::size_t i = 1; i < rows_; ++i)
    if (!((*this)(i, i) == (*this)(0, 0))) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool Matrix::all_rational() const {
  for (const auto& x : data_)
    if (!x.is_rational()) return false;
  return true;
}

namespace {

// In-place fraction-free elimination. Returns the rank; `sign` tracks row swaps
// and `last_pivot` ends as the determinant of the leading rank x rank block
// after the Bareiss recurrence.
std::size_t bareiss(Matrix& m, int& sign, Scalar& last_pivot) {
  const std::size_t rows = m.rows(), cols = m.cols();
  sign = 1;
  Scalar prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
      sign = -sign;
    }
    const Scalar p = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Scalar lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = (m(i, j) * p - lead * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  last_pivot = prev;
  return r;
}

}  // namespace

Scalar Matrix::determinant() const {
  if (!is_square()) throw DimensionError("determinant of non-square matrix");
  if (rows_ == 0) return 1;
  Matrix work = *this;
  int sign = 1;
  Scalar pivot;
  const std::size_t r = bareiss(work, sign, pivot);
  if (r < rows_) return 0;
  return sign < 0 ? -pivot : pivot;
}

std::size_t Matrix::rank() const {
  Matrix work = *this;
  int sign = 1;
  Scalar pivot;
  return bareiss(work, sign, pivot);
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw DimensionError("inverse of non-square matrix");
  const auto sol = solve_linear(*this, identity(rows_));
  if (sol.rank < rows_) throw PreconditionError("matrix is singular");
  return sol.solution;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows_; ++p)
        for (std::size_t q = 0; q < b.cols_; ++q) k(i * b.rows_ + p, j * b.cols_ + q) = a(i, j) * b(p, q);
    }
  return k;
}

Matrix Matrix::vec() const {
  Matrix v(rows_ * cols_, 1);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) v(j * rows_ + i, 0) = (*this)(i, j);
  return v;
}

Matrix Matrix::unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows_ != rows * cols || v.cols_ != 1) throw DimensionError("unvec: bad length");
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = v(j * rows + i, 0);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
    }
  return m;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

LinearSolution solve_linear(const Matrix& a, const Matrix& b,
                            const std::vector<Scalar>& free_values) {
  if (a.rows() != b.rows()) throw DimensionError("solve: right-hand side has wrong row count");
  const std::size_t n = a.cols(), rhs = b.cols();
  Matrix aug = Matrix::hstack(a, b);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < aug.rows(); ++c) {
    std::size_t piv = r;
    while (piv < aug.rows() && aug(piv, c).is_zero()) ++piv;
    if (piv == aug.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(piv, j), aug(r, j));
    const Scalar inv = aug(r, c).inverse();
    for (std::size_t j = c; j < aug.cols(); ++j) aug(r, j) *= inv;
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i == r || aug(i, c).is_zero()) continue;
      const Scalar f = aug(i, c);
      for (std::size_t j = c; j < aug.cols(); ++j) aug(i, j) -= f * aug(r, j);
    }
    pivots.push_back(c);
    ++r;
  }

  LinearSolution out;
  out.rank = r;
  for (std::size_t i = r; i < aug.rows(); ++i)
    for (std::size_t j = n; j < aug.cols(); ++j)
      if (!aug(i, j).is_zero()) return out;
  out.consistent = true;

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) out.free_columns.push_back(c);
  if (!free_values.empty() && free_values.size() != out.free_columns.size()) {
    throw DimensionError("solve: wrong number of free values");
  }

  out.solution = Matrix(n, rhs);
  for (std::size_t k = 0; k < out.free_columns.size(); ++k) {
    const Scalar v = free_values.empty() ? Scalar(0) : free_values[k];
    for (std::size_t j = 0; j < rhs; ++j) out.solution(out.free_columns[k], j) = v;
  }
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < rhs; ++j) {
      Scalar x = aug(i, n + j);
      for (auto fc : out.free_columns) x -= aug(i, fc) * out.solution(fc, j);
      out.solution(pivots[i], j) = x;
    }
  }
  return out;
}

}  // namespace periodrel
