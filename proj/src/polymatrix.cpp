#include "periodrel/polymatrix.hpp"

#include <algorithm>
#include <map>

#include "periodrel/errors.hpp"

namespace periodrel {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly(Scalar(1));
  return m;
}

PolyMatrix PolyMatrix::symbolic(Block block, std::size_t g) {
  PolyMatrix m(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      m(i, j) = MultiPoly::variable(
          {block, static_cast<std::uint8_t>(i + 1), static_cast<std::uint8_t>(j + 1), 1});
  return m;
}

PolyMatrix PolyMatrix::from_numeric(const Matrix& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = MultiPoly(m(i, j));
  return p;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

Matrix PolyMatrix::evaluate_at(const Matrix& y, const Matrix& z) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = periodrel::evaluate_at((*this)(i, j), y, z);
  return out;
}

PolyMatrix PolyMatrix::substitute(const std::unordered_map<std::uint32_t, MultiPoly>& images) const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].substitute(images);
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("polynomial matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("polynomial matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("polynomial matrix product shape mismatch");
  PolyMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const MultiPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

PolyMatrix operator*(const MultiPoly& c, const PolyMatrix& m) {
  PolyMatrix out(m.rows_, m.cols_);
  for (std::size_t k = 0; k < m.data_.size(); ++k) out.data_[k] = c * m.data_[k];
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string PolyMatrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ",\n [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
    s += "]";
  }
  return s + "]";
}

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b) { return a * b; }
PolyMatrix transpose(const PolyMatrix& m) { return m.transpose(); }
PolyMatrix scalar_mul(const MultiPoly& c, const PolyMatrix& m) { return c * m; }

namespace {

// Cofactor expansion along the first used row; memo keyed by the column mask
// of the remaining minor. Rows are consumed in order, so the mask determines
// the row too.
class MinorExpander {
 public:
  MinorExpander(const PolyMatrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols)
      : m_(m), rows_(std::move(rows)), cols_(std::move(cols)) {}

  MultiPoly det() { return expand(0, (1u << cols_.size()) - 1); }

 private:
  MultiPoly expand(std::size_t depth, unsigned mask) {
    if (mask == 0) return MultiPoly(Scalar(1));
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    MultiPoly sum;
    int sign = 1;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (!(mask & (1u << c))) continue;
      const MultiPoly& entry = m_(rows_[depth], cols_[c]);
      if (!entry.is_zero()) {
        MultiPoly t = entry * expand(depth + 1, mask & ~(1u << c));
        if (sign > 0) sum += t; else sum -= t;
      }
      sign = -sign;
    }
    memo_.emplace(mask, sum);
    return sum;
  }

  const PolyMatrix& m_;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
  std::map<unsigned, MultiPoly> memo_;
};

bool all_constant(const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_constant()) return false;
  return true;
}

MultiPoly minor_det(const PolyMatrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  if (rows.empty()) return MultiPoly(Scalar(1));
  if (rows.size() > kSymbolicDeterminantCap)
    throw PreconditionError("symbolic determinant limited to size " +
                            std::to_string(kSymbolicDeterminantCap));
  return MinorExpander(m, std::move(rows), std::move(cols)).det();
}

Matrix constant_part(const PolyMatrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).constant_term();
  return out;
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  if (all_constant(m)) return MultiPoly(constant_part(m).determinant());
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return minor_det(m, idx, idx);
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  PolyMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = MultiPoly(Scalar(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(j, i) = (-1)^(i+j) det(m without row i, column j)
      std::vector<std::size_t> rows, cols;
      for (std::size_t r = 0; r < n; ++r)
        if (r != i) rows.push_back(r);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) cols.push_back(c);
      MultiPoly minor;
      if (all_constant(m)) {
        Matrix sub(n - 1, n - 1);
        for (std::size_t r = 0; r + 1 < n; ++r)
          for (std::size_t c = 0; c + 1 < n; ++c) sub(r, c) = m(rows[r], cols[c]).constant_term();
        minor = MultiPoly(sub.determinant());
      } else {
        minor = minor_det(m, rows, cols);
      }
      adj(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  return adj;
}

}  // namespace periodrel
