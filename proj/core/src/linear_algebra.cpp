#include "borelgin/linear_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace borelgin {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix dimensions do not match");
  Matrix r(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r.at(i, j) += a * other.at(k, j);
    }
  }
  return r;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector dimension does not match");
  Vector r = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  }
  return r;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

std::vector<std::size_t> Matrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && at(p, col).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
    }
    FieldElement inv = at(row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      FieldElement f = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.reduce().size();
}

FieldElement Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix m = *this;
  FieldElement det = field_.one();
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t p = col;
    while (p < rows_ && m.at(p, col).is_zero()) ++p;
    if (p == rows_) return field_.zero();
    if (p != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    FieldElement inv = m.at(col, col).inverse();
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      FieldElement f = m.at(i, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = field_.one();
  }
  auto pivots = aug.reduce();
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(field_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  }
  return inv;
}

std::vector<Vector> Matrix::kernel() const {
  Matrix m = *this;
  auto pivots = m.reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(field_, cols_);
    v[free] = field_.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

EchelonBasis::EchelonBasis(Field field, std::size_t dim) : field_(field), dim_(dim) {}

std::optional<Vector> EchelonBasis::insert(Vector v) {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension does not match");
  const std::size_t k = rows_.size();
  Vector comb = zero_vector(field_, k + 1);
  for (const Row& row : rows_) {
    if (v[row.pivot].is_zero()) continue;
    FieldElement f = v[row.pivot];
    for (std::size_t j = row.pivot; j < dim_; ++j) {
      if (!row.values[j].is_zero()) v[j] -= f * row.values[j];
    }
    for (std::size_t j = 0; j < row.combination.size(); ++j) {
      if (!row.combination[j].is_zero()) comb[j] += f * row.combination[j];
    }
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot].is_zero()) ++pivot;
  if (pivot == dim_) {
    comb.pop_back();
    return comb;
  }
  // New row r with r = (input - sum comb_j * independent_j) / v[pivot].
  FieldElement inv = v[pivot].inverse();
  for (std::size_t j = pivot; j < dim_; ++j) v[j] *= inv;
  for (std::size_t j = 0; j < k; ++j) comb[j] = -comb[j] * inv;
  comb[k] = inv;
  // Keep existing rows reduced at the new pivot so later reductions stay
  // single-pass.
  for (Row& row : rows_) {
    if (row.values[pivot].is_zero()) continue;
    FieldElement f = row.values[pivot];
    for (std::size_t j = pivot; j < dim_; ++j) {
      if (!v[j].is_zero()) row.values[j] -= f * v[j];
    }
    row.combination.resize(k + 1, field_.zero());
    for (std::size_t j = 0; j <= k; ++j) {
      if (!comb[j].is_zero()) row.combination[j] -= f * comb[j];
    }
  }
  rows_.push_back(Row{pivot, std::move(v), std::move(comb)});
  return std::nullopt;
}

}  // namespace borelgin
