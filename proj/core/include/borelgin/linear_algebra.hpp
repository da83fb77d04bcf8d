#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "borelgin/field.hpp"

namespace borelgin {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const Field& field, std::size_t n);

/// Dense matrix over a Field, row-major.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& other) const;
  Vector apply(const Vector& v) const;
  Matrix transposed() const;

  std::size_t rank() const;
  FieldElement determinant() const;
  /// nullopt when singular.
  std::optional<Matrix> inverse() const;
  /// Basis of {v : M v = 0}.
  std::vector<Vector> kernel() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> reduce();

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

/// An incrementally built echelon basis of a subspace of K^dim. Optionally
/// tracks how each basis row is combined from the inserted vectors, so that a
/// dependent vector can be written in terms of the earlier independent inputs.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t dim);

  /// If v lies in the span of the independent vectors inserted so far, returns
  /// coefficients c with v = sum c_i * independent_i (in insertion order of the
  /// independent vectors). Otherwise inserts v and returns nullopt.
  std::optional<Vector> insert(Vector v);

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    Vector values;
    Vector combination;  // over independent inputs, length grows lazily
  };
  Field field_;
  std::size_t dim_;
  std::vector<Row> rows_;
};

}  // namespace borelgin
