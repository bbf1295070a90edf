#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twistkit/scalar.hpp"

namespace twistkit {

/// Dense row-major matrix over the active field.  Carrier for degree-one
/// linear maps and for small relation-space computations; the big graded
/// ideal components use the sparse echelon machinery instead.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix transpose() const;
  /// Kronecker product, row convention: (A (x) B)((j,k),(l,m)) = A(j,l) B(k,m).
  Matrix kron(const Matrix& o) const;
  std::optional<Matrix> inverse() const;

  bool operator==(const Matrix& o) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix matrix;                     // RREF with zero rows removed
  std::vector<std::size_t> pivots;   // ascending pivot columns
};

/// Reduced row echelon form; deterministic for a fixed row order.
RrefResult rref(const Matrix& m);

}  // namespace twistkit
