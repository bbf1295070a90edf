#include "twistkit/matrix.hpp"

#include <sstream>

namespace twistkit {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols),
      e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ScalarError("matrix shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ScalarError("matrix shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t j = 0; j < rows_; ++j)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Scalar& a = at(j, l);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t m = 0; m < o.cols_; ++m)
          r.at(j * o.rows_ + k, l * o.cols_ + m) = a * o.at(k, m);
    }
  return r;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  // Gauss-Jordan on [A | I]
  Matrix a = *this;
  Matrix inv = identity(field_, rows_);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t piv = rows_;
    for (std::size_t r = col; r < rows_; ++r)
      if (!a.at(r, col).is_zero()) { piv = r; break; }
    if (piv == rows_) return std::nullopt;
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap(a.at(piv, j), a.at(col, j));
      std::swap(inv.at(piv, j), inv.at(col, j));
    }
    Scalar d = a.at(col, col).inverse();
    for (std::size_t j = 0; j < cols_; ++j) {
      a.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Scalar c = a.at(r, col);
      for (std::size_t j = 0; j < cols_; ++j) {
        a.at(r, j) -= c * a.at(col, j);
        inv.at(r, j) -= c * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = a.rows();
    for (std::size_t r = row; r < a.rows(); ++r)
      if (!a.at(r, col).is_zero()) { piv = r; break; }
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      std::swap(a.at(piv, j), a.at(row, j));
    Scalar d = a.at(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= d;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      Scalar c = a.at(r, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(r, j) -= c * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix out(m.field(), pivots.size(), a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  return {out, pivots};
}

}  // namespace twistkit
