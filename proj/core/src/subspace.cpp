#include "twistkit/subspace.hpp"

namespace twistkit {

Subspace Subspace::span(const Matrix& rows) {
  auto [m, piv] = rref(rows);
  return Subspace(std::move(m), std::move(piv));
}

Subspace Subspace::zero(Field f, std::size_t ambient) {
  return Subspace(Matrix(f, 0, ambient), {});
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(f, ambient), std::move(piv));
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_dim() != o.ambient_dim())
    throw ScalarError("ambient dimension mismatch");
  Matrix stacked(field(), dim() + o.dim(), ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      stacked.at(i, j) = basis_.at(i, j);
  for (std::size_t i = 0; i < o.dim(); ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      stacked.at(dim() + i, j) = o.basis_.at(i, j);
  return span(stacked);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_dim() != o.ambient_dim())
    throw ScalarError("ambient dimension mismatch");
  // v = x S = y T  <=>  (x, y) in ker [S^t | -T^t]
  const std::size_t k1 = dim(), k2 = o.dim();
  Matrix sys(field(), ambient_dim(), k1 + k2);
  for (std::size_t j = 0; j < ambient_dim(); ++j) {
    for (std::size_t i = 0; i < k1; ++i) sys.at(j, i) = basis_.at(i, j);
    for (std::size_t i = 0; i < k2; ++i)
      sys.at(j, k1 + i) = -o.basis_.at(i, j);
  }
  Subspace coeff = kernel(sys);
  Matrix rows(field(), coeff.dim(), ambient_dim());
  for (std::size_t r = 0; r < coeff.dim(); ++r)
    for (std::size_t i = 0; i < k1; ++i) {
      const Scalar& c = coeff.basis().at(r, i);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_dim(); ++j)
        rows.at(r, j) += c * basis_.at(i, j);
    }
  return span(rows);
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_dim())
    throw ScalarError("ambient dimension mismatch");
  std::vector<Scalar> w = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar& c = w[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar cc = c;
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      w[j] -= cc * basis_.at(i, j);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  for (std::size_t i = 0; i < o.dim(); ++i) {
    std::vector<Scalar> row;
    row.reserve(ambient_dim());
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      row.push_back(o.basis_.at(i, j));
    if (!contains(row)) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return pivots_ == o.pivots_ && basis_ == o.basis_;
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace kernel(const Matrix& m) {
  auto [r, piv] = rref(m);
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (pi < piv.size() && piv[pi] == c) { ++pi; continue; }
      free_cols.push_back(c);
    }
  }
  Matrix rows(m.field(), free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    rows.at(k, free_cols[k]) = Scalar::one(m.field());
    for (std::size_t i = 0; i < piv.size(); ++i)
      rows.at(k, piv[i]) = -r.at(i, free_cols[k]);
  }
  return Subspace::span(rows);
}

}  // namespace twistkit
