#pragma once

#include "twistkit/matrix.hpp"

namespace twistkit {

/// A subspace of a coordinate space, held in canonical form: the RREF basis
/// with its pivot columns.  Two subspaces are equal iff their RREF matrices
/// are entry-wise equal, so every "X = Y as subspaces" claim is a bit-exact
/// comparison.
class Subspace {
 public:
  /// Span of the rows of `rows` inside the `ambient`-dimensional space.
  static Subspace span(const Matrix& rows);
  static Subspace zero(Field f, std::size_t ambient);
  static Subspace full(Field f, std::size_t ambient);

  Field field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

  /// {f : <f, s> = 0 for all s in *this} under the standard coordinate
  /// pairing; lives in the dual coordinate space of equal dimension.
  Subspace annihilator() const;

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Solution space of M x = 0; dimension = cols - rank.
Subspace kernel(const Matrix& m);

}  // namespace twistkit
