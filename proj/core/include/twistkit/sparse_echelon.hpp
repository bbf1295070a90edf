#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "twistkit/scalar.hpp"

namespace twistkit {

/// Sparse vector over word coordinates: sorted (index, nonzero scalar) pairs.
using SparseVec = std::vector<std::pair<std::uint64_t, Scalar>>;

/// Incremental reduced-row-echelon basis over a large coordinate space.
/// Rows are stored sparsely; after finalize() the basis is in RREF (leading
/// ones, tails supported on non-pivot columns only) and queries are cheap.
class SparseEchelon {
 public:
  SparseEchelon(Field f, std::uint64_t ambient);

  Field field() const { return field_; }
  std::uint64_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduce against the current basis and insert if independent.
  /// Returns true if the row increased the rank.
  bool add_row(SparseVec row);

  /// Insert a row known to be part of a valid RREF set together with the
  /// rows already inserted this way (used for the tensor-shift seeding of
  /// graded ideal components).  No reduction is performed.
  void add_trusted_rref_row(SparseVec row);

  /// Back-substitute to full RREF and sort rows by pivot column.
  void finalize();

  bool finalized() const { return finalized_; }
  bool is_pivot(std::uint64_t col) const {
    return pivot_to_row_.count(col) > 0;
  }
  const std::vector<SparseVec>& rows() const { return rows_; }
  /// Ascending pivot columns (valid after finalize()).
  const std::vector<std::uint64_t>& pivot_columns() const { return pivots_; }

  /// Residue of v modulo the row space, supported on non-pivot columns.
  /// Requires finalize().
  SparseVec reduce(const SparseVec& v) const;

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

 private:
  Field field_;
  std::uint64_t ambient_;
  std::vector<SparseVec> rows_;
  std::unordered_map<std::uint64_t, std::size_t> pivot_to_row_;
  std::vector<std::uint64_t> pivots_;
  bool finalized_ = false;

  // dense scratch with epoch stamps, reused across add_row calls
  std::vector<Scalar> scratch_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

}  // namespace twistkit
