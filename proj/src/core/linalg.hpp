#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core/lattice.hpp"

namespace nf {

/// Sparse integer vector: (column, value) pairs, strictly increasing columns,
/// no zero values.
using SparseVector = std::vector<std::pair<std::size_t, BigInt>>;

/// Clears denominators (multiplies by their lcm); the row space is unchanged.
SparseVector to_integer_vector(const std::map<std::size_t, Rational>& entries);

/// Divides by the content and makes the leading entry positive.
void make_primitive(SparseVector& v);

/// Incremental fraction-free row echelon form over the integers. Rows are kept
/// primitive, so entry growth stays at the level of the minors involved.
class RowEchelon {
 public:
  RowEchelon() = default;

  /// Returns true iff the row was independent of the current rows.
  bool insert(SparseVector row);

  bool contains(SparseVector row) const;
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }

 private:
  SparseVector reduce(SparseVector row) const;

  std::vector<SparseVector> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

std::size_t rank_of(const std::vector<SparseVector>& rows);

/// Basis of span(u) ∩ span(w) by the Zassenhaus sum-intersection method.
/// `dimension` bounds every column index.
std::vector<SparseVector> intersect_spans(const std::vector<SparseVector>& u,
                                          const std::vector<SparseVector>& w,
                                          std::size_t dimension);

/// Bareiss determinant of a square matrix.
BigInt determinant(std::vector<std::vector<BigInt>> matrix);

}  // namespace nf
