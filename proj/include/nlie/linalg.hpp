#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nlie/scalar.hpp"

namespace nlie {

/// Sparse column: (row, value) pairs sorted by row, no explicit zeros.
using SparseColumn = std::vector<std::pair<std::uint64_t, Scalar>>;

struct SparseMatrix {
  std::uint64_t rows = 0;
  std::vector<SparseColumn> columns;

  std::size_t cols() const { return columns.size(); }
  std::size_t nonzeros() const;
  Vector column_dense(std::size_t j) const;
  /// M * x for a sparse x over the columns.
  SparseColumn apply(const SparseColumn& x) const;
};

SparseColumn sparse_from_dense(const Vector& v);
SparseColumn sparse_add(const SparseColumn& a, const Scalar& s, const SparseColumn& b);

struct RankResult {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  /// Columns that received a pivot, in increasing order.
  std::vector<std::size_t> pivot_columns;
  /// Kernel basis as sparse vectors over the columns (only if requested).
  std::vector<SparseColumn> kernel;
};

/// Exact rank over Q by fraction-free column elimination: each column is
/// cleared to integers, then reduced against earlier pivots keyed by their
/// leading row, dividing out the content after every step. Deterministic.
RankResult rank_and_kernel(const SparseMatrix& m, bool want_kernel);

}  // namespace nlie
