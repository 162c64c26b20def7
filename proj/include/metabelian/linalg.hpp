#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "metabelian/poly.hpp"

namespace metab::linalg {

/// Sparse row: (column, value) pairs sorted by column, no zeros.
template <class T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

using IntegerRow = SparseRow<Integer>;
using RationalRow = SparseRow<Rational>;

/// Clears denominators and removes the content, giving a primitive integer row.
IntegerRow primitive_part(const RationalRow& row);

/// Row echelon form over Z built one row at a time.  Elimination is
/// fraction-free: rows are combined by cross-multiplication and kept
/// primitive.  Pivots are taken at the leftmost nonzero column.
class FractionFreeEchelon {
 public:
  explicit FractionFreeEchelon(std::size_t columns) : columns_(columns) {}

  /// Inserts a row; returns true when it increases the rank.
  bool insert(IntegerRow row);
  bool insert(const RationalRow& row) { return insert(primitive_part(row)); }

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t columns() const noexcept { return columns_; }

  /// Basis of the right kernel {v : r . v = 0 for every inserted row r},
  /// one sparse vector per non-pivot column, in column order.
  std::vector<RationalRow> nullspace() const;

 private:
  std::size_t columns_;
  std::map<std::size_t, IntegerRow> pivots_;
};

/// Rank of a dense integer matrix by Bareiss elimination.  Pivot search
/// scans columns in the given order (identity when empty).
std::size_t bareiss_rank(std::vector<std::vector<Integer>> matrix, const std::vector<std::size_t>& column_order = {});

/// Coordinates of vectors with respect to an independent family, found by
/// tracked rational elimination.
class SpanSolver {
 public:
  explicit SpanSolver(std::size_t columns) : columns_(columns) {}

  /// Appends v to the family when it is independent of the current members.
  bool add(const RationalRow& v);
  std::size_t size() const noexcept { return size_; }

  /// Dense coefficients c with v = sum c_k family_k, or nullopt if v is not
  /// in the span.
  std::optional<std::vector<Rational>> coordinates(const RationalRow& v) const;

 private:
  struct PivotRow {
    RationalRow row;
    RationalRow combination;
  };
  std::size_t columns_;
  std::size_t size_ = 0;
  std::map<std::size_t, PivotRow> pivots_;
};

}  // namespace metab::linalg
