#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace mandelmat {

using Index = std::int64_t;

/// One nonzero of a sparse integer matrix. Indices are 1-based in all
/// public interfaces, matching the vertex numbering of the digraph family.
struct Entry {
  Index row = 0;
  Index col = 0;
  std::int64_t value = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Coordinate-form sparse matrix with exact integer entries, stored in
/// lexicographic (row, col) order with no duplicates and no explicit zeros.
///
/// All matrix objects of the recursive family (M_n, J_n, S_n, the
/// Jordan-Wielandt matrix, M_n^{-1}) live in this type; assembly is done
/// by ordered block placement so construction stays O(nnz).
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;

  /// Takes ownership of `entries`; throws std::invalid_argument unless the
  /// list is strictly (row, col)-sorted, in range, and free of zeros.
  SparseIntMatrix(Index dim, std::vector<Entry> entries);

  Index dim() const { return dim_; }
  Index nnz() const { return static_cast<Index>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Value at (row, col), zero when the position is not stored. O(log nnz).
  std::int64_t value_at(Index row, Index col) const;

  std::int64_t trace() const;
  bool is_symmetric() const;

  /// Maximum absolute column sum (the induced 1-norm, exact integer).
  std::int64_t max_abs_col_sum() const;
  /// Maximum absolute row sum (the induced infinity-norm, exact integer).
  std::int64_t max_abs_row_sum() const;

  SparseIntMatrix transposed() const;

  Eigen::MatrixXd to_dense() const;

  /// y = A x in double arithmetic. Sizes must match dim().
  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply(std::span<const double> x) const;

  static SparseIntMatrix identity(Index dim);

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  Index dim_ = 0;
  std::vector<Entry> entries_;
};

/// Exact integer product a*b. Intended for the small verification oracles
/// (S_n = M_n J_n, S_n^2 = M_n M_n^T); cost is O(sum of row fill).
SparseIntMatrix multiply_exact(const SparseIntMatrix& a, const SparseIntMatrix& b);

/// Compressed-row view over a SparseIntMatrix for repeated matvecs.
/// Values are converted to double once; the source matrix must outlive it.
class CsrView {
 public:
  explicit CsrView(const SparseIntMatrix& m);

  Index dim() const { return dim_; }

  /// y = A x
  void apply(std::span<const double> x, std::span<double> y) const;

 private:
  Index dim_ = 0;
  std::vector<Index> row_ptr_;
  std::vector<Index> cols_;
  std::vector<double> values_;
};

}  // namespace mandelmat
