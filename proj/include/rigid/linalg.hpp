#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rigid/field.hpp"

namespace rigid {

/// Row-major dense matrix over GF(q), one byte per entry.
class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static DenseMatrix identity(Field field, std::size_t n);
  /// Throws DimensionMismatch if the rows are ragged, IndexOutOfRange if an
  /// entry is not a field element.
  static DenseMatrix from_rows(Field field, const std::vector<std::vector<int>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

  DenseMatrix transpose() const;
  /// Rows listed in `indices`, in that order.
  DenseMatrix select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Rank over GF(q). Uses packed elimination when q == 2.
std::size_t rank(const DenseMatrix& a);

/// Byte-per-entry forward elimination, valid for every q. Pivot is the first
/// row (at or below the current rank) with a nonzero entry in the column,
/// columns scanned left to right.
std::size_t rank_generic(const DenseMatrix& a);

/// Same elimination with rows packed into 64-bit words and XOR updates.
/// Requires q == 2.
std::size_t rank_gf2_packed(const DenseMatrix& a);

/// Greedy row basis: offer rows one at a time; a row is kept iff it is not in
/// the span of the rows kept so far.
class RowSpanner {
 public:
  RowSpanner(Field field, std::size_t cols);

  /// Returns true iff the row increased the rank.
  bool offer(std::span<const Elem> row);

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }

 private:
  bool offer_generic(std::span<const Elem> row);
  bool offer_gf2(std::span<const Elem> row);

  Field field_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Elem>> basis_;
  std::vector<std::vector<std::uint64_t>> packed_basis_;
  std::vector<Elem> scratch_;
  std::vector<std::uint64_t> packed_scratch_;
};

/// Lexicographically first row subset of size rank(a) whose rows are
/// independent, in increasing order.
std::vector<std::size_t> spanning_rows(const DenseMatrix& a);

/// Unique x with a * x = b. Throws DimensionMismatch for non-square a or a
/// wrong-length b, Singular if a is not invertible.
std::vector<Elem> solve(const DenseMatrix& a, std::span<const Elem> b);

/// Throws DimensionMismatch if a.cols() != b.rows() or the fields differ.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

/// Number of differing entries. Throws DimensionMismatch on shape mismatch.
std::uint64_t hamming_distance(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace rigid
