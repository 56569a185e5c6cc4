#pragma once

// Dense matrices over a division ring with scalars acting on the left:
// row reduction T A = R, rank, left null spaces and left solves lambda A = b.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewpoly/algebra.hpp"

namespace skewpoly {

using RowVector = std::vector<Element>;

class DRMatrix {
 public:
  DRMatrix(Ring ring, std::size_t rows, std::size_t cols);
  static DRMatrix identity(const Ring& ring, std::size_t size);
  /// From a list of rows; all rows must have the same length.
  static DRMatrix from_rows(const Ring& ring, const std::vector<RowVector>& rows, std::size_t cols = 0);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  RowVector row(std::size_t r) const;
  RowVector column(std::size_t c) const;

  /// Optional provenance labels (monomials / points for Vandermonde matrices).
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  friend bool operator==(const DRMatrix& a, const DRMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// A * B.
DRMatrix operator*(const DRMatrix& a, const DRMatrix& b);

struct Pivot {
  std::size_t row;         // row of R holding the pivot
  std::size_t col;         // pivot column
  std::size_t source_row;  // row of A that supplied it
};

struct RowReduction {
  DRMatrix reduced;    // R, reduced row-echelon form with unit pivots
  DRMatrix transform;  // T, invertible, T A = R
  std::vector<Pivot> pivots;
};

/// Left row space grown one row at a time. Accepted rows are stored reduced
/// against the earlier ones, together with their combination of the
/// accepted input rows, so tall matrices never need a rows x rows transform.
class RowSpace {
 public:
  RowSpace(Ring ring, std::size_t cols);
  /// Accepts `row` and returns true when it is independent of the rows so far.
  bool add(const RowVector& row);
  /// mu with sum_k mu_k row_k = b over the accepted rows, if b is in the span.
  std::optional<RowVector> express(const RowVector& b) const;
  std::size_t rank() const { return reduced_.size(); }
  std::size_t cols() const { return cols_; }
  /// Positions, among all rows offered to add(), of the accepted ones.
  const std::vector<std::size_t>& accepted() const { return accepted_; }

 private:
  Ring ring_;
  std::size_t cols_;
  std::size_t offered_ = 0;
  std::vector<RowVector> reduced_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<RowVector> combos_;
  std::vector<std::size_t> accepted_;
};

/// Column space with scalars acting on the right: the span of columns c_k
/// is { sum_k c_k mu_k }.
class ColumnSpace {
 public:
  explicit ColumnSpace(Ring ring) : ring_(std::move(ring)) {}
  /// Accepts `column` and returns true when it enlarges the span.
  bool add(const std::vector<Element>& column);
  bool contains(const std::vector<Element>& column) const;
  std::size_t rank() const { return reduced_.size(); }

 private:
  std::vector<Element> residual(std::vector<Element> column) const;

  Ring ring_;
  std::vector<std::vector<Element>> reduced_;
  std::vector<std::size_t> pivot_rows_;
};

/// Gauss-Jordan elimination by left row operations. The pivot of each column
/// is the first remaining row (in current order) with a nonzero entry.
RowReduction row_reduce_left(const DRMatrix& a);

/// Row rank, which equals column rank over a division ring.
std::size_t rank(const DRMatrix& a);

/// A basis of {lambda : lambda A = 0}, of size rows - rank.
std::vector<RowVector> left_null_space(const DRMatrix& a);

/// Some lambda with lambda A = b, supported on the first rows of A (in order)
/// that are independent of the rows before them. Throws NoSolution when b is not in the left row space.
RowVector solve_left(const DRMatrix& a, const RowVector& b);

/// lambda A.
RowVector left_multiply(const RowVector& lambda, const DRMatrix& a);

}  // namespace skewpoly
