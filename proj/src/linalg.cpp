#include "skewpoly/linalg.hpp"

#include <utility>

namespace skewpoly {

DRMatrix::DRMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, ring.zero()) {}

DRMatrix DRMatrix::identity(const Ring& ring, std::size_t size) {
  DRMatrix m(ring, size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = ring.one();
  return m;
}

DRMatrix DRMatrix::from_rows(const Ring& ring, const std::vector<RowVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  DRMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidInput, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].ring() == ring)) throw Error(ErrorCode::RingMismatch, "matrix entry from another ring");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

RowVector DRMatrix::row(std::size_t r) const {
  return RowVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RowVector DRMatrix::column(std::size_t c) const {
  RowVector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

DRMatrix operator*(const DRMatrix& a, const DRMatrix& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::RingMismatch, "matrices over different rings");
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidInput, "matrix shapes do not chain");
  DRMatrix out(a.ring(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a(r, l).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (!b(l, c).is_zero()) out(r, c) += a(r, l) * b(l, c);
      }
    }
  }
  return out;
}

namespace {

// row_target <- row_target - factor * row_source, on columns [from, cols).
void subtract_row(DRMatrix& m, std::size_t target, std::size_t source, const Element& factor, std::size_t from = 0) {
  for (std::size_t c = from; c < m.cols(); ++c) {
    if (!m(source, c).is_zero()) m(target, c) -= factor * m(source, c);
  }
}

void scale_row(DRMatrix& m, std::size_t r, const Element& factor, std::size_t from = 0) {
  for (std::size_t c = from; c < m.cols(); ++c) {
    if (!m(r, c).is_zero()) m(r, c) = factor * m(r, c);
  }
}

void swap_rows(DRMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

RowReduction row_reduce_left(const DRMatrix& a) {
  const Ring& ring = a.ring();
  RowReduction out{a, DRMatrix::identity(ring, a.rows()), {}};
  DRMatrix& r = out.reduced;
  DRMatrix& t = out.transform;
  // origin[i] is the row of A currently stored at row i of R.
  std::vector<std::size_t> origin(a.rows());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;

  std::size_t next = 0;
  for (std::size_t col = 0; col < a.cols() && next < a.rows(); ++col) {
    std::size_t pivot = next;
    while (pivot < a.rows() && r(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    swap_rows(r, next, pivot);
    swap_rows(t, next, pivot);
    std::swap(origin[next], origin[pivot]);

    const Element inverse = r(next, col).inverse();
    scale_row(r, next, inverse, col);
    scale_row(t, next, inverse);
    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other == next || r(other, col).is_zero()) continue;
      const Element factor = r(other, col);
      subtract_row(r, other, next, factor, col);
      subtract_row(t, other, next, factor);
    }
    out.pivots.push_back(Pivot{next, col, origin[next]});
    ++next;
  }
  return out;
}

RowSpace::RowSpace(Ring ring, std::size_t cols) : ring_(std::move(ring)), cols_(cols) {}

bool RowSpace::add(const RowVector& row) {
  if (row.size() != cols_) throw Error(ErrorCode::InvalidInput, "row has the wrong length");
  const std::size_t position = offered_++;
  if (rank() == cols_) return false;
  RowVector residual = row;
  RowVector combo(rank() + 1, ring_.zero());
  combo.back() = ring_.one();
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    const Element factor = residual[pivot_cols_[i]];
    if (factor.is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!reduced_[i][c].is_zero()) residual[c] -= factor * reduced_[i][c];
    }
    for (std::size_t k = 0; k < combos_[i].size(); ++k) {
      if (!combos_[i][k].is_zero()) combo[k] -= factor * combos_[i][k];
    }
  }
  std::size_t pivot = 0;
  while (pivot < cols_ && residual[pivot].is_zero()) ++pivot;
  if (pivot == cols_) return false;
  const Element inverse = residual[pivot].inverse();
  for (auto& e : residual) e = inverse * e;
  for (auto& e : combo) e = inverse * e;
  reduced_.push_back(std::move(residual));
  pivot_cols_.push_back(pivot);
  combos_.push_back(std::move(combo));
  accepted_.push_back(position);
  return true;
}

std::optional<RowVector> RowSpace::express(const RowVector& b) const {
  if (b.size() != cols_) throw Error(ErrorCode::InvalidInput, "right-hand side has the wrong length");
  // Each stored row vanishes at the pivots of the rows before it, so one
  // forward pass leaves the residual zero exactly when b is in the span.
  RowVector residual = b;
  RowVector mu(rank(), ring_.zero());
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    const Element factor = residual[pivot_cols_[i]];
    if (factor.is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!reduced_[i][c].is_zero()) residual[c] -= factor * reduced_[i][c];
    }
    for (std::size_t k = 0; k < combos_[i].size(); ++k) {
      if (!combos_[i][k].is_zero()) mu[k] += factor * combos_[i][k];
    }
  }
  for (const auto& e : residual) {
    if (!e.is_zero()) return std::nullopt;
  }
  return mu;
}

std::vector<Element> ColumnSpace::residual(std::vector<Element> column) const {
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    if (column.size() != reduced_[i].size()) throw Error(ErrorCode::InvalidInput, "column has the wrong length");
    const Element factor = column[pivot_rows_[i]];
    if (factor.is_zero()) continue;
    for (std::size_t r = 0; r < column.size(); ++r) {
      if (!reduced_[i][r].is_zero()) column[r] -= reduced_[i][r] * factor;
    }
  }
  return column;
}

bool ColumnSpace::add(const std::vector<Element>& column) {
  std::vector<Element> rest = residual(column);
  std::size_t pivot = 0;
  while (pivot < rest.size() && rest[pivot].is_zero()) ++pivot;
  if (pivot == rest.size()) return false;
  const Element inverse = rest[pivot].inverse();
  for (auto& e : rest) e = e * inverse;
  reduced_.push_back(std::move(rest));
  pivot_rows_.push_back(pivot);
  return true;
}

bool ColumnSpace::contains(const std::vector<Element>& column) const {
  for (const auto& e : residual(column)) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::size_t rank(const DRMatrix& a) {
  RowSpace space(a.ring(), a.cols());
  for (std::size_t r = 0; r < a.rows() && space.rank() < a.cols(); ++r) space.add(a.row(r));
  return space.rank();
}

std::vector<RowVector> left_null_space(const DRMatrix& a) {
  const RowReduction red = row_reduce_left(a);
  std::vector<RowVector> out;
  for (std::size_t r = red.pivots.size(); r < a.rows(); ++r) out.push_back(red.transform.row(r));
  return out;
}

RowVector solve_left(const DRMatrix& a, const RowVector& b) {
  if (b.size() != a.cols()) throw Error(ErrorCode::InvalidInput, "right-hand side has the wrong length");
  RowSpace space(a.ring(), a.cols());
  for (std::size_t r = 0; r < a.rows() && space.rank() < a.cols(); ++r) space.add(a.row(r));
  const auto mu = space.express(b);
  if (!mu) throw Error(ErrorCode::NoSolution, "right-hand side is not in the left row space");
  RowVector lambda(a.rows(), a.ring().zero());
  for (std::size_t k = 0; k < mu->size(); ++k) lambda[space.accepted()[k]] = (*mu)[k];
  return lambda;
}

RowVector left_multiply(const RowVector& lambda, const DRMatrix& a) {
  if (lambda.size() != a.rows()) throw Error(ErrorCode::InvalidInput, "row vector has the wrong length");
  RowVector out(a.cols(), a.ring().zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (lambda[r].is_zero()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a(r, c).is_zero()) out[c] += lambda[r] * a(r, c);
    }
  }
  return out;
}

}  // namespace skewpoly
