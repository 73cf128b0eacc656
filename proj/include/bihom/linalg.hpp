#pragma once

#include <Eigen/Core>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Mat<Rational>;
using VectorQ = Vec<Rational>;
using Index = Eigen::Index;

// Gauss-Jordan over an exact field. Rows are combined without any pivot
// thresholding; a pivot is any literally nonzero entry.
template <class Scalar> struct Rref {
  Mat<Scalar> r;
  std::vector<Index> pivot_cols;
  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

template <class Scalar> Rref<Scalar> row_reduce(Mat<Scalar> m) {
  const Index rows = m.rows(), cols = m.cols();
  Rref<Scalar> out;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index piv = -1;
    for (Index r = row; r < rows; ++r)
      if (m(r, col) != Scalar(0)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index c = col; c < cols; ++c)
      if (m(row, c) != Scalar(0)) m(row, c) *= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == row) continue;
      const Scalar f = m(r, col);
      if (f == Scalar(0)) continue;
      for (Index c = col; c < cols; ++c)
        if (m(row, c) != Scalar(0)) m(r, c) -= f * m(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.r = std::move(m);
  return out;
}

template <class Scalar> Index rank(const Mat<Scalar>& m) {
  return row_reduce(m).rank();
}

// Basis of the right null space {v : m v = 0}, one vector per free column,
// in ascending free-column order. Size is always cols - rank.
template <class Scalar> std::vector<Vec<Scalar>> kernel_basis(const Mat<Scalar>& m) {
  const Rref<Scalar> f = row_reduce(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Index p : f.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Vec<Scalar>> basis;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Vec<Scalar> v = Vec<Scalar>::Zero(cols);
    v(free) = Scalar(1);
    for (Index i = 0; i < f.rank(); ++i) v(f.pivot_cols[static_cast<size_t>(i)]) = -f.r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class Scalar> Mat<Scalar> invert(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("invert: matrix not square");
  const Index n = m.rows();
  Mat<Scalar> aug(n, 2 * n);
  aug << m, Mat<Scalar>::Identity(n, n);
  const Rref<Scalar> f = row_reduce(std::move(aug));
  if (f.rank() < n || (f.rank() > 0 && f.pivot_cols.back() >= n))
    throw SingularMatrix("invert: singular matrix");
  return f.r.block(0, n, n, n);
}

template <class Scalar> bool is_invertible(const Mat<Scalar>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

// Factored solver for repeated right-hand sides against a fixed matrix.
// solve() returns false when b is not in the column span.
template <class Scalar> class LinearSolver {
public:
  explicit LinearSolver(const Mat<Scalar>& a) : rows_(a.rows()), cols_(a.cols()) {
    Mat<Scalar> aug(rows_, cols_ + rows_);
    aug << a, Mat<Scalar>::Identity(rows_, rows_);
    Rref<Scalar> f = row_reduce(std::move(aug));
    pivot_cols_.clear();
    for (Index p : f.pivot_cols) {
      if (p < cols_)
        pivot_cols_.push_back(p);
      else
        break;
    }
    transform_ = f.r.block(0, cols_, rows_, rows_);
  }

  Index rank() const { return static_cast<Index>(pivot_cols_.size()); }

  bool solve(const Vec<Scalar>& b, Vec<Scalar>& x) const {
    Vec<Scalar> c = Vec<Scalar>::Zero(rows_);
    for (Index i = 0; i < b.size(); ++i) {
      if (b(i) == Scalar(0)) continue;
      for (Index r = 0; r < rows_; ++r)
        if (transform_(r, i) != Scalar(0)) c(r) += transform_(r, i) * b(i);
    }
    for (Index r = rank(); r < rows_; ++r)
      if (c(r) != Scalar(0)) return false;
    x = Vec<Scalar>::Zero(cols_);
    for (Index i = 0; i < rank(); ++i) x(pivot_cols_[static_cast<size_t>(i)]) = c(i);
    return true;
  }

private:
  Index rows_, cols_;
  std::vector<Index> pivot_cols_;
  Mat<Scalar> transform_;
};

template <class Scalar> Mat<Scalar> matrix_power(const Mat<Scalar>& m, unsigned k) {
  Mat<Scalar> acc = Mat<Scalar>::Identity(m.rows(), m.cols());
  for (unsigned i = 0; i < k; ++i) acc = acc * m;
  return acc;
}

inline bool is_zero(const MatrixQ& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

inline bool is_zero(const VectorQ& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

} // namespace bihom
