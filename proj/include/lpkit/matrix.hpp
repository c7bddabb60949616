// Dense exact linear algebra over lpkit scalar types. Matrices are plain
// Eigen dense matrices; everything that needs a pivot decision or a zero test
// is done here with exact comparisons instead of Eigen's magnitude-based
// decompositions.
#ifndef LPKIT_MATRIX_HPP
#define LPKIT_MATRIX_HPP

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "lpkit/field.hpp"
#include "lpkit/poly.hpp"

namespace lpkit {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using Eigen::Index;

template <class S>
Matrix<S> zero_matrix(Index rows, Index cols, const FieldSpec& field) {
  return Matrix<S>::Constant(rows, cols, scalar<S>(0, field));
}

template <class S>
Matrix<S> identity_matrix(Index n, const FieldSpec& field) {
  Matrix<S> m = zero_matrix<S>(n, n, field);
  for (Index i = 0; i < n; ++i) m(i, i) = scalar<S>(1, field);
  return m;
}

template <class S>
Matrix<S> diagonal_matrix(const std::vector<S>& diag, const FieldSpec& field) {
  const Index n = static_cast<Index>(diag.size());
  Matrix<S> m = zero_matrix<S>(n, n, field);
  for (Index i = 0; i < n; ++i) m(i, i) = diag[i];
  return m;
}

/// Every entry exactly zero.
template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

// Shape-checked arithmetic; Eigen itself only asserts.

template <class S>
Matrix<S> add(const Matrix<S>& x, const Matrix<S>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw Error(ErrorKind::ShapeMismatch, "add: operand shapes differ");
  return x + y;
}

template <class S>
Matrix<S> multiply(const Matrix<S>& x, const Matrix<S>& y) {
  if (x.cols() != y.rows()) throw Error(ErrorKind::ShapeMismatch, "multiply: inner dimensions differ");
  return x * y;
}

template <class S>
S trace(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "trace of a non-square matrix");
  S t(0);
  for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

namespace detail {

// In-place reduced row echelon form; returns pivot columns.
template <class S>
std::vector<Index> rref(Matrix<S>& m, Index pivot_cols) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < pivot_cols && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(row));
    S inv = m(row, col).inverse();
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      S f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Rank by exact elimination.
template <class S>
Index rank(Matrix<S> m) {
  return static_cast<Index>(detail::rref(m, m.cols()).size());
}

/// Full solution set of M x = b: x = particular + span(nullspace).
template <class S>
struct AffineSolution {
  Vector<S> particular;
  std::vector<Vector<S>> nullspace;

  Index dimension() const { return static_cast<Index>(nullspace.size()); }
};

/// Returns std::nullopt when M x = b is inconsistent.
template <class S>
std::optional<AffineSolution<S>> solve_affine(const Matrix<S>& m, const Vector<S>& b, const FieldSpec& field) {
  if (m.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "solve_affine: rhs length differs from rows");
  const Index n = m.cols();
  Matrix<S> aug(m.rows(), n + 1);
  aug.leftCols(n) = m;
  aug.col(n) = b;
  auto pivots = detail::rref(aug, n);
  for (Index i = static_cast<Index>(pivots.size()); i < aug.rows(); ++i)
    if (!aug(i, n).is_zero()) return std::nullopt;

  AffineSolution<S> sol;
  sol.particular = Vector<S>::Constant(n, scalar<S>(0, field));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    sol.particular(pivots[r]) = aug(static_cast<Index>(r), n);
  }
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector<S> v = Vector<S>::Constant(n, scalar<S>(0, field));
    v(f) = scalar<S>(1, field);
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -aug(static_cast<Index>(r), f);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

/// Monic characteristic polynomial det(λI - M) by Berkowitz's division-free
/// algorithm. Independent of any tridiagonal structure in M.
template <class S>
Poly<S> char_poly_oracle(const Matrix<S>& m, const FieldSpec& field) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "characteristic polynomial of non-square matrix");
  const Index n = m.rows();
  // Coefficients highest degree first.
  std::vector<S> c{scalar<S>(1, field)};
  for (Index r = 0; r < n; ++r) {
    std::vector<S> t(r + 2, scalar<S>(0, field));
    t[0] = scalar<S>(1, field);
    t[1] = -m(r, r);
    Vector<S> v = m.col(r).head(r);
    for (Index k = 0; k < r; ++k) {
      S dot = scalar<S>(0, field);
      for (Index j = 0; j < r; ++j) dot += m(r, j) * v(j);
      t[k + 2] = -dot;
      if (k + 1 < r) v = (m.topLeftCorner(r, r) * v).eval();
    }
    std::vector<S> next(r + 2, scalar<S>(0, field));
    for (Index i = 0; i < r + 2; ++i)
      for (Index j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * c[j];
    c = std::move(next);
  }
  std::reverse(c.begin(), c.end());
  return Poly<S>(std::move(c));
}

}  // namespace lpkit

#endif  // LPKIT_MATRIX_HPP
