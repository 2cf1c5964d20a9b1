#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "polyhull/errors.hpp"
#include "polyhull/scalar.hpp"

namespace polyhull {

template <class S>
using Vector = std::vector<S>;

/** Dense row-major matrix. */
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
  Matrix(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }
  /** An empty matrix with a fixed column count. */
  static Matrix with_cols(std::size_t cols) { return Matrix(0, cols); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vector<S>>& rows, std::size_t cols) {
    Matrix m = with_cols(cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<S> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const S> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector<S> row_vector(std::size_t i) const { return Vector<S>(row(i).begin(), row(i).end()); }

  void append_row(std::span<const S> r) {
    if (r.size() != cols_) throw DimensionMismatch("row length " + std::to_string(r.size()) + " != " + std::to_string(cols_));
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }
  void append_row(const Vector<S>& r) { append_row(std::span<const S>(r)); }
  void append_rows(const Matrix& o) {
    if (o.rows_ == 0) return;
    if (o.cols_ != cols_) throw DimensionMismatch("column count mismatch");
    data_.insert(data_.end(), o.data_.begin(), o.data_.end());
    rows_ += o.rows_;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
  }
  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m = with_cols(cols_);
    m.data_.reserve(idx.size() * cols_);
    for (std::size_t i : idx) m.append_row(row(i));
    return m;
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/** Inner product of two equally long ranges of scalars. */
template <class A, class B>
auto dot(const A& a, const B& b) {
  using S = std::remove_cvref_t<decltype(*std::begin(a))>;
  if (std::size(a) != std::size(b)) throw DimensionMismatch("dot product of vectors with different lengths");
  S s(0);
  auto ib = std::begin(b);
  for (auto ia = std::begin(a); ia != std::end(a); ++ia, ++ib)
    if (!ia->is_zero() && !ib->is_zero()) s += *ia * *ib;
  return s;
}

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix<S> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class S>
Vector<S> operator*(const Matrix<S>& a, const Vector<S>& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector<S> y(a.rows(), S(0));
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), std::span<const S>(x));
  return y;
}

/** Lexicographic comparison of two rows of equal length. */
template <class A, class B>
bool lex_less(const A& a, const B& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/** Reduced row echelon form with the pivot columns that produced it. */
template <class S>
struct Echelon {
  Matrix<S> reduced;  // only the rank-many nonzero rows
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> pivot_rows;  // original row index that supplied each pivot
};

/**
 * Gauss-Jordan elimination.  Columns are scanned in the order given by
 * `column_order` (all columns left to right when empty); the pivot is the
 * first remaining row with a nonzero entry in that column.
 */
template <class S>
Echelon<S> echelon(Matrix<S> a, std::span<const std::size_t> column_order = {}) {
  std::vector<std::size_t> order(column_order.begin(), column_order.end());
  if (order.empty())
    for (std::size_t j = 0; j < a.cols(); ++j) order.push_back(j);
  std::vector<std::size_t> origin(a.rows());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;
  Echelon<S> e;
  std::size_t r = 0;
  for (std::size_t j : order) {
    if (r == a.rows()) break;
    std::size_t p = r;
    while (p < a.rows() && a(p, j).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    std::swap(origin[r], origin[p]);
    const S inv = S(1) / a(r, j);
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(r, k).is_zero()) a(r, k) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, j).is_zero()) continue;
      const S f = a(i, j);
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
    }
    e.pivots.push_back(j);
    e.pivot_rows.push_back(origin[r]);
    ++r;
  }
  e.reduced = Matrix<S>::with_cols(a.cols());
  for (std::size_t i = 0; i < r; ++i) e.reduced.append_row(a.row(i));
  return e;
}

namespace detail {

inline bool all_integer(const Matrix<Rational>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& x : a.row(i))
      if (!x.is_integer()) return false;
  return true;
}

/**
 * Fraction-free (Bareiss) elimination on an integer matrix.  Returns the
 * rank; `det` receives the determinant when the matrix is square.
 */
inline std::size_t bareiss(const Matrix<Rational>& in, Integer* det) {
  const std::size_t m = in.rows(), n = in.cols();
  std::vector<Integer> a(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = in(i, j).numerator();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t p = r;
    while (p < m && a[p * n + j] == 0) ++p;
    if (p == m) {
      if (det) *det = 0;
      continue;
    }
    if (p != r) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[p * n + k], a[r * n + k]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Integer& x = a[i * n + k];
        x = a[r * n + j] * x - a[i * n + j] * a[r * n + k];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + j] = 0;
    }
    prev = a[r * n + j];
    ++r;
  }
  if (det) *det = (r == n && m == n) ? Integer(sign * prev) : Integer(0);
  return r;
}

}  // namespace detail

template <class S>
std::size_t rank(const Matrix<S>& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  if constexpr (std::is_same_v<S, Rational>) {
    if (detail::all_integer(a)) return detail::bareiss(a, nullptr);
  }
  return echelon(a).pivots.size();
}

template <class S>
S det(const Matrix<S>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (a.rows() == 0) return S(1);
  if constexpr (std::is_same_v<S, Rational>) {
    if (detail::all_integer(a)) {
      Integer d;
      detail::bareiss(a, &d);
      return Rational(d);
    }
  }
  Matrix<S> m = a;
  const std::size_t n = m.rows();
  S result(1);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = j;
    while (p < n && m(p, j).is_zero()) ++p;
    if (p == n) return S(0);
    if (p != j) {
      m.swap_rows(p, j);
      result = -result;
    }
    result *= m(j, j);
    const S inv = S(1) / m(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      if (m(i, j).is_zero()) continue;
      const S f = m(i, j) * inv;
      for (std::size_t k = j; k < n; ++k)
        if (!m(j, k).is_zero()) m(i, k) -= f * m(j, k);
    }
  }
  return result;
}

/** Basis of {x : A x = 0}, one basis vector per row. */
template <class S>
Matrix<S> kernel(const Matrix<S>& a) {
  const std::size_t n = a.cols();
  Matrix<S> basis = Matrix<S>::with_cols(n);
  Echelon<S> e = echelon(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t j : e.pivots) is_pivot[j] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector<S> v(n, S(0));
    v[f] = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.append_row(v);
  }
  return basis;
}

/**
 * Solves A x = b exactly.  Free variables are set to zero; returns nullopt
 * when the system is inconsistent.
 */
template <class S>
std::optional<Vector<S>> solve(const Matrix<S>& a, const Vector<S>& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("right-hand side length differs from row count");
  const std::size_t n = a.cols();
  Matrix<S> aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  Echelon<S> e = echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector<S> x(n, S(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, n);
  return x;
}

/** Indices of a maximal linearly independent subset of rows, chosen greedily in order. */
template <class S>
std::vector<std::size_t> independent_rows(const Matrix<S>& a) {
  std::vector<std::size_t> picked;
  Matrix<S> basis = Matrix<S>::with_cols(a.cols());
  // Incremental reduction against the rows chosen so far.
  std::vector<std::size_t> pivot_col;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector<S> v = a.row_vector(i);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      const S& c = v[pivot_col[r]];
      if (c.is_zero()) continue;
      const S f = c;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!basis(r, k).is_zero()) v[k] -= f * basis(r, k);
    }
    std::size_t j = 0;
    while (j < v.size() && v[j].is_zero()) ++j;
    if (j == v.size()) continue;
    const S inv = S(1) / v[j];
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    // keep the stored basis reduced at its pivot columns
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      const S f = basis(r, j);
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) basis(r, k) -= f * v[k];
    }
    basis.append_row(v);
    pivot_col.push_back(j);
    picked.push_back(i);
    if (picked.size() == a.cols()) break;
  }
  return picked;
}

}  // namespace polyhull
