#pragma once

// Small dense row-major matrices over an arbitrary scalar ring, plus the
// elimination routines the rest of the library needs.  Sizes never exceed a
// few dozen, so everything is the textbook O(n^3) algorithm.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "superform/error.hpp"
#include "superform/scalar.hpp"

namespace superform {

namespace detail {
template <class T>
bool entry_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix column(const std::vector<T>& entries) {
    Matrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
  Matrix col(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix row(std::size_t r) const { return block(r, 0, 1, cols_); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!detail::entry_is_zero(x)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw InputError("matrix product shape mismatch: " + shape_text(a) +
                       " * " + shape_text(b));
    }
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (detail::entry_is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(l, j);
      }
    }
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  static std::string shape_text(const Matrix& m) {
    return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw InputError("matrix shape mismatch: " + shape_text(*this) + " vs " +
                       shape_text(o));
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Places the given columns side by side; all must share a row count.
template <class T>
Matrix<T> hstack(const std::vector<Matrix<T>>& columns, std::size_t rows) {
  std::size_t total = 0;
  for (const auto& c : columns) {
    if (c.rows() != rows) throw InputError("hstack row mismatch");
    total += c.cols();
  }
  Matrix<T> out(rows, total);
  std::size_t at = 0;
  for (const auto& c : columns) {
    out.set_block(0, at, c);
    at += c.cols();
  }
  return out;
}

template <class T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

template <class T>
Matrix<T> power(const Matrix<T>& a, unsigned e) {
  Matrix<T> out = Matrix<T>::identity(a.rows());
  for (unsigned i = 0; i < e; ++i) out = out * a;
  return out;
}

template <class T>
bool is_square_matrix(const Matrix<T>& a) {
  return a.rows() == a.cols();
}

template <class T>
bool is_symmetric(const Matrix<T>& a) {
  return is_square_matrix(a) && a == a.transpose();
}

template <class T>
bool is_antisymmetric(const Matrix<T>& a) {
  return is_square_matrix(a) && a == -a.transpose();
}

/// Fraction-free (Bareiss) determinant.  Works over any integral domain
/// whose operator/ is exact division, e.g. Exact or Polynomial.
template <class T>
T determinant(Matrix<T> a) {
  if (!is_square_matrix(a)) throw InputError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(a(p, k))) ++p;
    if (p == n) return T(0);
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = T(0);
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return negate ? -d : d;
}

/// Reduced row echelon form over a field.  Pivots are chosen by
/// pivot_magnitude, which for exact scalars means "first nonzero".
template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_columns;
};

template <class T>
Echelon<T> row_reduce(Matrix<T> a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t best = a.rows();
    double best_mag = 0.0;
    for (std::size_t i = r; i < a.rows(); ++i) {
      double m = pivot_magnitude(a(i, c));
      if (m > best_mag) {
        best_mag = m;
        best = i;
        if constexpr (std::is_same_v<T, Exact>) break;
      }
    }
    if (best == a.rows()) {
      for (std::size_t i = r; i < a.rows(); ++i) a(i, c) = T(0);
      continue;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(best, j));
    T inv = T(1) / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      T f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
      a(i, c) = T(0);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& a) {
  return row_reduce(a).pivot_columns.size();
}

/// Basis of {x : a x = 0}, one column per free variable.
template <class T>
std::vector<Matrix<T>> kernel_basis(const Matrix<T>& a) {
  auto ech = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<Matrix<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix<T> v(a.cols(), 1);
    v(free, 0) = T(1);
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
      v(ech.pivot_columns[r], 0) = -ech.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A maximal linearly independent subset of the columns, in order.
template <class T>
std::vector<Matrix<T>> column_basis(const Matrix<T>& a) {
  auto ech = row_reduce(a);
  std::vector<Matrix<T>> basis;
  for (auto c : ech.pivot_columns) basis.push_back(a.col(c));
  return basis;
}

template <class T>
std::vector<Matrix<T>> independent_subset(const std::vector<Matrix<T>>& vs,
                                          std::size_t rows) {
  if (vs.empty()) return {};
  return column_basis(hstack(vs, rows));
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  if (!is_square_matrix(a)) throw InputError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix<T>::identity(n));
  auto ech = row_reduce(aug);
  if (ech.pivot_columns.size() < n || (n > 0 && ech.pivot_columns[n - 1] != n - 1)) {
    return std::nullopt;
  }
  return ech.reduced.block(0, n, n, n);
}

/// Standard symplectic unit diag(J, ..., J) with J = [[0, 1], [-1, 0]].
template <class T>
Matrix<T> symplectic_unit(std::size_t ell) {
  Matrix<T> j(2 * ell, 2 * ell);
  for (std::size_t p = 0; p < ell; ++p) {
    j(2 * p, 2 * p + 1) = T(1);
    j(2 * p + 1, 2 * p) = T(-1);
  }
  return j;
}

/// Bilinear pairing u^T G v of two columns.
template <class T>
T pairing(const Matrix<T>& u, const Matrix<T>& g, const Matrix<T>& v) {
  return (u.transpose() * g * v)(0, 0);
}

template <class T>
T dot(const Matrix<T>& u, const Matrix<T>& v) {
  T s(0);
  for (std::size_t i = 0; i < u.rows(); ++i) s += u(i, 0) * v(i, 0);
  return s;
}

inline Matrix<Approx> to_approx(const Matrix<Exact>& m) {
  Matrix<Approx> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = exact_to_approx(m(r, c));
  return out;
}
inline const Matrix<Approx>& to_approx(const Matrix<Approx>& m) { return m; }

template <class S>
Matrix<S> convert_matrix(const Matrix<Exact>& m) {
  if constexpr (std::is_same_v<S, Exact>) {
    return m;
  } else {
    return to_approx(m);
  }
}

template <class S>
S convert_scalar(const Exact& z) {
  if constexpr (std::is_same_v<S, Exact>) {
    return z;
  } else {
    return exact_to_approx(z);
  }
}

/// Largest entry modulus of a - b; 0 for exact matrices that agree.
double max_abs_difference(const Matrix<Exact>& a, const Matrix<Exact>& b);
double max_abs_difference(const Matrix<Approx>& a, const Matrix<Approx>& b);

}  // namespace superform
