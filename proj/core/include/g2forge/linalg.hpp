#pragma once

// Dense linear algebra over any Scalar: fraction-free (Bareiss) row
// reduction, solve, rank, kernel, and orthogonal projectors onto spans.
// Dimensions in play are at most 49x49.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2forge/errors.hpp"
#include "g2forge/scalars.hpp"

namespace g2forge {

template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw Error("matrix entry count does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix column(std::vector<T> v) {
    const std::size_t n = v.size();
    return Matrix(n, 1, std::move(v));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<T>& entries() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const T& x) { return g2forge::is_zero(x); });
  }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix col(std::size_t c) const {
    Matrix v(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, c);
    return v;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.entries_) x = -x;
    return m;
  }
  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : entries_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (g2forge::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

template <Scalar T, Scalar U, class F>
Matrix<U> map_entries(const Matrix<T>& m, F&& f) {
  std::vector<U> out;
  out.reserve(m.entries().size());
  for (const auto& x : m.entries()) out.push_back(f(x));
  return Matrix<U>(m.rows(), m.cols(), std::move(out));
}

template <Scalar T>
Matrix<T> lift(const Matrix<Rational>& m) {
  return map_entries<Rational, T>(m, [](const Rational& r) { return lift<T>(r); });
}

/// Entrywise agreement under scalar_traits<T>::close (exact equality for exact types).
template <Scalar T>
bool close(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    if (!scalar_traits<T>::close(a.entries()[k], b.entries()[k])) return false;
  return true;
}

/// A symmetric 7x7 tensor; `traceless` asserts trace zero and is checked.
template <Scalar T>
class SymTensor {
 public:
  SymTensor() : m_(7, 7) {}
  explicit SymTensor(Matrix<T> m, bool traceless = false) : m_(std::move(m)), traceless_(traceless) {
    if (m_.rows() != 7 || m_.cols() != 7) throw Error("SymTensor must be 7x7");
    if (!m_.is_symmetric()) throw Error("SymTensor entries are not symmetric");
    if (traceless_ && !is_zero(m_.trace())) throw Error("SymTensor flagged traceless has nonzero trace");
  }

  const Matrix<T>& matrix() const { return m_; }
  bool traceless() const { return traceless_; }
  const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  Matrix<T> m_;
  bool traceless_ = false;
};

/// <S1, S2> = tr(S1 S2).
template <Scalar T>
T sym_inner(const Matrix<T>& s1, const Matrix<T>& s2) {
  if (s1.rows() != s2.cols() || s1.cols() != s2.rows()) throw Error("sym_inner shape mismatch");
  T t(0);
  for (std::size_t i = 0; i < s1.rows(); ++i)
    for (std::size_t k = 0; k < s1.cols(); ++k) t += s1(i, k) * s2(k, i);
  return t;
}

template <Scalar T>
T sym_inner(const SymTensor<T>& s1, const SymTensor<T>& s2) {
  return sym_inner(s1.matrix(), s2.matrix());
}

/// Row echelon form produced by fraction-free elimination. Pivot rows are
/// 0..rank-1; `row_origin[r]` is the caller's index of reduced row r.
template <Scalar T>
struct Echelon {
  Matrix<T> reduced;
  Matrix<T> rhs;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> row_origin;
  std::size_t rank() const { return pivot_cols.size(); }
};

namespace detail {

template <Scalar T>
bool negligible(const T& x, long double scale) {
  if constexpr (scalar_traits<T>::exact) {
    (void)scale;
    return is_zero(x);
  } else {
    return scalar_traits<T>::magnitude(x) <= 1e-13L * scale;
  }
}

template <Scalar T>
long double max_magnitude(const Matrix<T>& a) {
  long double m = 0;
  for (const auto& x : a.entries()) m = std::max(m, scalar_traits<T>::magnitude(x));
  return m;
}

}  // namespace detail

/// Bareiss elimination of [A | B]. Exact types pivot on the first nonzero
/// entry; approximate types pivot on the largest magnitude and treat entries
/// below 1e-13 * max|A| as zero.
template <Scalar T>
Echelon<T> bareiss_echelon(Matrix<T> a, Matrix<T> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.rows() != m) throw Error("right-hand side row count mismatch");
  const long double scale = std::max<long double>(detail::max_magnitude(a), 1.0L);

  Echelon<T> e;
  e.row_origin.resize(m);
  for (std::size_t i = 0; i < m; ++i) e.row_origin[i] = i;

  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(r1, j), a(r2, j));
    for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(r1, j), b(r2, j));
    std::swap(e.row_origin[r1], e.row_origin[r2]);
  };

  T prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::optional<std::size_t> piv;
    if constexpr (scalar_traits<T>::exact) {
      for (std::size_t i = r; i < m; ++i)
        if (!is_zero(a(i, c))) {
          piv = i;
          break;
        }
    } else {
      long double best = 0;
      for (std::size_t i = r; i < m; ++i) {
        const long double mag = scalar_traits<T>::magnitude(a(i, c));
        if (!detail::negligible(a(i, c), scale) && mag > best) {
          best = mag;
          piv = i;
        }
      }
    }
    if (!piv) {
      if constexpr (!scalar_traits<T>::exact)
        for (std::size_t i = r; i < m; ++i) a(i, c) = T(0);
      continue;
    }
    swap_rows(r, *piv);
    const T p = a(r, c);
    for (std::size_t i = r + 1; i < m; ++i) {
      const T f = a(i, c);
      for (std::size_t j = c + 1; j < n; ++j) a(i, j) = (p * a(i, j) - f * a(r, j)) / prev;
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = (p * b(i, j) - f * b(r, j)) / prev;
      a(i, c) = T(0);
    }
    prev = p;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.reduced = std::move(a);
  e.rhs = std::move(b);
  return e;
}

template <Scalar T>
std::size_t rank(const Matrix<T>& a) {
  return bareiss_echelon(a, Matrix<T>(a.rows(), 0)).rank();
}

template <Scalar T>
struct SolveResult {
  Matrix<T> x;  ///< free variables set to zero
  std::size_t kernel_dim = 0;
};

/// Solves A X = B. Rows left without a pivot must have a vanishing
/// right-hand side, otherwise InconsistentSystem names the offending row.
template <Scalar T>
SolveResult<T> solve_exact(const Matrix<T>& a, const Matrix<T>& b) {
  Echelon<T> e = bareiss_echelon(a, b);
  const std::size_t n = a.cols();
  const std::size_t k = e.rank();
  const long double scale = std::max<long double>(detail::max_magnitude(b), 1.0L);
  for (std::size_t i = k; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!detail::negligible(e.rhs(i, j), scale * 1e3L)) throw InconsistentSystem(e.row_origin[i]);

  SolveResult<T> out;
  out.kernel_dim = n - k;
  out.x = Matrix<T>(n, b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t ri = k; ri-- > 0;) {
      const std::size_t pc = e.pivot_cols[ri];
      T acc = e.rhs(ri, col);
      for (std::size_t j = pc + 1; j < n; ++j)
        if (!is_zero(e.reduced(ri, j))) acc -= e.reduced(ri, j) * out.x(j, col);
      out.x(pc, col) = acc / e.reduced(ri, pc);
    }
  }
  return out;
}

/// Column basis of the null space of A.
template <Scalar T>
Matrix<T> kernel(const Matrix<T>& a) {
  Echelon<T> e = bareiss_echelon(a, Matrix<T>(a.rows(), 0));
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix<T> basis(n, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis(free_cols[f], f) = T(1);
    for (std::size_t ri = e.rank(); ri-- > 0;) {
      const std::size_t pc = e.pivot_cols[ri];
      T acc(0);
      for (std::size_t j = pc + 1; j < n; ++j)
        if (!is_zero(e.reduced(ri, j))) acc -= e.reduced(ri, j) * basis(j, f);
      basis(pc, f) = acc / e.reduced(ri, pc);
    }
  }
  return basis;
}

template <Scalar T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw Error("inverse of a non-square matrix");
  if (rank(a) < a.rows()) throw DivisionByZero();
  return solve_exact(a, Matrix<T>::identity(a.rows())).x;
}

/// Independent columns of `span` (first-found order) as a matrix.
template <Scalar T>
Matrix<T> column_basis(const Matrix<T>& span) {
  auto e = bareiss_echelon(span, Matrix<T>(span.rows(), 0));
  Matrix<T> q(span.rows(), e.rank());
  for (std::size_t k = 0; k < e.rank(); ++k)
    for (std::size_t i = 0; i < span.rows(); ++i) q(i, k) = span(i, e.pivot_cols[k]);
  return q;
}

/// Orthogonal projector Q (Q^T Q)^{-1} Q^T onto the column span.
template <Scalar T>
Matrix<T> orthogonal_projector(const Matrix<T>& span) {
  const Matrix<T> q = column_basis(span);
  if (q.cols() == 0) return Matrix<T>(span.rows(), span.rows());
  const Matrix<T> qt = q.transpose();
  const auto sol = solve_exact(qt * q, qt);
  return q * sol.x;
}

}  // namespace g2forge
