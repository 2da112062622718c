#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lclt/errors.hpp"
#include "lclt/interval.hpp"
#include "lclt/rational.hpp"

namespace lclt {

enum class ZeroState { Zero, NonZero, Unknown };

inline ZeroState zero_state(const Rational& x) { return sgn(x) == 0 ? ZeroState::Zero : ZeroState::NonZero; }

inline ZeroState zero_state(const IntervalValue& x) {
  if (x.is_point() && sgn(x.lo()) == 0) return ZeroState::Zero;
  return x.contains_zero() ? ZeroState::Unknown : ZeroState::NonZero;
}

/// Dense row-major matrix over an exact field or over intervals.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(Rational(0)))
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(Rational(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not agree");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        T acc(Rational(0));
        for (std::size_t k = 0; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
        out(i, j) = acc;
      }
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not agree");
    Matrix out = a;
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] = a.a_[k] - b.a_[k];
    return out;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

namespace detail {

template <class T>
std::size_t find_pivot(const Matrix<T>& m, std::size_t col, std::size_t from, bool& unknown_seen) {
  for (std::size_t r = from; r < m.rows(); ++r) {
    ZeroState z = zero_state(m(r, col));
    if (z == ZeroState::NonZero) return r;
    if (z == ZeroState::Unknown) unknown_seen = true;
  }
  return m.rows();
}

template <class T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace detail

/// Determinant by Bareiss fraction-free elimination.
/// Returns zero when a column has only exact-zero candidates; throws
/// Indeterminate when the only candidates are intervals straddling 0.
template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return T(Rational(1));
  T prev(Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    bool unknown = false;
    std::size_t p = detail::find_pivot(m, k, k, unknown);
    if (p == n) {
      if (unknown) throw Error(ErrorCode::Indeterminate, "pivot sign cannot be certified");
      return T(Rational(0));
    }
    if (p != k) {
      detail::swap_rows(m, p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = T(Rational(0));
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(Rational(0)) - det : det;
}

/// Inverse by Gauss-Jordan elimination. Throws Singular or Indeterminate.
template <class T>
Matrix<T> inverse(Matrix<T> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    bool unknown = false;
    std::size_t p = detail::find_pivot(m, k, k, unknown);
    if (p == n) {
      if (unknown) throw Error(ErrorCode::Indeterminate, "pivot sign cannot be certified");
      throw Error(ErrorCode::Singular, "matrix is singular");
    }
    if (p != k) {
      detail::swap_rows(m, p, k);
      detail::swap_rows(inv, p, k);
    }
    T pivot_inv = T(Rational(1)) / m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) = m(k, j) * pivot_inv;
      inv(k, j) = inv(k, j) * pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      T factor = m(i, k);
      if (zero_state(factor) == ZeroState::Zero) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - factor * m(k, j);
        inv(i, j) = inv(i, j) - factor * inv(k, j);
      }
    }
  }
  return inv;
}

template <class T>
struct DetInverse {
  T det;
  Matrix<T> inv;
};

/// Determinant and inverse together; Singular when the determinant is exactly 0.
template <class T>
DetInverse<T> det_and_inverse(const Matrix<T>& m) {
  T det = determinant(m);
  ZeroState z = zero_state(det);
  if (z == ZeroState::Zero) throw Error(ErrorCode::Singular, "determinant is exactly zero");
  if (z == ZeroState::Unknown) throw Error(ErrorCode::Indeterminate, "determinant enclosure contains zero");
  return {det, inverse(m)};
}

}  // namespace lclt
