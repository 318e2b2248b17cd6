#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quon/scalar.hpp"

namespace quon {

/// Exact division for the rings used in elimination. The integer overload
/// verifies divisibility rather than truncating.
inline Int ring_exact_div(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::logic_error("integer division expected exact");
  return q;
}

inline QPolynomial ring_exact_div(const QPolynomial& a, const QPolynomial& b) {
  return QPolynomial::exact_div(a, b);
}

inline Rat ring_exact_div(const Rat& a, const Rat& b) { return a / b; }

template <typename T>
bool ring_is_zero(const T& a) {
  return a.is_zero();
}

template <typename T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

namespace detail {

/// One-step fraction-free elimination (Bareiss). On success m is upper
/// triangular with m(k,k) holding the k-th leading principal minor of the
/// row-permuted matrix, rhs transformed alongside; returns the swap sign,
/// or 0 if the matrix is singular.
template <typename T>
int bareiss_forward(Matrix<T>& m, Matrix<T>* rhs) {
  const std::size_t n = m.rows();
  int sign = 1;
  T prev = T(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && ring_is_zero(m(piv, k))) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      m.swap_rows(k, piv);
      if (rhs) rhs->swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = ring_exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      if (rhs)
        for (std::size_t j = 0; j < rhs->cols(); ++j)
          (*rhs)(i, j) =
              ring_exact_div(m(k, k) * (*rhs)(i, j) - m(i, k) * (*rhs)(k, j), prev);
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  return sign;
}

}  // namespace detail

template <typename T>
T fraction_free_determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  if (m.rows() == 0) return T(1);
  const int sign = detail::bareiss_forward(m, static_cast<Matrix<T>*>(nullptr));
  if (sign == 0) return T(0);
  T d = m(m.rows() - 1, m.rows() - 1);
  return sign > 0 ? d : T(-d);
}

/// scaled / det solves a * x = rhs; every entry of scaled lies in the
/// coefficient ring (Cramer), so the division is the only fraction formed.
template <typename T>
struct FractionFreeSolution {
  Matrix<T> scaled;
  T det;
};

template <typename T>
FractionFreeSolution<T> fraction_free_solve(Matrix<T> a, Matrix<T> rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("matrix not square");
  if (rhs.rows() != n) throw std::invalid_argument("right-hand side size mismatch");
  const int sign = detail::bareiss_forward(a, &rhs);
  if (sign == 0) throw singular_error("singular linear system");
  const T& d = a(n - 1, n - 1);
  Matrix<T> y(n, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      if (ii == n - 1) {
        y(ii, c) = rhs(ii, c);
        continue;
      }
      T acc = d * rhs(ii, c);
      for (std::size_t j = ii + 1; j < n; ++j) acc = acc - a(ii, j) * y(j, c);
      y(ii, c) = ring_exact_div(acc, a(ii, ii));
    }
  }
  if (sign < 0) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < rhs.cols(); ++c) y(r, c) = T(-y(r, c));
    return {std::move(y), T(-a(n - 1, n - 1))};
  }
  return {std::move(y), a(n - 1, n - 1)};
}

/// Leading principal minors d_1..d_n via swap-free elimination. Stops at
/// the first zero minor, which is included as the final element.
template <typename T>
std::vector<T> leading_principal_minors(Matrix<T> m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("matrix not square");
  std::vector<T> minors;
  T prev = T(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (ring_is_zero(m(k, k))) {
      minors.push_back(T(0));
      return minors;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = ring_exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = T(0);
    }
    prev = m(k, k);
    minors.push_back(prev);
  }
  return minors;
}

}  // namespace quon
