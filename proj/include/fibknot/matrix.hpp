#pragma once

// Small dense row-major matrices over exact rings, with fraction-free
// determinants and overflow-checked 64-bit integer products.

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fibknot/laurent.hpp"

namespace fibknot {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using LaurentMatrix = Matrix<LaurentPoly>;
using RationalMatrix = Matrix<Rational>;

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit matrix entry overflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit matrix entry overflow");
  return r;
}

}  // namespace detail

/// Integer product that throws instead of wrapping.
inline IntMatrix checked_product(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        p(i, j) = detail::checked_add(p(i, j), detail::checked_mul(a(i, k), b(k, j)));
    }
  return p;
}

template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
  Matrix<To> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = To(m(i, j));
  return r;
}

/// Fraction-free (Bareiss) determinant over Laurent polynomials.
/// Each row is shifted into Z[t] first so that every pivot quotient is an
/// exact polynomial division.
inline LaurentPoly determinant(LaurentMatrix m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);

  int total_shift = 0;
  for (std::size_t r = 0; r < n; ++r) {
    int lo = 0;
    bool any = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (m(r, c).is_zero()) continue;
      lo = any ? std::min(lo, m(r, c).low()) : m(r, c).low();
      any = true;
    }
    if (!any) return {};
    for (std::size_t c = 0; c < n; ++c) m(r, c) = m(r, c).shifted(-lo);
    total_shift += lo;
  }

  LaurentPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Prefer the sparsest nonzero pivot in the column; keeps intermediate
    // degrees down without affecting exactness.
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      if (piv == n || m(r, k).span() < m(piv, k).span()) piv = r;
    }
    if (piv == n) return {};
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_divide(std::move(v), prev);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  LaurentPoly d = m(n - 1, n - 1).shifted(total_shift);
  return sign < 0 ? -d : d;
}

/// Exact determinant of an integer matrix (Bareiss over big integers).
inline BigInt determinant(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Matrix<BigInt> m = convert<BigInt>(a);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// det(tI - M) for an integer matrix.
inline LaurentPoly characteristic_polynomial(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  LaurentMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      a(i, j) = LaurentPoly(BigInt(-m(i, j)));
      if (i == j) a(i, j) += LaurentPoly::t();
    }
  return determinant(std::move(a));
}

/// Solves X * A = B over the rationals for square invertible A.
inline RationalMatrix solve_right(const RationalMatrix& a, const RationalMatrix& b) {
  // X A = B  <=>  A^T X^T = B^T
  RationalMatrix at = a.transpose();
  RationalMatrix bt = b.transpose();
  const std::size_t n = at.rows();
  if (!at.square() || bt.rows() != n) throw std::invalid_argument("solve shape mismatch");
  const std::size_t m = bt.cols();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && at(piv, k) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular system");
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(piv, c));
      for (std::size_t c = 0; c < m; ++c) std::swap(bt(k, c), bt(piv, c));
    }
    Rational inv = Rational(1) / at(k, k);
    for (std::size_t c = 0; c < n; ++c) at(k, c) *= inv;
    for (std::size_t c = 0; c < m; ++c) bt(k, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || at(r, k) == 0) continue;
      Rational f = at(r, k);
      for (std::size_t c = 0; c < n; ++c) at(r, c) -= f * at(k, c);
      for (std::size_t c = 0; c < m; ++c) bt(r, c) -= f * bt(k, c);
    }
  }
  return bt.transpose();
}

/// Signature (n_+ - n_-) of a symmetric rational matrix by exact congruence
/// diagonalization.  Also reports the nullity.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const { return positive - negative; }
};

inline Inertia inertia(RationalMatrix a) {
  if (!a.square()) throw std::invalid_argument("inertia of a non-square matrix");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j) != a(j, i)) throw std::invalid_argument("inertia needs a symmetric matrix");
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, j));
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) {
          ++out.zero;
          continue;
        }
        // row/col k += row/col j makes the pivot 2 a(k,j) != 0
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    const Rational p = a(k, k);
    (p > 0 ? out.positive : out.negative)++;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      Rational f = a(r, k) / p;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
    for (std::size_t c = k + 1; c < n; ++c) a(k, c) = 0;
    for (std::size_t r = k + 1; r < n; ++r) a(r, k) = 0;
  }
  return out;
}

}  // namespace fibknot
