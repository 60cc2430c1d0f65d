#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "qgain/quaternion.hpp"

namespace qgg {

/// Exact complex number over T; the entry type of the complex adjoint.
template <typename T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(const T& r) : re(r), im(0) {}  // NOLINT
  Complex(const T& r, const T& i) : re(r), im(i) {}

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(T(a.re + b.re), T(a.im + b.im));
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(T(a.re - b.re), T(a.im - b.im));
  }
  friend Complex operator-(const Complex& a) { return Complex(T(-a.re), T(-a.im)); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(T(a.re * b.re - a.im * b.im), T(a.re * b.im + a.im * b.re));
  }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

template <typename T>
Complex<T> conj(const Complex<T>& z) {
  return Complex<T>(z.re, T(-z.im));
}

template <typename T>
Complex<T> inverse(const Complex<T>& z) {
  const T n = T(z.re * z.re + z.im * z.im);
  if (n == 0) throw std::domain_error("complex inverse: division by zero");
  return Complex<T>(T(z.re / n), T(-z.im / n));
}

template <typename T>
bool is_zero(const Complex<T>& z) {
  return z.re == 0 && z.im == 0;
}

}  // namespace qgg

namespace Eigen {

template <typename T>
struct NumTraits<qgg::Quaternion<T>> : GenericNumTraits<qgg::Quaternion<T>> {
  using Real = qgg::Quaternion<T>;
  using NonInteger = Real;
  using Literal = Real;
  using Nested = Real;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4 * NumTraits<double>::ReadCost,
    AddCost = 4 * NumTraits<double>::AddCost,
    MulCost = 16 * NumTraits<double>::MulCost,
  };
};

template <typename T>
struct NumTraits<qgg::Complex<T>> : GenericNumTraits<qgg::Complex<T>> {
  using Real = qgg::Complex<T>;
  using NonInteger = Real;
  using Literal = Real;
  using Nested = Real;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2 * NumTraits<double>::ReadCost,
    AddCost = 2 * NumTraits<double>::AddCost,
    MulCost = 4 * NumTraits<double>::MulCost,
  };
};

}  // namespace Eigen

namespace qgg {

template <typename T>
using QMatrix = Eigen::Matrix<Quaternion<T>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using ComplexMatrix = Eigen::Matrix<Complex<T>, Eigen::Dynamic, Eigen::Dynamic>;

using ExactMatrix = QMatrix<Rational>;
using FloatMatrix = QMatrix<double>;
using ExactComplexMatrix = ComplexMatrix<Rational>;

// Eigen's product kernels are free to reassociate scalar factors, which is
// wrong for quaternions. Products over a noncommutative entry type go
// through this explicit triple loop instead.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> multiply(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows(), b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < b.cols(); ++c) {
      Scalar acc;
      for (Eigen::Index t = 0; t < a.cols(); ++t) acc += a(r, t) * b(t, c);
      out(r, c) = acc;
    }
  }
  return out;
}

template <typename T>
QMatrix<T> conjugate_transpose(const QMatrix<T>& a) {
  QMatrix<T> out(a.cols(), a.rows());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) out(c, r) = conj(a(r, c));
  return out;
}

template <typename T>
bool is_hermitian(const QMatrix<T>& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = r; c < a.cols(); ++c)
      if (a(r, c) != conj(a(c, r))) return false;
  return true;
}

/// Row left rank: the number of pivots left after eliminating with the left
/// row operation row_i <- row_i + q row_p, q = -a_ip a_pp^-1.
///
/// T must be an exact scalar; zero tests are equality tests. The first
/// nonzero entry in each column is taken as pivot.
template <typename T>
std::size_t row_left_rank(QMatrix<T> a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && is_zero(a(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    const Quaternion<T> pivot_inv = inverse(a(rank, col));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (is_zero(a(r, col))) continue;
      const Quaternion<T> factor = -(a(r, col) * pivot_inv);
      a(r, col) = Quaternion<T>();
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        if (!is_zero(a(rank, c))) a(r, c) += factor * a(rank, c);
      }
    }
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

/// Column right rank, computed with right column operations
/// col_j <- col_j + col_p q, q = -a_pp^-1 a_pj. Deliberately not routed
/// through a transpose: transposition does not preserve left/right ranks of
/// quaternion matrices.
template <typename T>
std::size_t column_right_rank(QMatrix<T> a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index row = 0; row < rows && rank < cols; ++row) {
    Eigen::Index pivot = rank;
    while (pivot < cols && is_zero(a(row, pivot))) ++pivot;
    if (pivot == cols) continue;
    if (pivot != rank) a.col(pivot).swap(a.col(rank));
    const Quaternion<T> pivot_inv = inverse(a(row, rank));
    for (Eigen::Index c = rank + 1; c < cols; ++c) {
      if (is_zero(a(row, c))) continue;
      const Quaternion<T> factor = -(pivot_inv * a(row, c));
      a(row, c) = Quaternion<T>();
      for (Eigen::Index r = row + 1; r < rows; ++r) {
        if (!is_zero(a(r, rank))) a(r, c) += a(r, rank) * factor;
      }
    }
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

/// Complex adjoint: with q = z + w j (z = w0 + x i, w = y + z i), the 2m x 2n
/// block matrix [[Z, W], [-conj(W), conj(Z)]].
template <typename T>
ComplexMatrix<T> complex_adjoint(const QMatrix<T>& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  ComplexMatrix<T> out(2 * m, 2 * n);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Quaternion<T>& q = a(r, c);
      const Complex<T> z(q.w(), q.x());
      const Complex<T> w(q.y(), q.z());
      out(r, c) = z;
      out(r, n + c) = w;
      out(m + r, c) = -conj(w);
      out(m + r, n + c) = conj(z);
    }
  }
  return out;
}

/// Ordinary rank over exact complex entries.
template <typename T>
std::size_t complex_rank(ComplexMatrix<T> a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && is_zero(a(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    const Complex<T> pivot_inv = inverse(a(rank, col));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (is_zero(a(r, col))) continue;
      const Complex<T> factor = -(a(r, col) * pivot_inv);
      a(r, col) = Complex<T>();
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        if (!is_zero(a(rank, c))) a(r, c) += factor * a(rank, c);
      }
    }
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

inline constexpr double kDefaultPivotTolerance = 1e-9;

/// Float-mode row left rank with largest-modulus pivoting. Entries whose
/// modulus is at most pivot_tol times the largest initial modulus count as
/// zero.
std::size_t row_left_rank_float(FloatMatrix a, double pivot_tol = kDefaultPivotTolerance);

FloatMatrix to_float(const ExactMatrix& a);

/// One row per line, entries in quaternion token form separated by spaces.
std::string dump(const ExactMatrix& a);

}  // namespace qgg
