#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qgg {

// Exact scalar substrate. GMP keeps every mpq_class result canonical
// (positive denominator, lowest terms).
using Rational = mpq_class;

/// Real quaternion w + x i + y j + z k over the scalar T.
///
/// T must behave like an ordered field (Rational for exact work, double for the
/// float mode used by the rank routines). Multiplication follows
/// i^2 = j^2 = k^2 = ijk = -1 and is therefore not commutative.
template <typename T>
class Quaternion {
 public:
  using Scalar = T;

  Quaternion() : w_(0), x_(0), y_(0), z_(0) {}
  Quaternion(const T& real) : w_(real), x_(0), y_(0), z_(0) {}  // NOLINT
  Quaternion(const T& w, const T& x, const T& y, const T& z) : w_(w), x_(x), y_(y), z_(z) {}

  static Quaternion identity() { return Quaternion(T(1)); }
  static Quaternion i() { return Quaternion(T(0), T(1), T(0), T(0)); }
  static Quaternion j() { return Quaternion(T(0), T(0), T(1), T(0)); }
  static Quaternion k() { return Quaternion(T(0), T(0), T(0), T(1)); }

  const T& w() const { return w_; }
  const T& x() const { return x_; }
  const T& y() const { return y_; }
  const T& z() const { return z_; }

  Quaternion& operator+=(const Quaternion& o) {
    w_ += o.w_;
    x_ += o.x_;
    y_ += o.y_;
    z_ += o.z_;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w_ -= o.w_;
    x_ -= o.x_;
    y_ -= o.y_;
    z_ -= o.z_;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) {
    return Quaternion(T(-a.w_), T(-a.x_), T(-a.y_), T(-a.z_));
  }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return Quaternion(T(a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_),
                      T(a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_),
                      T(a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_),
                      T(a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_));
  }
  friend Quaternion operator*(const T& s, const Quaternion& q) {
    return Quaternion(T(s * q.w_), T(s * q.x_), T(s * q.y_), T(s * q.z_));
  }
  friend Quaternion operator*(const Quaternion& q, const T& s) { return s * q; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

 private:
  T w_, x_, y_, z_;
};

using ExactQuaternion = Quaternion<Rational>;
using FloatQuaternion = Quaternion<double>;

template <typename T>
Quaternion<T> conj(const Quaternion<T>& q) {
  return Quaternion<T>(q.w(), T(-q.x()), T(-q.y()), T(-q.z()));
}

/// Squared modulus; stays inside T, unlike the modulus itself.
template <typename T>
T norm_sq(const Quaternion<T>& q) {
  return T(q.w() * q.w() + q.x() * q.x() + q.y() * q.y() + q.z() * q.z());
}

template <typename T>
bool is_zero(const Quaternion<T>& q) {
  return q.w() == 0 && q.x() == 0 && q.y() == 0 && q.z() == 0;
}

template <typename T>
bool is_unit(const Quaternion<T>& q) {
  return norm_sq(q) == T(1);
}

template <typename T>
bool is_real(const Quaternion<T>& q) {
  return q.x() == 0 && q.y() == 0 && q.z() == 0;
}

template <typename T>
bool is_pure(const Quaternion<T>& q) {
  return q.w() == 0;
}

template <typename T>
Quaternion<T> inverse(const Quaternion<T>& q) {
  const T n = norm_sq(q);
  if (n == 0) throw std::domain_error("quaternion inverse: division by zero");
  const T inv = T(T(1) / n);
  return inv * conj(q);
}

template <typename T>
T re(const Quaternion<T>& q) {
  return q.w();
}

template <typename T>
Quaternion<T> im(const Quaternion<T>& q) {
  return Quaternion<T>(T(0), q.x(), q.y(), q.z());
}

/// Cayley transform (1 + v)(1 - v)^-1 of a pure quaternion.
///
/// Lands exactly on the unit sphere and never on -1. Throws
/// std::invalid_argument when v has a nonzero real part.
ExactQuaternion cayley_unit(const ExactQuaternion& v);

/// The eight Lipschitz units {+-1, +-i, +-j, +-k}, closed under products and
/// conjugation.
const std::array<ExactQuaternion, 8>& lipschitz_units();

FloatQuaternion to_float(const ExactQuaternion& q);

// Token format "a/b,c/d,e/f,g/h", denominators omitted when 1.
std::string to_token(const ExactQuaternion& q);

/// Parses the token format above. Throws std::invalid_argument with a
/// description of the offending component.
ExactQuaternion parse_token(std::string_view token);

/// Float-mode variant: each component may also be a decimal literal
/// such as 0.7071067811865476 or -1e-3.
FloatQuaternion parse_float_token(std::string_view token);

Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ExactQuaternion& q);
std::ostream& operator<<(std::ostream& os, const FloatQuaternion& q);

}  // namespace qgg
