// Copyright Contributors to the uvhfield Project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>

namespace uvh {

// Forward-mode scalar carrying one derivative channel. Used to take exact
// partial derivatives of small closed-form geometry expressions (projection
// residuals, rotation maps) without hand-deriving Jacobians.
template <typename T>
struct Dual {
  T v = T(0);  // value
  T d = T(0);  // derivative w.r.t. the seeded input

  Dual() = default;
  Dual(T value) : v(value) {}
  Dual(T value, T deriv) : v(value), d(deriv) {}

  Dual operator-() const { return {-v, -d}; }
  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
};

template <typename T> Dual<T> operator+(Dual<T> a, Dual<T> b) { return {a.v + b.v, a.d + b.d}; }
template <typename T> Dual<T> operator-(Dual<T> a, Dual<T> b) { return {a.v - b.v, a.d - b.d}; }
template <typename T> Dual<T> operator*(Dual<T> a, Dual<T> b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
template <typename T> Dual<T> operator/(Dual<T> a, Dual<T> b) {
  T inv = T(1) / b.v;
  return {a.v * inv, (a.d - a.v * b.d * inv) * inv};
}
template <typename T> Dual<T> operator+(Dual<T> a, T b) { return {a.v + b, a.d}; }
template <typename T> Dual<T> operator+(T a, Dual<T> b) { return {a + b.v, b.d}; }
template <typename T> Dual<T> operator-(Dual<T> a, T b) { return {a.v - b, a.d}; }
template <typename T> Dual<T> operator-(T a, Dual<T> b) { return {a - b.v, -b.d}; }
template <typename T> Dual<T> operator*(Dual<T> a, T b) { return {a.v * b, a.d * b}; }
template <typename T> Dual<T> operator*(T a, Dual<T> b) { return {a * b.v, a * b.d}; }
template <typename T> Dual<T> operator/(Dual<T> a, T b) { return {a.v / b, a.d / b}; }

template <typename T> Dual<T> sqrt(Dual<T> a) {
  T s = std::sqrt(a.v);
  return {s, a.d / (T(2) * s)};
}
template <typename T> Dual<T> sin(Dual<T> a) { return {std::sin(a.v), std::cos(a.v) * a.d}; }
template <typename T> Dual<T> cos(Dual<T> a) { return {std::cos(a.v), -std::sin(a.v) * a.d}; }

template <typename T> bool operator<(Dual<T> a, Dual<T> b) { return a.v < b.v; }
template <typename T> bool operator>(Dual<T> a, Dual<T> b) { return a.v > b.v; }

// Tiny fixed-size vector helpers over an arbitrary scalar (T or Dual<T>).
template <typename S> using DVec3 = std::array<S, 3>;

template <typename S> DVec3<S> dvadd(const DVec3<S>& a, const DVec3<S>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
template <typename S> DVec3<S> dvsub(const DVec3<S>& a, const DVec3<S>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
template <typename S, typename C> DVec3<S> dvscale(const DVec3<S>& a, C c) {
  return {a[0] * c, a[1] * c, a[2] * c};
}
template <typename S> S dvdot(const DVec3<S>& a, const DVec3<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
template <typename S> DVec3<S> dvcross(const DVec3<S>& a, const DVec3<S>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
template <typename S> S dvnorm(const DVec3<S>& a) {
  using std::sqrt;
  return sqrt(dvdot(a, a));
}

}  // namespace uvh
