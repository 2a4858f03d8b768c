// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace lrotor {

/// Point or vector of L^3 in canonical coordinates.
struct AmbientPoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  friend AmbientPoint operator+(AmbientPoint a, AmbientPoint b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
  }
  friend AmbientPoint operator-(AmbientPoint a, AmbientPoint b) {
    return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
  }
  friend AmbientPoint operator*(double s, AmbientPoint a) { return {s * a.x1, s * a.x2, s * a.x3}; }
  friend AmbientPoint operator/(AmbientPoint a, double s) { return {a.x1 / s, a.x2 / s, a.x3 / s}; }
  friend bool operator==(const AmbientPoint&, const AmbientPoint&) = default;

  bool finite() const { return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3); }
};

/// Lorentzian inner product dx1^2 + dx2^2 - dx3^2.
inline double inner(AmbientPoint u, AmbientPoint v) { return u.x1 * v.x1 + u.x2 * v.x2 - u.x3 * v.x3; }

/// Lorentzian cross product: <u x v, w> = det(u, v, w).
inline AmbientPoint cross(AmbientPoint u, AmbientPoint v) {
  return {u.x2 * v.x3 - u.x3 * v.x2, u.x3 * v.x1 - u.x1 * v.x3, -(u.x1 * v.x2 - u.x2 * v.x1)};
}

inline double det(AmbientPoint u, AmbientPoint v, AmbientPoint w) {
  return u.x1 * (v.x2 * w.x3 - v.x3 * w.x2) - u.x2 * (v.x1 * w.x3 - v.x3 * w.x1) +
         u.x3 * (v.x1 * w.x2 - v.x2 * w.x1);
}

}  // namespace lrotor
