// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <limits>
#include <string>
#include <string_view>

#include "lrotor/errors.hpp"

namespace lrotor {

/// Causal character of a curve or surface: +1 spacelike, -1 timelike.
class CausalSign {
 public:
  constexpr CausalSign(int value) : value_(value) {  // NOLINT(google-explicit-constructor)
    if (value != 1 && value != -1) throw DomainError("causal sign must be +1 or -1");
  }
  static constexpr CausalSign spacelike() { return CausalSign(1); }
  static constexpr CausalSign timelike() { return CausalSign(-1); }

  constexpr int value() const { return value_; }
  constexpr double real() const { return static_cast<double>(value_); }
  constexpr bool is_spacelike() const { return value_ == 1; }

  friend constexpr bool operator==(CausalSign, CausalSign) = default;

 private:
  int value_;
};

/// The four families of rotations of L^3, by causal character of the axis.
///
/// The distance-like coordinate r is z for Hyperbolic1, y for Hyperbolic2,
/// x for Elliptic and v = x1 - x3 for Parabolic.
enum class RotationClass {
  Hyperbolic1,  ///< spacelike x1-axis, Lorentzian generatrix in the (x, z) plane
  Hyperbolic2,  ///< spacelike x1-axis, Euclidean generatrix in the (x, y) plane
  Elliptic,     ///< timelike x3-axis
  Parabolic,    ///< lightlike axis span(1, 0, 1), null coordinates u, v
};

inline constexpr std::array<RotationClass, 4> kAllRotationClasses = {
    RotationClass::Hyperbolic1, RotationClass::Hyperbolic2, RotationClass::Elliptic,
    RotationClass::Parabolic};

inline std::string_view to_string(RotationClass cls) {
  switch (cls) {
    case RotationClass::Hyperbolic1: return "hyperbolic1";
    case RotationClass::Hyperbolic2: return "hyperbolic2";
    case RotationClass::Elliptic: return "elliptic";
    case RotationClass::Parabolic: return "parabolic";
  }
  return "?";
}

inline RotationClass rotation_class_from_string(std::string_view name) {
  for (auto cls : kAllRotationClasses)
    if (to_string(cls) == name) return cls;
  throw ConfigError("unknown rotation class '" + std::string(name) + "'");
}

enum class CausalCharacter { Spacelike, Timelike };

inline std::string_view to_string(CausalCharacter c) {
  return c == CausalCharacter::Spacelike ? "spacelike" : "timelike";
}

/// Interval in the r coordinate. Validity domains treat it as open; the
/// surface r-range treats it as closed.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains_open(double r) const { return r > lo && r < hi; }
  bool contains_closed(double r) const { return r >= lo && r <= hi; }
  bool bounded() const { return hi < std::numeric_limits<double>::infinity(); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace lrotor
