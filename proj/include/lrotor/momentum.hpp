// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Geometric linear momentum K(r) of a generatrix curve with respect to the
// rotation axis. K determines the rotational surface up to translations along
// the axis, so every other module is driven by a MomentumSpec.

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "lrotor/errors.hpp"
#include "lrotor/types.hpp"

namespace lrotor {

namespace momenta {

struct Zero {};

struct Constant {
  double value = 0.0;
};

/// K = r / R, the umbilical (hyperbolic plane / de Sitter) momentum.
struct Linear {
  double radius = 1.0;
};

/// K = a / r, zero mean curvature.
struct InverseLinear {
  double a = 1.0;
};

/// K = (r / a)^q, Lorentzian Hopf surfaces.
struct Power {
  double q = 1.0;
  double a = 1.0;
};

/// K = r / (mu + c r), solutions of k_m = mu k_p^2.
struct QuadraticFamily {
  double mu = 1.0;
  double c = 0.0;
};

/// K = r / sqrt(mu + c r^2), solutions of k_m = mu k_p^3.
struct CubicFamily {
  double mu = 1.0;
  double c = 0.0;
};

/// Runtime-only momentum. `value` may throw DomainError outside its domain.
/// Without `derivative`, K' is taken by a 4th-order central difference with
/// step `fd_step`, or max(1e-5, 1e-7 r) when fd_step is zero.
struct Custom {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  double fd_step = 0.0;
  std::string label = "custom";
};

}  // namespace momenta

using MomentumSpec =
    std::variant<momenta::Zero, momenta::Constant, momenta::Linear, momenta::InverseLinear,
                 momenta::Power, momenta::QuadraticFamily, momenta::CubicFamily, momenta::Custom>;

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] inline void throw_domain(const char* what, double r) {
  throw DomainError(std::string(what) + " (r = " + std::to_string(r) + ")");
}

}  // namespace detail

/// Validates the catalog parameters of a momentum.
inline void validate(const MomentumSpec& spec) {
  std::visit(detail::overloaded{
                 [](const momenta::Linear& m) {
                   if (!(m.radius > 0)) throw DomainError("linear momentum needs R > 0");
                 },
                 [](const momenta::InverseLinear& m) {
                   if (!(m.a >= 0)) throw DomainError("inverse-linear momentum needs a >= 0");
                 },
                 [](const momenta::Power& m) {
                   if (m.q == 0 || !(m.a > 0)) throw DomainError("power momentum needs q != 0, a > 0");
                 },
                 [](const momenta::QuadraticFamily& m) {
                   if (m.mu == 0) throw DomainError("quadratic family needs mu != 0");
                 },
                 [](const momenta::CubicFamily& m) {
                   if (m.mu == 0) throw DomainError("cubic family needs mu != 0");
                 },
                 [](const momenta::Custom& m) {
                   if (!m.value) throw DomainError("custom momentum without evaluator");
                 },
                 [](const auto&) {},
             },
             spec);
}

/// K(r). Catalog variants are exact; r must lie in the algebraic domain.
inline double eval(const MomentumSpec& spec, double r) {
  if (!std::isfinite(r)) detail::throw_domain("non-finite r", r);
  return std::visit(
      detail::overloaded{
          [](const momenta::Zero&) { return 0.0; },
          [](const momenta::Constant& m) { return m.value; },
          [r](const momenta::Linear& m) { return r / m.radius; },
          [r](const momenta::InverseLinear& m) {
            if (r == 0) detail::throw_domain("a/r is undefined at r = 0", r);
            return m.a / r;
          },
          [r](const momenta::Power& m) {
            if (!(r > 0)) detail::throw_domain("(r/a)^q needs r > 0", r);
            return std::pow(r / m.a, m.q);
          },
          [r](const momenta::QuadraticFamily& m) {
            const double den = m.mu + m.c * r;
            if (den == 0) detail::throw_domain("mu + c r vanishes", r);
            return r / den;
          },
          [r](const momenta::CubicFamily& m) {
            const double rad = m.mu + m.c * r * r;
            if (!(rad > 0)) detail::throw_domain("mu + c r^2 must be positive", r);
            return r / std::sqrt(rad);
          },
          [r](const momenta::Custom& m) {
            const double k = m.value(r);
            if (!std::isfinite(k)) detail::throw_domain("custom momentum is not finite", r);
            return k;
          },
      },
      spec);
}

/// K'(r); analytic for catalog variants.
inline double deriv(const MomentumSpec& spec, double r) {
  if (!std::isfinite(r)) detail::throw_domain("non-finite r", r);
  return std::visit(
      detail::overloaded{
          [](const momenta::Zero&) { return 0.0; },
          [](const momenta::Constant&) { return 0.0; },
          [](const momenta::Linear& m) { return 1.0 / m.radius; },
          [r](const momenta::InverseLinear& m) {
            if (r == 0) detail::throw_domain("a/r is undefined at r = 0", r);
            return -m.a / (r * r);
          },
          [r](const momenta::Power& m) {
            if (!(r > 0)) detail::throw_domain("(r/a)^q needs r > 0", r);
            return m.q * std::pow(r / m.a, m.q) / r;
          },
          [r](const momenta::QuadraticFamily& m) {
            const double den = m.mu + m.c * r;
            if (den == 0) detail::throw_domain("mu + c r vanishes", r);
            return m.mu / (den * den);
          },
          [r](const momenta::CubicFamily& m) {
            const double rad = m.mu + m.c * r * r;
            if (!(rad > 0)) detail::throw_domain("mu + c r^2 must be positive", r);
            return m.mu / (rad * std::sqrt(rad));
          },
          [r](const momenta::Custom& m) {
            if (m.derivative) return m.derivative(r);
            const double h = m.fd_step > 0 ? m.fd_step : std::max(1e-5, 1e-7 * std::abs(r));
            return (-m.value(r + 2 * h) + 8 * m.value(r + h) - 8 * m.value(r - h) +
                    m.value(r - 2 * h)) /
                   (12 * h);
          },
      },
      spec);
}

/// Points where the catalog formula itself breaks down (poles, vanishing
/// radicands) on r > 0. Custom momenta report none.
inline std::vector<double> algebraic_breakpoints(const MomentumSpec& spec) {
  std::vector<double> out;
  if (const auto* q = std::get_if<momenta::QuadraticFamily>(&spec)) {
    if (q->c != 0 && -q->mu / q->c > 0) out.push_back(-q->mu / q->c);
  } else if (const auto* c = std::get_if<momenta::CubicFamily>(&spec)) {
    if (c->c != 0 && -c->mu / c->c > 0) out.push_back(std::sqrt(-c->mu / c->c));
  }
  return out;
}

/// Quantity whose positivity defines the class validity region at given K:
/// K^2 - eps, 1 - K^2, K^2 + eps, or K.
inline double class_radicand(RotationClass cls, CausalSign eps, double k) {
  switch (cls) {
    case RotationClass::Hyperbolic1: return k * k - eps.real();
    case RotationClass::Hyperbolic2: return 1.0 - k * k;
    case RotationClass::Elliptic: return k * k + eps.real();
    case RotationClass::Parabolic: return k;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

inline void require_compatible(RotationClass cls, CausalSign eps) {
  if (cls == RotationClass::Hyperbolic2 && eps.is_spacelike())
    throw DomainError("hyperbolic rotational surfaces of second type are always timelike");
}

/// class_radicand(cls, eps, K(r)). For the quadratic and cubic families it is
/// evaluated from the expanded numerator, which stays accurate where K tends
/// to a root of the radicand (K -> 1 for the paraboloids).
inline double momentum_radicand(const MomentumSpec& spec, RotationClass cls, CausalSign eps,
                                double r) {
  const double k = eval(spec, r);
  if (cls == RotationClass::Parabolic) return k;
  const double e = eps.real();
  // K^2 = r^2 / D with rad = (s r^2 + t D) / D, (s, t) = (1, -eps), (-1, 1), (1, eps).
  const double s = cls == RotationClass::Hyperbolic2 ? -1.0 : 1.0;
  const double t = cls == RotationClass::Hyperbolic1 ? -e : cls == RotationClass::Elliptic ? e : 1.0;
  if (const auto* cf = std::get_if<momenta::CubicFamily>(&spec)) {
    const double D = cf->mu + cf->c * r * r;
    return ((s + t * cf->c) * r * r + t * cf->mu) / D;
  }
  if (const auto* qf = std::get_if<momenta::QuadraticFamily>(&spec)) {
    const double d = qf->mu + qf->c * r;
    const double num = (s + t * qf->c * qf->c) * r * r + 2 * t * qf->c * qf->mu * r + t * qf->mu * qf->mu;
    return num / (d * d);
  }
  return class_radicand(cls, eps, k);
}

/// Margin of the validity condition at r, or NaN outside the algebraic domain.
inline double validity_margin(const MomentumSpec& spec, RotationClass cls, CausalSign eps,
                              double r) {
  try {
    return momentum_radicand(spec, cls, eps, r);
  } catch (const DomainError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

inline bool is_valid_at(const MomentumSpec& spec, RotationClass cls, CausalSign eps, double r) {
  if (!(r > 0)) return false;
  const double m = validity_margin(spec, cls, eps, r);
  return std::isfinite(m) && m > 0;
}

struct DomainScan {
  double r_min = 1e-9;
  double r_max = 1e9;
  int points_per_decade = 64;
};

namespace detail {

/// Bisects between a valid and an invalid abscissa until the bracket can no
/// longer shrink in double precision; returns the valid end.
template <class Pred>
double bisect_boundary(Pred&& valid, double good, double bad) {
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (good + bad);
    if (mid == good || mid == bad) break;
    if (valid(mid))
      good = mid;
    else
      bad = mid;
  }
  return good;
}

}  // namespace detail

/// Maximal open intervals of r > 0 on which K is defined and the class
/// condition (K^2 - eps > 0, 1 - K^2 > 0, K^2 + eps > 0, K > 0) holds.
///
/// The half-line is scanned on a geometric grid refined by the algebraic
/// breakpoints; each change of validity is bisected to double precision.
/// A region valid at the first (last) grid point is extended to 0 (+inf).
inline std::vector<Interval> validity_domain(const MomentumSpec& spec, RotationClass cls,
                                             CausalSign eps, const DomainScan& scan = {}) {
  validate(spec);
  require_compatible(cls, eps);
  auto valid = [&](double r) { return is_valid_at(spec, cls, eps, r); };

  std::vector<double> grid;
  const double decades = std::log10(scan.r_max / scan.r_min);
  const int n = static_cast<int>(std::ceil(decades * scan.points_per_decade));
  grid.reserve(n + 8);
  for (int i = 0; i <= n; ++i) grid.push_back(scan.r_min * std::pow(10.0, decades * i / n));
  for (double b : algebraic_breakpoints(spec)) {
    if (b > scan.r_min && b < scan.r_max) grid.push_back(b);
  }
  std::sort(grid.begin(), grid.end());

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<Interval> out;
  bool inside = valid(grid.front());
  double lo = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const bool v = valid(grid[i]);
    if (v == inside) continue;
    if (v) {
      lo = detail::bisect_boundary(valid, grid[i], grid[i - 1]);
    } else {
      out.push_back({lo, detail::bisect_boundary(valid, grid[i - 1], grid[i])});
    }
    inside = v;
  }
  if (inside) out.push_back({lo, kInf});
  if (out.empty()) throw EmptyDomain("momentum admits no valid r for this rotation class and sign");
  return out;
}

/// Signed curvature of the generatrix: +K' for Hyperbolic1 and Elliptic,
/// -K' for Hyperbolic2 and Parabolic.
inline double generatrix_curvature(const MomentumSpec& spec, RotationClass cls, double r) {
  const double dk = deriv(spec, r);
  switch (cls) {
    case RotationClass::Hyperbolic1:
    case RotationClass::Elliptic: return dk;
    case RotationClass::Hyperbolic2:
    case RotationClass::Parabolic: return -dk;
  }
  return dk;
}

/// Angle of the unit tangent: theta with K = cos(theta) for Hyperbolic2;
/// phi with K = cosh(phi) / sinh(phi) for the Lorentzian generatrices; and
/// phi = -log K for Parabolic (the timelike case uses |K| under the positive
/// orientation convention).
inline double frame_angle(const MomentumSpec& spec, RotationClass cls, CausalSign eps, double r) {
  require_compatible(cls, eps);
  const double k = eval(spec, r);
  switch (cls) {
    case RotationClass::Hyperbolic2:
      if (std::abs(k) > 1) detail::throw_domain("|K| > 1 has no Euclidean angle", r);
      return std::acos(k);
    case RotationClass::Hyperbolic1:
      if (eps.is_spacelike()) {
        if (k < 1) detail::throw_domain("K = cosh(phi) needs K >= 1", r);
        return std::acosh(k);
      }
      return std::asinh(k);
    case RotationClass::Elliptic:
      if (eps.is_spacelike()) return std::asinh(k);
      if (k < 1) detail::throw_domain("K = cosh(phi) needs K >= 1", r);
      return std::acosh(k);
    case RotationClass::Parabolic:
      if (!(k > 0)) detail::throw_domain("K = exp(-phi) needs K > 0", r);
      return -std::log(k);
  }
  return 0.0;
}

inline std::string describe(const MomentumSpec& spec) {
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::string(buf);
  };
  return std::visit(
      detail::overloaded{
          [](const momenta::Zero&) { return std::string("K = 0"); },
          [&](const momenta::Constant& m) { return "K = " + num(m.value); },
          [&](const momenta::Linear& m) { return "K = r/" + num(m.radius); },
          [&](const momenta::InverseLinear& m) { return "K = " + num(m.a) + "/r"; },
          [&](const momenta::Power& m) { return "K = (r/" + num(m.a) + ")^" + num(m.q); },
          [&](const momenta::QuadraticFamily& m) {
            return "K = r/(" + num(m.mu) + " + " + num(m.c) + " r)";
          },
          [&](const momenta::CubicFamily& m) {
            return "K = r/sqrt(" + num(m.mu) + " + " + num(m.c) + " r^2)";
          },
          [](const momenta::Custom& m) { return "K = " + m.label; },
      },
      spec);
}

}  // namespace lrotor
