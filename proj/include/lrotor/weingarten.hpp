// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Weingarten relations Phi(k_m, k_p) = 0 on rotational surfaces. Since
// k_m = K'(r) and k_p = K(r)/r, each relation is a first-order ODE for K.

#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lrotor/errors.hpp"
#include "lrotor/momentum.hpp"
#include "lrotor/ode.hpp"
#include "lrotor/quadrature.hpp"
#include "lrotor/surface.hpp"
#include "lrotor/types.hpp"

namespace lrotor {

namespace relations {

/// k_m = q k_p
struct LinearProportional {
  double q = 1.0;
};
/// k_m = -k_p
struct ZeroMeanCurvature {};
/// k_m = mu k_p^2
struct Quadratic {
  double mu = 1.0;
};
/// k_m = mu k_p^3
struct Cubic {
  double mu = 1.0;
};
/// Caller-defined relation. `rhs` is K' solved from Phi; without it the
/// relation cannot drive the ODE.
struct Custom {
  std::function<double(double, double)> phi;
  std::function<double(double, double)> rhs;
  std::string label = "custom";
};

}  // namespace relations

using WeingartenRelation =
    std::variant<relations::LinearProportional, relations::ZeroMeanCurvature, relations::Quadratic,
                 relations::Cubic, relations::Custom>;

/// k_m = 0: flat meridians (cones and cylinders).
inline WeingartenRelation meridian_flat_relation() {
  return relations::Custom{[](double km, double) { return km; }, [](double, double) { return 0.0; },
                           "km0"};
}

inline double phi(const WeingartenRelation& rel, double k_m, double k_p) {
  return std::visit(detail::overloaded{
                        [&](const relations::LinearProportional& x) { return k_m - x.q * k_p; },
                        [&](const relations::ZeroMeanCurvature&) { return k_m + k_p; },
                        [&](const relations::Quadratic& x) { return k_m - x.mu * k_p * k_p; },
                        [&](const relations::Cubic& x) { return k_m - x.mu * k_p * k_p * k_p; },
                        [&](const relations::Custom& x) { return x.phi(k_m, k_p); },
                    },
                    rel);
}

/// K' = F(r, K) encoding Phi(K', K/r) = 0.
inline double ode_rhs(const WeingartenRelation& rel, double r, double K) {
  if (r == 0) detail::throw_domain("relation ODE is singular on the axis", r);
  return std::visit(
      detail::overloaded{
          [&](const relations::LinearProportional& x) { return x.q * K / r; },
          [&](const relations::ZeroMeanCurvature&) { return -K / r; },
          [&](const relations::Quadratic& x) { return x.mu * K * K / (r * r); },
          [&](const relations::Cubic& x) { return x.mu * K * K * K / (r * r * r); },
          [&](const relations::Custom& x) {
            if (!x.rhs)
              throw UnsolvableForDerivative("custom relation '" + x.label +
                                            "' does not provide K' = F(r, K)");
            return x.rhs(r, K);
          },
      },
      rel);
}

inline std::string to_string(const WeingartenRelation& rel) {
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  return std::visit(detail::overloaded{
                        [&](const relations::LinearProportional& x) { return "linear:q=" + num(x.q); },
                        [](const relations::ZeroMeanCurvature&) { return std::string("H0"); },
                        [&](const relations::Quadratic& x) { return "quadratic:mu=" + num(x.mu); },
                        [&](const relations::Cubic& x) { return "cubic:mu=" + num(x.mu); },
                        [](const relations::Custom& x) { return x.label; },
                    },
                    rel);
}

/// Parses "linear:q=2", "quadratic:mu=1", "cubic:mu=-1", "H0" or "km0".
inline WeingartenRelation parse_relation(std::string_view text) {
  const std::string s(text);
  if (s == "H0") return relations::ZeroMeanCurvature{};
  if (s == "km0") return meridian_flat_relation();
  auto value_of = [&](std::string_view prefix) -> double {
    const std::string rest = s.substr(prefix.size());
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(rest, &used);
    } catch (const std::exception&) {
      throw ConfigError("malformed relation '" + s + "'");
    }
    if (used != rest.size() || !std::isfinite(v)) throw ConfigError("malformed relation '" + s + "'");
    return v;
  };
  auto starts = [&](std::string_view p) { return s.rfind(p, 0) == 0; };
  if (starts("linear:q=")) {
    const double q = value_of("linear:q=");
    if (q == 0) throw ConfigError("linear relation needs q != 0");
    return relations::LinearProportional{q};
  }
  if (starts("quadratic:mu=")) {
    const double mu = value_of("quadratic:mu=");
    if (mu == 0) throw ConfigError("quadratic relation needs mu != 0");
    return relations::Quadratic{mu};
  }
  if (starts("cubic:mu=")) {
    const double mu = value_of("cubic:mu=");
    if (mu == 0) throw ConfigError("cubic relation needs mu != 0");
    return relations::Cubic{mu};
  }
  throw ConfigError("unknown relation '" + s + "'");
}

/// The closed-form solution family of a relation with free parameter
/// `param`: a for the linear and zero-H families, c for the quadratic and
/// cubic families.
inline MomentumSpec closed_form_momentum(const WeingartenRelation& rel, double param) {
  MomentumSpec out = std::visit(
      detail::overloaded{
          [&](const relations::LinearProportional& x) -> MomentumSpec {
            if (x.q == 1) return momenta::Linear{param};
            if (x.q == -1) return momenta::InverseLinear{param};
            return momenta::Power{x.q, param};
          },
          [&](const relations::ZeroMeanCurvature&) -> MomentumSpec {
            return momenta::InverseLinear{param};
          },
          [&](const relations::Quadratic& x) -> MomentumSpec {
            if (param == 0) return momenta::Linear{x.mu};
            return momenta::QuadraticFamily{x.mu, param};
          },
          [&](const relations::Cubic& x) -> MomentumSpec {
            return momenta::CubicFamily{x.mu, param};
          },
          [](const relations::Custom&) -> MomentumSpec {
            throw UnsolvableForDerivative("custom relations have no closed-form family");
          },
      },
      rel);
  validate(out);
  return out;
}

/// Closed-form solution through (r0, K0), positive branch.
inline MomentumSpec fit_closed_form(const WeingartenRelation& rel, double r0, double K0) {
  if (!(r0 > 0)) throw DomainError("initial abscissa must be positive");
  return std::visit(
      detail::overloaded{
          [&](const relations::LinearProportional& x) {
            if (!(K0 > 0)) throw DomainError("power family needs K0 > 0");
            return closed_form_momentum(rel, r0 / std::pow(K0, 1.0 / x.q));
          },
          [&](const relations::ZeroMeanCurvature&) { return closed_form_momentum(rel, K0 * r0); },
          [&](const relations::Quadratic& x) {
            if (K0 == 0) throw DomainError("quadratic family needs K0 != 0");
            return closed_form_momentum(rel, (r0 / K0 - x.mu) / r0);
          },
          [&](const relations::Cubic& x) {
            if (!(K0 > 0)) throw DomainError("cubic family needs K0 > 0");
            return closed_form_momentum(rel, (r0 * r0 / (K0 * K0) - x.mu) / (r0 * r0));
          },
          [&](const relations::Custom&) -> MomentumSpec {
            throw UnsolvableForDerivative("custom relations have no closed-form family");
          },
      },
      rel);
}

/// Output of solve_ode: the solution as a Custom momentum plus the accepted
/// nodes.
struct OdeMomentum {
  MomentumSpec momentum;
  std::shared_ptr<const OdeSolution> solution;
  /// Boundary of the validity domain when the solution left it.
  std::optional<double> exit_boundary;
};

/// Integrates K' = F(r, K) from K(r0) = K0 to r_end with atol = rtol = tol.
/// With a (class, eps) guard, integration stops at the validity boundary,
/// which is then located to 1e-10 and reported.
inline OdeMomentum solve_ode(const WeingartenRelation& rel, double r0, double K0, double r_end,
                             double tol,
                             std::optional<std::pair<RotationClass, CausalSign>> guard = std::nullopt) {
  if (!(r0 > 0) || !(r_end > 0)) throw DomainError("solve_ode needs r0, r_end > 0");
  if (!(tol > 0)) throw DomainError("solve_ode needs tol > 0");
  OdeOptions opt;
  opt.atol = opt.rtol = tol;
  if (guard) {
    require_compatible(guard->first, guard->second);
    opt.valid = [g = *guard](double r, double k) {
      return r > 0 && class_radicand(g.first, g.second, k) > 0;
    };
  } else {
    opt.valid = [](double r, double) { return r > 0; };
  }
  auto f = [rel](double r, double k) { return ode_rhs(rel, r, k); };
  auto sol = std::make_shared<const OdeSolution>(integrate_ode(f, r0, K0, r_end, opt));

  OdeMomentum out;
  out.solution = sol;
  out.exit_boundary = sol->exit_boundary;
  momenta::Custom m;
  m.value = [sol](double r) { return (*sol)(r); };
  m.derivative = [sol, rel](double r) { return ode_rhs(rel, r, (*sol)(r)); };
  m.label = "ode(" + to_string(rel) + ")";
  out.momentum = std::move(m);
  return out;
}

/// Phi(k_m, k_p) with the closed-form principal curvatures of spec at r.
inline double relation_residual(const WeingartenRelation& rel, const SurfaceSpec& spec, double r) {
  if (!spec.r_interval.contains_closed(r)) detail::throw_domain("r outside the surface interval", r);
  const auto c = curvatures_closed(spec, r);
  return phi(rel, c.k_m, c.k_p);
}

// ---------------------------------------------------------------------------
// Lorentzian Hopf surfaces: K(r) = (r/a)^q.

enum class HopfFamily { I_T, I_S, II, III_T, III_S, IV };

inline std::string_view to_string(HopfFamily f) {
  switch (f) {
    case HopfFamily::I_T: return "I-T";
    case HopfFamily::I_S: return "I-S";
    case HopfFamily::II: return "II";
    case HopfFamily::III_T: return "III-T";
    case HopfFamily::III_S: return "III-S";
    case HopfFamily::IV: return "IV";
  }
  return "?";
}

/// Rotation class and causal sign of a Hopf family. IV takes eps as given.
inline std::pair<RotationClass, CausalSign> hopf_class(HopfFamily f, CausalSign eps = 1) {
  switch (f) {
    case HopfFamily::I_T: return {RotationClass::Hyperbolic1, -1};
    case HopfFamily::I_S: return {RotationClass::Hyperbolic1, 1};
    case HopfFamily::II: return {RotationClass::Hyperbolic2, -1};
    case HopfFamily::III_T: return {RotationClass::Elliptic, -1};
    case HopfFamily::III_S: return {RotationClass::Elliptic, 1};
    case HopfFamily::IV: return {RotationClass::Parabolic, eps};
  }
  return {RotationClass::Elliptic, 1};
}

/// Generatrix point in class coordinates: r is the distance-like coordinate
/// (z, y, x or v) and g the axis coordinate (x, x, z or u).
struct PlanarPoint {
  double r = 0;
  double g = 0;
};

/// Point of the Hopf generatrix at parameter t (t = v for family IV).
/// The sinh integrals start at 0 when integrable there and at 1 otherwise.
inline PlanarPoint hopf_generatrix(double q, double a, HopfFamily family, CausalSign eps, double t) {
  if (q == 0 || !(a > 0)) throw DomainError("Hopf generatrix needs q != 0 and a > 0");
  if (!std::isfinite(t)) throw DomainError("non-finite parameter");
  const double p = 1.0 / q;
  auto power_integral = [&](auto&& base, double lower) {
    const std::function<double(double)> f = [&](double v) { return std::pow(base(v), p); };
    return (a / q) * integrate(f, lower, t).value;
  };
  auto sinh_fn = [](double v) { return std::sinh(v); };
  auto cosh_fn = [](double v) { return std::cosh(v); };
  const double sinh_lower = p > -1 ? 0.0 : 1.0;
  switch (family) {
    case HopfFamily::I_T:
      if (!(t > 0)) throw DomainError("family I-T needs t > 0");
      return {a * std::pow(std::sinh(t), p), power_integral(sinh_fn, sinh_lower)};
    case HopfFamily::I_S:
      return {a * std::pow(std::cosh(t), p), power_integral(cosh_fn, 0.0)};
    case HopfFamily::II: {
      if (!(std::abs(t) < std::numbers::pi / 2)) throw DomainError("family II needs |t| < pi/2");
      const std::function<double(double)> f = [&](double v) { return std::pow(std::cos(v), p); };
      return {a * std::pow(std::cos(t), p), -(a / q) * integrate(f, 0.0, t).value};
    }
    case HopfFamily::III_T:
      return {a * std::pow(std::cosh(t), p), power_integral(cosh_fn, 0.0)};
    case HopfFamily::III_S:
      if (!(t > 0)) throw DomainError("family III-S needs t > 0");
      return {a * std::pow(std::sinh(t), p), power_integral(sinh_fn, sinh_lower)};
    case HopfFamily::IV: {
      if (!(t > 0)) throw DomainError("family IV needs v > 0");
      const double a2q = std::pow(a, 2 * q);
      if (q == 0.5) return {t, eps.real() * a2q * std::log(t)};
      return {t, eps.real() * a2q * std::pow(t, 1 - 2 * q) / (1 - 2 * q)};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Explicit graphs of the quadratic family K = r/(mu + c r).

namespace detail {

// Antiderivative of z / sqrt(P) with P = (1 - e c^2) z^2 - 2 e c mu z - e mu^2,
// for mu > 0 and c > 0.
inline double quadratic_h1_primitive(double e, double mu, double c, double z, double c_tol) {
  const double P = (1 - e * c * c) * z * z - 2 * e * c * mu * z - e * mu * mu;
  if (!(P >= 0)) throw_domain("radicand of the quadratic-family graph is negative", z);
  const double sp = std::sqrt(P);
  if (e < 0) {
    const double k = 1 + c * c;
    return sp / k - c * mu / std::pow(k, 1.5) * std::log(std::abs(z + c * mu / k + sp / std::sqrt(k)));
  }
  if (std::abs(c - 1) <= c_tol) return (-z + mu) * std::sqrt(-mu * (2 * z + mu)) / (3 * mu);
  if (c < 1) {
    const double k = 1 - c * c;
    return sp / k + c * mu / std::pow(k, 1.5) *
                        std::log(std::abs(z + c * mu / (c * c - 1) + sp / std::sqrt(k)));
  }
  const double k = c * c - 1;
  const double arg = std::clamp(k * z / mu + c, -1.0, 1.0);
  return -sp / k + c * mu * std::acos(arg) / std::pow(k, 1.5);
}

// Antiderivative of y / sqrt(Q) with Q = (c^2 - 1) y^2 + 2 c mu y + mu^2.
inline double quadratic_h2_primitive(double mu, double c, double y, double c_tol) {
  const double Q = (c * c - 1) * y * y + 2 * c * mu * y + mu * mu;
  if (!(Q >= 0)) throw_domain("radicand of the quadratic-family graph is negative", y);
  const double sq = std::sqrt(Q);
  if (std::abs(c - 1) <= c_tol) return (y - mu) * std::sqrt(mu * (2 * y + mu)) / (3 * mu);
  if (c < 1) {
    const double k = 1 - c * c;
    const double arg = std::clamp(k * y / mu - c, -1.0, 1.0);
    return sq / (c * c - 1) + c * mu * (std::numbers::pi - std::acos(arg)) / std::pow(k, 1.5);
  }
  const double k = c * c - 1;
  return sq / k - c * mu / std::pow(k, 1.5) * std::log(std::abs(y + c * mu / k + sq / std::sqrt(k)));
}

}  // namespace detail

/// Explicit graph g(r) of the surface with momentum QuadraticFamily(mu, c),
/// up to an additive constant. Negative mu or c are reduced to the positive
/// case through the symmetries of the radicand; c = 1 is matched within
/// c_tol. c = 0 is the umbilic case and is rejected.
inline double quadratic_graph_closed(RotationClass cls, CausalSign eps, double mu, double c, double r,
                                     double c_tol = 1e-12) {
  require_compatible(cls, eps);
  if (mu == 0) throw DomainError("quadratic family needs mu != 0");
  if (c == 0) throw DomainError("c = 0 is the umbilic member of the quadratic family");
  const double e = eps.real();
  if (cls == RotationClass::Parabolic)
    return e * (c * c * r - mu * mu / r + 2 * c * mu * std::log(std::abs(r)));

  // Orientation of the generatrix relative to the primitive of r/sqrt(P).
  const double orient = (mu + c * r) > 0 ? 1.0 : -1.0;
  double m = mu, cc = c, x = r;
  if (m < 0) {
    m = -m;
    cc = -cc;
  }
  if (cc < 0) {
    cc = -cc;
    x = -x;
  }
  double prim = 0;
  switch (cls) {
    case RotationClass::Hyperbolic1: prim = detail::quadratic_h1_primitive(e, m, cc, x, c_tol); break;
    case RotationClass::Elliptic: prim = detail::quadratic_h1_primitive(-e, m, cc, x, c_tol); break;
    case RotationClass::Hyperbolic2: prim = detail::quadratic_h2_primitive(m, cc, x, c_tol); break;
    default: break;
  }
  return orient * prim;
}

}  // namespace lrotor
