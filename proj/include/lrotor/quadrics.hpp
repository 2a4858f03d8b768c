// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Non-degenerate quadrics of revolution of L^3 and the classification of
// the cubic relation k_m = mu k_p^3.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "lrotor/errors.hpp"
#include "lrotor/lorentz.hpp"
#include "lrotor/momentum.hpp"
#include "lrotor/types.hpp"

namespace lrotor {

enum class QuadricFamily {
  I_a, I_b, I_c, I_d,
  II_a, II_b, II_c, II_d,
  III_a, III_b, III_c, III_d,
  IV_a, IV_b, IV_c, IV_d,
};

inline constexpr std::array<QuadricFamily, 16> kAllQuadricFamilies = {
    QuadricFamily::I_a,   QuadricFamily::I_b,   QuadricFamily::I_c,   QuadricFamily::I_d,
    QuadricFamily::II_a,  QuadricFamily::II_b,  QuadricFamily::II_c,  QuadricFamily::II_d,
    QuadricFamily::III_a, QuadricFamily::III_b, QuadricFamily::III_c, QuadricFamily::III_d,
    QuadricFamily::IV_a,  QuadricFamily::IV_b,  QuadricFamily::IV_c,  QuadricFamily::IV_d};

inline std::string_view to_string(QuadricFamily f) {
  static constexpr std::array<std::string_view, 16> names = {
      "I-a",   "I-b",   "I-c",   "I-d",   "II-a", "II-b", "II-c", "II-d",
      "III-a", "III-b", "III-c", "III-d", "IV-a", "IV-b", "IV-c", "IV-d"};
  return names[static_cast<int>(f)];
}

inline QuadricFamily quadric_family_from_string(std::string_view s) {
  for (auto f : kAllQuadricFamilies)
    if (to_string(f) == s) return f;
  throw ConfigError("unknown quadric family '" + std::string(s) + "'");
}

inline RotationClass family_class(QuadricFamily f) {
  const int i = static_cast<int>(f);
  if (i < 4) return RotationClass::Hyperbolic1;
  if (i < 8) return RotationClass::Hyperbolic2;
  if (i < 12) return RotationClass::Elliptic;
  return RotationClass::Parabolic;
}

inline bool is_paraboloid(QuadricFamily f) {
  return f == QuadricFamily::I_d || f == QuadricFamily::II_d || f == QuadricFamily::III_d;
}

inline bool is_parabolic_family(QuadricFamily f) { return family_class(f) == RotationClass::Parabolic; }

/// Sign forced by the family itself, if any.
inline std::optional<CausalSign> forced_sign(QuadricFamily f) {
  if (family_class(f) == RotationClass::Hyperbolic2) return CausalSign::timelike();
  if (f == QuadricFamily::IV_a) return CausalSign::timelike();
  if (f == QuadricFamily::IV_c) return CausalSign::spacelike();
  return std::nullopt;
}

/// A quadric of revolution. Shape parameters: (a, b) for ellipsoids and
/// hyperboloids, d for paraboloids, (alpha, beta) for parabolic rotations.
/// eps selects the causal region covered by the generating momentum.
struct QuadricSpec {
  QuadricFamily family = QuadricFamily::III_a;
  double a = 1.0, b = 1.0;
  double d = 1.0;
  double alpha = 1.0, beta = 1.0;
  CausalSign eps = CausalSign::spacelike();
};

inline void validate(const QuadricSpec& q) {
  if (is_parabolic_family(q.family)) {
    if (!(q.alpha > 0) || !(q.beta >= 0)) throw DomainError("parabolic quadrics need alpha > 0, beta >= 0");
  } else if (is_paraboloid(q.family)) {
    if (!(q.d > 0)) throw DomainError("paraboloids need d > 0");
  } else if (!(q.a > 0) || !(q.b > 0)) {
    throw DomainError("quadrics need a, b > 0");
  }
  if (auto s = forced_sign(q.family); s && *s != q.eps)
    throw DomainError(std::string("family ") + std::string(to_string(q.family)) +
                      " has a fixed causal character");
}

/// K(r)^2 of the generatrix conic in the class coordinate r.
inline double momentum_squared(const QuadricSpec& q, double r) {
  validate(q);
  const double e = q.eps.real();
  const double a2 = q.a * q.a, b2 = q.b * q.b, a4 = a2 * a2, d2 = q.d * q.d;
  const double al2 = q.alpha * q.alpha, be2 = q.beta * q.beta;
  const double r2 = r * r;
  double k2 = 0;
  switch (q.family) {
    case QuadricFamily::I_a: k2 = e * b2 * r2 / ((a2 + b2) * r2 - a4); break;
    case QuadricFamily::I_b: k2 = e * b2 * r2 / ((b2 - a2) * r2 + a4); break;
    case QuadricFamily::I_c: k2 = e * b2 * r2 / ((b2 - a2) * r2 - a4); break;
    case QuadricFamily::I_d: k2 = e * r2 / (r2 - d2); break;
    case QuadricFamily::II_a: k2 = b2 * r2 / ((b2 - a2) * r2 + a4); break;
    case QuadricFamily::II_b: k2 = b2 * r2 / ((a2 + b2) * r2 - a4); break;
    case QuadricFamily::II_c: k2 = b2 * r2 / ((a2 + b2) * r2 + a4); break;
    case QuadricFamily::II_d: k2 = r2 / (r2 + d2); break;
    case QuadricFamily::III_a: k2 = e * b2 * r2 / (a4 - (a2 + b2) * r2); break;
    case QuadricFamily::III_b: k2 = e * b2 * r2 / ((a2 - b2) * r2 - a4); break;
    case QuadricFamily::III_c: k2 = e * b2 * r2 / (a4 + (a2 - b2) * r2); break;
    case QuadricFamily::III_d: k2 = e * r2 / (d2 - r2); break;
    case QuadricFamily::IV_a: k2 = -e * r2 / (al2 + be2 * r2); break;
    case QuadricFamily::IV_b: k2 = e * r2 / (be2 * r2 - al2); break;
    case QuadricFamily::IV_c: k2 = e * r2 / (al2 + be2 * r2); break;
    case QuadricFamily::IV_d: k2 = e * r2 / (al2 - be2 * r2); break;
  }
  if (!(k2 > 0) || !std::isfinite(k2)) detail::throw_domain("squared momentum is not positive", r);
  return k2;
}

/// mu in k_m = mu k_p^3.
inline double weingarten_coefficient(const QuadricSpec& q) {
  validate(q);
  const double e = q.eps.real();
  const double ab = std::pow(q.a, 4) / (q.b * q.b), d2 = q.d * q.d, al2 = q.alpha * q.alpha;
  switch (q.family) {
    case QuadricFamily::I_a: return -e * ab;
    case QuadricFamily::I_b: return e * ab;
    case QuadricFamily::I_c: return -e * ab;
    case QuadricFamily::I_d: return -e * d2;
    case QuadricFamily::II_a: return ab;
    case QuadricFamily::II_b: return -ab;
    case QuadricFamily::II_c: return ab;
    case QuadricFamily::II_d: return d2;
    case QuadricFamily::III_a: return e * ab;
    case QuadricFamily::III_b: return -e * ab;
    case QuadricFamily::III_c: return e * ab;
    case QuadricFamily::III_d: return e * d2;
    case QuadricFamily::IV_a: return al2;
    case QuadricFamily::IV_b: return -e * al2;
    case QuadricFamily::IV_c: return al2;
    case QuadricFamily::IV_d: return e * al2;
  }
  return 0;
}

/// c with K^2 = r^2 / (mu + c r^2), mu = weingarten_coefficient(q).
inline double cubic_c(const QuadricSpec& q) {
  validate(q);
  const double e = q.eps.real();
  const double a2 = q.a * q.a, b2 = q.b * q.b, be2 = q.beta * q.beta;
  switch (q.family) {
    case QuadricFamily::I_a: return e * (a2 + b2) / b2;
    case QuadricFamily::I_b: return e * (b2 - a2) / b2;
    case QuadricFamily::I_c: return e * (b2 - a2) / b2;
    case QuadricFamily::I_d: return e;
    case QuadricFamily::II_a: return (b2 - a2) / b2;
    case QuadricFamily::II_b: return (a2 + b2) / b2;
    case QuadricFamily::II_c: return (a2 + b2) / b2;
    case QuadricFamily::II_d: return 1.0;
    case QuadricFamily::III_a: return -e * (a2 + b2) / b2;
    case QuadricFamily::III_b: return e * (a2 - b2) / b2;
    case QuadricFamily::III_c: return e * (a2 - b2) / b2;
    case QuadricFamily::III_d: return -e;
    case QuadricFamily::IV_a: return -e * be2;
    case QuadricFamily::IV_b: return e * be2;
    case QuadricFamily::IV_c: return e * be2;
    case QuadricFamily::IV_d: return -e * be2;
  }
  return 0;
}

/// The quadric's momentum as a member of the cubic family.
inline MomentumSpec quadric_momentum(const QuadricSpec& q) {
  return momenta::CubicFamily{weingarten_coefficient(q), cubic_c(q)};
}

/// Canonical equation of the family as LHS - RHS.
inline double quadric_implicit_residual(const QuadricSpec& q, const AmbientPoint& p) {
  const double a2 = q.a * q.a, b2 = q.b * q.b;
  const double x1 = p.x1 * p.x1, x2 = p.x2 * p.x2, x3 = p.x3 * p.x3;
  const double Q = x1 + x2 - x3, w2 = (p.x1 - p.x3) * (p.x1 - p.x3);
  const double al2 = q.alpha * q.alpha, be2 = q.beta * q.beta;
  switch (q.family) {
    case QuadricFamily::I_a: return x1 / b2 - x2 / a2 + x3 / a2 - 1;
    case QuadricFamily::I_b: return -x1 / b2 - x2 / a2 + x3 / a2 - 1;
    case QuadricFamily::I_c: return x1 / b2 + x2 / a2 - x3 / a2 - 1;
    case QuadricFamily::I_d: return -x2 + x3 - 2 * q.d * p.x1;
    case QuadricFamily::II_a: return x1 / b2 + x2 / a2 - x3 / a2 - 1;
    case QuadricFamily::II_b: return -x1 / b2 + x2 / a2 - x3 / a2 - 1;
    case QuadricFamily::II_c: return x1 / b2 - x2 / a2 + x3 / a2 - 1;
    case QuadricFamily::II_d: return x2 - x3 - 2 * q.d * p.x1;
    case QuadricFamily::III_a: return x1 / a2 + x2 / a2 + x3 / b2 - 1;
    case QuadricFamily::III_b: return x1 / a2 + x2 / a2 - x3 / b2 - 1;
    case QuadricFamily::III_c: return -x1 / a2 - x2 / a2 + x3 / b2 - 1;
    case QuadricFamily::III_d: return x1 + x2 - 2 * q.d * p.x3;
    case QuadricFamily::IV_a: return Q / al2 + be2 * w2 / al2 - 1;
    case QuadricFamily::IV_b: return Q / al2 - be2 * w2 / al2 - 1;
    case QuadricFamily::IV_c: return -Q / al2 + be2 * w2 / al2 - 1;
    case QuadricFamily::IV_d: return -Q / al2 - be2 * w2 / al2 - 1;
  }
  return 0;
}

/// Size of the terms of the canonical equation, for relative residuals.
inline double quadric_implicit_scale(const QuadricSpec& q, const AmbientPoint& p) {
  return std::abs(quadric_implicit_residual(q, p) -
                  quadric_implicit_residual(q, {0, 0, 0})) +
         1.0;
}

/// Axis coordinate of the generatrix conic at r, on the branch along which
/// the graph increases (decreases for timelike parabolic generatrices).
inline double quadric_generatrix(const QuadricSpec& q, double r) {
  validate(q);
  const double a2 = q.a * q.a, b2 = q.b * q.b, al2 = q.alpha * q.alpha, be2 = q.beta * q.beta;
  // Conic A g^2 + B r^2 = 1 with g' > 0 gives g = -sign(A B r) sqrt((1 - B r^2)/A).
  auto central = [r](double A, double B) {
    const double rad = (1 - B * r * r) / A;
    if (!(rad >= 0)) detail::throw_domain("point is not on the generatrix conic", r);
    const double s = (A * B * r) > 0 ? -1.0 : 1.0;
    return s * std::sqrt(rad);
  };
  switch (q.family) {
    case QuadricFamily::I_a: return central(1 / b2, 1 / a2);
    case QuadricFamily::I_b: return central(-1 / b2, 1 / a2);
    case QuadricFamily::I_c: return central(1 / b2, -1 / a2);
    case QuadricFamily::II_a: return central(1 / b2, 1 / a2);
    case QuadricFamily::II_b: return central(-1 / b2, 1 / a2);
    case QuadricFamily::II_c: return central(1 / b2, -1 / a2);
    case QuadricFamily::III_a: return central(1 / b2, 1 / a2);
    case QuadricFamily::III_b: return central(-1 / b2, 1 / a2);
    case QuadricFamily::III_c: return central(1 / b2, -1 / a2);
    case QuadricFamily::I_d:
    case QuadricFamily::II_d:
    case QuadricFamily::III_d: return r * r / (2 * q.d);
    case QuadricFamily::IV_a: return al2 / r - be2 * r;
    case QuadricFamily::IV_b: return al2 / r + be2 * r;
    case QuadricFamily::IV_c: return -al2 / r + be2 * r;
    case QuadricFamily::IV_d: return -al2 / r - be2 * r;
  }
  return 0;
}

enum class CausalRegion { Spacelike, Timelike, AlwaysSpacelike, AlwaysTimelike };

inline std::string_view to_string(CausalRegion c) {
  switch (c) {
    case CausalRegion::Spacelike: return "spacelike";
    case CausalRegion::Timelike: return "timelike";
    case CausalRegion::AlwaysSpacelike: return "always-spacelike";
    case CausalRegion::AlwaysTimelike: return "always-timelike";
  }
  return "?";
}

inline bool is_spacelike(CausalRegion c) {
  return c == CausalRegion::Spacelike || c == CausalRegion::AlwaysSpacelike;
}

/// Causal character of the quadric at class coordinate r from the region
/// inequalities of its family. Throws Degenerate on the boundary.
inline CausalRegion causal_region(const QuadricSpec& q, double r) {
  validate(q);
  const double a2 = q.a * q.a, b2 = q.b * q.b, a4 = a2 * a2;
  const double r2 = r * r;
  // Spacelike iff lhs > rhs (or lhs < rhs when `below` is set).
  auto compare = [](double lhs, double rhs, bool spacelike_above) {
    if (lhs == rhs) throw Degenerate("point lies on the causal boundary of the quadric");
    return (lhs > rhs) == spacelike_above ? CausalRegion::Spacelike : CausalRegion::Timelike;
  };
  switch (q.family) {
    case QuadricFamily::I_a: return compare(r2, a4 / (a2 + b2), true);
    case QuadricFamily::I_b:
      if (a2 <= b2) return CausalRegion::AlwaysSpacelike;
      return compare(r2, a4 / (a2 - b2), false);
    case QuadricFamily::I_c:
      if (b2 <= a2) return CausalRegion::AlwaysTimelike;
      return compare(r2, a4 / (b2 - a2), true);
    case QuadricFamily::I_d: return compare(std::abs(r), q.d, true);
    case QuadricFamily::II_a:
    case QuadricFamily::II_b:
    case QuadricFamily::II_c:
    case QuadricFamily::II_d: return CausalRegion::AlwaysTimelike;
    case QuadricFamily::III_a: return compare(r2, a4 / (a2 + b2), false);
    case QuadricFamily::III_b:
      if (a2 <= b2) return CausalRegion::AlwaysTimelike;
      return compare(r2, a4 / (a2 - b2), true);
    case QuadricFamily::III_c:
      if (a2 >= b2) return CausalRegion::AlwaysSpacelike;
      return compare(r2, a4 / (b2 - a2), false);
    case QuadricFamily::III_d: return compare(std::abs(r), q.d, false);
    case QuadricFamily::IV_a: return CausalRegion::AlwaysTimelike;
    case QuadricFamily::IV_b:
      if (q.beta == 0) return CausalRegion::AlwaysTimelike;
      return compare(r2, q.alpha * q.alpha / (q.beta * q.beta), true);
    case QuadricFamily::IV_c: return CausalRegion::AlwaysSpacelike;
    case QuadricFamily::IV_d:
      if (q.beta == 0) return CausalRegion::AlwaysSpacelike;
      return compare(r2, q.alpha * q.alpha / (q.beta * q.beta), false);
  }
  return CausalRegion::AlwaysSpacelike;
}

/// Umbilical quadric x1^2 + x2^2 - x3^2 = -eps R^2 (hyperbolic plane or de
/// Sitter space); cubic relations with c = 0.
struct UmbilicMarker {
  double R = 1.0;
};
/// Momentum K = 0.
struct PlaneMarker {};
/// Constant momentum K0; for the cubic relation this is mu = 0, K0 = 1/sqrt(c).
struct ConeMarker {
  double K0 = 1.0;
};

using CubicClassification = std::variant<QuadricSpec, UmbilicMarker, PlaneMarker, ConeMarker>;

struct ClassifyOptions {
  /// Tolerance for the boundary values eps c = +-1, c = 1.
  double boundary_tol = 1e-12;
};

/// Quadric family and parameters of the surfaces with momentum
/// CubicFamily(mu, c) in the given class.
///
/// Throws Inadmissible when the momentum has no valid r for (class, eps) or
/// the sign conditions of the class are violated.
inline CubicClassification classify_cubic(double mu, double c, CausalSign eps, RotationClass cls,
                                          const ClassifyOptions& opt = {}) {
  if (!std::isfinite(mu) || !std::isfinite(c)) throw Inadmissible("non-finite cubic parameters");
  if (cls == RotationClass::Hyperbolic2 && eps.is_spacelike())
    throw Inadmissible("hyperbolic surfaces of second type are timelike");
  if (mu == 0) {
    if (!(c > 0)) throw Inadmissible("mu = 0 needs c > 0");
    return ConeMarker{1.0 / std::sqrt(c)};
  }
  try {
    validity_domain(momenta::CubicFamily{mu, c}, cls, eps);
  } catch (const EmptyDomain&) {
    throw Inadmissible("the cubic momentum has an empty validity domain for this class and sign");
  }
  if (c == 0) {
    if (!(mu > 0)) throw Inadmissible("c = 0 needs mu > 0");
    return UmbilicMarker{std::sqrt(mu)};
  }
  const double e = eps.real();
  const double em = e * mu, ec = e * c;
  const double tol = opt.boundary_tol;
  auto near = [tol](double x, double y) { return std::abs(x - y) <= tol; };
  QuadricSpec q;
  q.eps = eps;
  auto set_ab = [&](QuadricFamily f, double a2, double absmu) {
    if (!(a2 > 0)) throw Inadmissible("no real semi-axis for these parameters");
    q.family = f;
    q.a = std::sqrt(a2);
    q.b = std::sqrt(a2 * a2 / absmu);
  };
  switch (cls) {
    case RotationClass::Hyperbolic1:
      if (em < 0) {
        if (near(ec, 1)) {
          q.family = QuadricFamily::I_d;
          q.d = std::sqrt(-em);
        } else if (ec > 1) {
          set_ab(QuadricFamily::I_a, -em / (ec - 1), -em);
        } else {
          set_ab(QuadricFamily::I_c, -em / (1 - ec), -em);
        }
      } else {
        if (!(ec < 1) || near(ec, 1)) throw Inadmissible("eps mu > 0 forces eps c < 1");
        set_ab(QuadricFamily::I_b, em / (1 - ec), em);
      }
      break;
    case RotationClass::Hyperbolic2:
      if (mu > 0) {
        if (near(c, 1)) {
          q.family = QuadricFamily::II_d;
          q.d = std::sqrt(mu);
        } else if (c < 1) {
          set_ab(QuadricFamily::II_a, mu / (1 - c), mu);
        } else {
          set_ab(QuadricFamily::II_c, mu / (c - 1), mu);
        }
      } else {
        if (!(c > 1) || near(c, 1)) throw Inadmissible("mu < 0 forces c > 1");
        set_ab(QuadricFamily::II_b, -mu / (c - 1), -mu);
      }
      break;
    case RotationClass::Elliptic:
      if (em > 0) {
        if (near(ec, -1)) {
          q.family = QuadricFamily::III_d;
          q.d = std::sqrt(em);
        } else if (ec < -1) {
          set_ab(QuadricFamily::III_a, em / (-(1 + ec)), em);
        } else {
          set_ab(QuadricFamily::III_c, em / (1 + ec), em);
        }
      } else {
        if (!(ec > -1) || near(ec, -1)) throw Inadmissible("eps mu < 0 forces eps c > -1");
        set_ab(QuadricFamily::III_b, -em / (1 + ec), -em);
      }
      break;
    case RotationClass::Parabolic:
      q.alpha = std::sqrt(std::abs(em));
      q.beta = std::sqrt(std::abs(ec));
      if (em < 0)
        q.family = ec < 0 ? QuadricFamily::IV_a : QuadricFamily::IV_b;
      else
        q.family = ec > 0 ? QuadricFamily::IV_c : QuadricFamily::IV_d;
      break;
  }
  validate(q);
  return q;
}

/// Classification of an arbitrary momentum: planes and cones are recognised
/// directly, cubic members are classified, anything else is inadmissible.
inline CubicClassification classify(const MomentumSpec& m, CausalSign eps, RotationClass cls) {
  if (std::holds_alternative<momenta::Zero>(m)) return PlaneMarker{};
  if (const auto* k = std::get_if<momenta::Constant>(&m)) {
    if (k->value == 0) return PlaneMarker{};
    return ConeMarker{k->value};
  }
  if (const auto* l = std::get_if<momenta::Linear>(&m)) return UmbilicMarker{l->radius};
  if (const auto* cf = std::get_if<momenta::CubicFamily>(&m)) return classify_cubic(cf->mu, cf->c, eps, cls);
  throw Inadmissible("momentum is not a member of the cubic family");
}

}  // namespace lrotor
