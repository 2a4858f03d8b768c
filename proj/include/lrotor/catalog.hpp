// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Registry of named surfaces with known closed forms: planes, cylinders,
// cones, umbilics, zero mean curvature surfaces, Hopf surfaces, the
// quadratic family and the quadrics of revolution.

#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrotor/errors.hpp"
#include "lrotor/momentum.hpp"
#include "lrotor/quadrics.hpp"
#include "lrotor/surface.hpp"
#include "lrotor/types.hpp"
#include "lrotor/verify.hpp"
#include "lrotor/weingarten.hpp"

namespace lrotor {

struct CatalogEntry {
  std::string key;
  /// plane, cylinder, cone, umbilic, zero-H, hopf, quadratic or quadric.
  std::string group;
  RotationClass cls = RotationClass::Elliptic;
  CausalSign eps = 1;
  /// Momentum-generated surface; empty for cylinders.
  std::optional<SurfaceSpec> spec;
  std::optional<WeingartenRelation> relation;
  std::optional<QuadricSpec> quadric;
  /// Human-readable implicit equation, empty when only the class equation
  /// through the graph is available.
  std::string implicit_text;
  /// Exact generatrix graph g(r) consistent with spec->anchor.
  std::function<double(double)> closed_graph;
  /// Builds the verification model, with the canonical implicit equation
  /// when one is known.
  std::function<SurfaceModel()> build;
};

namespace detail {

inline std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

inline std::string eps_tag(CausalSign eps) { return eps.is_spacelike() ? "s" : "t"; }

inline SurfaceModel explicit_model(std::string name, CausalSign eps, Interval r_interval,
                                   std::pair<double, double> t_range,
                                   std::function<AmbientPoint(double, double)> point,
                                   std::pair<double, double> curvatures, CausalCharacter causal,
                                   std::function<ImplicitValue(const AmbientPoint&)> implicit) {
  SurfaceModel m;
  m.name = std::move(name);
  m.eps = eps;
  m.r_interval = r_interval;
  m.t_range = t_range;
  m.point = point;
  m.local_chart = [point](double) -> Chart { return point; };
  m.closed_curvatures = [curvatures](double) { return curvatures; };
  m.causal = [causal](double) { return causal; };
  m.implicit = std::move(implicit);
  return m;
}

inline CatalogEntry momentum_entry(std::string key, std::string group, SurfaceSpec spec,
                                   std::optional<WeingartenRelation> rel,
                                   std::function<double(double)> closed_graph = {},
                                   std::string implicit_text = {},
                                   std::function<ImplicitValue(const AmbientPoint&)> implicit = {}) {
  CatalogEntry e;
  e.key = std::move(key);
  e.group = std::move(group);
  e.cls = spec.cls;
  e.eps = spec.eps;
  if (closed_graph) spec.anchor = closed_graph(spec.r_interval.lo);
  e.spec = spec;
  e.relation = std::move(rel);
  e.closed_graph = std::move(closed_graph);
  e.implicit_text = std::move(implicit_text);
  e.build = [spec, name = e.key, implicit]() {
    SurfaceModel m = make_model(spec, name);
    if (implicit) m.implicit = implicit;
    return m;
  };
  return e;
}

inline ImplicitValue implicit_of(double lhs, double rhs) { return {lhs, lhs - rhs}; }

inline void add_planes(std::vector<CatalogEntry>& out) {
  struct Row {
    const char* key;
    RotationClass cls;
    int eps;
  };
  for (const Row& row : {Row{"plane-elliptic", RotationClass::Elliptic, 1},
                         Row{"plane-hyperbolic1", RotationClass::Hyperbolic1, -1},
                         Row{"plane-hyperbolic2", RotationClass::Hyperbolic2, -1}}) {
    CatalogEntry e;
    e.key = row.key;
    e.group = "plane";
    e.cls = row.cls;
    e.eps = row.eps;
    const Interval iv{0.5, 2.0};
    e.spec = SurfaceSpec{row.cls, row.eps, momenta::Zero{}, iv, 0.0};
    e.relation = relations::ZeroMeanCurvature{};
    e.closed_graph = [](double) { return 0.0; };
    const bool ell = row.cls == RotationClass::Elliptic;
    e.implicit_text = ell ? "x3 = 0" : "x1 = 0";
    const RotationClass cls = row.cls;
    const CausalCharacter causal =
        row.eps == 1 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
    e.build = [cls, iv, causal, key = e.key, eps = e.eps, ell]() {
      return explicit_model(
          key, eps, iv, default_verify_t_range(cls),
          [cls](double r, double t) { return embed(cls, r, 0.0, t); }, {0.0, 0.0}, causal,
          [ell](const AmbientPoint& p) { return ell ? implicit_of(p.x3, 0) : implicit_of(p.x1, 0); });
    };
    out.push_back(std::move(e));
  }
}

// Cylinders are not generated by a momentum: the parallels have constant
// radius R and the meridians are straight lines.
inline void add_cylinders(std::vector<CatalogEntry>& out, double R) {
  struct Row {
    const char* key;
    RotationClass cls;
    int eps;
    CausalCharacter causal;
    const char* text;
  };
  const Interval iv{-1.0, 1.0};
  for (const Row& row :
       {Row{"cylinder-elliptic", RotationClass::Elliptic, -1, CausalCharacter::Timelike,
            "x1^2 + x2^2 = R^2"},
        Row{"cylinder-hyperbolic2", RotationClass::Hyperbolic2, -1, CausalCharacter::Timelike,
            "x2^2 - x3^2 = R^2"},
        Row{"cylinder-hyperbolic1", RotationClass::Hyperbolic1, 1, CausalCharacter::Spacelike,
            "x3^2 - x2^2 = R^2"}}) {
    CatalogEntry e;
    e.key = row.key;
    e.group = "cylinder";
    e.cls = row.cls;
    e.eps = row.eps;
    e.relation = meridian_flat_relation();
    e.implicit_text = std::string(row.text) + ", R = " + fmt_num(R);
    const RotationClass cls = row.cls;
    const CausalCharacter causal = row.causal;
    e.build = [cls, causal, R, iv, key = e.key, eps = e.eps]() {
      std::function<AmbientPoint(double, double)> point;
      std::function<ImplicitValue(const AmbientPoint&)> implicit;
      switch (cls) {
        case RotationClass::Elliptic:
          point = [R](double s, double t) {
            return AmbientPoint{R * std::cos(t), R * std::sin(t), s};
          };
          implicit = [R](const AmbientPoint& p) {
            return implicit_of(p.x1 * p.x1 + p.x2 * p.x2, R * R);
          };
          break;
        case RotationClass::Hyperbolic2:
          point = [R](double s, double t) {
            return AmbientPoint{s, R * std::cosh(t), R * std::sinh(t)};
          };
          implicit = [R](const AmbientPoint& p) {
            return implicit_of(p.x2 * p.x2 - p.x3 * p.x3, R * R);
          };
          break;
        default:
          point = [R](double s, double t) {
            return AmbientPoint{s, R * std::sinh(t), R * std::cosh(t)};
          };
          implicit = [R](const AmbientPoint& p) {
            return implicit_of(p.x3 * p.x3 - p.x2 * p.x2, R * R);
          };
          break;
      }
      return explicit_model(key, eps, iv, default_verify_t_range(cls), point, {0.0, 1.0 / R},
                            causal, implicit);
    };
    out.push_back(std::move(e));
  }
}

inline void add_cones(std::vector<CatalogEntry>& out, double phi0, double theta0) {
  const Interval iv{0.5, 2.0};
  auto cone = [&](std::string key, RotationClass cls, CausalSign eps, double K, double slope,
                  std::string text, std::function<ImplicitValue(const AmbientPoint&)> implicit) {
    out.push_back(momentum_entry(std::move(key), "cone", {cls, eps, momenta::Constant{K}, iv, 0.0},
                                 meridian_flat_relation(),
                                 [slope](double r) { return slope * r; }, std::move(text),
                                 std::move(implicit)));
  };
  const double th = std::tanh(phi0), ct = 1.0 / th, tt = std::tan(theta0);
  // x = coth(phi0) z on x3^2 - x2^2 = tanh^2(phi0) x1^2.
  cone("cone-hyperbolic1-s", RotationClass::Hyperbolic1, 1, std::cosh(phi0), ct,
       "x3^2 - x2^2 = tanh^2(phi0) x1^2", [th](const AmbientPoint& p) {
         return implicit_of(p.x3 * p.x3 - p.x2 * p.x2, th * th * p.x1 * p.x1);
       });
  cone("cone-hyperbolic1-t", RotationClass::Hyperbolic1, -1, std::sinh(phi0), th,
       "x3^2 - x2^2 = coth^2(phi0) x1^2", [ct](const AmbientPoint& p) {
         return implicit_of(p.x3 * p.x3 - p.x2 * p.x2, ct * ct * p.x1 * p.x1);
       });
  cone("cone-hyperbolic2", RotationClass::Hyperbolic2, -1, std::cos(theta0), 1.0 / tt,
       "x2^2 - x3^2 = tan^2(theta0) x1^2", [tt](const AmbientPoint& p) {
         return implicit_of(p.x2 * p.x2 - p.x3 * p.x3, tt * tt * p.x1 * p.x1);
       });
  cone("cone-elliptic-s", RotationClass::Elliptic, 1, std::sinh(phi0), th,
       "x1^2 + x2^2 = coth^2(phi0) x3^2", [ct](const AmbientPoint& p) {
         return implicit_of(p.x1 * p.x1 + p.x2 * p.x2, ct * ct * p.x3 * p.x3);
       });
  cone("cone-elliptic-t", RotationClass::Elliptic, -1, std::cosh(phi0), ct,
       "x1^2 + x2^2 = tanh^2(phi0) x3^2", [th](const AmbientPoint& p) {
         return implicit_of(p.x1 * p.x1 + p.x2 * p.x2, th * th * p.x3 * p.x3);
       });
  for (int s : {1, -1}) {
    const double e2 = s * std::exp(2 * phi0);
    cone(s == 1 ? "cone-parabolic-s" : "cone-parabolic-t", RotationClass::Parabolic, s,
         std::exp(-phi0), e2, s == 1 ? "x1^2 + x2^2 - x3^2 = e^(2 phi0) (x1 - x3)^2"
                                     : "x1^2 + x2^2 - x3^2 = -e^(2 phi0) (x1 - x3)^2",
         [e2](const AmbientPoint& p) {
           const double w = p.x1 - p.x3;
           return implicit_of(p.x1 * p.x1 + p.x2 * p.x2 - p.x3 * p.x3, e2 * w * w);
         });
  }
}

inline void add_umbilics(std::vector<CatalogEntry>& out, double R) {
  const double R2 = R * R;
  auto quadric_lhs = [](const AmbientPoint& p) { return p.x1 * p.x1 + p.x2 * p.x2 - p.x3 * p.x3; };
  auto umbilic = [&](std::string key, RotationClass cls, CausalSign eps, Interval iv,
                     std::function<double(double)> graph, double rhs) {
    const std::string text = "x1^2 + x2^2 - x3^2 = " + fmt_num(rhs);
    out.push_back(momentum_entry(std::move(key), "umbilic", {cls, eps, momenta::Linear{R}, iv, 0.0},
                                 relations::LinearProportional{1.0}, std::move(graph), text,
                                 [rhs, quadric_lhs](const AmbientPoint& p) {
                                   return implicit_of(quadric_lhs(p), rhs);
                                 }));
  };
  for (int s : {1, -1}) {
    const double e = s;
    // Elliptic and Hyperbolic1 share g = sqrt(r^2 + eps R^2) resp. sqrt(r^2 - eps R^2).
    const Interval e_iv = s == 1 ? Interval{0.5 * R, 2 * R} : Interval{1.2 * R, 3 * R};
    umbilic("umbilic-elliptic-" + eps_tag(s), RotationClass::Elliptic, s, e_iv,
            [e, R2](double r) { return std::sqrt(r * r + e * R2); }, -e * R2);
    const Interval h_iv = s == -1 ? Interval{0.5 * R, 2 * R} : Interval{1.2 * R, 3 * R};
    umbilic("umbilic-hyperbolic1-" + eps_tag(s), RotationClass::Hyperbolic1, s, h_iv,
            [e, R2](double r) { return std::sqrt(r * r - e * R2); }, -e * R2);
    umbilic("umbilic-parabolic-" + eps_tag(s), RotationClass::Parabolic, s, {0.5 * R, 2 * R},
            [e, R2](double r) { return -e * R2 / r; }, -e * R2);
  }
  umbilic("umbilic-hyperbolic2", RotationClass::Hyperbolic2, -1, {0.2 * R, 0.8 * R},
          [R2](double r) { return -std::sqrt(R2 - r * r); }, R2);
}

inline void add_zero_mean_curvature(std::vector<CatalogEntry>& out, double a) {
  const double a2 = a * a;
  auto entry = [&](std::string key, RotationClass cls, CausalSign eps, Interval iv,
                   std::function<double(double)> graph, std::string text,
                   std::function<ImplicitValue(const AmbientPoint&)> implicit) {
    out.push_back(momentum_entry(std::move(key), "zero-H",
                                 {cls, eps, momenta::InverseLinear{a}, iv, 0.0},
                                 relations::ZeroMeanCurvature{}, std::move(graph),
                                 std::move(text), std::move(implicit)));
  };
  entry("catenoid-1", RotationClass::Elliptic, 1, {0.5 * a, 2 * a},
        [a](double r) { return a * std::asinh(r / a); }, "x1^2 + x2^2 = a^2 sinh^2(x3/a)",
        [a, a2](const AmbientPoint& p) {
          return implicit_of(p.x1 * p.x1 + p.x2 * p.x2, a2 * std::pow(std::sinh(p.x3 / a), 2));
        });
  entry("catenoid-2", RotationClass::Hyperbolic1, 1, {0.2 * a, 0.8 * a},
        [a](double r) { return a * std::asin(r / a); }, "x3^2 - x2^2 = a^2 sin^2(x1/a)",
        [a, a2](const AmbientPoint& p) {
          return implicit_of(p.x3 * p.x3 - p.x2 * p.x2, a2 * std::pow(std::sin(p.x1 / a), 2));
        });
  entry("catenoid-3", RotationClass::Elliptic, -1, {0.2 * a, 0.8 * a},
        [a](double r) { return a * std::asin(r / a); }, "x1^2 + x2^2 = a^2 sin^2(x3/a)",
        [a, a2](const AmbientPoint& p) {
          return implicit_of(p.x1 * p.x1 + p.x2 * p.x2, a2 * std::pow(std::sin(p.x3 / a), 2));
        });
  entry("catenoid-4", RotationClass::Hyperbolic1, -1, {0.5 * a, 2 * a},
        [a](double r) { return a * std::asinh(r / a); }, "x3^2 - x2^2 = a^2 sinh^2(x1/a)",
        [a, a2](const AmbientPoint& p) {
          return implicit_of(p.x3 * p.x3 - p.x2 * p.x2, a2 * std::pow(std::sinh(p.x1 / a), 2));
        });
  entry("catenoid-5", RotationClass::Hyperbolic2, -1, {1.2 * a, 3 * a},
        [a](double r) { return a * std::acosh(r / a); }, "x2^2 - x3^2 = a^2 cosh^2(x1/a)",
        [a, a2](const AmbientPoint& p) {
          return implicit_of(p.x2 * p.x2 - p.x3 * p.x3, a2 * std::pow(std::cosh(p.x1 / a), 2));
        });
  for (int s : {1, -1}) {
    const double e = s;
    entry(s == 1 ? "enneper-2" : "enneper-3", RotationClass::Parabolic, s, {0.5 * a, 2 * a},
          [e, a2](double r) { return e * r * r * r / (3 * a2); },
          s == 1 ? "x1^2 + x2^2 - x3^2 = (x1 - x3)^4 / (3 a^2)"
                 : "x1^2 + x2^2 - x3^2 = -(x1 - x3)^4 / (3 a^2)",
          [e, a2](const AmbientPoint& p) {
            const double w = p.x1 - p.x3;
            return implicit_of(p.x1 * p.x1 + p.x2 * p.x2 - p.x3 * p.x3, e * std::pow(w, 4) / (3 * a2));
          });
  }
}

/// r-interval used for a Hopf family at exponent q.
inline Interval hopf_interval(HopfFamily f, double q) {
  switch (f) {
    case HopfFamily::I_S:
    case HopfFamily::III_T: return q > 0 ? Interval{1.2, 3.0} : Interval{0.2, 0.8};
    case HopfFamily::II: return q > 0 ? Interval{0.2, 0.8} : Interval{1.2, 3.0};
    default: return {0.5, 2.0};
  }
}

inline void add_hopf(std::vector<CatalogEntry>& out, const std::vector<double>& qs) {
  for (HopfFamily f : {HopfFamily::I_T, HopfFamily::I_S, HopfFamily::II, HopfFamily::III_T,
                       HopfFamily::III_S, HopfFamily::IV}) {
    for (double q : qs) {
      const std::vector<int> signs = f == HopfFamily::IV ? std::vector<int>{1, -1} : std::vector<int>{1};
      for (int s : signs) {
        const auto [cls, eps] = hopf_class(f, s);
        std::string key = "hopf-" + std::string(to_string(f));
        if (f == HopfFamily::IV) key += "-" + eps_tag(eps);
        key += "-q" + fmt_num(q);
        out.push_back(momentum_entry(key, "hopf", {cls, eps, momenta::Power{q, 1.0}, hopf_interval(f, q), 0.0},
                                     relations::LinearProportional{q}));
      }
    }
  }
}

inline void add_quadratic_family(std::vector<CatalogEntry>& out) {
  struct Row {
    RotationClass cls;
    int eps;
    double c;
    Interval iv;
  };
  const double mu = 1.0;
  const std::vector<Row> rows = {
      {RotationClass::Hyperbolic1, 1, 0.5, {2.2, 4.0}},
      {RotationClass::Hyperbolic1, 1, -1.0, {0.55, 0.95}},
      {RotationClass::Hyperbolic1, 1, -2.0, {0.36, 0.47}},
      {RotationClass::Hyperbolic1, -1, 0.5, {0.5, 3.0}},
      {RotationClass::Hyperbolic2, -1, 0.5, {0.3, 1.8}},
      {RotationClass::Hyperbolic2, -1, 1.0, {0.5, 3.0}},
      {RotationClass::Hyperbolic2, -1, 2.0, {0.5, 3.0}},
      {RotationClass::Elliptic, 1, 0.5, {0.5, 3.0}},
      {RotationClass::Elliptic, -1, 0.5, {2.2, 4.0}},
      {RotationClass::Elliptic, -1, -1.0, {0.55, 0.95}},
      {RotationClass::Elliptic, -1, -2.0, {0.36, 0.47}},
      {RotationClass::Parabolic, 1, 0.5, {0.5, 3.0}},
      {RotationClass::Parabolic, -1, 0.5, {0.5, 3.0}},
  };
  for (const Row& row : rows) {
    std::string key = "quadratic-" + std::string(to_string(row.cls));
    if (row.cls != RotationClass::Hyperbolic2) key += "-" + eps_tag(row.eps);
    key += "-c" + fmt_num(row.c);
    const RotationClass cls = row.cls;
    const CausalSign eps = row.eps;
    const double c = row.c;
    out.push_back(momentum_entry(
        key, "quadratic", {cls, eps, momenta::QuadraticFamily{mu, c}, row.iv, 0.0},
        relations::Quadratic{mu},
        [cls, eps, mu, c](double r) { return quadratic_graph_closed(cls, eps, mu, c, r); }));
  }
}

/// First validity interval of the quadric momentum shrunk by 10%, or a
/// bounded piece of it when unbounded. Empty when the sign is inadmissible.
inline std::optional<Interval> quadric_interval(const QuadricSpec& q) {
  std::vector<Interval> dom;
  try {
    dom = validity_domain(quadric_momentum(q), family_class(q.family), q.eps);
  } catch (const EmptyDomain&) {
    return std::nullopt;
  }
  const Interval& d = dom.front();
  if (d.bounded() && d.hi < 1e8) {
    const double pad = 0.1 * d.width();
    return Interval{d.lo + pad, d.hi - pad};
  }
  const double s = 1.5 * std::max(d.lo, 1.0);
  return Interval{d.lo + 0.1 * s, d.lo + s};
}

inline std::optional<CatalogEntry> quadric_entry(const QuadricSpec& q, std::string key) {
  try {
    validate(q);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  const auto iv = quadric_interval(q);
  if (!iv) return std::nullopt;
  const RotationClass cls = family_class(q.family);
  auto entry = momentum_entry(
      std::move(key), "quadric", {cls, q.eps, quadric_momentum(q), *iv, 0.0},
      relations::Cubic{weingarten_coefficient(q)}, [q](double r) { return quadric_generatrix(q, r); },
      "canonical equation of " + std::string(to_string(q.family)),
      [q](const AmbientPoint& p) {
        return ImplicitValue{quadric_implicit_scale(q, p) - 1.0, quadric_implicit_residual(q, p)};
      });
  entry.quadric = q;
  return entry;
}

inline void add_quadrics(std::vector<CatalogEntry>& out) {
  // Some sign and family combinations only admit a > b or a < b; the first
  // admissible shape is used.
  const std::pair<double, double> shapes[] = {{1.5, 0.6}, {0.6, 1.5}};
  for (QuadricFamily f : kAllQuadricFamilies) {
    bool first = true;
    for (int s : {1, -1}) {
      for (const auto& [x, y] : shapes) {
        QuadricSpec q;
        q.family = f;
        q.a = q.alpha = x;
        q.b = q.beta = y;
        q.d = 1.0;
        q.eps = s;
        std::string key = "quadric-" + std::string(to_string(f));
        if (!first) key += "-timelike";
        if (auto e = quadric_entry(q, key)) {
          out.push_back(std::move(*e));
          first = false;
          break;
        }
      }
    }
  }
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  add_planes(out);
  add_cylinders(out, 1.0);
  add_cones(out, 0.8, std::numbers::pi / 3);
  add_umbilics(out, 1.0);
  add_zero_mean_curvature(out, 1.0);
  add_hopf(out, {-2.0, -1.0, 0.5, 1.0, 2.0});
  add_quadratic_family(out);
  add_quadrics(out);
  return out;
}

}  // namespace detail

/// All named surfaces, in a fixed order.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

/// Looks up a named surface; ConfigError for unknown keys.
inline const CatalogEntry& find_entry(std::string_view key) {
  for (const auto& e : catalog())
    if (e.key == key) return e;
  throw ConfigError("unknown named surface '" + std::string(key) + "'");
}

/// Runs the oracle on a catalog entry with its own relation.
inline VerificationReport verify_entry(const CatalogEntry& e, const VerifyOptions& opt = {}) {
  return verify_model(e.build(), e.relation, opt);
}

}  // namespace lrotor
