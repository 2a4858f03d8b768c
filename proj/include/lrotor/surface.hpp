// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Rotational surfaces built from a momentum, in the (r, t) chart.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <numbers>
#include <utility>
#include <vector>

#include "lrotor/errors.hpp"
#include "lrotor/lorentz.hpp"
#include "lrotor/momentum.hpp"
#include "lrotor/quadrature.hpp"
#include "lrotor/types.hpp"

namespace lrotor {

struct SurfaceSpec {
  RotationClass cls = RotationClass::Elliptic;
  CausalSign eps = CausalSign::spacelike();
  MomentumSpec momentum = momenta::Zero{};
  Interval r_interval{1.0, 2.0};
  double anchor = 0.0;
};

/// Orbit point of the generatrix point with coordinate r and graph value g.
inline AmbientPoint embed(RotationClass cls, double r, double g, double t) {
  switch (cls) {
    case RotationClass::Hyperbolic1: return {g, r * std::sinh(t), r * std::cosh(t)};
    case RotationClass::Hyperbolic2: return {g, r * std::cosh(t), r * std::sinh(t)};
    case RotationClass::Elliptic: return {r * std::cos(t), r * std::sin(t), g};
    case RotationClass::Parabolic:
      return {0.5 * (g + r * (1 - t * t)), -t * r, 0.5 * (g - r * (1 + t * t))};
  }
  return {};
}

/// Default parameter range of the rotation angle or rapidity.
inline std::pair<double, double> default_t_range(RotationClass cls) {
  if (cls == RotationClass::Elliptic) return {0.0, 2 * std::numbers::pi};
  return {-3.0, 3.0};
}

/// Checks the class/sign pair and that the interior of r_interval lies in
/// the validity domain. The ends may touch its boundary.
inline void validate(const SurfaceSpec& spec) {
  require_compatible(spec.cls, spec.eps);
  validate(spec.momentum);
  const auto& iv = spec.r_interval;
  if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.lo < iv.hi))
    throw DomainError("surface needs a finite r-interval with r0 < r1");
  if (!std::isfinite(spec.anchor)) throw DomainError("anchor must be finite");
  constexpr int kProbe = 17;
  for (int i = 1; i < kProbe; ++i) {
    const double r = iv.lo + iv.width() * i / kProbe;
    const double m = validity_margin(spec.momentum, spec.cls, spec.eps, r);
    if (!(std::isfinite(m) && m > 0)) detail::throw_domain("r-interval leaves the validity domain", r);
  }
}

/// A surface together with its sampled generatrix graph.
class Surface {
 public:
  explicit Surface(SurfaceSpec spec, int graph_samples = 65) : spec_(std::move(spec)) {
    validate(spec_);
    graph_ = generatrix_graph(spec_.momentum, spec_.cls, spec_.eps, spec_.r_interval, graph_samples,
                              spec_.anchor);
  }

  const SurfaceSpec& spec() const { return spec_; }
  const std::vector<GraphSample>& graph() const { return graph_; }

  double g(double r) const {
    if (!spec_.r_interval.contains_closed(r)) detail::throw_domain("r outside the surface interval", r);
    return graph_value(graph_, spec_.momentum, spec_.cls, spec_.eps, r);
  }

  AmbientPoint point(double r, double t) const { return embed(spec_.cls, r, g(r), t); }

  /// Chart valid near rc with the graph translated so that g(rc) = 0; only
  /// short integrals are evaluated, which keeps finite differences clean.
  std::function<AmbientPoint(double, double)> local_chart(double rc) const {
    return [this, rc](double r, double t) {
      const std::function<double(double)> dg = [this](double x) {
        return graph_integrand(spec_.momentum, spec_.cls, spec_.eps, x);
      };
      QuadratureOptions opt;
      opt.endpoint_transform = false;
      opt.abs_tol = 1e-15;
      const double g = r == rc ? 0.0 : integrate(dg, rc, r, opt).value;
      return embed(spec_.cls, r, g, t);
    };
  }

  /// Inverts the graph at the given axis value with Newton refinement.
  double invert(double g_query) const {
    return invert_graph(graph_, g_query, [this](double r) {
      const double rr = std::clamp(r, std::min(spec_.r_interval.lo, spec_.r_interval.hi),
                                   std::max(spec_.r_interval.lo, spec_.r_interval.hi));
      return std::pair{g(rr), graph_integrand(spec_.momentum, spec_.cls, spec_.eps, rr)};
    });
  }

 private:
  SurfaceSpec spec_;
  std::vector<GraphSample> graph_;
};

/// X(r, t) for the surface described by spec.
inline AmbientPoint parametrize(const SurfaceSpec& spec, double r, double t) {
  return Surface(spec).point(r, t);
}

struct FundamentalForms {
  double E = 0, F = 0, G = 0;
  double e = 0, f = 0, g = 0;
  double W = 0;
  AmbientPoint normal;
};

using Chart = std::function<AmbientPoint(double, double)>;

/// First and second fundamental forms of a chart at (r, t) from 4th-order
/// finite differences with steps hr and ht. The normal is
/// X_r x X_t / sqrt(|W|), so <nu, nu> = -sign(W).
inline FundamentalForms fundamental_forms_numeric(const Chart& X, double r, double t, double hr,
                                                  double ht) {
  std::array<std::array<AmbientPoint, 5>, 5> P;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) P[i][j] = X(r + (i - 2) * hr, t + (j - 2) * ht);

  constexpr std::array<double, 5> d1 = {1.0, -8.0, 0.0, 8.0, -1.0};      // /12h
  constexpr std::array<double, 5> d2 = {-1.0, 16.0, -30.0, 16.0, -1.0};  // /12h^2
  AmbientPoint Xr, Xt, Xrr, Xtt, Xrt;
  std::array<AmbientPoint, 5> col;  // r-difference along each t column
  for (int k = 0; k < 5; ++k) {
    Xr = Xr + d1[k] * P[k][2];
    Xt = Xt + d1[k] * P[2][k];
    Xrr = Xrr + d2[k] * P[k][2];
    Xtt = Xtt + d2[k] * P[2][k];
    for (int l = 0; l < 5; ++l) col[l] = col[l] + d1[k] * P[k][l];
  }
  for (int l = 0; l < 5; ++l) Xrt = Xrt + d1[l] * col[l];
  Xr = Xr / (12 * hr);
  Xt = Xt / (12 * ht);
  Xrr = Xrr / (12 * hr * hr);
  Xtt = Xtt / (12 * ht * ht);
  Xrt = Xrt / (144 * hr * ht);

  FundamentalForms ff;
  ff.E = inner(Xr, Xr);
  ff.F = inner(Xr, Xt);
  ff.G = inner(Xt, Xt);
  ff.W = ff.E * ff.G - ff.F * ff.F;
  if (!(std::abs(ff.W) >= 1e-12)) throw DegenerateMetric("first fundamental form is degenerate");
  ff.normal = cross(Xr, Xt) / std::sqrt(std::abs(ff.W));
  ff.e = inner(Xrr, ff.normal);
  ff.f = inner(Xrt, ff.normal);
  ff.g = inner(Xtt, ff.normal);
  return ff;
}

/// Forms of spec at (r, t) with hr = h * width(r_interval) and ht = h.
/// Requires r +- 2 hr inside the interval.
inline FundamentalForms fundamental_forms_numeric(const Surface& s, double r, double t,
                                                  double h = 1e-3) {
  const auto& iv = s.spec().r_interval;
  const double hr = h * iv.width();
  if (r - 2 * hr < iv.lo || r + 2 * hr > iv.hi)
    detail::throw_domain("finite-difference stencil leaves the r-interval", r);
  return fundamental_forms_numeric(s.local_chart(r), r, t, hr, h);
}

inline FundamentalForms fundamental_forms_numeric(const SurfaceSpec& spec, double r, double t,
                                                  double h = 1e-3) {
  return fundamental_forms_numeric(Surface(spec, 9), r, t, h);
}

struct CurvatureBundle {
  double k_m = 0;
  double k_p = 0;
  double H = 0;
  double K_G = 0;
  double kappa = 0;
};

/// Principal curvatures from the momentum: k_m = K'(r), k_p = K(r)/r.
inline CurvatureBundle curvatures_closed(const SurfaceSpec& spec, double r) {
  require_compatible(spec.cls, spec.eps);
  if (r == 0) detail::throw_domain("k_p is undefined on the axis", r);
  CurvatureBundle c;
  c.k_m = deriv(spec.momentum, r);
  c.k_p = eval(spec.momentum, r) / r;
  c.H = -spec.eps.real() * (c.k_m + c.k_p) / 2;
  c.K_G = -spec.eps.real() * c.k_m * c.k_p;
  c.kappa = generatrix_curvature(spec.momentum, spec.cls, r);
  return c;
}

/// W = EG - F^2 in the r-chart from the momentum.
inline double metric_determinant_closed(const SurfaceSpec& spec, double r) {
  const double k = eval(spec.momentum, r);
  const double rad = momentum_radicand(spec.momentum, spec.cls, spec.eps, r);
  const double r2 = r * r;
  switch (spec.cls) {
    case RotationClass::Hyperbolic2: return -r2 / rad;
    case RotationClass::Parabolic: return spec.eps.real() * r2 / (k * k);
    default: return spec.eps.real() * r2 / rad;
  }
}

/// Spacelike iff W > 0. Throws Degenerate within 1e-10 of a causal change.
inline CausalCharacter causal_character(const SurfaceSpec& spec, double r) {
  require_compatible(spec.cls, spec.eps);
  const double m = validity_margin(spec.momentum, spec.cls, spec.eps, r);
  if (!std::isfinite(m)) detail::throw_domain("r outside the momentum domain", r);
  if (m < 1e-10 || std::abs(r) < 1e-10) throw Degenerate("surface is degenerate or nearly so at this r");
  return metric_determinant_closed(spec, r) > 0 ? CausalCharacter::Spacelike
                                                : CausalCharacter::Timelike;
}

/// Left-hand side and residual of an implicit equation at a point.
struct ImplicitValue {
  double lhs = 0;
  double residual = 0;
};

/// The class implicit equation evaluated through the graph:
/// x3^2 - x2^2 = z(x1)^2, x2^2 - x3^2 = y(x1)^2, x1^2 + x2^2 = x(x3)^2, or
/// x1^2 + x2^2 - x3^2 = (x1 - x3) u(x1 - x3). When the graph is constant the
/// surface is a plane and the residual is the axis coordinate minus it.
inline ImplicitValue implicit_value(const Surface& s, const AmbientPoint& p) {
  const auto& spec = s.spec();
  const auto& gr = s.graph();
  const bool flat = std::all_of(gr.begin(), gr.end(), [&](auto& x) { return x.g == gr.front().g; });
  switch (spec.cls) {
    case RotationClass::Hyperbolic1:
    case RotationClass::Hyperbolic2: {
      const double lhs = spec.cls == RotationClass::Hyperbolic1 ? p.x3 * p.x3 - p.x2 * p.x2
                                                                 : p.x2 * p.x2 - p.x3 * p.x3;
      if (flat) return {p.x1, p.x1 - gr.front().g};
      const double r = s.invert(p.x1);
      return {lhs, lhs - r * r};
    }
    case RotationClass::Elliptic: {
      const double lhs = p.x1 * p.x1 + p.x2 * p.x2;
      if (flat) return {p.x3, p.x3 - gr.front().g};
      const double r = s.invert(p.x3);
      return {lhs, lhs - r * r};
    }
    case RotationClass::Parabolic: {
      const double lhs = p.x1 * p.x1 + p.x2 * p.x2 - p.x3 * p.x3;
      const double v = p.x1 - p.x3;
      if (!spec.r_interval.contains_closed(v)) throw OutOfRange("x1 - x3 outside the sampled range");
      return {lhs, lhs - v * s.g(v)};
    }
  }
  return {};
}

inline double implicit_residual(const Surface& s, const AmbientPoint& p) {
  return implicit_value(s, p).residual;
}

/// Residual against a given sampled graph (built with spec.anchor).
inline double implicit_residual(const SurfaceSpec& spec, const AmbientPoint& p,
                                const std::vector<GraphSample>& graph) {
  switch (spec.cls) {
    case RotationClass::Hyperbolic1:
      return p.x3 * p.x3 - p.x2 * p.x2 - std::pow(invert_graph(graph, p.x1), 2);
    case RotationClass::Hyperbolic2:
      return p.x2 * p.x2 - p.x3 * p.x3 - std::pow(invert_graph(graph, p.x1), 2);
    case RotationClass::Elliptic:
      return p.x1 * p.x1 + p.x2 * p.x2 - std::pow(invert_graph(graph, p.x3), 2);
    case RotationClass::Parabolic: {
      const double v = p.x1 - p.x3;
      return p.x1 * p.x1 + p.x2 * p.x2 - p.x3 * p.x3 -
             v * graph_value(graph, spec.momentum, spec.cls, spec.eps, v);
    }
  }
  return 0.0;
}

struct Mesh {
  std::vector<AmbientPoint> vertices;
  std::vector<std::array<std::size_t, 3>> faces;
  std::size_t nr = 0, nt = 0;
  std::vector<double> rs, ts;
};

/// Structured grid mesh: rows uniform in r over the closed interval, columns
/// uniform in t over the closed t-range, vertices in row-major order and two
/// consistently oriented triangles per quad.
template <class PointFn>
Mesh mesh_grid(PointFn&& point, Interval r, std::pair<double, double> t_range, std::size_t nr,
               std::size_t nt) {
  if (nr < 2 || nt < 2) throw DomainError("mesh needs at least 2 x 2 vertices");
  if (!(r.hi != r.lo) || !std::isfinite(r.lo) || !std::isfinite(r.hi))
    throw DomainError("mesh needs a non-degenerate r-interval");
  Mesh m;
  m.nr = nr;
  m.nt = nt;
  for (std::size_t i = 0; i < nr; ++i) m.rs.push_back(r.lo + r.width() * double(i) / double(nr - 1));
  m.rs.back() = r.hi;
  for (std::size_t j = 0; j < nt; ++j)
    m.ts.push_back(t_range.first + (t_range.second - t_range.first) * double(j) / double(nt - 1));
  m.vertices.reserve(nr * nt);
  for (double ri : m.rs)
    for (double tj : m.ts) {
      const AmbientPoint p = point(ri, tj);
      if (!p.finite()) detail::throw_domain("non-finite mesh vertex", ri);
      m.vertices.push_back(p);
    }
  for (std::size_t i = 0; i + 1 < nr; ++i)
    for (std::size_t j = 0; j + 1 < nt; ++j) {
      const std::size_t v00 = i * nt + j, v01 = v00 + 1, v10 = v00 + nt, v11 = v10 + 1;
      m.faces.push_back({v00, v10, v11});
      m.faces.push_back({v00, v11, v01});
    }
  return m;
}

inline Mesh mesh(const Surface& s, std::size_t nr, std::size_t nt,
                 std::pair<double, double> t_range) {
  return mesh_grid([&](double r, double t) { return s.point(r, t); }, s.spec().r_interval, t_range,
                   nr, nt);
}

inline Mesh mesh(const SurfaceSpec& spec, std::size_t nr, std::size_t nt,
                 std::pair<double, double> t_range) {
  if (!(spec.r_interval.lo < spec.r_interval.hi)) throw DomainError("degenerate r-interval");
  return mesh(Surface(spec), nr, nt, t_range);
}

inline Mesh mesh(const SurfaceSpec& spec, std::size_t nr, std::size_t nt) {
  return mesh(spec, nr, nt, default_t_range(spec.cls));
}

}  // namespace lrotor
