// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Numerical oracle: principal curvatures recomputed from the embedding alone,
// compared with the closed forms over an interior grid.

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrotor/errors.hpp"
#include "lrotor/surface.hpp"
#include "lrotor/types.hpp"
#include "lrotor/weingarten.hpp"

namespace lrotor {

struct PrincipalCurvatures {
  double meridian = 0;  ///< eigenvalue whose eigenvector follows d/dr
  double parallel = 0;  ///< eigenvalue whose eigenvector follows d/dt
};

/// Eigenvalues of I^{-1} II, assigned to the meridian and parallel directions
/// by eigenvector alignment. Throws ComplexEigenvalues when the shape
/// operator is not diagonalizable over the reals.
inline PrincipalCurvatures shape_operator_eigenvalues(const FundamentalForms& ff) {
  const double W = ff.W;
  const double B = ff.e * ff.G - 2 * ff.f * ff.F + ff.g * ff.E;
  const double C = ff.e * ff.g - ff.f * ff.f;
  double disc = B * B - 4 * W * C;
  const double scale = B * B + std::abs(4 * W * C) + 1e-300;
  if (disc < 0) {
    if (-disc > 1e-6 * scale) throw ComplexEigenvalues("shape operator has complex eigenvalues");
    disc = 0;
  }
  const double sq = std::sqrt(disc);
  // Numerically stable roots of W k^2 - B k + C = 0.
  const double qq = 0.5 * (B + std::copysign(sq, B));
  double k1, k2;
  if (qq != 0) {
    k1 = qq / W;
    k2 = C / qq;
  } else {
    k1 = k2 = 0;
  }

  const double kE = ff.E != 0 ? ff.e / ff.E : 0.0;
  if (std::abs(k1 - k2) <= 1e-6 * std::max({1.0, std::abs(k1), std::abs(k2)})) {
    // Near-umbilic: order by the diagonal entries.
    if (std::abs(k1 - kE) <= std::abs(k2 - kE)) return {k1, k2};
    return {k2, k1};
  }
  // Fraction of an eigenvector along d/dr, measured with the metric.
  auto r_fraction = [&](double k) {
    const double a1 = -(ff.f - k * ff.F), b1 = ff.e - k * ff.E;
    const double a2 = ff.g - k * ff.G, b2 = -(ff.f - k * ff.F);
    const bool first = std::hypot(a1, b1) >= std::hypot(a2, b2);
    const double vr = first ? a1 : a2, vt = first ? b1 : b2;
    const double lr = std::abs(vr) * std::sqrt(std::abs(ff.E));
    const double lt = std::abs(vt) * std::sqrt(std::abs(ff.G));
    return lr / (lr + lt + 1e-300);
  };
  if (r_fraction(k1) >= r_fraction(k2)) return {k1, k2};
  return {k2, k1};
}

inline PrincipalCurvatures principal_curvatures_numeric(const Surface& s, double r, double t) {
  return shape_operator_eigenvalues(fundamental_forms_numeric(s, r, t));
}

inline PrincipalCurvatures principal_curvatures_numeric(const SurfaceSpec& spec, double r, double t) {
  return principal_curvatures_numeric(Surface(spec, 9), r, t);
}

/// Everything verification needs about a surface, independent of how it is
/// parametrized.
struct SurfaceModel {
  std::string name;
  CausalSign eps = 1;
  Interval r_interval;
  std::pair<double, double> t_range{-1.5, 1.5};
  std::function<AmbientPoint(double, double)> point;
  /// A chart accurate near the given r (translation freedom may be used).
  std::function<Chart(double)> local_chart;
  /// Closed-form (k_m, k_p).
  std::function<std::pair<double, double>(double)> closed_curvatures;
  std::function<CausalCharacter(double)> causal;
  /// Implicit equation; empty when none is known.
  std::function<ImplicitValue(const AmbientPoint&)> implicit;
};

inline std::pair<double, double> default_verify_t_range(RotationClass cls) {
  if (cls == RotationClass::Elliptic) return {0.0, 2 * std::numbers::pi};
  return {-1.5, 1.5};
}

/// Model of a momentum-generated surface; the class implicit equation is
/// used unless `implicit` is replaced afterwards.
inline SurfaceModel make_model(std::shared_ptr<const Surface> s, std::string name = {}) {
  SurfaceModel m;
  const auto& spec = s->spec();
  m.name = std::move(name);
  m.eps = spec.eps;
  m.r_interval = spec.r_interval;
  m.t_range = default_verify_t_range(spec.cls);
  m.point = [s](double r, double t) { return s->point(r, t); };
  m.local_chart = [s](double rc) { return s->local_chart(rc); };
  m.closed_curvatures = [s](double r) {
    const auto c = curvatures_closed(s->spec(), r);
    return std::pair{c.k_m, c.k_p};
  };
  m.causal = [s](double r) { return causal_character(s->spec(), r); };
  m.implicit = [s](const AmbientPoint& p) { return implicit_value(*s, p); };
  return m;
}

inline SurfaceModel make_model(const SurfaceSpec& spec, std::string name = {}) {
  return make_model(std::make_shared<const Surface>(spec), std::move(name));
}

struct VerifyOptions {
  std::size_t nr = 16, nt = 16;
  double curvature_tol = 1e-5;
  double residual_tol = 1e-6;
  /// Interior margin of the r-grid as a fraction of the interval width.
  double margin = 0.05;
  /// Finite-difference steps: h_r = fd_step * width of the r-interval, h_t = fd_step_t.
  double fd_step = 1e-3;
  double fd_step_t = 1e-3;
};

struct VerificationReport {
  std::string name;
  std::size_t nr = 0, nt = 0;
  double max_curvature_error = 0;
  double max_relation_residual = 0;
  double max_relation_residual_numeric = 0;
  double max_implicit_residual = 0;
  bool causal_consistency = true;
  bool passed = false;
  std::vector<std::string> notes;
};

/// Relative distance between {k1, k2} and {m1, m2} as sets.
inline double curvature_set_error(double k1, double k2, double m1, double m2) {
  auto rel = [](double x, double ref) { return std::abs(x - ref) / std::max(1.0, std::abs(ref)); };
  const double direct = std::max(rel(k1, m1), rel(k2, m2));
  const double swapped = std::max(rel(k1, m2), rel(k2, m1));
  return std::min(direct, swapped);
}

/// Runs the oracle over an nr x nt interior grid.
///
/// The relation residual is |Phi| from the closed forms; its numeric
/// counterpart uses the oracle curvatures and is relative to
/// max(1, |k_m|, |k_p|). Implicit residuals are relative to 1 + |LHS|.
inline VerificationReport verify_model(const SurfaceModel& m,
                                       const std::optional<WeingartenRelation>& rel,
                                       const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.name = m.name;
  rep.nr = opt.nr;
  rep.nt = opt.nt;
  if (opt.nr < 2 || opt.nt < 1) throw DomainError("verification grid too small");
  const double lo = m.r_interval.lo, w = m.r_interval.width();
  const double t0 = m.t_range.first, t1 = m.t_range.second;
  const bool periodic = std::abs((t1 - t0) - 2 * std::numbers::pi) < 1e-12;
  long implicit_failures = 0;

  for (std::size_t i = 0; i < opt.nr; ++i) {
    const double r = lo + w * (opt.margin + (1 - 2 * opt.margin) * double(i) / double(opt.nr - 1));
    const auto [km, kp] = m.closed_curvatures(r);
    const CausalCharacter expected = m.causal(r);
    if (rel) rep.max_relation_residual = std::max(rep.max_relation_residual, std::abs(phi(*rel, km, kp)));
    const Chart chart = m.local_chart(r);
    for (std::size_t j = 0; j < opt.nt; ++j) {
      const double frac = opt.nt == 1 ? 0.5 : double(j) / double(periodic ? opt.nt : opt.nt - 1);
      const double t = t0 + (t1 - t0) * frac;
      const auto ff = fundamental_forms_numeric(chart, r, t, opt.fd_step * w, opt.fd_step_t);
      const auto pc = shape_operator_eigenvalues(ff);
      rep.max_curvature_error =
          std::max(rep.max_curvature_error, curvature_set_error(pc.meridian, pc.parallel, km, kp));
      if (rel) {
        const double scale = std::max({1.0, std::abs(km), std::abs(kp)});
        rep.max_relation_residual_numeric = std::max(
            rep.max_relation_residual_numeric, std::abs(phi(*rel, pc.meridian, pc.parallel)) / scale);
      }
      const CausalCharacter numeric = ff.W > 0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
      if (numeric != expected) rep.causal_consistency = false;
      if (m.implicit) {
        try {
          const auto iv = m.implicit(m.point(r, t));
          rep.max_implicit_residual =
              std::max(rep.max_implicit_residual, std::abs(iv.residual) / (1 + std::abs(iv.lhs)));
        } catch (const Error& ex) {
          ++implicit_failures;
          rep.max_implicit_residual = std::numeric_limits<double>::infinity();
          if (implicit_failures == 1) rep.notes.push_back(std::string("implicit residual: ") + ex.what());
        }
      }
    }
  }
  if (!m.implicit) rep.notes.push_back("no implicit equation");
  if (!rel) rep.notes.push_back("no relation");
  if (!rep.causal_consistency) rep.notes.push_back("sign(W) disagrees with the causal character");

  rep.passed = rep.max_curvature_error <= opt.curvature_tol &&
               rep.max_relation_residual <= opt.residual_tol &&
               rep.max_relation_residual_numeric <= opt.curvature_tol &&
               rep.max_implicit_residual <= opt.residual_tol && rep.causal_consistency;
  if (rep.max_curvature_error > opt.curvature_tol) rep.notes.push_back("curvature mismatch");
  if (rep.max_relation_residual > opt.residual_tol) rep.notes.push_back("relation not satisfied");
  if (rep.max_relation_residual_numeric > opt.curvature_tol)
    rep.notes.push_back("relation not satisfied by oracle curvatures");
  if (rep.max_implicit_residual > opt.residual_tol) rep.notes.push_back("implicit equation not satisfied");
  return rep;
}

inline VerificationReport verify_surface(const SurfaceSpec& spec,
                                         const std::optional<WeingartenRelation>& rel,
                                         const VerifyOptions& opt = {}) {
  return verify_model(make_model(spec), rel, opt);
}

}  // namespace lrotor
