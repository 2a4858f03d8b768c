// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Scalar Dormand-Prince 5(4) integrator with PI step control and continuous
// output.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "lrotor/errors.hpp"

namespace lrotor {

struct OdeOptions {
  double atol = 1e-8;
  double rtol = 1e-8;
  /// Zero selects |span| / 16.
  double hmax = 0.0;
  long max_steps = 200000;
  /// Accuracy with which a domain exit is located.
  double exit_tol = 1e-10;
  /// Optional admissibility of (r, y); the integration stops at its boundary.
  std::function<bool(double, double)> valid;
};

/// One accepted step with its interpolation coefficients.
struct OdeStep {
  double r0 = 0, h = 0;
  std::array<double, 5> rc{};

  double operator()(double r) const {
    const double th = (r - r0) / h, th1 = 1.0 - th;
    return rc[0] + th * (rc[1] + th1 * (rc[2] + th * (rc[3] + th1 * rc[4])));
  }
};

struct OdeSolution {
  double r_start = 0;
  double r_reached = 0;
  std::vector<OdeStep> steps;
  std::vector<double> nodes_r, nodes_y;
  /// Right-hand side; off-node values take one fifth-order step from the
  /// start of the containing step. Without it the quartic interpolant is used.
  std::function<double(double, double)> rhs;
  /// Set when the solution left the admissible region; the reached end lies
  /// within exit_tol of the boundary.
  std::optional<double> exit_boundary;

  bool covers(double r) const {
    return std::min(r_start, r_reached) <= r && r <= std::max(r_start, r_reached);
  }

  double operator()(double r) const {
    if (!covers(r)) throw DomainError("r outside the integrated range");
    if (steps.empty()) return nodes_y.front();
    const bool fwd = r_reached >= r_start;
    auto it = std::lower_bound(steps.begin(), steps.end(), r, [fwd](const OdeStep& s, double x) {
      return fwd ? s.r0 + s.h < x : s.r0 + s.h > x;
    });
    if (it == steps.end()) it = std::prev(steps.end());
    return rhs ? continue_step(*it, r) : (*it)(r);
  }

 private:
  double continue_step(const OdeStep& s, double r) const;
};

namespace detail {

struct DopriCoeffs {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                          a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  static constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                          d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                          d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;
};

/// Fifth-order value of one Dormand-Prince step of size h from (r, y).
inline double dopri_step(const std::function<double(double, double)>& f, double r, double y, double h) {
  using C = DopriCoeffs;
  const double k1 = f(r, y);
  const double k2 = f(r + C::c2 * h, y + h * C::a21 * k1);
  const double k3 = f(r + C::c3 * h, y + h * (C::a31 * k1 + C::a32 * k2));
  const double k4 = f(r + C::c4 * h, y + h * (C::a41 * k1 + C::a42 * k2 + C::a43 * k3));
  const double k5 = f(r + C::c5 * h, y + h * (C::a51 * k1 + C::a52 * k2 + C::a53 * k3 + C::a54 * k4));
  const double k6 = f(r + h, y + h * (C::a61 * k1 + C::a62 * k2 + C::a63 * k3 + C::a64 * k4 + C::a65 * k5));
  return y + h * (C::a71 * k1 + C::a73 * k3 + C::a74 * k4 + C::a75 * k5 + C::a76 * k6);
}

}  // namespace detail

inline double OdeSolution::continue_step(const OdeStep& s, double r) const {
  if (r == s.r0) return s.rc[0];
  if (r == s.r0 + s.h) return s.rc[0] + s.rc[1];
  try {
    const double y = detail::dopri_step(rhs, s.r0, s.rc[0], r - s.r0);
    if (std::isfinite(y)) return y;
  } catch (const DomainError&) {
  }
  return s(r);
}

/// Integrates y' = f(r, y) from (r0, y0) to r_end (either direction).
///
/// Throws StepFailure on step-size underflow, step-count exhaustion or a
/// non-finite state, and DomainExit when (r0, y0) itself is inadmissible.
inline OdeSolution integrate_ode(const std::function<double(double, double)>& f, double r0,
                                 double y0, double r_end, const OdeOptions& opt = {}) {
  using C = detail::DopriCoeffs;
  if (!std::isfinite(r0) || !std::isfinite(y0) || !std::isfinite(r_end))
    throw StepFailure("non-finite initial data");
  if (opt.valid && !opt.valid(r0, y0)) throw DomainExit("initial point is not admissible", r0);

  OdeSolution sol;
  sol.rhs = f;
  sol.r_start = sol.r_reached = r0;
  sol.nodes_r.push_back(r0);
  sol.nodes_y.push_back(y0);
  const double span = r_end - r0;
  if (span == 0) return sol;
  const double dir = span > 0 ? 1.0 : -1.0;
  const double hmax = opt.hmax > 0 ? opt.hmax : std::abs(span) / 16;

  auto sc = [&](double a, double b) { return opt.atol + opt.rtol * std::max(std::abs(a), std::abs(b)); };
  auto eval = [&](double r, double y) -> double {
    try {
      return f(r, y);
    } catch (const DomainError&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };

  double r = r0, y = y0;
  double k1 = eval(r, y);
  if (!std::isfinite(k1)) throw StepFailure("right-hand side is not finite at the initial point");

  // Initial step from the local scale of y and y'.
  double h;
  {
    const double d0 = std::abs(y) / sc(y, y), d1 = std::abs(k1) / sc(y, y);
    h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h = std::min({h, hmax, std::abs(span)});
  }

  constexpr double beta = 0.04, safe = 0.9, facc1 = 1.0 / 0.2, facc2 = 1.0 / 10.0;
  const double expo1 = 0.2 - 0.75 * beta;
  double facold = 1e-4;
  bool last_rejected = false;
  bool near_exit = false;
  const double hmin = 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(r0));

  for (long step = 0;; ++step) {
    if (step >= opt.max_steps) throw StepFailure("maximum number of steps exceeded");
    if (dir * (r_end - r) <= 0) break;
    if (h < hmin) {
      if (near_exit) break;
      throw StepFailure("step size underflow");
    }
    double hs = dir * std::min(h, std::abs(r_end - r));
    const bool final_step = std::abs(r_end - r) <= h;

    const double k2 = eval(r + C::c2 * hs, y + hs * C::a21 * k1);
    const double k3 = eval(r + C::c3 * hs, y + hs * (C::a31 * k1 + C::a32 * k2));
    const double k4 = eval(r + C::c4 * hs, y + hs * (C::a41 * k1 + C::a42 * k2 + C::a43 * k3));
    const double k5 =
        eval(r + C::c5 * hs, y + hs * (C::a51 * k1 + C::a52 * k2 + C::a53 * k3 + C::a54 * k4));
    const double ys = y + hs * (C::a61 * k1 + C::a62 * k2 + C::a63 * k3 + C::a64 * k4 + C::a65 * k5);
    const double rn = final_step ? r_end : r + hs;
    const double k6 = eval(rn, ys);
    const double yn = y + hs * (C::a71 * k1 + C::a73 * k3 + C::a74 * k4 + C::a75 * k5 + C::a76 * k6);
    const double k7 = eval(rn, yn);

    const bool finite = std::isfinite(yn) && std::isfinite(k7) && std::isfinite(k2) &&
                        std::isfinite(k3) && std::isfinite(k4) && std::isfinite(k5) &&
                        std::isfinite(k6);
    const bool admissible = finite && (!opt.valid || opt.valid(rn, yn));
    if (!admissible) {
      if (opt.valid) {
        // Approach the boundary by halving until the step is below exit_tol.
        near_exit = true;
        if (std::abs(hs) <= opt.exit_tol) break;
        h = 0.5 * std::abs(hs);
        last_rejected = true;
        continue;
      }
      if (!finite && std::abs(hs) > hmin) {
        h = 0.25 * std::abs(hs);
        last_rejected = true;
        continue;
      }
      throw StepFailure("non-finite solution");
    }

    const double err_abs =
        std::abs(hs * (C::e1 * k1 + C::e3 * k3 + C::e4 * k4 + C::e5 * k5 + C::e6 * k6 + C::e7 * k7));
    const double err = err_abs / sc(y, yn);
    const double fac11 = std::pow(err, expo1);
    double fac = fac11 / std::pow(facold, beta);
    fac = std::max(facc2, std::min(facc1, fac / safe));
    double hnew = std::abs(hs) / fac;

    if (err <= 1.0) {
      facold = std::max(err, 1e-4);
      OdeStep st;
      st.r0 = r;
      st.h = rn - r;
      st.rc[0] = y;
      st.rc[1] = yn - y;
      st.rc[2] = st.h * k1 - st.rc[1];
      st.rc[3] = st.rc[1] - st.h * k7 - st.rc[2];
      st.rc[4] = st.h * (C::d1 * k1 + C::d3 * k3 + C::d4 * k4 + C::d5 * k5 + C::d6 * k6 + C::d7 * k7);
      sol.steps.push_back(st);
      r = rn;
      y = yn;
      k1 = k7;
      sol.nodes_r.push_back(r);
      sol.nodes_y.push_back(y);
      sol.r_reached = r;
      hnew = std::min(hnew, hmax);
      if (last_rejected) hnew = std::min(hnew, std::abs(hs));
      if (near_exit) hnew = std::min(hnew, std::abs(hs));
      last_rejected = false;
    } else {
      hnew = std::abs(hs) / std::min(facc1, fac11 / safe);
      last_rejected = true;
    }
    h = hnew;
  }
  if (near_exit) sol.exit_boundary = sol.r_reached;
  return sol;
}

}  // namespace lrotor
