// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Reconstruction of generatrix graphs and arc length from a momentum.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "lrotor/errors.hpp"
#include "lrotor/momentum.hpp"
#include "lrotor/types.hpp"

namespace lrotor {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-13;
  int max_depth = 60;
  long max_panels = 4000;
  /// Map [a, b] through a cubic smoothstep so that 1/sqrt endpoint
  /// singularities become bounded integrands.
  bool endpoint_transform = true;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
};

namespace detail {

// Kronrod nodes (descending, last is the centre) and weights; Gauss weights
// belong to the odd-indexed nodes and the centre.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

class AdaptiveGK {
 public:
  AdaptiveGK(const std::function<double(double)>& f, double a, double b,
             const QuadratureOptions& opt)
      : f_(f), a_(a), b_(b), opt_(opt) {
    scale_ = std::max({1.0, std::abs(a), std::abs(b)});
  }

  QuadratureResult run() {
    QuadratureResult res;
    if (a_ == b_) return res;
    // Global adaptive subdivision: always split the panel with the largest
    // error estimate until the total meets the tolerance.
    std::vector<Node> heap;
    heap.push_back(make_node(0.0, 1.0, 0));
    double total = heap.front().value, err = heap.front().error;
    auto cmp = [](const Node& x, const Node& y) {
      return x.error < y.error || (x.error == y.error && x.lo > y.lo);
    };
    while (true) {
      const double tol = std::max(opt_.abs_tol, opt_.rel_tol * std::abs(total));
      if (err <= tol) break;
      if (static_cast<long>(heap.size()) >= opt_.max_panels)
        throw SingularIntegral("quadrature did not converge within the panel budget");
      std::pop_heap(heap.begin(), heap.end(), cmp);
      const Node worst = heap.back();
      heap.pop_back();
      if (worst.depth >= opt_.max_depth)
        throw SingularIntegral("adaptive refinement exceeded maximum depth; the integral appears divergent");
      const double mid = 0.5 * (worst.lo + worst.hi);
      Node left = make_node(worst.lo, mid, worst.depth + 1);
      Node right = make_node(mid, worst.hi, worst.depth + 1);
      total += left.value + right.value - worst.value;
      err += left.error + right.error - worst.error;
      heap.push_back(left);
      std::push_heap(heap.begin(), heap.end(), cmp);
      heap.push_back(right);
      std::push_heap(heap.begin(), heap.end(), cmp);
    }
    // Sum in position order so the result does not depend on heap layout.
    std::sort(heap.begin(), heap.end(), [](const Node& x, const Node& y) { return x.lo < y.lo; });
    for (const auto& n : heap) {
      res.value += n.value;
      res.error += n.error;
    }
    res.evaluations = evals_;
    if (!std::isfinite(res.value)) throw SingularIntegral("integral is not finite");
    if (opt_.endpoint_transform) check_endpoint_growth();
    return res;
  }

 private:
  struct Node {
    double lo, hi, value, error;
    int depth;
  };

  Node make_node(double lo, double hi, int depth) {
    const Panel p = panel(lo, hi);
    return {lo, hi, p.kronrod, std::abs(p.kronrod - p.gauss), depth};
  }

  struct Panel {
    double kronrod;
    double gauss;
  };

  // Maps s in [0, 1] to r and dr/ds; `dist` is the exact offset from the
  // nearest endpoint, which stays accurate where r itself rounds.
  void map(double s, double& r, double& jac, double& dist) const {
    const double w = b_ - a_;
    if (!opt_.endpoint_transform) {
      r = a_ + w * s;
      jac = w;
      dist = std::min(s, 1.0 - s) * std::abs(w);
      return;
    }
    jac = 6.0 * s * (1.0 - s) * w;
    if (s <= 0.5) {
      const double off = w * s * s * (3.0 - 2.0 * s);
      r = a_ + off;
      dist = std::abs(off);
    } else {
      const double t = 1.0 - s;
      const double off = w * t * t * (3.0 - 2.0 * t);
      r = b_ - off;
      dist = std::abs(off);
    }
  }

  double value_at(double s) {
    double r, jac, dist;
    map(s, r, jac, dist);
    ++evals_;
    double v;
    try {
      v = f_(r);
    } catch (const DomainError&) {
      v = std::numeric_limits<double>::quiet_NaN();
    }
    if (std::isfinite(v)) return v * jac;
    // Rounding onto a singular endpoint contributes nothing measurable.
    if (dist <= 1e-12 * scale_ || r == a_ || r == b_) return 0.0;
    throw DomainError("integrand undefined inside the integration interval (r = " +
                      std::to_string(r) + ")");
  }

  Panel panel(double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double fc = value_at(c);
    double k = fc * kWgk[7];
    double g = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
      const double dx = h * kXgk[j];
      const double f1 = value_at(c - dx);
      const double f2 = value_at(c + dx);
      k += kWgk[j] * (f1 + f2);
      if (j % 2 == 1) g += kWg[j / 2] * (f1 + f2);
    }
    return {k * h, g * h};
  }

  // With the smoothstep map, an integrable endpoint singularity gives a
  // transformed integrand F with s F(s) -> 0; a divergent one does not.
  void check_endpoint_growth() {
    for (int side = 0; side < 2; ++side) {
      double first = -1.0, last = -1.0;
      for (int k = 10; k <= 26; ++k) {
        const double s0 = std::ldexp(1.0, -k);
        const double s = side == 0 ? s0 : 1.0 - s0;
        double r, jac, dist;
        map(s, r, jac, dist);
        if (r == a_ || r == b_) break;
        double v;
        try {
          v = f_(r);
        } catch (const DomainError&) {
          break;
        }
        if (!std::isfinite(v)) break;
        const double m = s0 * std::abs(v * jac);
        if (first < 0) first = m;
        last = m;
      }
      if (first > 0 && last > 0.25 * first && last > 1e-6 * std::abs(b_ - a_))
        throw SingularIntegral("integrand is not integrable at an endpoint");
    }
  }

  const std::function<double(double)>& f_;
  double a_, b_;
  QuadratureOptions opt_;
  double scale_ = 1.0;
  long evals_ = 0;
};

}  // namespace detail

/// Adaptive Gauss-Kronrod 7-15 quadrature of f over [a, b] (b < a allowed).
/// Nodes never touch the endpoints.
///
/// Throws SingularIntegral for divergent integrals and DomainError when f is
/// undefined strictly inside the interval.
inline QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& opt = {}) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integration limits must be finite");
  return detail::AdaptiveGK(f, a, b, opt).run();
}

/// dg/dr for the class: K/sqrt(K^2 - eps), K/sqrt(1 - K^2), K/sqrt(K^2 + eps)
/// or eps/K^2.
inline double graph_integrand(const MomentumSpec& spec, RotationClass cls, CausalSign eps,
                              double r) {
  const double k = eval(spec, r);
  const double rad = momentum_radicand(spec, cls, eps, r);
  if (!(rad > 0)) detail::throw_domain("outside the validity domain", r);
  if (cls == RotationClass::Parabolic) return eps.real() / (k * k);
  return k / std::sqrt(rad);
}

/// ds/dr for the class: 1/sqrt of the radicand, or 1/K for Parabolic.
inline double arclength_integrand(const MomentumSpec& spec, RotationClass cls, CausalSign eps,
                                  double r) {
  const double k = eval(spec, r);
  const double rad = momentum_radicand(spec, cls, eps, r);
  if (!(rad > 0)) detail::throw_domain("outside the validity domain", r);
  if (cls == RotationClass::Parabolic) return 1.0 / k;
  return 1.0 / std::sqrt(rad);
}

struct GraphSample {
  double r = 0.0;
  double g = 0.0;
  double s = 0.0;
};

namespace detail {

inline void check_interior_valid(const MomentumSpec& spec, RotationClass cls, CausalSign eps,
                                 double r) {
  const double m = validity_margin(spec, cls, eps, r);
  if (!(std::isfinite(m) && m > 0)) throw_domain("sample lies outside the validity domain", r);
}

}  // namespace detail

/// Samples of the generatrix graph g(r) and arc length s(r) on [r0, r1]
/// (r1 < r0 allowed) at n Chebyshev-spaced abscissae including both ends.
/// g(r0) = anchor and s(r0) = 0. The ends may sit on the validity boundary.
inline std::vector<GraphSample> generatrix_graph(const MomentumSpec& spec, RotationClass cls,
                                                 CausalSign eps, Interval interval, int n,
                                                 double anchor,
                                                 const QuadratureOptions& opt = {}) {
  require_compatible(cls, eps);
  validate(spec);
  if (n < 2) throw DomainError("generatrix_graph needs at least two samples");
  const double r0 = interval.lo, r1 = interval.hi;
  if (!std::isfinite(r0) || !std::isfinite(r1) || r0 == r1)
    throw DomainError("generatrix_graph needs a finite non-degenerate interval");

  std::vector<double> rs(n);
  const double mid = 0.5 * (r0 + r1), half = 0.5 * (r1 - r0);
  for (int i = 0; i < n; ++i)
    rs[i] = mid - half * std::cos(std::numbers::pi * i / (n - 1));
  rs.front() = r0;
  rs.back() = r1;

  for (int i = 1; i + 1 < n; ++i) detail::check_interior_valid(spec, cls, eps, rs[i]);
  if (n == 2) detail::check_interior_valid(spec, cls, eps, mid);

  const std::function<double(double)> dg = [&](double r) {
    return graph_integrand(spec, cls, eps, r);
  };
  const std::function<double(double)> ds = [&](double r) {
    return arclength_integrand(spec, cls, eps, r);
  };

  std::vector<GraphSample> out(n);
  out[0] = {r0, anchor, 0.0};
  for (int i = 1; i < n; ++i) {
    out[i].r = rs[i];
    out[i].g = out[i - 1].g + integrate(dg, rs[i - 1], rs[i], opt).value;
    out[i].s = out[i - 1].s + std::abs(integrate(ds, rs[i - 1], rs[i], opt).value);
  }
  return out;
}

/// Arc length of the generatrix between r0 and r1; negative when r1 < r0.
inline double arc_length(const MomentumSpec& spec, RotationClass cls, CausalSign eps, double r0,
                         double r1, const QuadratureOptions& opt = {}) {
  require_compatible(cls, eps);
  validate(spec);
  if (r0 == r1) return 0.0;
  detail::check_interior_valid(spec, cls, eps, 0.5 * (r0 + r1));
  const std::function<double(double)> ds = [&](double r) {
    return arclength_integrand(spec, cls, eps, r);
  };
  return integrate(ds, r0, r1, opt).value;
}

/// g at an arbitrary r, integrating from the nearest sample.
inline double graph_value(const std::vector<GraphSample>& samples, const MomentumSpec& spec,
                          RotationClass cls, CausalSign eps, double r,
                          const QuadratureOptions& opt = {}) {
  if (samples.empty()) throw OutOfRange("empty graph");
  const auto nearest = std::min_element(samples.begin(), samples.end(), [r](auto& x, auto& y) {
    return std::abs(x.r - r) < std::abs(y.r - r);
  });
  if (nearest->r == r) return nearest->g;
  const std::function<double(double)> dg = [&](double x) {
    return graph_integrand(spec, cls, eps, x);
  };
  return nearest->g + integrate(dg, nearest->r, r, opt).value;
}

namespace detail {

/// Fritsch-Butland slopes for a monotone piecewise cubic through (x, y).
inline std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> d(n, 0.0), h(n - 1), del(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    del[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    d[0] = d[1] = del[0];
    return d;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (del[i - 1] * del[i] <= 0) continue;
    const double w1 = 2 * h[i] + h[i - 1], w2 = h[i] + 2 * h[i - 1];
    d[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
  }
  auto end_slope = [](double h0, double h1, double m0, double m1) {
    double s = ((2 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    if (s * m0 <= 0) return 0.0;
    if (m0 * m1 <= 0 && std::abs(s) > std::abs(3 * m0)) return 3 * m0;
    return s;
  };
  d[0] = end_slope(h[0], h[1], del[0], del[1]);
  d[n - 1] = end_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
  return d;
}

}  // namespace detail

/// True-function refinement for invert_graph: returns (g(r), g'(r)).
using GraphRefiner = std::function<std::pair<double, double>(double)>;

/// r with g(r) = g_query. The initial estimate is a monotone cubic
/// interpolant of r as a function of g; with a refiner, safeguarded Newton
/// iterations on the true graph follow.
///
/// Throws NotMonotone unless g is strictly monotone across the samples and
/// OutOfRange when g_query lies outside the sampled span.
inline double invert_graph(const std::vector<GraphSample>& samples, double g_query,
                           const GraphRefiner& refine = nullptr) {
  const std::size_t n = samples.size();
  if (n < 2) throw OutOfRange("need at least two samples to invert");
  const double dir = samples[1].g > samples[0].g ? 1.0 : -1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double step = dir * (samples[i + 1].g - samples[i].g);
    if (!(step > 0)) throw NotMonotone("graph samples are not strictly monotone in g");
  }
  const double gmin = std::min(samples.front().g, samples.back().g);
  const double gmax = std::max(samples.front().g, samples.back().g);
  if (!(g_query >= gmin && g_query <= gmax)) throw OutOfRange("g outside the sampled span");

  std::vector<double> gs(n), rs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = dir > 0 ? i : n - 1 - i;
    gs[i] = samples[j].g;
    rs[i] = samples[j].r;
  }
  std::size_t k = std::upper_bound(gs.begin(), gs.end(), g_query) - gs.begin();
  k = std::clamp<std::size_t>(k, 1, n - 1) - 1;
  if (g_query == gs[k]) return rs[k];
  if (g_query == gs[k + 1]) return rs[k + 1];

  const auto d = detail::pchip_slopes(gs, rs);
  const double h = gs[k + 1] - gs[k];
  const double t = (g_query - gs[k]) / h;
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
  double r = h00 * rs[k] + h10 * h * d[k] + h01 * rs[k + 1] + h11 * h * d[k + 1];
  if (!refine) return r;

  // Bracket [lo, hi] in r with g(lo) < g_query < g(hi) after orientation.
  double lo = rs[k], hi = rs[k + 1];
  for (int it = 0; it < 60; ++it) {
    const auto [g, dg] = refine(r);
    const double res = g - g_query;
    if (std::abs(res) <= 1e-14 * std::max(1.0, std::abs(g_query))) break;
    if (res < 0)
      lo = r;
    else
      hi = r;
    double next = r - res / dg;
    const double a = std::min(lo, hi), b = std::max(lo, hi);
    if (!std::isfinite(next) || next <= a || next >= b) next = 0.5 * (lo + hi);
    if (next == r) break;
    r = next;
  }
  return r;
}

}  // namespace lrotor
