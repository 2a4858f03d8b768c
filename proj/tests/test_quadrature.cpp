// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lrotor/catalog.hpp"
#include "lrotor/quadrature.hpp"

using namespace lrotor;
using Catch::Matchers::WithinAbs;

namespace {

constexpr auto H1 = RotationClass::Hyperbolic1;
constexpr auto H2 = RotationClass::Hyperbolic2;
constexpr auto E = RotationClass::Elliptic;
constexpr auto P = RotationClass::Parabolic;

/// Increments (dr, dg, ds) of the reconstructed curve across [r - h, r + h].
struct Increment {
  double dr, dg, ds;
};

Increment increment(const SurfaceSpec& s, double r, double h) {
  const auto g = generatrix_graph(s.momentum, s.cls, s.eps, {r - h, r + h}, 2, 0.0);
  return {g[1].r - g[0].r, g[1].g - g[0].g, g[1].s - g[0].s};
}

/// The unit-speed quantity of the class, expected to equal eps (or 1).
double speed_form(RotationClass cls, const Increment& d) {
  const double gs = d.dg / d.ds, rs = d.dr / d.ds;
  switch (cls) {
    case RotationClass::Hyperbolic1: return gs * gs - rs * rs;  // (dx/ds)^2 - (dz/ds)^2
    case RotationClass::Hyperbolic2: return gs * gs + rs * rs;  // (dx/ds)^2 + (dy/ds)^2
    case RotationClass::Elliptic: return rs * rs - gs * gs;     // (dx/ds)^2 - (dz/ds)^2
    case RotationClass::Parabolic: return gs * rs;              // (du/ds)(dv/ds)
  }
  return 0;
}

std::vector<double> interior_points(const Interval& iv, int n) {
  std::vector<double> out;
  for (int i = 1; i <= n; ++i) out.push_back(iv.lo + iv.width() * i / (n + 1));
  return out;
}

}  // namespace

TEST_CASE("integrate smooth and endpoint-singular integrands") {
  CHECK_THAT(integrate([](double x) { return x * x * x; }, 0, 2).value, WithinAbs(4.0, 1e-13));
  CHECK_THAT(integrate([](double x) { return std::exp(x); }, 0, 1).value,
             WithinAbs(std::numbers::e - 1, 1e-13));
  CHECK_THAT(integrate([](double x) { return 1 / std::sqrt(x); }, 0, 1).value, WithinAbs(2.0, 1e-10));
  CHECK_THAT(integrate([](double x) { return 1 / std::sqrt(1 - x * x); }, -1, 1).value,
             WithinAbs(std::numbers::pi, 1e-10));
  CHECK_THAT(integrate([](double x) { return std::log(x); }, 0, 1).value, WithinAbs(-1.0, 1e-10));
  CHECK_THAT(integrate([](double x) { return x; }, 1, 0).value, WithinAbs(-0.5, 1e-15));
}

TEST_CASE("integrate error paths") {
  CHECK_THROWS_AS(integrate([](double x) { return 1 / (x - 1); }, 0, 1), SingularIntegral);
  CHECK_THROWS_AS(integrate([](double x) { return 1 / (x * x); }, 0, 1), SingularIntegral);
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 0, INFINITY), DomainError);
}

TEST_CASE("graph of the quadratic family through its pole") {
  // The integrand reduces to z/sqrt(-2z - 1) on [-1, -1/2]; its primitive
  // (1 - z) sqrt(-2z - 1) / 3 gives 2/3 between the ends.
  const auto g = generatrix_graph(momenta::QuadraticFamily{1, 1}, H1, 1, {-0.5, -1.0}, 9, 0.0);
  CHECK_THAT(g.back().g, WithinAbs(2.0 / 3.0, 1e-10));
  auto f = [](double z) { return (1 - z) * std::sqrt(-2 * z - 1) / 3; };
  for (const auto& s : g) CHECK_THAT(s.g, WithinAbs(f(s.r) - f(-0.5), 1e-9));
}

TEST_CASE("graph of the elliptic catenoid is arcsinh") {
  const auto g = generatrix_graph(momenta::InverseLinear{1.0}, E, 1, {0.1, 2.0}, 17, 0.0);
  REQUIRE(g.size() == 17);
  CHECK(g.front().r == 0.1);
  CHECK(g.back().r == 2.0);
  for (const auto& s : g) CHECK_THAT(s.g, WithinAbs(std::asinh(s.r) - std::asinh(0.1), 1e-10));
}

TEST_CASE("graph of the parabolic umbilic") {
  // u(v) = -eps R^2 / v up to a constant; anchored at u(1) = -1/2.
  const auto g = generatrix_graph(momenta::Linear{1.0}, P, 1, {1.0, 2.0}, 9, -0.5);
  for (const auto& s : g) CHECK_THAT(s.g, WithinAbs(-1.0 / s.r + 0.5, 1e-10));
  const auto gt = generatrix_graph(momenta::Linear{2.0}, P, -1, {1.0, 3.0}, 9, 0.0);
  for (const auto& s : gt) CHECK_THAT(s.g, WithinAbs(4.0 / s.r - 4.0, 1e-10));
}

TEST_CASE("samples are monotone with finite graph values") {
  const auto g = generatrix_graph(momenta::Power{2.0, 1.0}, H1, 1, {1.5, 3.0}, 33, 0.0);
  for (std::size_t i = 1; i < g.size(); ++i) {
    CHECK(g[i].r > g[i - 1].r);
    CHECK(g[i].s > g[i - 1].s);
    CHECK(std::isfinite(g[i].g));
  }
}

TEST_CASE("generatrix_graph error paths") {
  CHECK_THROWS_AS(generatrix_graph(momenta::Linear{1.0}, P, 1, {0.0, 1.0}, 5, 0.0), SingularIntegral);
  CHECK_THROWS_AS(generatrix_graph(momenta::Zero{}, H1, 1, {1.0, 2.0}, 5, 0.0), DomainError);
  CHECK_THROWS_AS(generatrix_graph(momenta::Linear{1.0}, H2, -1, {0.5, 2.0}, 5, 0.0), DomainError);
  CHECK_THROWS_AS(generatrix_graph(momenta::Linear{1.0}, E, 1, {0.5, 2.0}, 1, 0.0), DomainError);
  CHECK_THROWS_AS(generatrix_graph(momenta::Linear{1.0}, E, 1, {1.0, 1.0}, 5, 0.0), DomainError);
  CHECK_THROWS_AS(generatrix_graph(momenta::Linear{1.0}, H2, 1, {0.1, 0.5}, 5, 0.0), DomainError);
}

TEST_CASE("arc length") {
  CHECK_THAT(arc_length(momenta::Zero{}, E, 1, 1, 3), WithinAbs(2.0, 1e-13));
  CHECK_THAT(arc_length(momenta::Linear{1.0}, H2, -1, 0, 1 / std::sqrt(2.0)),
             WithinAbs(std::numbers::pi / 4, 1e-10));
  CHECK_THAT(arc_length(momenta::Linear{1.0}, H2, -1, 0, 1), WithinAbs(std::numbers::pi / 2, 1e-10));
  CHECK_THAT(arc_length(momenta::Constant{2.0}, P, 1, 1, 5), WithinAbs(2.0, 1e-13));
  CHECK(arc_length(momenta::Zero{}, E, 1, 3, 1) < 0);
  CHECK(arc_length(momenta::Zero{}, E, 1, 2, 2) == 0.0);
  CHECK_THROWS_AS(arc_length(momenta::Zero{}, H1, 1, 1, 2), DomainError);
}

TEST_CASE("invert_graph") {
  std::vector<GraphSample> line;
  for (int i = 0; i <= 10; ++i) line.push_back({1 + i / 10.0, 1 + i / 10.0, i / 10.0});
  CHECK_THAT(invert_graph(line, 1.5), WithinAbs(1.5, 1e-15));
  CHECK(invert_graph(line, 1.0) == 1.0);
  CHECK(invert_graph(line, 2.0) == 2.0);
  CHECK_THROWS_AS(invert_graph(line, 2.5), OutOfRange);
  CHECK_THROWS_AS(invert_graph(line, 0.5), OutOfRange);
  CHECK_THROWS_AS(invert_graph({line[0]}, 1.0), OutOfRange);

  const MomentumSpec m = momenta::InverseLinear{1.0};
  const auto g = generatrix_graph(m, E, 1, {0.1, 2.0}, 33, 0.0);
  const double target = std::asinh(1.0) - std::asinh(0.1);
  CHECK_THAT(invert_graph(g, target), WithinAbs(1.0, 1e-5));
  const GraphRefiner refine = [&](double r) {
    return std::pair{graph_value(g, m, E, 1, r), graph_integrand(m, E, 1, r)};
  };
  CHECK_THAT(invert_graph(g, target, refine), WithinAbs(1.0, 1e-12));

  std::vector<GraphSample> bumpy = {{0, 0, 0}, {1, 1, 1}, {2, 0.5, 2}};
  CHECK_THROWS_AS(invert_graph(bumpy, 0.7), NotMonotone);
  std::vector<GraphSample> flat = {{0, 0, 0}, {1, 1, 1}, {2, 1, 2}};
  CHECK_THROWS_AS(invert_graph(flat, 0.7), NotMonotone);

  std::vector<GraphSample> down;
  for (int i = 0; i <= 10; ++i) down.push_back({double(i), -2.0 * i, double(i)});
  CHECK_THAT(invert_graph(down, -7.0), WithinAbs(3.5, 1e-12));
}

TEST_CASE("property: arc length is additive on catalog momenta") {
  std::mt19937_64 rng(11);
  for (const auto& e : catalog()) {
    if (!e.spec) continue;
    const auto& s = *e.spec;
    const double a = s.r_interval.lo, b = s.r_interval.hi;
    std::uniform_real_distribution<double> u(a + 0.01 * (b - a), b - 0.01 * (b - a));
    for (int i = 0; i < 3; ++i) {
      const double mid = u(rng);
      const double whole = arc_length(s.momentum, s.cls, s.eps, a, b);
      const double parts =
          arc_length(s.momentum, s.cls, s.eps, a, mid) + arc_length(s.momentum, s.cls, s.eps, mid, b);
      INFO(e.key << " split at " << mid);
      CHECK(std::abs(whole - parts) <= 1e-9);
    }
  }
}

TEST_CASE("property: reconstructed generatrix has unit speed") {
  for (const auto& e : catalog()) {
    if (!e.spec) continue;
    const auto& s = *e.spec;
    const double expected = s.cls == H2 ? 1.0 : s.eps.real();
    const double h = 1e-4 * s.r_interval.width();
    for (double r : interior_points(s.r_interval, 5)) {
      INFO(e.key << " r=" << r);
      CHECK(std::abs(speed_form(s.cls, increment(s, r, h)) - expected) <= 1e-6);
    }
  }
}

TEST_CASE("property: graph slope equals the integrand") {
  for (const auto& e : catalog()) {
    if (!e.spec) continue;
    const auto& s = *e.spec;
    const auto g = generatrix_graph(s.momentum, s.cls, s.eps, s.r_interval, 17, s.anchor);
    for (std::size_t i = 2; i + 2 < g.size(); ++i) {
      const double r = 0.5 * (g[i].r + g[i + 1].r);
      const double h = 1e-5 * s.r_interval.width();
      const double up = graph_value(g, s.momentum, s.cls, s.eps, r + h);
      const double dn = graph_value(g, s.momentum, s.cls, s.eps, r - h);
      const double direct = graph_integrand(s.momentum, s.cls, s.eps, r);
      INFO(e.key << " r=" << r);
      CHECK(std::abs((up - dn) / (2 * h) - direct) <= 1e-6 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("property: invert_graph undoes generatrix_graph") {
  for (const auto& e : catalog()) {
    if (!e.spec) continue;
    const auto& s = *e.spec;
    const auto g = generatrix_graph(s.momentum, s.cls, s.eps, s.r_interval, 33, s.anchor);
    bool monotone = true;
    for (std::size_t i = 1; i < g.size(); ++i)
      if (!((g[i].g - g[i - 1].g) * (g[1].g - g[0].g) > 0)) monotone = false;
    if (!monotone) continue;
    const GraphRefiner refine = [&](double r) {
      return std::pair{graph_value(g, s.momentum, s.cls, s.eps, r),
                       graph_integrand(s.momentum, s.cls, s.eps, r)};
    };
    for (double r : interior_points(s.r_interval, 7)) {
      const double gq = graph_value(g, s.momentum, s.cls, s.eps, r);
      INFO(e.key << " r=" << r);
      CHECK(std::abs(invert_graph(g, gq, refine) - r) <= 1e-7 * std::max(1.0, std::abs(r)));
    }
  }
}
