// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>

#include "lrotor/ode.hpp"
#include "lrotor/weingarten.hpp"

using namespace lrotor;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("integrator reproduces the exponential with dense output") {
  OdeOptions opt;
  opt.atol = opt.rtol = 1e-10;
  const auto sol = integrate_ode([](double, double y) { return y; }, 0.0, 1.0, 2.0, opt);
  CHECK(sol.r_reached == 2.0);
  CHECK_FALSE(sol.exit_boundary);
  CHECK(sol.nodes_r.size() == sol.nodes_y.size());
  CHECK(sol.nodes_r.size() == sol.steps.size() + 1);
  for (std::size_t i = 0; i < sol.nodes_r.size(); ++i)
    CHECK_THAT(sol.nodes_y[i], WithinRel(std::exp(sol.nodes_r[i]), 1e-8));
  for (double r = 0; r <= 2; r += 0.013) CHECK_THAT(sol(r), WithinRel(std::exp(r), 1e-8));
  CHECK_THROWS_AS(sol(2.5), DomainError);
  CHECK_THROWS_AS(sol(-0.1), DomainError);
}

TEST_CASE("integrator runs backwards") {
  const auto sol = integrate_ode([](double r, double) { return std::cos(r); }, 3.0, std::sin(3.0), 0.5);
  CHECK(sol.r_reached == 0.5);
  for (double r = 0.5; r <= 3; r += 0.1) CHECK_THAT(sol(r), WithinAbs(std::sin(r), 1e-7));
}

TEST_CASE("steps never exceed a sixteenth of the span") {
  const auto sol = integrate_ode([](double, double) { return 1.0; }, 0.0, 0.0, 8.0);
  for (const auto& s : sol.steps) CHECK(s.h <= 0.5 + 1e-15);
  CHECK(sol.steps.size() >= 16);
}

TEST_CASE("zero span returns the initial value") {
  const auto sol = integrate_ode([](double, double y) { return y; }, 1.0, 2.0, 1.0);
  CHECK(sol(1.0) == 2.0);
  CHECK(sol.steps.empty());
}

TEST_CASE("integration stops at the admissible boundary") {
  OdeOptions opt;
  opt.valid = [](double, double y) { return y < 0.5; };
  const auto sol = integrate_ode([](double, double) { return 1.0; }, 0.0, 0.0, 2.0, opt);
  REQUIRE(sol.exit_boundary);
  CHECK_THAT(*sol.exit_boundary, WithinAbs(0.5, 1e-10));
  CHECK(*sol.exit_boundary <= 0.5);
}

TEST_CASE("integrator error paths") {
  OdeOptions opt;
  opt.valid = [](double, double y) { return y > 0; };
  try {
    integrate_ode([](double, double) { return 1.0; }, 1.0, -1.0, 2.0, opt);
    FAIL("expected DomainExit");
  } catch (const DomainExit& e) {
    CHECK(e.last_valid_r() == 1.0);
  }
  CHECK_THROWS_AS(integrate_ode([](double, double y) { return y * y; }, 0.0, 1.0, 2.0), StepFailure);
  CHECK_THROWS_AS(integrate_ode([](double, double y) { return y; }, 0.0, NAN, 1.0), StepFailure);
  CHECK_THROWS_AS(integrate_ode([](double, double) { return NAN; }, 0.0, 1.0, 1.0), StepFailure);
  OdeOptions few;
  few.max_steps = 3;
  few.hmax = 1e-3;
  CHECK_THROWS_AS(integrate_ode([](double, double y) { return y; }, 0.0, 1.0, 1.0, few), StepFailure);
}

TEST_CASE("solve_ode on closed-form relations") {
  const auto lin = solve_ode(relations::LinearProportional{2.0}, 1.0, 1.0, 2.0, 1e-10);
  CHECK_THAT(eval(lin.momentum, 2.0), WithinAbs(4.0, 1e-8));
  CHECK_THAT(deriv(lin.momentum, 1.5), WithinAbs(3.0, 1e-8));

  const auto quad = solve_ode(relations::Quadratic{1.0}, 1.0, 0.5, 2.0, 1e-10);
  CHECK_THAT(eval(quad.momentum, 2.0), WithinAbs(2.0 / 3.0, 1e-8));

  const auto cub = solve_ode(relations::Cubic{1.0}, 1.0, 1 / std::sqrt(2.0), 2.0, 1e-10);
  CHECK_THAT(eval(cub.momentum, 2.0), WithinAbs(2 / std::sqrt(5.0), 1e-8));

  const auto h0 = solve_ode(relations::ZeroMeanCurvature{}, 1.0, 1.0, 4.0, 1e-10);
  CHECK_THAT(eval(h0.momentum, 4.0), WithinAbs(0.25, 1e-8));
}

TEST_CASE("solve_ode reports the validity boundary") {
  // K = r leaves the hyperbolic2 domain at K = 1.
  const auto s = solve_ode(relations::LinearProportional{1.0}, 0.5, 0.5, 2.0, 1e-10,
                           std::pair{RotationClass::Hyperbolic2, CausalSign(-1)});
  REQUIRE(s.exit_boundary);
  CHECK_THAT(*s.exit_boundary, WithinAbs(1.0, 1e-9));
  CHECK_THAT(eval(s.momentum, 0.9), WithinAbs(0.9, 1e-9));
  CHECK_THROWS_AS(eval(s.momentum, 1.5), DomainError);
}

TEST_CASE("solve_ode argument errors") {
  CHECK_THROWS_AS(solve_ode(relations::ZeroMeanCurvature{}, 0.0, 1.0, 2.0, 1e-8), DomainError);
  CHECK_THROWS_AS(solve_ode(relations::ZeroMeanCurvature{}, 1.0, 1.0, -2.0, 1e-8), DomainError);
  CHECK_THROWS_AS(solve_ode(relations::ZeroMeanCurvature{}, 1.0, 1.0, 2.0, 0.0), DomainError);
  CHECK_THROWS_AS(solve_ode(relations::ZeroMeanCurvature{}, 1.0, 0.5, 2.0, 1e-8,
                            std::pair{RotationClass::Hyperbolic1, CausalSign(1)}),
                  DomainExit);
  CHECK_THROWS_AS(solve_ode(relations::Custom{[](double km, double) { return km; }, nullptr, "bare"}, 1.0,
                            1.0, 2.0, 1e-8),
                  UnsolvableForDerivative);
}
