// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "lrotor/catalog.hpp"
#include "lrotor/quadrics.hpp"

using namespace lrotor;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using QF = QuadricFamily;

namespace {

QuadricSpec quadric(QF f, double x, double y, int eps) {
  QuadricSpec q;
  q.family = f;
  q.a = q.alpha = x;
  q.b = q.beta = y;
  q.d = x;
  q.eps = eps;
  return q;
}

/// Admissible quadrics on a 3x3 parameter grid with both signs. The second
/// parameter never equals the first, where some families become umbilic.
std::vector<QuadricSpec> quadric_grid() {
  std::vector<QuadricSpec> out;
  for (QF f : kAllQuadricFamilies)
    for (int e : {1, -1})
      for (double x : {0.5, 1.0, 2.0})
        for (double y : {0.6, 1.3, 2.5}) {
          const auto q = quadric(f, x, y, e);
          try {
            validate(q);
          } catch (const DomainError&) {
            continue;
          }
          out.push_back(q);
        }
  return out;
}

std::optional<Interval> first_domain(const QuadricSpec& q) {
  try {
    return validity_domain(quadric_momentum(q), family_class(q.family), q.eps).front();
  } catch (const EmptyDomain&) {
    return std::nullopt;
  }
}

bool same_shape(const QuadricSpec& x, const QuadricSpec& y, double tol) {
  auto close = [tol](double u, double v) { return std::abs(u - v) <= tol * std::max(1.0, std::abs(v)); };
  if (x.family != y.family || x.eps != y.eps) return false;
  if (is_parabolic_family(x.family)) return close(x.alpha, y.alpha) && close(x.beta, y.beta);
  if (is_paraboloid(x.family)) return close(x.d, y.d);
  return close(x.a, y.a) && close(x.b, y.b);
}

}  // namespace

TEST_CASE("family tags") {
  for (QF f : kAllQuadricFamilies) CHECK(quadric_family_from_string(to_string(f)) == f);
  CHECK_THROWS_AS(quadric_family_from_string("V-a"), ConfigError);
  CHECK(family_class(QF::I_c) == RotationClass::Hyperbolic1);
  CHECK(family_class(QF::II_a) == RotationClass::Hyperbolic2);
  CHECK(family_class(QF::III_d) == RotationClass::Elliptic);
  CHECK(family_class(QF::IV_b) == RotationClass::Parabolic);
}

TEST_CASE("quadric parameter validation") {
  CHECK_THROWS_AS(validate(quadric(QF::I_a, 0.0, 1.0, 1)), DomainError);
  CHECK_THROWS_AS(validate(quadric(QF::III_d, -1.0, 1.0, 1)), DomainError);
  CHECK_THROWS_AS(validate(quadric(QF::IV_b, 1.0, -1.0, 1)), DomainError);
  CHECK_THROWS_AS(validate(quadric(QF::IV_a, 1.0, 1.0, 1)), DomainError);
  CHECK_THROWS_AS(validate(quadric(QF::IV_c, 1.0, 1.0, -1)), DomainError);
  CHECK_THROWS_AS(validate(quadric(QF::II_b, 1.0, 1.0, 1)), DomainError);
  CHECK_NOTHROW(validate(quadric(QF::IV_b, 1.0, 0.0, 1)));
}

TEST_CASE("squared momenta") {
  CHECK_THAT(momentum_squared(quadric(QF::III_a, 1, 1, 1), 0.5), WithinRel(0.5, 1e-15));
  CHECK_THAT(momentum_squared(quadric(QF::I_d, 1, 1, 1), std::sqrt(2.0)), WithinRel(2.0, 1e-14));
  CHECK_THAT(momentum_squared(quadric(QF::IV_c, 1, 1, 1), 1.0), WithinRel(0.5, 1e-15));
  CHECK_THROWS_AS(momentum_squared(quadric(QF::III_a, 1, 1, 1), 0.8), DomainError);
  CHECK_THROWS_AS(momentum_squared(quadric(QF::I_d, 1, 1, 1), 1.0), DomainError);
}

TEST_CASE("Weingarten coefficients") {
  CHECK(weingarten_coefficient(quadric(QF::I_a, 1, 2, 1)) == -0.25);
  CHECK(weingarten_coefficient(quadric(QF::II_d, 3, 1, -1)) == 9.0);
  CHECK(weingarten_coefficient(quadric(QF::IV_a, 2, 1, -1)) == 4.0);
  CHECK(weingarten_coefficient(quadric(QF::IV_b, 2, 1, 1)) == -4.0);
  CHECK(weingarten_coefficient(quadric(QF::III_b, 2, 2, -1)) == 4.0);
  CHECK(weingarten_coefficient(quadric(QF::I_d, 2, 1, 1)) == -4.0);
}

TEST_CASE("cubic classification") {
  const auto a = std::get<QuadricSpec>(classify_cubic(1, -2, 1, RotationClass::Elliptic));
  CHECK(a.family == QF::III_a);
  CHECK_THAT(a.a, WithinRel(1.0, 1e-15));
  CHECK_THAT(a.b, WithinRel(1.0, 1e-15));
  const auto b = std::get<QuadricSpec>(classify_cubic(-1, 2, 1, RotationClass::Hyperbolic1));
  CHECK(b.family == QF::I_a);
  CHECK_THAT(b.a, WithinRel(1.0, 1e-15));
  CHECK_THAT(b.b, WithinRel(1.0, 1e-15));
  CHECK(std::get<UmbilicMarker>(classify_cubic(1, 0, 1, RotationClass::Elliptic)).R == 1.0);
  CHECK(std::get<UmbilicMarker>(classify_cubic(4, 0, -1, RotationClass::Hyperbolic1)).R == 2.0);
  CHECK(std::get<ConeMarker>(classify_cubic(0, 4, 1, RotationClass::Elliptic)).K0 == 0.5);
  // Equal semi-axes give c = 0: the umbilic hyperboloid of radius a.
  for (QF f : {QF::I_b, QF::II_a, QF::III_b, QF::III_c}) {
    const auto q = quadric(f, 1.5, 1.5, f == QF::II_a || f == QF::III_b ? -1 : 1);
    CHECK(cubic_c(q) == 0.0);
    CHECK_THAT(std::get<UmbilicMarker>(classify_cubic(weingarten_coefficient(q), 0, q.eps, family_class(f))).R,
               WithinRel(1.5, 1e-15));
  }

  // Boundary values map to paraboloids, within the tolerance knob.
  CHECK(std::get<QuadricSpec>(classify_cubic(1, -1, 1, RotationClass::Elliptic)).family == QF::III_d);
  CHECK(std::get<QuadricSpec>(classify_cubic(1, -1 + 1e-13, 1, RotationClass::Elliptic)).family == QF::III_d);
  CHECK(std::get<QuadricSpec>(classify_cubic(1, -1 + 1e-6, 1, RotationClass::Elliptic)).family == QF::III_c);
  CHECK(std::get<QuadricSpec>(classify_cubic(1, -1 + 1e-6, 1, RotationClass::Elliptic, {1e-5})).family ==
        QF::III_d);
  CHECK(std::get<QuadricSpec>(classify_cubic(-4, 1, 1, RotationClass::Hyperbolic1)).d == 2.0);
  CHECK(std::get<QuadricSpec>(classify_cubic(1, 1, -1, RotationClass::Hyperbolic2)).family == QF::II_d);

  CHECK_THROWS_AS(classify_cubic(1, 2, 1, RotationClass::Hyperbolic1), Inadmissible);
  CHECK_THROWS_AS(classify_cubic(1, 0.5, 1, RotationClass::Hyperbolic2), Inadmissible);
  CHECK_THROWS_AS(classify_cubic(-1, 0.5, -1, RotationClass::Hyperbolic2), Inadmissible);
  CHECK_THROWS_AS(classify_cubic(-1, 0, 1, RotationClass::Elliptic), Inadmissible);
  CHECK_THROWS_AS(classify_cubic(0, -1, 1, RotationClass::Elliptic), Inadmissible);
  CHECK_THROWS_AS(classify_cubic(NAN, 1, 1, RotationClass::Elliptic), Inadmissible);
}

TEST_CASE("classification of catalog momenta") {
  CHECK(std::holds_alternative<PlaneMarker>(classify(momenta::Zero{}, 1, RotationClass::Elliptic)));
  CHECK(std::holds_alternative<PlaneMarker>(classify(momenta::Constant{0.0}, 1, RotationClass::Elliptic)));
  CHECK(std::get<ConeMarker>(classify(momenta::Constant{2.0}, 1, RotationClass::Elliptic)).K0 == 2.0);
  CHECK(std::get<UmbilicMarker>(classify(momenta::Linear{3.0}, 1, RotationClass::Elliptic)).R == 3.0);
  CHECK(std::get<QuadricSpec>(classify(momenta::CubicFamily{1, -2}, 1, RotationClass::Elliptic)).family ==
        QF::III_a);
  CHECK_THROWS_AS(classify(momenta::InverseLinear{1.0}, 1, RotationClass::Elliptic), Inadmissible);
}

TEST_CASE("canonical equations") {
  CHECK(quadric_implicit_residual(quadric(QF::III_b, 1, 1, 1), {std::sqrt(2.0), 0, 1}) ==
        Catch::Approx(0).margin(1e-15));
  CHECK(quadric_implicit_residual(quadric(QF::I_d, 1, 1, 1), {2, 0, 2}) == 0.0);
  CHECK(quadric_implicit_residual(quadric(QF::III_a, 1, 1, 1), {0, 0, 0}) == -1.0);

  // Surface generated from CubicFamily(1, 1), parabolic, eps = +1, lies on IV-c.
  const auto q = quadric(QF::IV_c, 1, 1, 1);
  SurfaceSpec spec{RotationClass::Parabolic, 1, momenta::CubicFamily{1, 1}, {0.5, 2.0}, 0.0};
  spec.anchor = quadric_generatrix(q, 0.5);
  const auto m = mesh(spec, 16, 16);
  double worst = 0;
  for (const auto& v : m.vertices)
    worst = std::max(worst, std::abs(quadric_implicit_residual(q, v)) / quadric_implicit_scale(q, v));
  CHECK(worst <= 1e-6);
  CHECK(quadric_implicit_scale(q, {0, 0, 0}) == 1.0);
}

TEST_CASE("causal regions") {
  CHECK(causal_region(quadric(QF::I_a, 1, 1, 1), 1.0) == CausalRegion::Spacelike);
  CHECK(causal_region(quadric(QF::I_a, 1, 1, 1), 0.6) == CausalRegion::Timelike);
  CHECK(causal_region(quadric(QF::IV_a, 1.3, 0.2, -1), 7.0) == CausalRegion::AlwaysTimelike);
  CHECK(causal_region(quadric(QF::IV_c, 1.3, 0.2, 1), 7.0) == CausalRegion::AlwaysSpacelike);
  CHECK(causal_region(quadric(QF::III_d, 1, 1, 1), 0.5) == CausalRegion::Spacelike);
  CHECK(causal_region(quadric(QF::III_d, 1, 1, 1), 1.5) == CausalRegion::Timelike);
  CHECK(causal_region(quadric(QF::I_b, 1, 2, 1), 3.0) == CausalRegion::AlwaysSpacelike);
  CHECK(causal_region(quadric(QF::II_c, 1, 2, -1), 3.0) == CausalRegion::AlwaysTimelike);
  CHECK_THROWS_AS(causal_region(quadric(QF::III_d, 1, 1, 1), 1.0), Degenerate);
  CHECK_THROWS_AS(causal_region(quadric(QF::I_d, 1, 1, 1), -1.0), Degenerate);
  CHECK(to_string(CausalRegion::AlwaysTimelike) == "always-timelike");
}

TEST_CASE("property: classification round trip") {
  std::set<QF> seen;
  for (const auto& q : quadric_grid()) {
    INFO(to_string(q.family) << " eps=" << q.eps.value() << " a=" << q.a << " b=" << q.b);
    const double mu = weingarten_coefficient(q), c = cubic_c(q);
    if (!first_domain(q)) {
      CHECK_THROWS_AS(classify_cubic(mu, c, q.eps, family_class(q.family)), Inadmissible);
      continue;
    }
    const auto out = classify_cubic(mu, c, q.eps, family_class(q.family));
    REQUIRE(std::holds_alternative<QuadricSpec>(out));
    CHECK(same_shape(std::get<QuadricSpec>(out), q, 1e-10));
    seen.insert(q.family);
  }
  CHECK(seen.size() == 16);
}

TEST_CASE("property: quadric momenta are cubic-family members") {
  for (const auto& q : quadric_grid()) {
    const auto dom = first_domain(q);
    if (!dom) continue;
    const double mu = weingarten_coefficient(q), c = cubic_c(q);
    const double hi = std::min(dom->hi, dom->lo + 5);
    const SurfaceSpec spec{family_class(q.family), q.eps, quadric_momentum(q), {dom->lo, hi}, 0.0};
    for (int i = 1; i < 40; ++i) {
      const double r = dom->lo + (hi - dom->lo) * i / 40;
      INFO(to_string(q.family) << " eps=" << q.eps.value() << " r=" << r);
      CHECK_THAT(std::sqrt(momentum_squared(q, r)), WithinRel(eval(momenta::CubicFamily{mu, c}, r), 1e-10));
      const auto k = curvatures_closed(spec, r);
      CHECK(std::abs(k.k_m - mu * k.k_p * k.k_p * k.k_p) <= 1e-10 * std::max(1.0, std::abs(k.k_m)));
    }
  }
}

TEST_CASE("property: I-a and II-c share their canonical equation") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 3), s(0.3, 3);
  for (int i = 0; i < 200; ++i) {
    const double a = s(rng), b = s(rng);
    const AmbientPoint p{u(rng), u(rng), u(rng)};
    CHECK(std::abs(quadric_implicit_residual(quadric(QF::I_a, a, b, 1), p) -
                   quadric_implicit_residual(quadric(QF::II_c, a, b, -1), p)) <= 1e-12);
  }
}

TEST_CASE("property: parabolic families tend to umbilics as beta vanishes") {
  for (QF f : {QF::IV_a, QF::IV_b, QF::IV_c, QF::IV_d})
    for (int e : {1, -1})
      for (double alpha : {0.5, 1.0, 2.0}) {
        const auto q = quadric(f, alpha, 1e-6, e);
        try {
          validate(q);
          momentum_squared(q, 1.0);
        } catch (const DomainError&) {
          continue;
        }
        for (double r : {0.5, 1.0, 1.5, 2.0})
          CHECK_THAT(std::sqrt(momentum_squared(q, r)), WithinAbs(eval(momenta::Linear{alpha}, r), 1e-8));
      }
}

TEST_CASE("property: causal character agrees with the region inequalities") {
  std::mt19937_64 rng(7);
  int families = 0;
  for (const auto& e : catalog()) {
    if (e.group != "quadric") continue;
    const auto& q = *e.quadric;
    const auto dom = *first_domain(q);
    const double top = std::min(dom.hi, dom.lo + 5);
    const double pad = 0.01 * (top - dom.lo);
    SurfaceSpec spec = *e.spec;
    spec.r_interval = {dom.lo + pad, top - pad};
    const Surface s(spec);
    const double hr = 1e-4 * spec.r_interval.width();
    std::uniform_real_distribution<double> ur(spec.r_interval.lo + 2 * hr, spec.r_interval.hi - 2 * hr),
        ut(-1.5, 1.5);
    for (int i = 0; i < 100; ++i) {
      const double r = ur(rng), t = ut(rng);
      const auto W = fundamental_forms_numeric(s.local_chart(r), r, t, hr, 1e-3).W;
      INFO(e.key << " r=" << r << " t=" << t << " W=" << W);
      const bool spacelike = causal_character(spec, r) == CausalCharacter::Spacelike;
      CHECK((W > 0) == spacelike);
      CHECK(is_spacelike(causal_region(q, r)) == spacelike);
    }
    ++families;
  }
  CHECK(families >= 16);
}
