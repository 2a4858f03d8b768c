// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "lrotor/catalog.hpp"

using namespace lrotor;

TEST_CASE("catalog contents") {
  std::map<std::string, int> groups;
  std::set<std::string> keys;
  for (const auto& e : catalog()) {
    ++groups[e.group];
    CHECK(keys.insert(e.key).second);
    CHECK(e.build);
    if (e.spec) CHECK_NOTHROW(validate(*e.spec));
  }
  CHECK(groups["plane"] >= 3);
  CHECK(groups["cylinder"] == 3);
  CHECK(groups["cone"] == 7);
  CHECK(groups["umbilic"] >= 4);
  CHECK(groups["zero-H"] == 7);
  CHECK(groups["hopf"] >= 5);
  CHECK(groups["quadratic"] >= 1);
  std::set<QuadricFamily> fams;
  for (const auto& e : catalog())
    if (e.quadric) fams.insert(e.quadric->family);
  CHECK(fams.size() == 16);
  for (const char* k : {"catenoid-1", "catenoid-2", "catenoid-3", "catenoid-4", "catenoid-5", "enneper-2",
                        "enneper-3", "quadric-I-a", "quadric-IV-d", "cylinder-elliptic"})
    CHECK(keys.count(k) == 1);
}

TEST_CASE("named lookup") {
  CHECK(find_entry("enneper-3").cls == RotationClass::Parabolic);
  CHECK(find_entry("catenoid-5").eps == CausalSign(-1));
  CHECK_THROWS_AS(find_entry("catenoid-9"), ConfigError);
  CHECK_THROWS_AS(find_entry(""), ConfigError);
}

TEST_CASE("closed graphs match the anchor") {
  for (const auto& e : catalog()) {
    if (!e.closed_graph || !e.spec) continue;
    INFO(e.key);
    CHECK(e.closed_graph(e.spec->r_interval.lo) == e.spec->anchor);
  }
}

TEST_CASE("property: every catalog surface verifies at 16x16") {
  for (const auto& e : catalog()) {
    const auto r = verify_entry(e);
    INFO(e.key << ": curvature=" << r.max_curvature_error << " relation=" << r.max_relation_residual
               << " implicit=" << r.max_implicit_residual);
    CHECK(r.passed);
    CHECK(r.nr == 16);
    if (e.relation) CHECK(r.max_relation_residual <= 1e-6);
  }
}
