// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <random>
#include <sstream>

#include "lrotor/catalog.hpp"
#include "lrotor/io.hpp"

using namespace lrotor;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("real formatting round-trips") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(4) == "4");
  CHECK(format_real(0.1) == "0.10000000000000001");
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) * std::pow(10.0, i % 40 - 20);
    CHECK(std::strtod(format_real(x).c_str(), nullptr) == x);
  }
}

TEST_CASE("momentum JSON round trip") {
  const std::vector<MomentumSpec> ms = {momenta::Zero{},
                                        momenta::Constant{1.25},
                                        momenta::Linear{2.0},
                                        momenta::InverseLinear{0.5},
                                        momenta::Power{-2.0, 1.5},
                                        momenta::QuadraticFamily{1.0, -2.0},
                                        momenta::CubicFamily{-1.0, 2.0}};
  for (const auto& m : ms) {
    const Json j = to_json(m);
    INFO(j.dump());
    const auto back = momentum_from_json(Json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(describe(back) == describe(m));
  }
  CHECK(to_json(momenta::Linear{2.0}) == Json::parse(R"({"variant":"linear","R":2.0})"));
  momenta::Custom c;
  c.value = [](double r) { return r; };
  c.label = "id";
  CHECK(to_json(MomentumSpec{c}) == Json::parse(R"({"variant":"custom","label":"id"})"));
}

TEST_CASE("momentum JSON errors") {
  for (const char* bad : {R"([1, 2])", R"({})", R"({"variant": 3})", R"({"variant": "spline"})",
                          R"({"variant": "custom", "label": "x"})", R"({"variant": "linear"})",
                          R"({"variant": "linear", "R": "2"})", R"({"variant": "linear", "R": 0})",
                          R"({"variant": "power", "q": 0, "a": 1})", R"({"variant": "cubic_family", "c": 1})"}) {
    INFO(bad);
    CHECK_THROWS_AS(momentum_from_json(Json::parse(bad)), ConfigError);
  }
}

TEST_CASE("surface spec JSON") {
  const auto& spec = *find_entry("catenoid-3").spec;
  const Json j = to_json(spec);
  CHECK(j.at("class") == "elliptic");
  CHECK(j.at("epsilon") == -1);
  const auto back = surface_spec_from_json(Json::parse(j.dump()));
  CHECK(to_json(back) == j);
  CHECK(back.r_interval.lo == spec.r_interval.lo);
  CHECK(back.anchor == spec.anchor);

  const auto nested = surface_spec_from_json(Json::parse(
      R"({"class":"parabolic","epsilon":1,"r_interval":[0.5,2],"momentum":{"variant":"inverse_linear","a":1}})"));
  CHECK(nested.cls == RotationClass::Parabolic);
  CHECK(nested.anchor == 0.0);

  for (const char* bad :
       {R"({"variant":"zero","epsilon":1,"r_interval":[1,2]})",
        R"({"variant":"zero","class":"elliptic","epsilon":2,"r_interval":[1,2]})",
        R"({"variant":"zero","class":"conic","epsilon":1,"r_interval":[1,2]})",
        R"({"variant":"zero","class":"elliptic","epsilon":1,"r_interval":[1]})",
        R"({"variant":"zero","class":"elliptic","epsilon":1,"r_interval":[2,1]})",
        R"({"variant":"zero","class":"hyperbolic1","epsilon":1,"r_interval":[1,2]})",
        R"({"variant":"zero","class":"hyperbolic2","epsilon":1,"r_interval":[1,2]})",
        R"({"variant":"zero","class":"elliptic","epsilon":1,"r_interval":[1,2],"anchor":"x"})"}) {
    INFO(bad);
    CHECK_THROWS_AS(surface_spec_from_json(Json::parse(bad)), ConfigError);
  }
}

TEST_CASE("quadric and classification JSON") {
  const auto c = classify_cubic(1, -2, 1, RotationClass::Elliptic);
  CHECK(to_json(c) == Json::parse(R"({"family":"III-a","a":1.0,"b":1.0,"epsilon":1})"));
  CHECK(to_json(CubicClassification{UmbilicMarker{2.0}}) == Json::parse(R"({"family":"umbilic","R":2.0})"));
  CHECK(to_json(CubicClassification{PlaneMarker{}}) == Json::parse(R"({"family":"plane"})"));
  CHECK(to_json(CubicClassification{ConeMarker{0.5}}) == Json::parse(R"({"family":"cone","K0":0.5})"));

  for (const auto& e : catalog()) {
    if (!e.quadric) continue;
    const Json j = to_json(*e.quadric);
    const auto back = quadric_spec_from_json(j);
    CHECK(to_json(back) == j);
  }
  const auto p = to_json(find_entry("quadric-IV-b").quadric.value());
  CHECK(p.contains("alpha"));
  CHECK_FALSE(p.contains("a"));
  CHECK(to_json(find_entry("quadric-II-d").quadric.value()).contains("d"));
  CHECK_THROWS_AS(quadric_spec_from_json(Json::parse(R"({"family":"I-e"})")), ConfigError);
  CHECK_THROWS_AS(quadric_spec_from_json(Json::parse(R"({"family":"I-a","a":-1})")), ConfigError);
  CHECK_THROWS_AS(quadric_spec_from_json(Json::parse(R"({"family":"IV-a","epsilon":1})")), ConfigError);
  CHECK_THROWS_AS(quadric_spec_from_json(Json::parse(R"("I-a")")), ConfigError);
}

TEST_CASE("verification report output") {
  VerificationReport r;
  r.name = "catenoid-1";
  r.nr = 16;
  r.nt = 8;
  r.max_curvature_error = 1.5e-7;
  r.max_relation_residual = 0;
  r.max_implicit_residual = 2.25e-9;
  r.passed = true;
  r.notes = {"a note"};
  CHECK(summary_line(r) == "PASS catenoid-1 curvature=1.500e-07 relation=0.000e+00 implicit=2.250e-09");
  r.passed = false;
  CHECK(summary_line(r).rfind("FAIL catenoid-1 ", 0) == 0);
  const Json j = to_json(r);
  CHECK(j.at("grid") == Json::parse("[16, 8]"));
  CHECK(j.at("passed") == false);
  CHECK(j.at("notes") == Json::parse(R"(["a note"])"));
  for (const char* k : {"name", "max_curvature_error", "max_relation_residual", "max_relation_residual_numeric",
                        "max_implicit_residual", "causal_consistency"})
    CHECK(j.contains(k));
}

TEST_CASE("OBJ output") {
  Mesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0.5}};
  m.faces = {{0, 1, 2}};
  std::ostringstream os;
  write_obj(os, m);
  CHECK(os.str() == "v 0 0 0\nv 1 0 0\nv 0 1 0.5\nf 1 2 3\n");

  const auto full = mesh(*find_entry("catenoid-1").spec, 5, 4);
  std::ostringstream a, b;
  write_obj(a, full);
  write_obj(b, mesh(*find_entry("catenoid-1").spec, 5, 4));
  CHECK(a.str() == b.str());
  const auto ls = lines(a.str());
  CHECK(ls.size() == full.vertices.size() + full.faces.size());
  CHECK(ls.front().rfind("v ", 0) == 0);
  CHECK(ls.back().rfind("f ", 0) == 0);
}

TEST_CASE("CSV output") {
  std::ostringstream m;
  write_momentum_csv(m, {1.0, 2.0}, {1.0, 4.0});
  CHECK(m.str() == "r,K\n1,1\n2,4\n");

  std::ostringstream g;
  write_graph_csv(g, {{1.0, 0.5, 0.0}, {2.0, 0.75, 1.25}});
  CHECK(g.str() == "r,g,s\n1,0.5,0\n2,0.75,1.25\n");

  const auto& e = find_entry("umbilic-hyperbolic2");
  const auto model = e.build();
  const auto msh = mesh(*e.spec, 4, 3);
  const auto rows = curvature_table(model, msh, e.spec);
  CHECK(rows.size() == 12);
  for (const auto& row : rows) {
    CHECK(row.k_m == Catch::Approx(row.k_p));
    CHECK(row.W == metric_determinant_closed(*e.spec, row.r));
    CHECK(row.H == Catch::Approx(-e.eps.real() * row.k_m));
  }
  std::ostringstream c;
  write_curvature_csv(c, rows);
  const auto ls = lines(c.str());
  CHECK(ls.front() == "r,t,k_m,k_p,H,K_G,W");
  CHECK(ls.size() == 13);

  const auto& cyl = find_entry("cylinder-elliptic");
  const auto cm = cyl.build();
  Mesh grid = mesh_grid(cm.point, cm.r_interval, cm.t_range, 4, 4);
  for (const auto& row : curvature_table(cm, grid, std::nullopt)) CHECK(row.W < 0);
}
