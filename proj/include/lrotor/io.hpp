// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// JSON forms of momenta, surface specs, classifications and reports; CSV and
// Wavefront OBJ writers. Numbers are printed with fixed formats so output is
// byte-for-byte reproducible.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <variant>

#include "json.hpp"

#include "lrotor/errors.hpp"
#include "lrotor/momentum.hpp"
#include "lrotor/quadrature.hpp"
#include "lrotor/quadrics.hpp"
#include "lrotor/surface.hpp"
#include "lrotor/verify.hpp"
#include "lrotor/weingarten.hpp"

namespace lrotor {

using Json = nlohmann::json;

/// %.17g: round-trips every double. Negative zero prints as 0.
inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
  return buf;
}

namespace detail {

inline double json_number(const Json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(std::string("field '") + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(std::string("field '") + key + "' must be finite");
  return x;
}

inline std::string json_string(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw ConfigError(std::string("missing string field '") + key + "'");
  return j.at(key).get<std::string>();
}

inline CausalSign json_sign(const Json& j, const char* key) {
  const double e = json_number(j, key);
  if (e != 1 && e != -1) throw ConfigError(std::string("field '") + key + "' must be 1 or -1");
  return static_cast<int>(e);
}

}  // namespace detail

inline Json to_json(const MomentumSpec& m) {
  return std::visit(
      detail::overloaded{
          [](const momenta::Zero&) { return Json{{"variant", "zero"}}; },
          [](const momenta::Constant& x) { return Json{{"variant", "constant"}, {"K0", x.value}}; },
          [](const momenta::Linear& x) { return Json{{"variant", "linear"}, {"R", x.radius}}; },
          [](const momenta::InverseLinear& x) { return Json{{"variant", "inverse_linear"}, {"a", x.a}}; },
          [](const momenta::Power& x) { return Json{{"variant", "power"}, {"q", x.q}, {"a", x.a}}; },
          [](const momenta::QuadraticFamily& x) {
            return Json{{"variant", "quadratic_family"}, {"mu", x.mu}, {"c", x.c}};
          },
          [](const momenta::CubicFamily& x) {
            return Json{{"variant", "cubic_family"}, {"mu", x.mu}, {"c", x.c}};
          },
          [](const momenta::Custom& x) -> Json {
            return Json{{"variant", "custom"}, {"label", x.label}};
          },
      },
      m);
}

/// Parses a momentum object; custom momenta cannot be read back.
inline MomentumSpec momentum_from_json(const Json& j) {
  using detail::json_number;
  if (!j.is_object()) throw ConfigError("momentum must be a JSON object");
  const std::string v = detail::json_string(j, "variant");
  MomentumSpec m;
  if (v == "zero")
    m = momenta::Zero{};
  else if (v == "constant")
    m = momenta::Constant{json_number(j, "K0")};
  else if (v == "linear")
    m = momenta::Linear{json_number(j, "R")};
  else if (v == "inverse_linear")
    m = momenta::InverseLinear{json_number(j, "a")};
  else if (v == "power")
    m = momenta::Power{json_number(j, "q"), json_number(j, "a")};
  else if (v == "quadratic_family")
    m = momenta::QuadraticFamily{json_number(j, "mu"), json_number(j, "c")};
  else if (v == "cubic_family")
    m = momenta::CubicFamily{json_number(j, "mu"), json_number(j, "c")};
  else
    throw ConfigError("unknown momentum variant '" + v + "'");
  try {
    validate(m);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return m;
}

/// Momentum fields plus class, epsilon, r_interval and anchor.
inline Json to_json(const SurfaceSpec& s) {
  Json j = to_json(s.momentum);
  j["class"] = std::string(to_string(s.cls));
  j["epsilon"] = s.eps.value();
  j["r_interval"] = {s.r_interval.lo, s.r_interval.hi};
  j["anchor"] = s.anchor;
  return j;
}

inline SurfaceSpec surface_spec_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("surface spec must be a JSON object");
  SurfaceSpec s;
  s.momentum = j.contains("momentum") ? momentum_from_json(j.at("momentum")) : momentum_from_json(j);
  s.cls = rotation_class_from_string(detail::json_string(j, "class"));
  s.eps = detail::json_sign(j, "epsilon");
  if (!j.contains("r_interval") || !j.at("r_interval").is_array() || j.at("r_interval").size() != 2 ||
      !j.at("r_interval")[0].is_number() || !j.at("r_interval")[1].is_number())
    throw ConfigError("r_interval must be an array of two numbers");
  s.r_interval = {j.at("r_interval")[0].get<double>(), j.at("r_interval")[1].get<double>()};
  s.anchor = j.contains("anchor") ? detail::json_number(j, "anchor") : 0.0;
  try {
    validate(s);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid surface spec: ") + e.what());
  }
  return s;
}

inline Json to_json(const QuadricSpec& q) {
  Json j{{"family", std::string(to_string(q.family))}};
  if (is_parabolic_family(q.family)) {
    j["alpha"] = q.alpha;
    j["beta"] = q.beta;
  } else if (is_paraboloid(q.family)) {
    j["d"] = q.d;
  } else {
    j["a"] = q.a;
    j["b"] = q.b;
  }
  j["epsilon"] = q.eps.value();
  return j;
}

inline QuadricSpec quadric_spec_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("quadric spec must be a JSON object");
  QuadricSpec q;
  q.family = quadric_family_from_string(detail::json_string(j, "family"));
  if (j.contains("a")) q.a = detail::json_number(j, "a");
  if (j.contains("b")) q.b = detail::json_number(j, "b");
  if (j.contains("d")) q.d = detail::json_number(j, "d");
  if (j.contains("alpha")) q.alpha = detail::json_number(j, "alpha");
  if (j.contains("beta")) q.beta = detail::json_number(j, "beta");
  if (j.contains("epsilon")) q.eps = detail::json_sign(j, "epsilon");
  try {
    validate(q);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return q;
}

inline Json to_json(const CubicClassification& c) {
  return std::visit(
      detail::overloaded{
          [](const QuadricSpec& q) { return to_json(q); },
          [](const UmbilicMarker& u) { return Json{{"family", "umbilic"}, {"R", u.R}}; },
          [](const PlaneMarker&) { return Json{{"family", "plane"}}; },
          [](const ConeMarker& k) { return Json{{"family", "cone"}, {"K0", k.K0}}; },
      },
      c);
}

inline Json to_json(const VerificationReport& r) {
  return Json{{"name", r.name},
              {"grid", {r.nr, r.nt}},
              {"max_curvature_error", r.max_curvature_error},
              {"max_relation_residual", r.max_relation_residual},
              {"max_relation_residual_numeric", r.max_relation_residual_numeric},
              {"max_implicit_residual", r.max_implicit_residual},
              {"causal_consistency", r.causal_consistency},
              {"passed", r.passed},
              {"notes", r.notes}};
}

/// One line: PASS/FAIL, name and the three maxima.
inline std::string summary_line(const VerificationReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %s curvature=%.3e relation=%.3e implicit=%.3e",
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.max_curvature_error,
                r.max_relation_residual, r.max_implicit_residual);
  return buf;
}

/// Wavefront OBJ with 9 significant digits and 1-based indices.
inline void write_obj(std::ostream& os, const Mesh& m) {
  char buf[128];
  for (const auto& v : m.vertices) {
    std::snprintf(buf, sizeof buf, "v %.9g %.9g %.9g\n", v.x1, v.x2, v.x3);
    os << buf;
  }
  for (const auto& f : m.faces) {
    std::snprintf(buf, sizeof buf, "f %zu %zu %zu\n", f[0] + 1, f[1] + 1, f[2] + 1);
    os << buf;
  }
}

/// CSV "r,g,s".
inline void write_graph_csv(std::ostream& os, const std::vector<GraphSample>& g) {
  os << "r,g,s\n";
  for (const auto& s : g) os << format_real(s.r) << ',' << format_real(s.g) << ',' << format_real(s.s) << '\n';
}

/// CSV "r,K".
inline void write_momentum_csv(std::ostream& os, const std::vector<double>& r, const std::vector<double>& K) {
  os << "r,K\n";
  for (std::size_t i = 0; i < r.size() && i < K.size(); ++i)
    os << format_real(r[i]) << ',' << format_real(K[i]) << '\n';
}

struct CurvatureRow {
  double r, t, k_m, k_p, H, K_G, W;
};

/// Closed-form curvatures on the mesh grid; W is the closed form when the
/// surface comes from a momentum and the numeric value otherwise.
inline std::vector<CurvatureRow> curvature_table(const SurfaceModel& m, const Mesh& mesh,
                                                 const std::optional<SurfaceSpec>& spec) {
  std::vector<CurvatureRow> rows;
  const double e = m.eps.real();
  for (double r : mesh.rs) {
    const auto [km, kp] = m.closed_curvatures(r);
    double W = 0;
    if (spec) W = metric_determinant_closed(*spec, r);
    for (double t : mesh.ts) {
      if (!spec) {
        const double h = 1e-3 * m.r_interval.width();
        const double rr = std::clamp(r, m.r_interval.lo + 2 * h, m.r_interval.hi - 2 * h);
        W = fundamental_forms_numeric(m.local_chart(rr), rr, t, h, 1e-3).W;
      }
      rows.push_back({r, t, km, kp, -e * (km + kp) / 2, -e * km * kp, W});
    }
  }
  return rows;
}

/// CSV "r,t,k_m,k_p,H,K_G,W".
inline void write_curvature_csv(std::ostream& os, const std::vector<CurvatureRow>& rows) {
  os << "r,t,k_m,k_p,H,K_G,W\n";
  for (const auto& x : rows)
    os << format_real(x.r) << ',' << format_real(x.t) << ',' << format_real(x.k_m) << ','
       << format_real(x.k_p) << ',' << format_real(x.H) << ',' << format_real(x.K_G) << ','
       << format_real(x.W) << '\n';
}

}  // namespace lrotor
