// Copyright 2026 The lrotor Authors
// SPDX-License-Identifier: Apache-2.0

// lrotor: meshes, Weingarten ODE solutions, quadric classification and
// verification of rotational surfaces in Lorentz-Minkowski space.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lrotor/lrotor.hpp"

namespace {

using lrotor::ConfigError;
using lrotor::Json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

double default_tolerance() {
  if (const char* env = std::getenv("LROTOR_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) throw ConfigError("LROTOR_TOL must be a positive number");
    return v;
  }
  return 1e-6;
}

// Everything a command may need; command-line flags take precedence over
// the JSON job file.
struct Job {
  std::string command;
  std::string config_path;
  std::optional<Json> surface;
  std::optional<std::string> named;
  std::optional<std::string> relation;
  std::optional<double> mu, c, q, tol, r0, K0, r_end;
  std::optional<int> eps;
  std::optional<std::string> cls;
  std::optional<std::string> grid;
  std::optional<std::string> out;
  bool all = false;
  bool json = false;
};

void merge_config(Job& job) {
  if (job.config_path.empty()) return;
  std::ifstream in(job.config_path);
  if (!in) throw ConfigError("cannot read config file '" + job.config_path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  auto num = [&](const char* key, std::optional<double>& dst) {
    if (!dst && j.contains(key)) dst = lrotor::detail::json_number(j, key);
  };
  auto str = [&](const char* key, std::optional<std::string>& dst) {
    if (!dst && j.contains(key)) dst = lrotor::detail::json_string(j, key);
  };
  if (j.contains("command")) {
    const std::string cmd = lrotor::detail::json_string(j, "command");
    if (job.command == "run")
      job.command = cmd;
    else if (cmd != job.command)
      throw ConfigError("config is for command '" + cmd + "', not '" + job.command + "'");
  }
  if (j.contains("surface")) job.surface = j.at("surface");
  str("named", job.named);
  str("relation", job.relation);
  str("class", job.cls);
  str("out", job.out);
  num("mu", job.mu);
  num("c", job.c);
  num("q", job.q);
  num("tolerance", job.tol);
  num("r0", job.r0);
  num("K0", job.K0);
  num("r_end", job.r_end);
  if (!job.eps && j.contains("epsilon")) job.eps = lrotor::detail::json_sign(j, "epsilon").value();
  if (!job.grid && j.contains("grid")) {
    const Json& g = j.at("grid");
    if (!g.is_array() || g.size() != 2 || !g[0].is_number_unsigned() || !g[1].is_number_unsigned())
      throw ConfigError("grid must be [nr, nt]");
    job.grid = std::to_string(g[0].get<unsigned>()) + "x" + std::to_string(g[1].get<unsigned>());
  }
}

std::pair<std::size_t, std::size_t> parse_grid(const std::optional<std::string>& g, std::size_t def) {
  if (!g) return {def, def};
  unsigned long nr = 0, nt = 0;
  char tail = 0;
  if (std::sscanf(g->c_str(), "%lux%lu%c", &nr, &nt, &tail) != 2 || nr < 2 || nt < 2)
    throw ConfigError("grid must look like NRxNT with NR, NT >= 2");
  return {nr, nt};
}

template <class T>
T require(const std::optional<T>& v, const char* what) {
  if (!v) throw ConfigError(std::string("missing ") + what);
  return *v;
}

lrotor::CausalSign sign_of(const Job& job) {
  const int e = require(job.eps, "--eps");
  if (e != 1 && e != -1) throw ConfigError("--eps must be 1 or -1");
  return e;
}

std::optional<lrotor::WeingartenRelation> relation_of(const Job& job) {
  if (job.relation) return lrotor::parse_relation(*job.relation);
  if (job.q) {
    if (*job.q == 0) throw ConfigError("--q must be nonzero");
    return lrotor::relations::LinearProportional{*job.q};
  }
  return std::nullopt;
}

// Writes to --out or stdout.
void emit(const Job& job, const std::string& text) {
  if (!job.out) {
    std::cout << text;
    return;
  }
  std::ofstream os(*job.out, std::ios::binary);
  if (!os) throw ConfigError("cannot write '" + *job.out + "'");
  os << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot write '" + path + "'");
  os << text;
}

// A surface named in the catalog or given as a SurfaceSpec JSON.
struct Target {
  std::string name;
  std::optional<lrotor::SurfaceSpec> spec;
  lrotor::SurfaceModel model;
  std::optional<lrotor::WeingartenRelation> relation;
};

Target target_of(const Job& job) {
  Target t;
  if (job.named) {
    const auto& e = lrotor::find_entry(*job.named);
    t.name = e.key;
    t.spec = e.spec;
    t.model = e.build();
    t.relation = e.relation;
  } else if (job.surface) {
    t.spec = lrotor::surface_spec_from_json(*job.surface);
    t.name = "config";
    t.model = lrotor::make_model(*t.spec, t.name);
  } else {
    throw ConfigError("give --named <key> or a config with a \"surface\" object");
  }
  if (auto rel = relation_of(job)) t.relation = rel;
  return t;
}

int cmd_generate(const Job& job) {
  const Target t = target_of(job);
  const auto [nr, nt] = parse_grid(job.grid, 32);
  const auto t_range = t.spec ? lrotor::default_t_range(t.spec->cls)
                              : lrotor::default_t_range(lrotor::find_entry(t.name).cls);
  const auto mesh = lrotor::mesh_grid(t.model.point, t.model.r_interval, t_range, nr, nt);
  const std::string prefix = job.out.value_or(t.name);
  std::ostringstream obj, csv;
  lrotor::write_obj(obj, mesh);
  lrotor::write_curvature_csv(csv, lrotor::curvature_table(t.model, mesh, t.spec));
  write_file(prefix + ".obj", obj.str());
  write_file(prefix + "_curvatures.csv", csv.str());
  if (t.spec) {
    std::ostringstream g;
    lrotor::write_graph_csv(g, lrotor::Surface(*t.spec).graph());
    write_file(prefix + "_graph.csv", g.str());
  }
  std::cout << "wrote " << prefix << ".obj (" << mesh.vertices.size() << " vertices, "
            << mesh.faces.size() << " faces)\n";
  return 0;
}

int cmd_solve(const Job& job) {
  const auto rel = relation_of(job);
  if (!rel) throw ConfigError("solve needs --relation or --q");
  const double r0 = require(job.r0, "--r0"), K0 = require(job.K0, "--K0");
  const double r_end = require(job.r_end, "--r-end");
  const double tol = job.tol.value_or(default_tolerance());
  std::optional<std::pair<lrotor::RotationClass, lrotor::CausalSign>> guard;
  if (job.cls) guard = std::pair{lrotor::rotation_class_from_string(*job.cls), sign_of(job)};
  const auto sol = lrotor::solve_ode(*rel, r0, K0, r_end, tol, guard);
  std::ostringstream os;
  lrotor::write_momentum_csv(os, sol.solution->nodes_r, sol.solution->nodes_y);
  emit(job, os.str());
  if (sol.exit_boundary)
    std::cerr << "left the validity domain at r = " << lrotor::format_real(*sol.exit_boundary) << "\n";
  return 0;
}

int cmd_classify(const Job& job) {
  const double mu = require(job.mu, "--mu"), c = require(job.c, "--c");
  const auto cls = lrotor::rotation_class_from_string(require(job.cls, "--class"));
  const auto result = lrotor::classify_cubic(mu, c, sign_of(job), cls);
  emit(job, lrotor::to_json(result).dump() + "\n");
  return 0;
}

int cmd_verify(const Job& job) {
  lrotor::VerifyOptions opt;
  const auto [nr, nt] = parse_grid(job.grid, 16);
  opt.nr = nr;
  opt.nt = nt;
  opt.residual_tol = job.tol.value_or(default_tolerance());
  Json reports = Json::array();
  bool all_passed = true;
  auto run_one = [&](const std::string& name, const lrotor::SurfaceModel& model,
                     const std::optional<lrotor::WeingartenRelation>& rel) {
    const auto rep = lrotor::verify_model(model, rel, opt);
    std::cout << lrotor::summary_line(rep) << "\n";
    all_passed = all_passed && rep.passed;
    reports.push_back(lrotor::to_json(rep));
    (void)name;
  };
  if (job.all) {
    for (const auto& e : lrotor::catalog()) run_one(e.key, e.build(), e.relation);
  } else {
    const Target t = target_of(job);
    run_one(t.name, t.model, t.relation);
  }
  if (job.out) write_file(*job.out, (job.all ? reports : reports.front()).dump(2) + "\n");
  return all_passed ? 0 : kExitVerifyFailed;
}

int cmd_catalog(const Job& job) {
  std::ostringstream os;
  Json arr = Json::array();
  for (const auto& e : lrotor::catalog()) {
    const std::string momentum = e.spec ? lrotor::describe(e.spec->momentum) : "explicit";
    const std::string relation = e.relation ? lrotor::to_string(*e.relation) : "-";
    if (job.json) {
      Json j{{"key", e.key},
             {"group", e.group},
             {"class", std::string(lrotor::to_string(e.cls))},
             {"epsilon", e.eps.value()},
             {"relation", relation}};
      if (e.spec) j["surface"] = lrotor::to_json(*e.spec);
      if (e.quadric) j["quadric"] = lrotor::to_json(*e.quadric);
      if (!e.implicit_text.empty()) j["implicit"] = e.implicit_text;
      arr.push_back(j);
    } else {
      os << e.key << '\t' << e.group << '\t' << lrotor::to_string(e.cls) << '\t'
         << (e.eps.is_spacelike() ? "+1" : "-1") << '\t' << momentum << '\t' << relation << '\n';
    }
  }
  emit(job, job.json ? arr.dump(2) + "\n" : os.str());
  return 0;
}

int dispatch(Job& job) {
  merge_config(job);
  if (job.command == "generate") return cmd_generate(job);
  if (job.command == "solve") return cmd_solve(job);
  if (job.command == "classify") return cmd_classify(job);
  if (job.command == "verify") return cmd_verify(job);
  if (job.command == "catalog") return cmd_catalog(job);
  throw ConfigError("unknown command '" + job.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotational surfaces in Lorentz-Minkowski space"};
  app.require_subcommand(1);
  Job job;

  auto add_common = [&job](CLI::App* sub) {
    sub->add_option("--config", job.config_path, "JSON job file");
    sub->add_option("--out", job.out, "output path (prefix for generate)");
  };
  auto add_surface = [&job](CLI::App* sub) {
    sub->add_option("--named", job.named, "catalog key");
    sub->add_option("--relation", job.relation, "linear:q=Q, quadratic:mu=M, cubic:mu=M, H0 or km0");
    sub->add_option("--q", job.q, "shorthand for --relation linear:q=Q");
    sub->add_option("--grid", job.grid, "NRxNT");
    sub->add_option("--tol", job.tol, "tolerance (default LROTOR_TOL or 1e-6)");
  };

  auto* generate = app.add_subcommand("generate", "OBJ mesh and curvature CSV of a surface");
  add_common(generate);
  add_surface(generate);

  auto* solve = app.add_subcommand("solve", "integrate the Weingarten ODE for K(r)");
  add_common(solve);
  solve->add_option("--relation", job.relation, "linear:q=Q, quadratic:mu=M, cubic:mu=M or H0");
  solve->add_option("--q", job.q, "shorthand for --relation linear:q=Q");
  solve->add_option("--r0", job.r0, "initial r");
  solve->add_option("--K0", job.K0, "K(r0)");
  solve->add_option("--r-end", job.r_end, "final r");
  solve->add_option("--tol", job.tol, "absolute and relative tolerance");
  solve->add_option("--class", job.cls, "stop at the validity boundary of this class");
  solve->add_option("--eps", job.eps, "causal sign for --class");

  auto* classify = app.add_subcommand("classify", "quadric of the cubic relation k_m = mu k_p^3");
  add_common(classify);
  classify->add_option("--mu", job.mu, "mu");
  classify->add_option("--c", job.c, "c in K = r / sqrt(mu + c r^2)");
  classify->add_option("--eps", job.eps, "causal sign, 1 or -1");
  classify->add_option("--class", job.cls, "hyperbolic1, hyperbolic2, elliptic or parabolic");

  auto* verify = app.add_subcommand("verify", "run the numerical oracle; exit 0 iff passed");
  add_common(verify);
  add_surface(verify);
  verify->add_flag("--all", job.all, "verify every catalog entry");

  auto* catalog = app.add_subcommand("catalog", "list the named surfaces");
  add_common(catalog);
  catalog->add_flag("--json", job.json, "JSON output");

  auto* run = app.add_subcommand("run", "run the command named in a JSON job file");
  run->add_option("--config", job.config_path, "JSON job file")->required();
  run->add_option("--out", job.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  for (auto* sub : app.get_subcommands()) job.command = sub->get_name();

  try {
    return dispatch(job);
  } catch (const lrotor::SingularIntegral& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const lrotor::StepFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const lrotor::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const lrotor::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const lrotor::EmptyDomain& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const lrotor::Inadmissible& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const lrotor::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}
