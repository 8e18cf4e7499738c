#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "hermlab/models.hpp"
#include "hermlab/report.hpp"
#include "hermlab/verify.hpp"

namespace hermlab {

/// One reproducible run: every number in the report is a function of
/// (command, model, params, seed, tolerances).
struct RunConfig {
  std::string command;  // list | classify | verify | scan
  std::string model;
  std::map<std::string, double> params;  // m, c, c1, c2, eps overrides
  int theorem = 2;
  double theta = std::numbers::pi / 4;
  SamplePlan plan;
  double tol = 1e-4;  // verdict tolerance (second FD tier)
  Tolerances tols;
  std::string out_path;        // empty: stdout
  std::string format = "json";  // json | text
};

inline Tolerances tolerances_from_env() {
  Tolerances t;
  auto read = [](const char* name, double& slot) {
    if (const char* s = std::getenv(name)) {
      char* end = nullptr;
      double v = std::strtod(s, &end);
      if (end != s && v > 0.0) slot = v;
    }
  };
  read("HERMLAB_TOL_ALGEBRAIC", t.algebraic);
  read("HERMLAB_TOL_FD1", t.fd1);
  read("HERMLAB_TOL_FD2", t.fd2);
  return t;
}

/// Loads model name + parameters from a JSON config file
/// ({"model": "...", "params": {"m": 3, "c": 4.0}}).
inline void load_model_config(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  Json j = Json::parse(in);
  cfg.model = j.at("model").get<std::string>();
  if (j.contains("params"))
    for (const auto& [key, value] : j.at("params").items())
      cfg.params[key] = value.get<double>();
}

namespace detail {

inline ModelSpec resolve_spec(const RunConfig& cfg) {
  ModelSpec spec = find_model(cfg.model);
  for (const auto& [key, value] : cfg.params) {
    if (!spec.params.count(key))
      throw std::invalid_argument("model " + spec.name + " has no parameter '" +
                                  key + "'");
    spec.params[key] = value;
  }
  // expectations that scale with the parameters
  if (spec.name == "fubini-study" || spec.name == "complex-hyperbolic") {
    spec.expect.nu = spec.params.at("c") / 4.0;
    spec.expect.mu = spec.params.at("c");
  }
  if (spec.name == "scaled-product" &&
      spec.params.at("c1") == spec.params.at("c2")) {
    // equal factors actually satisfy neither negative-control role; refuse
    throw std::invalid_argument("scaled-product requires c1 != c2");
  }
  return spec;
}

inline Conclusion expected_conclusion(const ModelSpec& spec, int theorem) {
  if (theorem == 1) {
    if (!spec.expect.pointwise_theta_constant) return Conclusion::HypothesisNotMet;
    if (spec.expect.constant_k) return Conclusion::ConstantSectional;
    return Conclusion::KahlerPhiConstant;
  }
  if (!spec.expect.rk || !spec.expect.pointwise_theta_constant)
    return Conclusion::HypothesisNotMet;
  return Conclusion::AntiholomorphicConstant;
}

inline void emit(const RunConfig& cfg, const Json& report, const std::string& text) {
  std::string payload =
      cfg.format == "text" ? text : report.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write output: " + cfg.out_path);
  out << payload;
}

inline Json envelope(const RunConfig& cfg, const ModelSpec* spec) {
  Json j{{"schema", "hermlab-report-v1"},
         {"command", cfg.command},
         {"seed", cfg.plan.seed},
         {"tolerances", to_json(cfg.tols)},
         {"verdict_tol", cfg.tol}};
  if (spec) {
    j["model"] = Json{{"name", spec->name}, {"params", spec->params}};
  }
  return j;
}

}  // namespace detail

/// Executes one run. Exit code 0 when the outcome matches the model's
/// expectations, 2 on a `violation` verdict or an expectation mismatch,
/// 1 on configuration errors (thrown before any computation).
inline int run(const RunConfig& cfg) {
  if (cfg.command == "list") {
    Json models = Json::array();
    std::string text;
    for (const ModelSpec& s : catalog()) {
      Json e;
      e["name"] = s.name;
      e["description"] = s.description;
      e["params"] = s.params;
      e["expect"] = Json{{"kahler", s.expect.kahler},
                         {"rk", s.expect.rk},
                         {"constant_k", s.expect.constant_k},
                         {"pointwise_theta_constant",
                          s.expect.pointwise_theta_constant}};
      if (s.expect.nu) e["expect"]["nu"] = *s.expect.nu;
      if (s.expect.mu) e["expect"]["mu"] = *s.expect.mu;
      models.push_back(std::move(e));
      text += s.name + ": " + s.description + "\n";
    }
    Json report = detail::envelope(cfg, nullptr);
    report["models"] = std::move(models);
    detail::emit(cfg, report, text);
    return 0;
  }

  ModelSpec spec = detail::resolve_spec(cfg);
  ChartManifold M = make_model(spec);
  Json report = detail::envelope(cfg, &spec);

  if (cfg.command == "classify") {
    Classification c = classify(M, cfg.plan, cfg.tols);
    report["classification"] = to_json(c);
    detail::emit(cfg, report, to_text(c));
    bool ok = c.kahler == spec.expect.kahler && c.rk == spec.expect.rk &&
              c.constant_k == spec.expect.constant_k;
    // interior grid angles carry the pointwise-theta-constancy expectation
    for (std::size_t t = 0; t < c.theta_grid.size(); ++t)
      if (c.theta_grid[t] > 0.0 && c.theta_grid[t] < std::numbers::pi / 2 - 1e-12)
        ok = ok && (c.theta_constant[t] == spec.expect.pointwise_theta_constant);
    return ok ? 0 : 2;
  }

  if (cfg.command == "verify") {
    if (cfg.theorem != 1 && cfg.theorem != 2)
      throw std::invalid_argument("theorem must be 1 or 2");
    TheoremVerdict v = cfg.theorem == 1
                           ? verify_theorem1(M, cfg.theta, cfg.plan, cfg.tol)
                           : verify_theorem2(M, cfg.plan, cfg.tol);
    report["verdict"] = to_json(v);
    detail::emit(cfg, report, to_text(v));
    if (v.conclusion == Conclusion::Violation) return 2;
    if (v.conclusion != detail::expected_conclusion(spec, cfg.theorem)) return 2;
    if (cfg.theorem == 2 && v.hypothesis_ok && spec.expect.nu &&
        std::abs(v.global_constant - *spec.expect.nu) > cfg.tol)
      return 2;
    return 0;
  }

  if (cfg.command == "scan") {
    ScanReport s = scan(M, cfg.plan);
    report["scan"] = to_json(s);
    detail::emit(cfg, report, to_text(s));
    return 0;
  }

  throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace hermlab
