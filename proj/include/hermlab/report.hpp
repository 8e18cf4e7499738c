#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "hermlab/chart.hpp"
#include "hermlab/constancy.hpp"
#include "hermlab/verify.hpp"

namespace hermlab {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Tensor / linear-algebra JSON layout: {"dims": [...], "data": nested arrays},
// row-major, dims first. Shared by golden tests and the PointGeometry dump.
// ---------------------------------------------------------------------------

inline Json to_json(const Vec& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

inline Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"dims", {m.rows(), m.cols()}}, {"data", std::move(rows)}};
}

inline Json to_json(const Tensor3& t) {
  const int n = t.dim();
  Json d0 = Json::array();
  for (int i = 0; i < n; ++i) {
    Json d1 = Json::array();
    for (int j = 0; j < n; ++j) {
      Json d2 = Json::array();
      for (int k = 0; k < n; ++k) d2.push_back(t(i, j, k));
      d1.push_back(std::move(d2));
    }
    d0.push_back(std::move(d1));
  }
  return Json{{"dims", {n, n, n}}, {"data", std::move(d0)}};
}

inline Json to_json(const Tensor4& t) {
  const int n = t.dim();
  Json d0 = Json::array();
  for (int i = 0; i < n; ++i) {
    Json d1 = Json::array();
    for (int j = 0; j < n; ++j) {
      Json d2 = Json::array();
      for (int k = 0; k < n; ++k) {
        Json d3 = Json::array();
        for (int l = 0; l < n; ++l) d3.push_back(t(i, j, k, l));
        d2.push_back(std::move(d3));
      }
      d1.push_back(std::move(d2));
    }
    d0.push_back(std::move(d1));
  }
  return Json{{"dims", {n, n, n, n}}, {"data", std::move(d0)}};
}

inline Json to_json(const Tensor5& t) {
  const int n = t.dim();
  Json d0 = Json::array();
  for (int d = 0; d < n; ++d) {
    Json d1 = Json::array();
    for (int i = 0; i < n; ++i) {
      Json d2 = Json::array();
      for (int j = 0; j < n; ++j) {
        Json d3 = Json::array();
        for (int k = 0; k < n; ++k) {
          Json d4 = Json::array();
          for (int l = 0; l < n; ++l) d4.push_back(t(d, i, j, k, l));
          d3.push_back(std::move(d4));
        }
        d2.push_back(std::move(d3));
      }
      d1.push_back(std::move(d2));
    }
    d0.push_back(std::move(d1));
  }
  return Json{{"dims", {n, n, n, n, n}}, {"data", std::move(d0)}};
}

inline Tensor4 tensor4_from_json(const Json& j) {
  const auto& dims = j.at("dims");
  const int n = dims.at(0).get<int>();
  Tensor4 t(n);
  const auto& data = j.at("data");
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          t(i, jj, k, l) = data.at(i).at(jj).at(k).at(l).get<double>();
  return t;
}

inline Json to_json(const PointGeometry& g) {
  Json j;
  j["point"] = to_json(g.point);
  j["g"] = to_json(g.H.g);
  j["J"] = to_json(g.H.J);
  j["gamma"] = to_json(g.gamma);
  j["R"] = to_json(g.R.comps());
  j["S"] = to_json(g.S.S);
  j["nabla_j"] = to_json(g.nablaJ);
  if (g.nablaR) j["nabla_r"] = to_json(*g.nablaR);
  return j;
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

inline Json to_json(const ConstancyReport& r) {
  return Json{{"constant", r.constant}, {"spread", r.spread},
              {"samples", r.samples},   {"theta", r.theta},
              {"kmin", r.kmin},         {"kmax", r.kmax}};
}

inline Json to_json(const Tolerances& t) {
  return Json{{"algebraic", t.algebraic}, {"fd1", t.fd1}, {"fd2", t.fd2}};
}

inline Json to_json(const PointClassification& pc) {
  Json reports = Json::array();
  for (const ConstancyReport& r : pc.theta_reports) reports.push_back(to_json(r));
  return Json{{"point", to_json(pc.point)},
              {"compat_residual", pc.compat_residual},
              {"kahler_residual", pc.kahler_residual},
              {"rk_residual", pc.rk_residual},
              {"theta_reports", std::move(reports)},
              {"plane_report", to_json(pc.plane_report)}};
}

inline Json to_json(const Classification& c) {
  Json pts = Json::array();
  for (const PointClassification& pc : c.points) pts.push_back(to_json(pc));
  Json theta_flags = Json::array();
  for (bool b : c.theta_constant) theta_flags.push_back(b);
  return Json{{"model", c.model},
              {"theta_grid", c.theta_grid},
              {"points", std::move(pts)},
              {"kahler_residual", c.kahler_residual},
              {"rk_residual", c.rk_residual},
              {"kahler", c.kahler},
              {"rk", c.rk},
              {"constant_k", c.constant_k},
              {"theta_constant", std::move(theta_flags)},
              {"tolerances", to_json(c.tols)},
              {"seed", c.seed}};
}

inline Json to_json(const PointWitness& w) {
  return Json{{"point", to_json(w.point)}, {"constant", w.constant},
              {"spread", w.spread}};
}

inline Json to_json(const TheoremVerdict& v) {
  Json ws = Json::array();
  for (const PointWitness& w : v.witnesses) ws.push_back(to_json(w));
  Json j{{"theorem", v.theorem},
         {"model", v.model},
         {"hypothesis_ok", v.hypothesis_ok},
         {"verdict", to_string(v.conclusion)},
         {"detail", v.detail},
         {"witnesses", std::move(ws)},
         {"global_constant", v.global_constant},
         {"cross_point_spread", v.cross_point_spread},
         {"tol", v.tol},
         {"seed", v.seed}};
  if (v.theorem == 1) {
    j["theta"] = v.theta;
    j["kahler_residual"] = v.kahler_residual;
    j["phi_grid"] = v.phi_grid;
    j["phi_constants"] = v.phi_constants;
    j["phi_cross_spreads"] = v.phi_cross_spreads;
  } else {
    j["max_rk_residual"] = v.max_rk_residual;
    j["max_decomposition_residual"] = v.max_decomposition_residual;
    j["max_six_term_identity_residual"] = v.max_six_term_identity_residual;
  }
  return j;
}

inline Json to_json(const ScanRow& r) {
  return Json{{"point", to_json(r.point)}, {"constants", r.constants},
              {"spreads", r.spreads},      {"mu", r.mu},
              {"nu", r.nu},                {"kahler_residual", r.kahler_residual},
              {"rk_residual", r.rk_residual}};
}

inline Json to_json(const ScanReport& s) {
  Json rows = Json::array();
  for (const ScanRow& r : s.rows) rows.push_back(to_json(r));
  return Json{{"model", s.model},
              {"theta_grid", s.theta_grid},
              {"rows", std::move(rows)},
              {"seed", s.seed}};
}

// ---------------------------------------------------------------------------
// Text rendering (6 significant digits; JSON keeps full precision)
// ---------------------------------------------------------------------------

namespace detail {

inline std::string num6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string point_str(const Vec& p) {
  std::string s = "(";
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += num6(p[i]);
  }
  return s + ")";
}

}  // namespace detail

inline std::string to_text(const Classification& c) {
  std::string s;
  s += "model: " + c.model + "\n";
  s += "kahler: " + std::string(c.kahler ? "yes" : "no") +
       " (residual " + detail::num6(c.kahler_residual) + ")\n";
  s += "rk: " + std::string(c.rk ? "yes" : "no") + " (residual " +
       detail::num6(c.rk_residual) + ")\n";
  s += "constant sectional curvature: " + std::string(c.constant_k ? "yes" : "no") +
       "\n";
  for (std::size_t t = 0; t < c.theta_grid.size(); ++t) {
    double worst = 0.0;
    double mean = 0.0;
    for (const PointClassification& pc : c.points) {
      worst = std::max(worst, pc.theta_reports[t].spread);
      mean += pc.theta_reports[t].constant;
    }
    mean /= static_cast<double>(c.points.size());
    s += "theta " + detail::num6(c.theta_grid[t]) + ": pointwise constant " +
         (c.theta_constant[t] ? "yes" : "no") + ", mean c(p) " +
         detail::num6(mean) + ", max spread " + detail::num6(worst) + "\n";
  }
  s += "points sampled: " + std::to_string(c.points.size()) + "\n";
  return s;
}

inline std::string to_text(const TheoremVerdict& v) {
  std::string s;
  s += "model: " + v.model + "\n";
  s += "theorem: " + std::to_string(v.theorem) + "\n";
  if (v.theorem == 1) s += "theta: " + detail::num6(v.theta) + "\n";
  s += "hypothesis: " + std::string(v.hypothesis_ok ? "ok" : "not met") + "\n";
  s += "verdict: " + std::string(to_string(v.conclusion)) + "\n";
  s += "detail: " + v.detail + "\n";
  if (v.hypothesis_ok) {
    s += "global constant: " + detail::num6(v.global_constant) +
         " (cross-point spread " + detail::num6(v.cross_point_spread) + ")\n";
  }
  if (v.theorem == 1 && !v.phi_grid.empty()) {
    s += "kahler residual: " + detail::num6(v.kahler_residual) + "\n";
    for (std::size_t i = 0; i < v.phi_grid.size(); ++i)
      s += "  c(phi=" + detail::num6(v.phi_grid[i]) + ") = " +
           detail::num6(v.phi_constants[i]) + " (spread " +
           detail::num6(v.phi_cross_spreads[i]) + ")\n";
  }
  if (v.theorem == 2) {
    s += "max RK residual: " + detail::num6(v.max_rk_residual) + "\n";
    s += "max decomposition residual: " + detail::num6(v.max_decomposition_residual) + "\n";
    s += "max six-term identity residual: " +
         detail::num6(v.max_six_term_identity_residual) + "\n";
  }
  for (const PointWitness& w : v.witnesses)
    s += "  p=" + detail::point_str(w.point) + "  constant " +
         detail::num6(w.constant) + "  spread " + detail::num6(w.spread) + "\n";
  return s;
}

inline std::string to_text(const ScanReport& r) {
  std::string s = "model: " + r.model + "\n";
  s += "theta grid:";
  for (double t : r.theta_grid) s += " " + detail::num6(t);
  s += "\n";
  for (const ScanRow& row : r.rows) {
    s += "p=" + detail::point_str(row.point) + "  c:";
    for (double c : row.constants) s += " " + detail::num6(c);
    s += "  mu " + detail::num6(row.mu) + "  nu " + detail::num6(row.nu);
    s += "  kahler " + detail::num6(row.kahler_residual);
    s += "  rk " + detail::num6(row.rk_residual) + "\n";
  }
  return s;
}

}  // namespace hermlab
