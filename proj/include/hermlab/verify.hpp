#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermlab/chart.hpp"
#include "hermlab/constancy.hpp"
#include "hermlab/models.hpp"

namespace hermlab {

/// Tolerance tiers, split by provenance of the quantity under test:
/// algebraic identities, first finite differences (Gamma, R, nabla J), and
/// nested finite differences (nabla R, derivatives of extracted constants).
struct Tolerances {
  double algebraic = 1e-8;
  double fd1 = 1e-5;
  double fd2 = 1e-4;
};

/// How points and planes are sampled: a low-discrepancy (Halton) grid over
/// the margin-shrunk chart box plus a few seeded random points; every plane
/// statistic uses plane_samples draws from per-sample split streams.
struct SamplePlan {
  int grid_points = 16;
  int random_points = 8;
  int plane_samples = 64;
  std::uint64_t seed = 0;
};

namespace detail {

inline double halton(std::uint64_t index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

inline double sample_margin(const ChartManifold& M) {
  double half = std::numeric_limits<double>::infinity();
  for (const auto& ax : M.domain.axes) half = std::min(half, 0.5 * (ax[1] - ax[0]));
  return std::max(M.required_margin(), 0.05 * half);
}

}  // namespace detail

inline std::vector<Vec> sample_points(const ChartManifold& M, const SamplePlan& plan) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  const int n = M.dim();
  if (n > static_cast<int>(std::size(primes)))
    throw std::invalid_argument("sample_points: dimension beyond Halton bases");
  double margin = detail::sample_margin(M);
  std::vector<Vec> pts;
  pts.reserve(plan.grid_points + plan.random_points);
  for (int s = 0; s < plan.grid_points; ++s) {
    Vec p(n);
    for (int a = 0; a < n; ++a) {
      double lo = M.domain.axes[a][0] + margin;
      double hi = M.domain.axes[a][1] - margin;
      p[a] = lo + (hi - lo) * detail::halton(static_cast<std::uint64_t>(s) + 1,
                                             primes[a]);
    }
    pts.push_back(std::move(p));
  }
  SampleStream rng = SampleStream(plan.seed).split(0x706f696e74ULL);  // "point"
  for (int s = 0; s < plan.random_points; ++s) {
    Vec p(n);
    for (int a = 0; a < n; ++a) {
      double lo = M.domain.axes[a][0] + margin;
      double hi = M.domain.axes[a][1] - margin;
      p[a] = lo + (hi - lo) * rng.uniform();
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

inline std::vector<double> default_theta_grid() {
  constexpr double pi = std::numbers::pi;
  return {0.0, pi / 6, pi / 4, pi / 3, pi / 2};
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

struct PointClassification {
  Vec point;
  double compat_residual = 0.0;
  double kahler_residual = 0.0;  // max |(nabla J)^k_j| over components
  double rk_residual = 0.0;
  std::vector<ConstancyReport> theta_reports;
  ConstancyReport plane_report;  // unconstrained planes
};

struct Classification {
  std::string model;
  std::vector<double> theta_grid;
  std::vector<PointClassification> points;
  double kahler_residual = 0.0;
  double rk_residual = 0.0;
  bool kahler = false;
  bool rk = false;
  bool constant_k = false;
  std::vector<bool> theta_constant;  // pointwise constancy per grid theta
  Tolerances tols;
  std::uint64_t seed = 0;
};

inline Classification classify(const ChartManifold& M, const SamplePlan& plan = {},
                               const Tolerances& tols = {}) {
  Classification out;
  out.model = M.name;
  out.theta_grid = default_theta_grid();
  out.tols = tols;
  out.seed = plan.seed;
  std::vector<Vec> pts = sample_points(M, plan);
  for (const Vec& p : pts) {
    PointClassification pc;
    pc.point = p;
    HermitianPoint H = M.at(p);
    pc.compat_residual = H.compat_residual();
    CurvatureTensor R = riemann(M, p);
    pc.kahler_residual = nabla_j(M, p).max_abs();
    pc.rk_residual = rk_residual(R, H);
    for (double theta : out.theta_grid)
      pc.theta_reports.push_back(
          theta_constancy(R, H, theta, plan.plane_samples, plan.seed));
    pc.plane_report = plane_constancy(R, H, plan.plane_samples, plan.seed);
    out.points.push_back(std::move(pc));
  }
  for (const PointClassification& pc : out.points) {
    out.kahler_residual = std::max(out.kahler_residual, pc.kahler_residual);
    out.rk_residual = std::max(out.rk_residual, pc.rk_residual);
  }
  out.kahler = out.kahler_residual < tols.fd1;
  out.rk = out.rk_residual < tols.fd1;
  out.theta_constant.assign(out.theta_grid.size(), true);
  for (const PointClassification& pc : out.points)
    for (std::size_t t = 0; t < out.theta_grid.size(); ++t)
      if (!(pc.theta_reports[t].spread < tols.fd2)) out.theta_constant[t] = false;
  // constant sectional curvature: every point constant over unconstrained
  // planes, and one constant across points
  double mean = 0.0;
  bool pointwise = true;
  for (const PointClassification& pc : out.points) {
    pointwise = pointwise && pc.plane_report.spread < tols.fd2;
    mean += pc.plane_report.constant;
  }
  mean /= static_cast<double>(out.points.size());
  double cross = 0.0;
  for (const PointClassification& pc : out.points)
    cross = std::max(cross, std::abs(pc.plane_report.constant - mean));
  out.constant_k = pointwise && cross < tols.fd2;
  return out;
}

// ---------------------------------------------------------------------------
// Theorem verdicts
// ---------------------------------------------------------------------------

enum class Conclusion {
  ConstantSectional,
  KahlerPhiConstant,
  AntiholomorphicConstant,
  Violation,
  HypothesisNotMet,
};

inline const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::ConstantSectional: return "constant-sectional-curvature";
    case Conclusion::KahlerPhiConstant: return "kahler-phi-constant-for-all-phi";
    case Conclusion::AntiholomorphicConstant: return "antiholomorphic-constant";
    case Conclusion::Violation: return "violation";
    case Conclusion::HypothesisNotMet: return "hypothesis-not-met";
  }
  return "?";
}

struct PointWitness {
  Vec point;
  double constant = 0.0;
  double spread = 0.0;
};

struct TheoremVerdict {
  int theorem = 0;
  std::string model;
  bool hypothesis_ok = false;
  Conclusion conclusion = Conclusion::HypothesisNotMet;
  std::string detail;
  std::vector<PointWitness> witnesses;  // theta-constancy (1) / nu (2) per point
  double global_constant = 0.0;
  double cross_point_spread = 0.0;
  // theorem 1, Kaehler branch
  double kahler_residual = 0.0;
  std::vector<double> phi_grid;
  std::vector<double> phi_constants;
  std::vector<double> phi_cross_spreads;
  // theorem 2 supporting evidence
  double max_rk_residual = 0.0;
  double max_decomposition_residual = 0.0;
  double max_six_term_identity_residual = 0.0;
  double theta = 0.0;
  double tol = 0.0;
  std::uint64_t seed = 0;
};

/// Theorem 1 check: on a chart of dimension >= 6 with pointwise constant
/// theta-holomorphic curvature (theta strictly between 0 and pi/2), the
/// conclusion must be constant sectional curvature, or a Kaehler chart whose
/// phi-holomorphic curvature is one global constant for every phi on the grid.
inline TheoremVerdict verify_theorem1(const ChartManifold& M, double theta,
                                      const SamplePlan& plan = {},
                                      double tol = 1e-4) {
  constexpr double half_pi = std::numbers::pi / 2;
  if (M.dim() < 6)
    throw std::invalid_argument("verify_theorem1: needs dimension >= 6");
  if (!(theta > 0.0 && theta < half_pi))
    throw std::invalid_argument("verify_theorem1: theta must lie strictly in (0, pi/2)");
  TheoremVerdict v;
  v.theorem = 1;
  v.model = M.name;
  v.theta = theta;
  v.tol = tol;
  v.seed = plan.seed;

  std::vector<Vec> pts = sample_points(M, plan);
  std::vector<HermitianPoint> Hs;
  std::vector<CurvatureTensor> Rs;
  Hs.reserve(pts.size());
  Rs.reserve(pts.size());

  v.hypothesis_ok = true;
  for (const Vec& p : pts) {
    Hs.push_back(M.at(p));
    Rs.push_back(riemann(M, p));
    ConstancyReport rep =
        theta_constancy(Rs.back(), Hs.back(), theta, plan.plane_samples, plan.seed);
    v.witnesses.push_back({p, rep.constant, rep.spread});
    if (!(rep.spread < tol)) v.hypothesis_ok = false;
  }
  if (!v.hypothesis_ok) {
    v.conclusion = Conclusion::HypothesisNotMet;
    v.detail = "pointwise theta-constancy fails at a sampled point";
    return v;
  }

  // branch one: constant sectional curvature over unconstrained planes
  {
    bool pointwise = true;
    double mean = 0.0;
    std::vector<double> consts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ConstancyReport rep =
          plane_constancy(Rs[i], Hs[i], plan.plane_samples, plan.seed);
      pointwise = pointwise && rep.spread < tol;
      consts.push_back(rep.constant);
      mean += rep.constant;
    }
    mean /= static_cast<double>(consts.size());
    double cross = 0.0;
    for (double c : consts) cross = std::max(cross, std::abs(c - mean));
    if (pointwise && cross < tol) {
      v.conclusion = Conclusion::ConstantSectional;
      v.global_constant = mean;
      v.cross_point_spread = cross;
      v.detail = "all sampled planes at all points share one constant";
      return v;
    }
  }

  // branch two: Kaehler with globally constant phi-holomorphic curvature for
  // every phi on the grid
  for (const Vec& p : pts)
    v.kahler_residual = std::max(v.kahler_residual, nabla_j(M, p).max_abs());
  bool kahler = v.kahler_residual < tol;
  v.phi_grid = default_theta_grid();
  bool phi_ok = kahler;
  for (double phi : v.phi_grid) {
    double mean = 0.0;
    std::vector<double> consts;
    bool pointwise = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ConstancyReport rep =
          theta_constancy(Rs[i], Hs[i], phi, plan.plane_samples, plan.seed);
      pointwise = pointwise && rep.spread < tol;
      consts.push_back(rep.constant);
      mean += rep.constant;
    }
    mean /= static_cast<double>(consts.size());
    double cross = 0.0;
    for (double c : consts) cross = std::max(cross, std::abs(c - mean));
    v.phi_constants.push_back(mean);
    v.phi_cross_spreads.push_back(cross);
    if (!(pointwise && cross < tol)) phi_ok = false;
  }
  if (phi_ok) {
    v.conclusion = Conclusion::KahlerPhiConstant;
    v.detail = "Kaehler, with one global constant per phi on the grid";
    double mean = 0.0;
    for (const PointWitness& w : v.witnesses) mean += w.constant;
    v.global_constant = mean / static_cast<double>(v.witnesses.size());
    for (const PointWitness& w : v.witnesses)
      v.cross_point_spread =
          std::max(v.cross_point_spread, std::abs(w.constant - v.global_constant));
    return v;
  }

  v.conclusion = Conclusion::Violation;
  v.detail = "hypothesis holds but neither conclusion branch does";
  return v;
}

struct Theorem2Options {
  bool with_decomposition = true;
  int identity_triples = 4;  // triples probed with the six-term identity
};

/// Theorem 2 check: an RK chart of dimension >= 6 with pointwise constant
/// antiholomorphic curvature must have one global antiholomorphic constant.
/// Records the curvature-decomposition fit and the six-term identity residual
/// as supporting evidence.
inline TheoremVerdict verify_theorem2(const ChartManifold& M,
                                      const SamplePlan& plan = {},
                                      double tol = 1e-4,
                                      const Theorem2Options& opt = {}) {
  constexpr double half_pi = std::numbers::pi / 2;
  if (M.dim() < 6)
    throw std::invalid_argument("verify_theorem2: needs dimension >= 6");
  TheoremVerdict v;
  v.theorem = 2;
  v.model = M.name;
  v.tol = tol;
  v.seed = plan.seed;

  std::vector<Vec> pts = sample_points(M, plan);
  std::vector<HermitianPoint> Hs;
  std::vector<CurvatureTensor> Rs;
  v.hypothesis_ok = true;
  for (const Vec& p : pts) {
    Hs.push_back(M.at(p));
    Rs.push_back(riemann(M, p));
    double rk = rk_residual(Rs.back(), Hs.back());
    v.max_rk_residual = std::max(v.max_rk_residual, rk);
    ConstancyReport rep = theta_constancy(Rs.back(), Hs.back(), half_pi,
                                          plan.plane_samples, plan.seed);
    v.witnesses.push_back({p, rep.constant, rep.spread});
    if (!(rk < tol) || !(rep.spread < tol)) v.hypothesis_ok = false;
  }
  if (!v.hypothesis_ok) {
    v.conclusion = Conclusion::HypothesisNotMet;
    v.detail = "RK or pointwise antiholomorphic constancy fails at a sampled point";
    return v;
  }

  double mean = 0.0;
  for (const PointWitness& w : v.witnesses) mean += w.constant;
  mean /= static_cast<double>(v.witnesses.size());
  for (const PointWitness& w : v.witnesses)
    v.cross_point_spread =
        std::max(v.cross_point_spread, std::abs(w.constant - mean));
  v.global_constant = mean;

  if (opt.with_decomposition)
    for (std::size_t i = 0; i < pts.size(); ++i) {
      RkFormFit fit = fit_rk_form(Rs[i], Hs[i], plan.plane_samples, plan.seed);
      v.max_decomposition_residual =
          std::max(v.max_decomposition_residual, fit.residual);
    }
  if (opt.identity_triples > 0) {
    SixTermOptions eopt;
    eopt.precondition_tol = tol;
    eopt.nu.plane_samples = plan.plane_samples;
    eopt.nu.seed = plan.seed;
    SampleStream rng = SampleStream(plan.seed).split(0x74726970ULL);  // "trip"
    for (int t = 0; t < opt.identity_triples; ++t) {
      const Vec& p = pts[t % pts.size()];
      SampleStream trng = rng.split(static_cast<std::uint64_t>(t));
      AntiholoTriple triple = sample_antiholomorphic_triple(M.at(p), trng);
      v.max_six_term_identity_residual =
          std::max(v.max_six_term_identity_residual,
                   six_term_identity_residual(M, p, triple, eopt));
    }
  }

  if (v.cross_point_spread < tol) {
    v.conclusion = Conclusion::AntiholomorphicConstant;
    v.detail = "one global antiholomorphic constant across sampled points";
  } else {
    v.conclusion = Conclusion::Violation;
    v.detail = "hypothesis holds but the extracted constant varies across points";
  }
  return v;
}

// ---------------------------------------------------------------------------
// Scan
// ---------------------------------------------------------------------------

struct ScanRow {
  Vec point;
  std::vector<double> constants;  // c(theta) per grid theta
  std::vector<double> spreads;
  double mu = 0.0;
  double nu = 0.0;
  double kahler_residual = 0.0;
  double rk_residual = 0.0;
};

struct ScanReport {
  std::string model;
  std::vector<double> theta_grid;
  std::vector<ScanRow> rows;
  std::uint64_t seed = 0;
};

inline ScanReport scan(const ChartManifold& M, const SamplePlan& plan = {}) {
  ScanReport out;
  out.model = M.name;
  out.theta_grid = default_theta_grid();
  out.seed = plan.seed;
  for (const Vec& p : sample_points(M, plan)) {
    ScanRow row;
    row.point = p;
    HermitianPoint H = M.at(p);
    CurvatureTensor R = riemann(M, p);
    for (double theta : out.theta_grid) {
      ConstancyReport rep = theta_constancy(R, H, theta, plan.plane_samples, plan.seed);
      row.constants.push_back(rep.constant);
      row.spreads.push_back(rep.spread);
    }
    row.mu = row.constants.front();
    row.nu = row.constants.back();
    row.kahler_residual = nabla_j(M, p).max_abs();
    row.rk_residual = rk_residual(R, H);
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace hermlab
