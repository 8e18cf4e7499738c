#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermlab/chart.hpp"

namespace hermlab {

/// What the catalog claims about a model; the verification harness checks its
/// verdicts against these.
struct ModelExpectation {
  bool kahler = false;
  bool rk = false;
  bool constant_k = false;
  bool pointwise_theta_constant = false;  // for theta strictly inside (0, pi/2)
  std::optional<double> nu;               // antiholomorphic constant, when defined
  std::optional<double> mu;               // holomorphic constant, when defined
};

struct ModelSpec {
  std::string name;
  std::string description;
  std::map<std::string, double> params;  // documented key set per model
  ModelExpectation expect;
};

namespace detail {

inline Mat standard_j(int dim) { return HermitianPoint::standard(dim).J; }

// ---- Fubini-Study / complex hyperbolic --------------------------------------
//
// Real form of the complex space form metric with holomorphic sectional
// curvature c on the affine chart, sign = +1 (projective, c > 0) or
// sign = -1 (hyperbolic ball, c < 0, |w| < 1):
//
//   g(X,Y) = (4/|c|) [ (1 + sign |w|^2) <X,Y>
//                      - sign (<X,w><Y,w> + <X,J0 w><Y,J0 w>) ] / (1 + sign |w|^2)^2

inline Mat space_form_metric(const Vec& w, double c, double sign, const Mat& J0) {
  const int n = static_cast<int>(w.size());
  double a = 4.0 / std::abs(c);
  double q = 1.0 + sign * w.squaredNorm();
  Vec jw = J0 * w;
  Mat num = q * Mat::Identity(n, n) - sign * (w * w.transpose()) -
            sign * (jw * jw.transpose());
  return (a / (q * q)) * num;
}

inline Tensor3 space_form_metric_grad(const Vec& w, double c, double sign,
                                      const Mat& J0) {
  const int n = static_cast<int>(w.size());
  double a = 4.0 / std::abs(c);
  double q = 1.0 + sign * w.squaredNorm();
  Vec jw = J0 * w;
  Mat g = space_form_metric(w, c, sign, J0);
  Tensor3 dg(n);
  for (int k = 0; k < n; ++k) {
    // d_k of the numerator
    Vec jk = J0.col(k);
    Mat dnum = 2.0 * sign * w[k] * Mat::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dnum(i, j) -= sign * ((i == k ? w[j] : 0.0) + (j == k ? w[i] : 0.0) +
                              jk[i] * jw[j] + jw[i] * jk[j]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dg(k, i, j) = (a / (q * q)) * dnum(i, j) -
                      4.0 * sign * w[k] / q * g(i, j);
  }
  return dg;
}

// ---- seven-dimensional cross product ----------------------------------------
//
// Structure constants of the imaginary octonions in the cyclic convention
// e_i e_{i+1} = e_{i+3} (indices mod 7).

struct CrossTable {
  // entry (i,j): target index k and sign s with e_i x e_j = s e_k; k = -1 on
  // the diagonal.
  int target[7][7];
  double sign[7][7];

  CrossTable() {
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        target[i][j] = -1;
        sign[i][j] = 0.0;
      }
    const int triples[7][3] = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                               {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
    for (const auto& t : triples) {
      int a = t[0], b = t[1], c = t[2];
      set(a, b, c, 1.0);
      set(b, c, a, 1.0);
      set(c, a, b, 1.0);
    }
  }

  void set(int i, int j, int k, double s) {
    target[i][j] = k;
    sign[i][j] = s;
    target[j][i] = k;
    sign[j][i] = -s;
  }
};

inline Eigen::Matrix<double, 7, 1> cross7(const Eigen::Matrix<double, 7, 1>& u,
                                          const Eigen::Matrix<double, 7, 1>& v) {
  static const CrossTable table;
  Eigen::Matrix<double, 7, 1> w = Eigen::Matrix<double, 7, 1>::Zero();
  for (int i = 0; i < 7; ++i) {
    if (u[i] == 0.0) continue;
    for (int j = 0; j < 7; ++j) {
      int k = table.target[i][j];
      if (k < 0) continue;
      w[k] += table.sign[i][j] * u[i] * v[j];
    }
  }
  return w;
}

}  // namespace detail

/// Flat complex torus chart: g = I, J standard, everything analytic and zero.
inline ChartManifold flat_torus(int m) {
  if (m < 1 || m > 6) throw std::invalid_argument("flat_torus: m must be in 1..6");
  const int n = 2 * m;
  ChartManifold M;
  M.name = "flat-torus";
  M.domain = Box::cube(n, -1.0, 1.0);
  Mat J0 = detail::standard_j(n);
  M.metric = [n](const Vec&) { return Mat::Identity(n, n); };
  M.j_field = [J0](const Vec&) { return J0; };
  M.metric_grad = [n](const Vec&) { return Tensor3(n); };
  M.metric_hess = [n](const Vec&) { return Tensor4(n); };
  M.j_grad = [n](const Vec&) { return Tensor3(n); };
  return M;
}

/// Fubini-Study CP^m with holomorphic sectional curvature c > 0, in one affine
/// chart (real coordinates, constant standard J). The chart never reaches the
/// hyperplane at infinity; the box keeps |w| moderate so the FD stack stays
/// well conditioned.
inline ChartManifold fubini_study(int m, double c) {
  if (m < 1 || m > 5) throw std::invalid_argument("fubini_study: m must be in 1..5");
  if (!(c > 0.0)) throw std::invalid_argument("fubini_study: c must be positive");
  const int n = 2 * m;
  ChartManifold M;
  M.name = "fubini-study";
  M.domain = Box::cube(n, -1.0, 1.0);
  Mat J0 = detail::standard_j(n);
  M.metric = [c, J0](const Vec& w) {
    return detail::space_form_metric(w, c, +1.0, J0);
  };
  M.metric_grad = [c, J0](const Vec& w) {
    return detail::space_form_metric_grad(w, c, +1.0, J0);
  };
  M.j_field = [J0](const Vec&) { return J0; };
  M.j_grad = [n](const Vec&) { return Tensor3(n); };
  return M;
}

/// Complex hyperbolic ball with holomorphic sectional curvature c < 0.
inline ChartManifold complex_hyperbolic(int m, double c) {
  if (m < 1 || m > 5)
    throw std::invalid_argument("complex_hyperbolic: m must be in 1..5");
  if (!(c < 0.0)) throw std::invalid_argument("complex_hyperbolic: c must be negative");
  const int n = 2 * m;
  ChartManifold M;
  M.name = "complex-hyperbolic";
  M.domain = Box::cube(n, -0.25, 0.25);  // inside the unit ball
  Mat J0 = detail::standard_j(n);
  M.metric = [c, J0](const Vec& w) {
    return detail::space_form_metric(w, c, -1.0, J0);
  };
  M.metric_grad = [c, J0](const Vec& w) {
    return detail::space_form_metric_grad(w, c, -1.0, J0);
  };
  M.j_field = [J0](const Vec&) { return J0; };
  M.j_grad = [n](const Vec&) { return Tensor3(n); };
  return M;
}

/// Round S^6 of radius 1 with the octonionic cross-product almost complex
/// structure J_p(v) = p x v, in the orthographic chart
/// phi(x) = (x, sqrt(1-|x|^2)). Constant sectional curvature +1 and RK, but
/// nabla J != 0: the one catalog member that is not Kaehler yet satisfies the
/// RK hypothesis.
inline ChartManifold nearly_kahler_s6() {
  const int n = 6;
  ChartManifold M;
  M.name = "nearly-kahler-s6";
  M.domain = Box::cube(n, -0.3, 0.3);
  M.metric = [](const Vec& x) {
    double s2 = 1.0 - x.squaredNorm();
    Mat g = Mat::Identity(6, 6) + (x * x.transpose()) / s2;
    return g;
  };
  M.metric_grad = [](const Vec& x) {
    double s2 = 1.0 - x.squaredNorm();
    Tensor3 dg(6);
    for (int k = 0; k < 6; ++k)
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          dg(k, i, j) = ((i == k ? x[j] : 0.0) + (j == k ? x[i] : 0.0)) / s2 +
                        2.0 * x[i] * x[j] * x[k] / (s2 * s2);
    return dg;
  };
  M.j_field = [](const Vec& x) {
    using V7 = Eigen::Matrix<double, 7, 1>;
    double s = std::sqrt(1.0 - x.squaredNorm());
    V7 p;
    p << x[0], x[1], x[2], x[3], x[4], x[5], s;
    Mat J(6, 6);
    for (int j = 0; j < 6; ++j) {
      V7 dphi = V7::Zero();
      dphi[j] = 1.0;
      dphi[6] = -x[j] / s;
      V7 w = detail::cross7(p, dphi);
      for (int k = 0; k < 6; ++k) J(k, j) = w[k];
    }
    return J;
  };
  return M;
}

/// Kaehler product CP^1(c1) x CP^2(c2). For c1 != c2 the sectional curvature
/// of mixed planes breaks pointwise theta-constancy for every theta > 0, so
/// both Schur-type hypotheses fail: the catalog's structured negative control.
inline ChartManifold scaled_product(double c1, double c2) {
  if (!(c1 > 0.0) || !(c2 > 0.0))
    throw std::invalid_argument("scaled_product: c1, c2 must be positive");
  const int n = 6;
  ChartManifold M;
  M.name = "scaled-product";
  M.domain = Box::cube(n, -1.0, 1.0);
  Mat J0 = detail::standard_j(n);
  Mat J1 = detail::standard_j(2);
  Mat J2 = detail::standard_j(4);
  M.metric = [c1, c2, J1, J2](const Vec& w) {
    Mat g = Mat::Zero(6, 6);
    g.topLeftCorner(2, 2) =
        detail::space_form_metric(w.head(2), c1, +1.0, J1);
    g.bottomRightCorner(4, 4) =
        detail::space_form_metric(w.tail(4), c2, +1.0, J2);
    return g;
  };
  M.metric_grad = [c1, c2, J1, J2](const Vec& w) {
    Tensor3 dg(6);
    Tensor3 d1 = detail::space_form_metric_grad(w.head(2), c1, +1.0, J1);
    Tensor3 d2 = detail::space_form_metric_grad(w.tail(4), c2, +1.0, J2);
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) dg(k, i, j) = d1(k, i, j);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) dg(k + 2, i + 2, j + 2) = d2(k, i, j);
    return dg;
  };
  M.j_field = [J0](const Vec&) { return J0; };
  M.j_grad = [n](const Vec&) { return Tensor3(n); };
  return M;
}

/// Flat torus with a smooth anisotropic bump: g = I + eps (B + J0^T B J0)/2.
/// The symmetrization keeps (g, J0) compatible; the bump destroys every
/// constancy property (generic negative control).
inline ChartManifold perturbed_torus(int m, double eps) {
  if (m < 1 || m > 6) throw std::invalid_argument("perturbed_torus: m must be in 1..6");
  if (!(eps >= 0.0 && eps <= 0.2))
    throw std::invalid_argument("perturbed_torus: eps must be in [0, 0.2]");
  const int n = 2 * m;
  ChartManifold M;
  M.name = "perturbed-torus";
  M.domain = Box::cube(n, -1.0, 1.0);
  Mat J0 = detail::standard_j(n);
  auto bump = [n](const Vec& x) {
    Mat B(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        B(i, j) = std::sin(x[i] + 2.0 * x[j]) + std::sin(x[j] + 2.0 * x[i]);
    return B;
  };
  M.metric = [n, eps, J0, bump](const Vec& x) {
    Mat B = bump(x);
    Mat dg = 0.5 * (B + J0.transpose() * B * J0);
    dg = 0.5 * (dg + dg.transpose()).eval();
    return Mat(Mat::Identity(n, n) + eps * dg);
  };
  M.j_field = [J0](const Vec&) { return J0; };
  M.j_grad = [n](const Vec&) { return Tensor3(n); };
  return M;
}

/// The model catalog with expected classification flags.
inline std::vector<ModelSpec> catalog() {
  std::vector<ModelSpec> out;
  {
    ModelSpec s;
    s.name = "flat-torus";
    s.description = "flat complex torus chart, g = I, standard J";
    s.params = {{"m", 3}};
    s.expect = {true, true, true, true, 0.0, 0.0};
    out.push_back(std::move(s));
  }
  {
    ModelSpec s;
    s.name = "fubini-study";
    s.description = "Fubini-Study CP^m, holomorphic sectional curvature c";
    s.params = {{"m", 3}, {"c", 4.0}};
    ModelExpectation e;
    e.kahler = true;
    e.rk = true;
    e.constant_k = false;
    e.pointwise_theta_constant = true;
    e.nu = 1.0;  // c/4
    e.mu = 4.0;  // c
    s.expect = e;
    out.push_back(std::move(s));
  }
  {
    ModelSpec s;
    s.name = "complex-hyperbolic";
    s.description = "complex hyperbolic ball, holomorphic sectional curvature c < 0";
    s.params = {{"m", 3}, {"c", -4.0}};
    ModelExpectation e;
    e.kahler = true;
    e.rk = true;
    e.constant_k = false;
    e.pointwise_theta_constant = true;
    e.nu = -1.0;
    e.mu = -4.0;
    s.expect = e;
    out.push_back(std::move(s));
  }
  {
    ModelSpec s;
    s.name = "nearly-kahler-s6";
    s.description = "round S^6 with the cross-product almost complex structure";
    s.params = {};
    ModelExpectation e;
    e.kahler = false;
    e.rk = true;
    e.constant_k = true;
    e.pointwise_theta_constant = true;
    e.nu = 1.0;
    e.mu = 1.0;
    s.expect = e;
    out.push_back(std::move(s));
  }
  {
    ModelSpec s;
    s.name = "scaled-product";
    s.description = "CP^1(c1) x CP^2(c2), c1 != c2: structured negative control";
    s.params = {{"c1", 2.0}, {"c2", 6.0}};
    ModelExpectation e;
    e.kahler = true;
    e.rk = true;
    e.constant_k = false;
    e.pointwise_theta_constant = false;
    s.expect = e;
    out.push_back(std::move(s));
  }
  {
    ModelSpec s;
    s.name = "perturbed-torus";
    s.description = "flat torus with an anisotropic metric bump: generic negative control";
    s.params = {{"m", 3}, {"eps", 0.05}};
    ModelExpectation e;
    e.kahler = false;
    e.rk = false;
    e.constant_k = false;
    e.pointwise_theta_constant = false;
    s.expect = e;
    out.push_back(std::move(s));
  }
  return out;
}

inline ModelSpec find_model(const std::string& name) {
  for (const ModelSpec& s : catalog())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown model: " + name);
}

/// Instantiates a chart for a spec whose params may have been overridden.
inline ChartManifold make_model(const ModelSpec& spec) {
  auto param = [&spec](const std::string& key, double fallback) {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
  };
  if (spec.name == "flat-torus")
    return flat_torus(static_cast<int>(param("m", 3)));
  if (spec.name == "fubini-study")
    return fubini_study(static_cast<int>(param("m", 3)), param("c", 4.0));
  if (spec.name == "complex-hyperbolic")
    return complex_hyperbolic(static_cast<int>(param("m", 3)), param("c", -4.0));
  if (spec.name == "nearly-kahler-s6") return nearly_kahler_s6();
  if (spec.name == "scaled-product")
    return scaled_product(param("c1", 2.0), param("c2", 6.0));
  if (spec.name == "perturbed-torus")
    return perturbed_torus(static_cast<int>(param("m", 3)), param("eps", 0.05));
  throw std::invalid_argument("unknown model: " + spec.name);
}

}  // namespace hermlab
