#pragma once

#include <array>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hermlab/constancy.hpp"
#include "hermlab/curvature.hpp"
#include "hermlab/eigenframe.hpp"
#include "hermlab/hermitian_point.hpp"
#include "hermlab/planes.hpp"

namespace hermlab {

/// Axis-aligned coordinate box.
struct Box {
  std::vector<std::array<double, 2>> axes;

  int dim() const { return static_cast<int>(axes.size()); }

  static Box cube(int dim, double lo, double hi) {
    Box b;
    b.axes.assign(dim, {lo, hi});
    return b;
  }

  bool contains(const Vec& p, double margin = 0.0) const {
    if (p.size() != dim()) return false;
    for (int i = 0; i < dim(); ++i)
      if (p[i] < axes[i][0] + margin || p[i] > axes[i][1] - margin) return false;
    return true;
  }

  Vec center() const {
    Vec c(dim());
    for (int i = 0; i < dim(); ++i) c[i] = 0.5 * (axes[i][0] + axes[i][1]);
    return c;
  }
};

using MetricField = std::function<Mat(const Vec&)>;
using JFieldFn = std::function<Mat(const Vec&)>;
using MetricGradFn = std::function<Tensor3(const Vec&)>;  // (k,i,j) = d_k g_ij
using MetricHessFn = std::function<Tensor4(const Vec&)>;  // (m,k,i,j) = d_m d_k g_ij
using JGradFn = std::function<Tensor3(const Vec&)>;       // (i,k,j) = d_i J^k_j

/// A coordinate chart with metric and almost-complex fields. All curvature
/// quantities are produced by central differences of the fields (or the
/// analytic derivative callbacks when supplied). First derivatives use
/// fd_step; quantities that differentiate already-differentiated data (nabla R
/// and derivatives of the nu field) use the wider fd_step_outer so the noise
/// of the inner evaluation is not amplified.
class ChartManifold {
 public:
  std::string name;
  Box domain;
  MetricField metric;
  JFieldFn j_field;
  MetricGradFn metric_grad;  // optional
  MetricHessFn metric_hess;  // optional
  JGradFn j_grad;            // optional
  double fd_step = 1e-4;
  double fd_step_outer = 3e-3;

  int dim() const { return domain.dim(); }

  /// Margin required between an evaluation point and the box boundary:
  /// three stencil widths of the deepest (outer) stencil.
  double required_margin() const { return 3.0 * (fd_step_outer + 2.0 * fd_step); }

  HermitianPoint at(const Vec& p, double tol = 1e-8) const {
    require_inside(p, 0.0);
    HermitianPoint H(metric(p), j_field(p));
    H.validate(tol);
    return H;
  }

  void require_inside(const Vec& p, double margin) const {
    if (p.size() != dim())
      throw std::invalid_argument(name + ": point dimension mismatch");
    if (!domain.contains(p, margin))
      throw std::invalid_argument(name +
                                  ": point too close to the chart boundary for the "
                                  "requested stencil");
  }
};

namespace detail {

inline Tensor3 fd_metric_grad(const ChartManifold& M, const Vec& p) {
  const int n = M.dim();
  const double h = M.fd_step;
  Tensor3 dg(n);
  Vec q = p;
  for (int k = 0; k < n; ++k) {
    q[k] = p[k] + h;
    Mat gp = M.metric(q);
    q[k] = p[k] - h;
    Mat gm = M.metric(q);
    q[k] = p[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) dg(k, i, j) = (gp(i, j) - gm(i, j)) / (2.0 * h);
  }
  return dg;
}

inline Tensor3 metric_grad_at(const ChartManifold& M, const Vec& p) {
  return M.metric_grad ? M.metric_grad(p) : fd_metric_grad(M, p);
}

inline Tensor3 fd_j_grad(const ChartManifold& M, const Vec& p) {
  const int n = M.dim();
  const double h = M.fd_step;
  Tensor3 dJ(n);
  Vec q = p;
  for (int i = 0; i < n; ++i) {
    q[i] = p[i] + h;
    Mat jp = M.j_field(q);
    q[i] = p[i] - h;
    Mat jm = M.j_field(q);
    q[i] = p[i];
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) dJ(i, k, l) = (jp(k, l) - jm(k, l)) / (2.0 * h);
  }
  return dJ;
}

inline Tensor3 j_grad_at(const ChartManifold& M, const Vec& p) {
  return M.j_grad ? M.j_grad(p) : fd_j_grad(M, p);
}

}  // namespace detail

namespace detail {

inline Mat spd_inverse(const Mat& g, const std::string& who) {
  Eigen::LLT<Mat> llt(g);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument(who + ": metric matrix is not positive definite");
  return llt.solve(Mat::Identity(g.rows(), g.cols()));
}

}  // namespace detail

/// Christoffel symbols Gamma^k_ij, returned as T(k,i,j); symmetric in (i,j).
inline Tensor3 christoffel(const ChartManifold& M, const Vec& p) {
  const int n = M.dim();
  M.require_inside(p, M.fd_step);
  Mat g = M.metric(p);
  Mat ginv = detail::spd_inverse(g, M.name);
  Tensor3 dg = detail::metric_grad_at(M, p);
  Tensor3 gamma(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        double acc = 0.0;
        for (int l = 0; l < n; ++l)
          acc += ginv(k, l) * (dg(i, j, l) + dg(j, i, l) - dg(l, i, j));
        gamma(k, i, j) = 0.5 * acc;
        gamma(k, j, i) = gamma(k, i, j);
      }
  return gamma;
}

namespace detail {

/// d_m Gamma^k_ij as T4(m,k,i,j); analytic when both metric callbacks exist,
/// otherwise a central difference of christoffel (nested first derivatives).
inline Tensor4 christoffel_grad(const ChartManifold& M, const Vec& p) {
  const int n = M.dim();
  Tensor4 dgamma(n);
  if (M.metric_grad && M.metric_hess) {
    Mat g = M.metric(p);
    Mat ginv = spd_inverse(g, M.name);
    Tensor3 dg = M.metric_grad(p);
    Tensor4 d2g = M.metric_hess(p);
    for (int m = 0; m < n; ++m) {
      Mat dgm(n, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) dgm(a, b) = dg(m, a, b);
      Mat dginv = -ginv * dgm * ginv;
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int l = 0; l < n; ++l) {
              acc += dginv(k, l) * (dg(i, j, l) + dg(j, i, l) - dg(l, i, j));
              acc += ginv(k, l) *
                     (d2g(m, i, j, l) + d2g(m, j, i, l) - d2g(m, l, i, j));
            }
            dgamma(m, k, i, j) = 0.5 * acc;
          }
    }
    return dgamma;
  }
  const double h = M.fd_step;
  Vec q = p;
  for (int m = 0; m < n; ++m) {
    q[m] = p[m] + h;
    Tensor3 gp = christoffel(M, q);
    q[m] = p[m] - h;
    Tensor3 gm = christoffel(M, q);
    q[m] = p[m];
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          dgamma(m, k, i, j) = (gp(k, i, j) - gm(k, i, j)) / (2.0 * h);
  }
  return dgamma;
}

}  // namespace detail

/// Riemann tensor R_{ijkl} = g(R(e_i,e_j)e_k, e_l) with
/// R(X,Y)Z = [nabla_X, nabla_Y]Z - nabla_[X,Y] Z, so that K(plane) = R(x,y,y,x)
/// is +1 on the unit round sphere.
inline CurvatureTensor riemann(const ChartManifold& M, const Vec& p) {
  const int n = M.dim();
  M.require_inside(p, 2.0 * M.fd_step);
  Mat g = M.metric(p);
  Tensor3 gamma = christoffel(M, p);
  Tensor4 dgamma = detail::christoffel_grad(M, p);
  CurvatureTensor R(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        for (int m = 0; m < n; ++m) {
          double a = dgamma(i, m, j, k) - dgamma(j, m, i, k);
          for (int l = 0; l < n; ++l)
            a += gamma(l, j, k) * gamma(m, i, l) - gamma(l, i, k) * gamma(m, j, l);
          for (int l = 0; l < n; ++l) R(i, j, k, l) += a * g(m, l);
        }
      }
  return R;
}

/// Covariant derivative of J: T(i,k,j) = (nabla_i J)^k_j.
inline Tensor3 nabla_j(const ChartManifold& M, const Vec& p) {
  const int n = M.dim();
  M.require_inside(p, M.fd_step);
  Tensor3 dJ = detail::j_grad_at(M, p);
  Tensor3 gamma = christoffel(M, p);
  Mat J = M.j_field(p);
  Tensor3 out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        double acc = dJ(i, k, j);
        for (int l = 0; l < n; ++l)
          acc += gamma(k, i, l) * J(l, j) - gamma(l, i, j) * J(k, l);
        out(i, k, j) = acc;
      }
  return out;
}

/// Covariant derivative of R along the coordinate direction d:
/// (nabla_d R)_{ijkl} = d_d R_{ijkl} - Gamma^m_{di} R_{mjkl} - ... (one
/// correction per slot). The partial derivative differences Riemann values at
/// p +/- fd_step_outer.
inline Tensor4 nabla_r_dir(const ChartManifold& M, const Vec& p, int d) {
  const int n = M.dim();
  if (d < 0 || d >= n) throw std::invalid_argument("nabla_r_dir: bad direction");
  const double H = M.fd_step_outer;
  M.require_inside(p, H + 2.0 * M.fd_step);
  Vec q = p;
  q[d] = p[d] + H;
  CurvatureTensor Rp = riemann(M, q);
  q[d] = p[d] - H;
  CurvatureTensor Rm = riemann(M, q);
  CurvatureTensor R0 = riemann(M, p);
  Tensor3 gamma = christoffel(M, p);
  Tensor4 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double acc = (Rp(i, j, k, l) - Rm(i, j, k, l)) / (2.0 * H);
          for (int m = 0; m < n; ++m)
            acc -= gamma(m, d, i) * R0(m, j, k, l) +
                   gamma(m, d, j) * R0(i, m, k, l) +
                   gamma(m, d, k) * R0(i, j, m, l) +
                   gamma(m, d, l) * R0(i, j, k, m);
          out(i, j, k, l) = acc;
        }
  return out;
}

/// All coordinate directions stacked: T5(d,i,j,k,l) = (nabla_d R)_{ijkl}.
inline Tensor5 nabla_r(const ChartManifold& M, const Vec& p) {
  const int n = M.dim();
  const double H = M.fd_step_outer;
  M.require_inside(p, H + 2.0 * M.fd_step);
  CurvatureTensor R0 = riemann(M, p);
  Tensor3 gamma = christoffel(M, p);
  Tensor5 out(n);
  Vec q = p;
  for (int d = 0; d < n; ++d) {
    q[d] = p[d] + H;
    CurvatureTensor Rp = riemann(M, q);
    q[d] = p[d] - H;
    CurvatureTensor Rm = riemann(M, q);
    q[d] = p[d];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double acc = (Rp(i, j, k, l) - Rm(i, j, k, l)) / (2.0 * H);
            for (int m = 0; m < n; ++m)
              acc -= gamma(m, d, i) * R0(m, j, k, l) +
                     gamma(m, d, j) * R0(i, m, k, l) +
                     gamma(m, d, k) * R0(i, j, m, l) +
                     gamma(m, d, l) * R0(i, j, k, m);
            out(d, i, j, k, l) = acc;
          }
  }
  return out;
}

namespace detail {

/// (nabla_a R)(b,c,d,e) from the stacked rank-5 array.
inline double nabla_r_eval(const Tensor5& nr, const Vec& a, const Vec& b,
                           const Vec& c, const Vec& d, const Vec& e) {
  const int n = nr.dim();
  double acc = 0.0;
  for (int dd = 0; dd < n; ++dd) {
    if (a[dd] == 0.0) continue;
    double acc_d = 0.0;
    for (int i = 0; i < n; ++i) {
      if (b[i] == 0.0) continue;
      double acc_i = 0.0;
      for (int j = 0; j < n; ++j) {
        if (c[j] == 0.0) continue;
        double acc_j = 0.0;
        for (int k = 0; k < n; ++k) {
          if (d[k] == 0.0) continue;
          double acc_k = 0.0;
          for (int l = 0; l < n; ++l) acc_k += nr(dd, i, j, k, l) * e[l];
          acc_j += acc_k * d[k];
        }
        acc_i += acc_j * c[j];
      }
      acc_d += acc_i * b[i];
    }
    acc += acc_d * a[dd];
  }
  return acc;
}

/// (nabla_a J) b as a vector.
inline Vec nabla_j_apply(const Tensor3& nj, const Vec& a, const Vec& b) {
  const int n = nj.dim();
  Vec out = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0.0) continue;
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += nj(i, k, j) * b[j];
      out[k] += a[i] * acc;
    }
  }
  return out;
}

}  // namespace detail

/// Contracted second Bianchi identity residual
/// |(nabla_x R)(y,z,z,y) + (nabla_y R)(z,x,z,y) + (nabla_z R)(x,y,z,y)|
/// over an antiholomorphic triple; vanishes (within the FD tier) on every
/// manifold.
inline double bianchi2_residual(const ChartManifold& M, const Vec& p,
                                const AntiholoTriple& t) {
  Tensor5 nr = nabla_r(M, p);
  double s = detail::nabla_r_eval(nr, t.x, t.y, t.z, t.z, t.y) +
             detail::nabla_r_eval(nr, t.y, t.z, t.x, t.z, t.y) +
             detail::nabla_r_eval(nr, t.z, t.x, t.y, t.z, t.y);
  return std::abs(s);
}

/// Scalar field q -> nu(q): the pointwise antiholomorphic constant, extracted
/// from seeded theta-constancy sampling at theta = pi/2. The fixed seed makes
/// this a deterministic (and numerically smooth) function of q, so it can be
/// differentiated by finite differences.
struct NuFieldOptions {
  int plane_samples = 64;
  std::uint64_t seed = 0;
};

using NuField = std::function<double(const Vec&)>;

inline NuField make_nu_field(ChartManifold M, NuFieldOptions opt = {}) {
  return [M = std::move(M), opt](const Vec& q) {
    constexpr double half_pi = std::numbers::pi / 2;
    HermitianPoint H = M.at(q);
    CurvatureTensor R = riemann(M, q);
    return theta_constancy(R, H, half_pi, opt.plane_samples, opt.seed).constant;
  };
}

namespace detail {

/// Directional derivative of a scalar field along the coordinate vector v.
inline double directional_derivative(const ChartManifold& M, const NuField& f,
                                     const Vec& p, const Vec& v) {
  const double H = M.fd_step_outer;
  double vmax = v.cwiseAbs().maxCoeff();
  M.require_inside(p, H * vmax + 2.0 * M.fd_step);
  return (f(p + H * v) - f(p - H * v)) / (2.0 * H);
}

}  // namespace detail

struct SixTermOptions {
  double precondition_tol = 1e-4;  // RK + antiholomorphic-constancy gate
  NuFieldOptions nu;
  NuField nu_override;  // when set, used instead of the extracted field
};

/// The six-term identity that the proof of the antiholomorphic Schur theorem
/// derives from the curvature decomposition and the second Bianchi identity:
///   2 g(y,(nabla_x J)z) S(y,Jz) + g(z,(nabla_y J)y) S(x,Jz)
///   + g(x,(nabla_y J)z) S(z,Jy) + g(x,(nabla_z J)y) S(y,Jz)
///   + g(y,(nabla_z J)z) S(x,Jy) + 3 x(nu)  = 0.
/// Returns the absolute value of the left side. Preconditions (the manifold is
/// RK and pointwise antiholomorphic-constant at p) are checked and violations
/// reported as errors.
inline double six_term_identity_residual(const ChartManifold& M, const Vec& p,
                                          const AntiholoTriple& t,
                                          SixTermOptions opt = {}) {
  constexpr double half_pi = std::numbers::pi / 2;
  HermitianPoint H = M.at(p);
  validate_triple(H, t, 1e-6);
  CurvatureTensor R = riemann(M, p);
  double rk = rk_residual(R, H);
  if (!(rk <= opt.precondition_tol))
    throw std::invalid_argument(M.name +
                                ": six-term identity precondition failed, RK "
                                "residual " +
                                std::to_string(rk));
  ConstancyReport anti =
      theta_constancy(R, H, half_pi, opt.nu.plane_samples, opt.nu.seed);
  if (!(anti.spread <= opt.precondition_tol))
    throw std::invalid_argument(M.name +
                                ": six-term identity precondition failed, "
                                "antiholomorphic spread " +
                                std::to_string(anti.spread));

  Tensor3 nj = nabla_j(M, p);
  RicciForm S = ricci(R, H);
  const Mat& J = H.J;
  auto sform = [&](const Vec& a, const Vec& b) { return S.eval(a, (J * b).eval()); };

  double sum = 0.0;
  sum += 2.0 * H.inner(t.y, detail::nabla_j_apply(nj, t.x, t.z)) * sform(t.y, t.z);
  sum += H.inner(t.z, detail::nabla_j_apply(nj, t.y, t.y)) * sform(t.x, t.z);
  sum += H.inner(t.x, detail::nabla_j_apply(nj, t.y, t.z)) * sform(t.z, t.y);
  sum += H.inner(t.x, detail::nabla_j_apply(nj, t.z, t.y)) * sform(t.y, t.z);
  sum += H.inner(t.y, detail::nabla_j_apply(nj, t.z, t.z)) * sform(t.x, t.y);

  NuField nu = opt.nu_override ? opt.nu_override : make_nu_field(M, opt.nu);
  sum += 3.0 * detail::directional_derivative(M, nu, p, t.x);
  return std::abs(sum);
}

struct NuGradientOptions {
  double precondition_tol = 1e-4;
  double eigenframe_tol = 1e-4;
  NuFieldOptions nu;
};

/// Directional derivatives of the nu field along a J-adapted Ricci eigenframe
/// {e_1..e_m, Je_1..Je_m} at p. Errors when pointwise antiholomorphic
/// constancy fails near p (nu is then ill-defined).
inline Vec nu_gradient(const ChartManifold& M, const Vec& p,
                       NuGradientOptions opt = {}) {
  constexpr double half_pi = std::numbers::pi / 2;
  HermitianPoint H = M.at(p);
  CurvatureTensor R = riemann(M, p);
  ConstancyReport anti =
      theta_constancy(R, H, half_pi, opt.nu.plane_samples, opt.nu.seed);
  if (!(anti.spread <= opt.precondition_tol))
    throw std::invalid_argument(
        M.name + ": nu_gradient precondition failed, antiholomorphic spread " +
        std::to_string(anti.spread));
  RicciForm S = ricci(R, H);
  JAdaptedFrame frame = j_adapted_eigenframe(S, H, opt.eigenframe_tol);
  NuField nu = make_nu_field(M, opt.nu);
  const int n = M.dim();
  Vec out(n);
  for (int i = 0; i < n; ++i)
    out[i] = detail::directional_derivative(M, nu, p, frame.frame.col(i));
  return out;
}

/// Everything the differential stack produces at one point.
struct PointGeometry {
  Vec point;
  HermitianPoint H;
  Tensor3 gamma;
  CurvatureTensor R;
  RicciForm S;
  Tensor3 nablaJ;
  std::optional<Tensor5> nablaR;
};

inline PointGeometry point_geometry(const ChartManifold& M, const Vec& p,
                                    bool with_nabla_r = false) {
  PointGeometry g;
  g.point = p;
  g.H = M.at(p);
  g.gamma = christoffel(M, p);
  g.R = riemann(M, p);
  g.S = ricci(g.R, g.H);
  g.nablaJ = nabla_j(M, p);
  if (with_nabla_r) g.nablaR = nabla_r(M, p);
  return g;
}

}  // namespace hermlab
