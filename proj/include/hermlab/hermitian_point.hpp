#pragma once

#include <stdexcept>
#include <string>

#include "hermlab/linalg.hpp"
#include "hermlab/rng.hpp"

namespace hermlab {

/// The linear data of an almost Hermitian manifold at one tangent space:
/// a metric g (symmetric positive definite) and an almost complex structure J
/// with J*J = -I and J^T g J = g. Dimension is even, 2m with m >= 1.
struct HermitianPoint {
  Mat g;
  Mat J;

  HermitianPoint() = default;
  HermitianPoint(Mat g_in, Mat J_in) : g(std::move(g_in)), J(std::move(J_in)) {}

  int dim() const { return static_cast<int>(g.rows()); }

  double inner(const Vec& x, const Vec& y) const { return x.dot(g * y); }
  double norm(const Vec& x) const { return std::sqrt(inner(x, x)); }

  /// g(x, Jy), the Kaehler 2-form evaluated on (x, y).
  double omega(const Vec& x, const Vec& y) const { return x.dot(g * (J * y)); }

  /// Max-norm residual of the two structure identities.
  double compat_residual() const {
    const int n = dim();
    double r1 = max_abs(J * J + Mat::Identity(n, n));
    double r2 = max_abs(J.transpose() * g * J - g);
    double r3 = max_abs(g - g.transpose());
    return std::max({r1, r2, r3});
  }

  void validate(double tol = 1e-8) const {
    if (dim() < 2 || dim() % 2 != 0)
      throw std::invalid_argument("HermitianPoint: dimension must be even and >= 2");
    if (g.rows() != g.cols() || J.rows() != J.cols() || J.rows() != g.rows())
      throw std::invalid_argument("HermitianPoint: g and J must be square of equal size");
    if (Eigen::LLT<Mat>(g).info() != Eigen::Success)
      throw std::invalid_argument("HermitianPoint: g is not positive definite");
    double r = compat_residual();
    if (!(r <= tol))
      throw std::invalid_argument("HermitianPoint: structure residual " +
                                  std::to_string(r) + " exceeds tolerance");
  }

  /// The standard structure on R^{2m}: g = I and J e_{2k} = e_{2k+1},
  /// J e_{2k+1} = -e_{2k} (0-based pairs).
  static HermitianPoint standard(int dim) {
    if (dim < 2 || dim % 2 != 0)
      throw std::invalid_argument("HermitianPoint: dimension must be even and >= 2");
    Mat g = Mat::Identity(dim, dim);
    Mat J = Mat::Zero(dim, dim);
    for (int k = 0; k + 1 < dim; k += 2) {
      J(k + 1, k) = 1.0;
      J(k, k + 1) = -1.0;
    }
    return HermitianPoint(std::move(g), std::move(J));
  }

  /// Random compatible pair obtained by pushing the standard structure through
  /// an invertible P close to the identity: g = P^T P, J = P^{-1} J0 P. The
  /// spread keeps the conditioning mild so algebraic identities stay near
  /// rounding level.
  static HermitianPoint random(int dim, SampleStream& rng, double spread = 0.25) {
    HermitianPoint std_pt = standard(dim);
    Mat P = Mat::Identity(dim, dim) + spread / std::sqrt(static_cast<double>(dim)) *
                                          rng.gaussian_mat(dim, dim);
    Mat g = P.transpose() * P;
    g = 0.5 * (g + g.transpose()).eval();
    Mat J = P.partialPivLu().solve(std_pt.J * P);
    return HermitianPoint(std::move(g), std::move(J));
  }
};

}  // namespace hermlab
