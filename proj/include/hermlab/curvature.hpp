#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "hermlab/hermitian_point.hpp"
#include "hermlab/linalg.hpp"
#include "hermlab/planes.hpp"

namespace hermlab {

/// Rank-4 curvature component array R[i][j][k][l], with
/// R(x,y,z,u) = sum R_{ijkl} x^i y^j z^k u^l and the sign fixed so that
/// K(plane) = R(x,y,y,x) is +1 on the unit round sphere (R = pi1 there).
class CurvatureTensor {
 public:
  CurvatureTensor() = default;
  explicit CurvatureTensor(int n) : comps_(n) {}
  explicit CurvatureTensor(Tensor4 comps) : comps_(std::move(comps)) {}

  int dim() const { return comps_.dim(); }
  Tensor4& comps() { return comps_; }
  const Tensor4& comps() const { return comps_; }

  double operator()(int i, int j, int k, int l) const { return comps_(i, j, k, l); }
  double& operator()(int i, int j, int k, int l) { return comps_(i, j, k, l); }

  /// Full contraction R(x,y,z,u).
  double eval(const Vec& x, const Vec& y, const Vec& z, const Vec& u) const {
    const int n = dim();
    if (x.size() != n || y.size() != n || z.size() != n || u.size() != n)
      throw std::invalid_argument("CurvatureTensor: vector dimension mismatch");
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0.0) continue;
      double acc_i = 0.0;
      for (int j = 0; j < n; ++j) {
        if (y[j] == 0.0) continue;
        double acc_ij = 0.0;
        for (int k = 0; k < n; ++k) {
          if (z[k] == 0.0) continue;
          double acc_ijk = 0.0;
          for (int l = 0; l < n; ++l) acc_ijk += comps_(i, j, k, l) * u[l];
          acc_ij += acc_ijk * z[k];
        }
        acc_i += acc_ij * y[j];
      }
      acc += acc_i * x[i];
    }
    return acc;
  }

  /// Max-norm violation of the pair antisymmetries and the pair-swap symmetry.
  double symmetry_residual() const {
    const int n = dim();
    double r = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double v = comps_(i, j, k, l);
            r = std::max(r, std::abs(v + comps_(j, i, k, l)));
            r = std::max(r, std::abs(v + comps_(i, j, l, k)));
            r = std::max(r, std::abs(v - comps_(k, l, i, j)));
          }
    return r;
  }

  /// Max-norm violation of the first Bianchi identity.
  double bianchi1_residual() const {
    const int n = dim();
    double r = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            r = std::max(r, std::abs(comps_(i, j, k, l) + comps_(j, k, i, l) +
                                     comps_(k, i, j, l)));
    return r;
  }

 private:
  Tensor4 comps_;
};

/// Symmetric Ricci matrix S; S(x,y) = x^T S y.
struct RicciForm {
  Mat S;

  int dim() const { return static_cast<int>(S.rows()); }
  double eval(const Vec& x, const Vec& y) const { return x.dot(S * y); }
};

/// pi1(x,y,z,u) = g(x,u)g(y,z) - g(x,z)g(y,u); the constant-curvature model
/// tensor (the unit round sphere in these conventions).
inline CurvatureTensor pi1(const HermitianPoint& H) {
  const int n = H.dim();
  const Mat& g = H.g;
  CurvatureTensor R(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          R(i, j, k, l) = g(i, l) * g(j, k) - g(i, k) * g(j, l);
  return R;
}

/// pi2(x,y,z,u) = g(x,Ju)g(y,Jz) - g(x,Jz)g(y,Ju) - 2 g(x,Jy)g(z,Ju);
/// the complex-space-form companion tensor, built from the Kaehler form.
inline CurvatureTensor pi2(const HermitianPoint& H) {
  const int n = H.dim();
  Mat F = H.g * H.J;  // F_ij = g(e_i, J e_j)
  F = 0.5 * (F - F.transpose()).eval();
  CurvatureTensor R(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          R(i, j, k, l) = F(i, l) * F(j, k) - F(i, k) * F(j, l) -
                          2.0 * F(i, j) * F(k, l);
  return R;
}

/// Max-norm of J^T S J - S; zero iff S(Jx,Jy) = S(x,y).
inline double j_invariance_residual(const Mat& S, const HermitianPoint& H) {
  return max_abs(H.J.transpose() * S * H.J - S);
}

/// The six-term tensor built from a symmetric Ricci candidate S:
///   psi(S)(x,y,z,u) = g(x,Ju)S(y,Jz) - g(x,Jz)S(y,Ju) - 2 g(x,Jy)S(z,Ju)
///                   + g(y,Jz)S(x,Ju) - g(y,Ju)S(x,Jz) - 2 g(z,Ju)S(x,Jy).
/// Carries the full curvature symmetries when S is J-invariant; callers
/// should screen with j_invariance_residual instead of relying on them
/// otherwise. For S = lambda g it equals 2 lambda pi2.
inline CurvatureTensor psi(const HermitianPoint& H, const RicciForm& S) {
  const int n = H.dim();
  if (S.dim() != n) throw std::invalid_argument("psi: dimension mismatch");
  Mat F = H.g * H.J;   // F_ij = g(e_i, J e_j)
  Mat T = S.S * H.J;   // T_ij = S(e_i, J e_j)
  F = 0.5 * (F - F.transpose()).eval();
  CurvatureTensor R(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          R(i, j, k, l) = F(i, l) * T(j, k) - F(i, k) * T(j, l) -
                          2.0 * F(i, j) * T(k, l) + F(j, k) * T(i, l) -
                          F(j, l) * T(i, k) - 2.0 * T(i, j) * F(k, l);
  return R;
}

/// Ricci contraction S(y,z) = sum_i R(e_i, y, z, e_i) over a g-orthonormal
/// basis; computed basis-free as S_{jk} = g^{ab} R_{ajkb}.
inline RicciForm ricci(const CurvatureTensor& R, const HermitianPoint& H) {
  const int n = H.dim();
  if (R.dim() != n) throw std::invalid_argument("ricci: dimension mismatch");
  Mat ginv = H.g.llt().solve(Mat::Identity(n, n));
  Mat S = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) acc += ginv(a, b) * R(a, j, k, b);
      S(j, k) = acc;
    }
  S = 0.5 * (S + S.transpose()).eval();
  return {std::move(S)};
}

/// The pullback R(J., J., J., J.) as a component array.
inline CurvatureTensor j_pullback(const CurvatureTensor& R, const HermitianPoint& H) {
  const int n = H.dim();
  if (R.dim() != n) throw std::invalid_argument("j_pullback: dimension mismatch");
  const Mat& J = H.J;
  Tensor4 a = R.comps();
  Tensor4 b(n);
  auto contract_first = [&](const Tensor4& src, Tensor4& dst) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double acc = 0.0;
            for (int a2 = 0; a2 < n; ++a2) acc += J(a2, i) * src(j, k, l, a2);
            dst(i, j, k, l) = acc;
          }
  };
  // each pass contracts the current first slot with J and rotates it to the
  // back; four passes restore the slot order with every slot transformed
  contract_first(a, b);
  contract_first(b, a);
  contract_first(a, b);
  contract_first(b, a);
  return CurvatureTensor(std::move(a));
}

/// Max-norm of R(x,y,z,u) - R(Jx,Jy,Jz,Ju) over all component combinations;
/// zero iff R satisfies the RK condition.
inline double rk_residual(const CurvatureTensor& R, const HermitianPoint& H) {
  return R.comps().max_abs_diff(j_pullback(R, H).comps());
}

/// K(plane) = R(x,y,y,x); basis-invariant on the plane.
inline double sectional_curvature(const CurvatureTensor& R, const HermitianPoint& H,
                                  const TangentPlane& plane, double tol = 1e-6) {
  if (R.dim() != H.dim())
    throw std::invalid_argument("sectional_curvature: dimension mismatch");
  validate_plane(H, plane, tol);
  return R.eval(plane.x, plane.y, plane.y, plane.x);
}

}  // namespace hermlab
