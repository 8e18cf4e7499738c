#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately avoid the code paths they check: ricci_oracle sums over an
// explicit g-orthonormal basis instead of contracting with g^{-1}, and
// psi_direct expands the six-term definition per evaluation.

#include <hermlab/hermlab.hpp>

namespace hermlab::test {

/// Direct evaluation of the six-term tensor at four vectors.
inline double psi_direct(const HermitianPoint& H, const RicciForm& S, const Vec& x,
                         const Vec& y, const Vec& z, const Vec& u) {
  auto w = [&](const Vec& a, const Vec& b) { return H.omega(a, b); };
  auto sj = [&](const Vec& a, const Vec& b) { return S.eval(a, (H.J * b).eval()); };
  return w(x, u) * sj(y, z) - w(x, z) * sj(y, u) - 2.0 * w(x, y) * sj(z, u) +
         w(y, z) * sj(x, u) - w(y, u) * sj(x, z) - 2.0 * w(z, u) * sj(x, y);
}

/// Ricci by brute force: sum R(b_i, e_j, e_k, b_i) over the explicit
/// g-orthonormal basis b_i from the Cholesky factor of g.
inline Mat ricci_oracle(const CurvatureTensor& R, const HermitianPoint& H) {
  const int n = H.dim();
  Mat L = H.g.llt().matrixL();
  Mat B = L.transpose().triangularView<Eigen::Upper>().solve(Mat::Identity(n, n));
  Mat S = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Vec ej = Vec::Unit(n, j), ek = Vec::Unit(n, k);
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += R.eval(B.col(i), ej, ek, B.col(i));
      S(j, k) = acc;
    }
  return S;
}

/// A generic curvature tensor with all Riemann symmetries but, for random
/// symmetric A, no compatibility with J: R(i,j,k,l) = A_il A_jk - A_ik A_jl.
inline CurvatureTensor random_curvature(const HermitianPoint& H, SampleStream& rng) {
  const int n = H.dim();
  Mat A = rng.gaussian_mat(n, n);
  A = 0.5 * (A + A.transpose()).eval();
  CurvatureTensor R(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          R(i, j, k, l) = A(i, l) * A(j, k) - A(i, k) * A(j, l);
  return R;
}

/// Tensor of the pointwise-constant family: nu*pi1 + ((mu-nu)/3)*pi2.
inline CurvatureTensor space_form_tensor(const HermitianPoint& H, double nu,
                                         double mu) {
  Tensor4 t = pi1(H).comps();
  t.scale(nu);
  t.axpy((mu - nu) / 3.0, pi2(H).comps());
  return CurvatureTensor(std::move(t));
}

/// Random symmetric J-invariant matrix.
inline Mat random_j_invariant(const HermitianPoint& H, SampleStream& rng) {
  const int n = H.dim();
  Mat S0 = rng.gaussian_mat(n, n);
  S0 = 0.5 * (S0 + S0.transpose()).eval();
  Mat S = 0.5 * (S0 + H.J.transpose() * S0 * H.J);
  return 0.5 * (S + S.transpose()).eval();
}

}  // namespace hermlab::test
