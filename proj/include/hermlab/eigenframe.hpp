#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hermlab/curvature.hpp"
#include "hermlab/hermitian_point.hpp"

namespace hermlab {

/// A g-orthonormal basis {e_1..e_m, Je_1..Je_m} where each e_i is an
/// eigenvector of the Ricci endomorphism g^{-1} S. Columns 0..m-1 of `frame`
/// hold e_i, columns m..2m-1 hold Je_i; lambda[i] is the eigenvalue of e_i.
struct JAdaptedFrame {
  Mat frame;
  Vec lambda;

  int m() const { return static_cast<int>(lambda.size()); }
  Vec e(int i) const { return frame.col(i); }
  Vec je(int i) const { return frame.col(m() + i); }
};

/// Builds the frame. Requires S to be J-invariant (S(Jx,Jy) = S(x,y)) within
/// tol: otherwise the eigenspaces need not be J-invariant and a frame of the
/// stated form may not exist, so the violation is surfaced as an error.
inline JAdaptedFrame j_adapted_eigenframe(const RicciForm& S, const HermitianPoint& H,
                                          double tol = 1e-8) {
  const int n = H.dim();
  const int m = n / 2;
  if (S.dim() != n)
    throw std::invalid_argument("j_adapted_eigenframe: dimension mismatch");
  double jres = j_invariance_residual(S.S, H);
  if (!(jres <= tol))
    throw std::invalid_argument(
        "j_adapted_eigenframe: S is not J-invariant (residual " +
        std::to_string(jres) + ")");

  // Generalized symmetric eigenproblem S v = lambda g v; eigenvectors come out
  // g-orthonormal. Eigenspaces are J-invariant because g^{-1}S commutes with J.
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(S.S, H.g);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("j_adapted_eigenframe: eigensolver failed");
  Vec evals = es.eigenvalues();
  Mat evecs = es.eigenvectors();

  double scale = std::max(1.0, evals.cwiseAbs().maxCoeff());
  double cluster_tol = 1e-7 * scale;

  JAdaptedFrame out;
  out.frame = Mat(n, n);
  out.lambda = Vec(m);

  int picked = 0;
  std::vector<Vec> chosen;  // e_1, Je_1, e_2, Je_2, ... as they are fixed
  int i = 0;
  while (i < n) {
    // cluster of (numerically) equal eigenvalues
    int j = i;
    while (j < n && std::abs(evals[j] - evals[i]) <= cluster_tol) ++j;
    std::vector<Vec> space;
    for (int k = i; k < j; ++k) space.push_back(evecs.col(k));
    // peel off J-adapted pairs inside the eigenspace
    while (!space.empty()) {
      Vec e = space.front();
      if (!detail::project_unit(H, chosen, e)) {
        space.erase(space.begin());
        continue;
      }
      Vec je = H.J * e;
      // guard: je must stay inside the eigenspace numerically
      if (picked >= m)
        throw std::runtime_error("j_adapted_eigenframe: pairing overflow");
      out.frame.col(picked) = e;
      out.frame.col(m + picked) = je;
      out.lambda[picked] = evals[i];
      ++picked;
      chosen.push_back(e);
      chosen.push_back(je);
      space.erase(space.begin());
    }
    i = j;
  }
  if (picked != m)
    throw std::runtime_error("j_adapted_eigenframe: found " +
                             std::to_string(picked) + " pairs, expected " +
                             std::to_string(m));
  return out;
}

}  // namespace hermlab
