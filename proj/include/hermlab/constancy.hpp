#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "hermlab/curvature.hpp"
#include "hermlab/planes.hpp"

namespace hermlab {

/// Result of sampling the curvature of n planes with a fixed Kaehler angle:
/// `constant` is the sample mean, `spread` the max absolute deviation from it.
struct ConstancyReport {
  double constant = 0.0;
  double spread = 0.0;
  int samples = 0;
  double theta = 0.0;
  double kmin = 0.0;
  double kmax = 0.0;
};

namespace detail {

template <typename PlaneSampler>
ConstancyReport constancy_from(const CurvatureTensor& R, double theta, int n,
                               PlaneSampler&& sampler) {
  if (n < 2) throw std::invalid_argument("constancy: need at least 2 samples");
  std::vector<double> ks(n);
  double mean = 0.0;
  for (int s = 0; s < n; ++s) {
    TangentPlane p = sampler(s);
    ks[s] = R.eval(p.x, p.y, p.y, p.x);
    mean += ks[s];
  }
  mean /= n;
  ConstancyReport rep;
  rep.constant = mean;
  rep.samples = n;
  rep.theta = theta;
  rep.kmin = *std::min_element(ks.begin(), ks.end());
  rep.kmax = *std::max_element(ks.begin(), ks.end());
  for (double k : ks) rep.spread = std::max(rep.spread, std::abs(k - mean));
  return rep;
}

}  // namespace detail

/// Samples n theta-holomorphic planes and reports the extracted constant and
/// its spread; the caller compares spread against its tolerance tier.
inline ConstancyReport theta_constancy(const CurvatureTensor& R,
                                       const HermitianPoint& H, double theta,
                                       int n, std::uint64_t seed) {
  SampleStream base(seed);
  return detail::constancy_from(R, theta, n, [&](int s) {
    SampleStream rng = base.split(static_cast<std::uint64_t>(s));
    return sample_theta_plane(H, theta, rng);
  });
}

/// Same aggregation over unconstrained random planes (constant-curvature probe).
inline ConstancyReport plane_constancy(const CurvatureTensor& R,
                                       const HermitianPoint& H, int n,
                                       std::uint64_t seed) {
  SampleStream base(seed);
  return detail::constancy_from(R, -1.0, n, [&](int s) {
    SampleStream rng = base.split(static_cast<std::uint64_t>(s));
    return sample_plane(H, rng);
  });
}

/// max |R(x,Jx,Jx,y)| over n sampled unit pairs with g(x,y) = g(x,Jy) = 0.
inline double holomorphic_variation_residual(const CurvatureTensor& R,
                                              const HermitianPoint& H, int n,
                                              std::uint64_t seed) {
  if (H.dim() < 4)
    throw std::invalid_argument("holomorphic_variation_residual: needs dim >= 4");
  SampleStream base(seed);
  double r = 0.0;
  for (int s = 0; s < n; ++s) {
    SampleStream rng = base.split(static_cast<std::uint64_t>(s));
    Vec x = sample_unit(H, rng);
    Vec Jx = H.J * x;
    Vec y = detail::sample_unit_from(H, {x, Jx}, rng, "variation partner");
    r = std::max(r, std::abs(R.eval(x, Jx, Jx, y)));
  }
  return r;
}

/// |mu cos^2(theta) + nu sin^2(theta) - c|, the combination that a pointwise
/// theta-constant curvature must satisfy.
inline double theta_interpolation_residual(double mu, double nu, double theta,
                                           double c) {
  double ct = std::cos(theta);
  double st = std::sin(theta);
  return std::abs(mu * ct * ct + nu * st * st - c);
}

/// Fit of R against nu*pi1 + ((mu-nu)/3)*pi2, with nu and mu extracted as the
/// mean antiholomorphic / holomorphic sectional curvatures. A large residual
/// is data (R is simply not of that form), not an error.
struct SpaceFormFit {
  double nu = 0.0;
  double mu = 0.0;
  double residual = 0.0;
};

inline SpaceFormFit fit_space_form(const CurvatureTensor& R, const HermitianPoint& H,
                                   int n = 64, std::uint64_t seed = 0) {
  if (H.dim() < 4) throw std::invalid_argument("fit_space_form: needs dim >= 4");
  constexpr double half_pi = std::numbers::pi / 2;
  SpaceFormFit fit;
  fit.nu = theta_constancy(R, H, half_pi, n, seed).constant;
  fit.mu = theta_constancy(R, H, 0.0, n, seed).constant;
  Tensor4 model = pi1(H).comps();
  model.scale(fit.nu);
  model.axpy((fit.mu - fit.nu) / 3.0, pi2(H).comps());
  fit.residual = R.comps().max_abs_diff(model);
  return fit;
}

/// Fit of R against (1/6) psi(S) + nu*pi1 - ((2m-1)/3) nu*pi2 with S = ricci(R)
/// and nu the mean antiholomorphic curvature. rk_residual is reported so the
/// caller can tell when the decomposition was applied outside its RK hypothesis.
struct RkFormFit {
  double nu = 0.0;
  double residual = 0.0;
  double rk_residual = 0.0;
  RicciForm S;
};

inline RkFormFit fit_rk_form(const CurvatureTensor& R, const HermitianPoint& H,
                             int n = 64, std::uint64_t seed = 0) {
  const int dim = H.dim();
  if (dim < 6) throw std::invalid_argument("fit_rk_form: needs dim >= 6");
  constexpr double half_pi = std::numbers::pi / 2;
  RkFormFit fit;
  fit.S = ricci(R, H);
  fit.nu = theta_constancy(R, H, half_pi, n, seed).constant;
  fit.rk_residual = rk_residual(R, H);
  Tensor4 model = psi(H, fit.S).comps();
  model.scale(1.0 / 6.0);
  model.axpy(fit.nu, pi1(H).comps());
  model.axpy(-(dim - 1) / 3.0 * fit.nu, pi2(H).comps());
  fit.residual = R.comps().max_abs_diff(model);
  return fit;
}

}  // namespace hermlab
