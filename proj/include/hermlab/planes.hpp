#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermlab/hermitian_point.hpp"

namespace hermlab {

/// An orthonormal 2-frame spanning a tangent 2-plane: g(x,x) = g(y,y) = 1,
/// g(x,y) = 0 with respect to the ambient HermitianPoint.
struct TangentPlane {
  Vec x;
  Vec y;
};

/// An orthonormal 3-frame spanning an antiholomorphic 3-plane:
/// g(a,b) = delta and g(a,Jb) = 0 for all a, b drawn from {x,y,z}.
struct AntiholoTriple {
  Vec x;
  Vec y;
  Vec z;
};

inline double plane_residual(const HermitianPoint& H, const TangentPlane& p) {
  return std::max({std::abs(H.inner(p.x, p.x) - 1.0),
                   std::abs(H.inner(p.y, p.y) - 1.0),
                   std::abs(H.inner(p.x, p.y))});
}

inline void validate_plane(const HermitianPoint& H, const TangentPlane& p,
                           double tol = 1e-6) {
  if (p.x.size() != H.dim() || p.y.size() != H.dim())
    throw std::invalid_argument("TangentPlane: dimension mismatch");
  double r = plane_residual(H, p);
  if (!(r <= tol))
    throw std::invalid_argument("TangentPlane: basis not orthonormal, residual " +
                                std::to_string(r));
}

/// Kaehler angle of the plane: arccos|g(x,Jy)| in [0, pi/2]. Invariant under
/// change of orthonormal basis of the same plane.
inline double kahler_angle(const HermitianPoint& H, const TangentPlane& p,
                           double tol = 1e-6) {
  validate_plane(H, p, tol);
  double c = std::clamp(std::abs(H.omega(p.x, p.y)), 0.0, 1.0);
  return std::acos(c);
}

namespace detail {

/// Projects v g-orthogonally to the span of the (g-orthonormal) columns listed
/// in basis and normalizes. Returns false when the projection residual is
/// degenerate (norm < 1e-10) and the caller should resample.
inline bool project_unit(const HermitianPoint& H, const std::vector<Vec>& basis,
                         Vec& v) {
  for (const Vec& b : basis) v -= H.inner(b, v) * b;
  // second pass: modified Gram-Schmidt re-orthogonalization
  for (const Vec& b : basis) v -= H.inner(b, v) * b;
  double n = H.norm(v);
  if (n < 1e-10) return false;
  v /= n;
  return true;
}

inline Vec sample_unit_from(const HermitianPoint& H, const std::vector<Vec>& basis,
                            SampleStream& rng, const char* what) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec v = rng.gaussian_vec(H.dim());
    if (project_unit(H, basis, v)) return v;
  }
  throw std::runtime_error(std::string("sampling degenerate: ") + what);
}

}  // namespace detail

inline Vec sample_unit(const HermitianPoint& H, SampleStream& rng) {
  return detail::sample_unit_from(H, {}, rng, "unit vector");
}

/// A generic random plane (no Kaehler-angle constraint).
inline TangentPlane sample_plane(const HermitianPoint& H, SampleStream& rng) {
  Vec x = sample_unit(H, rng);
  Vec y = detail::sample_unit_from(H, {x}, rng, "second plane vector");
  return {std::move(x), std::move(y)};
}

/// A plane with prescribed Kaehler angle theta, spanned by
/// {Jx, x cos(theta) + y sin(theta)} for random unit x and unit y with
/// g(x,y) = g(x,Jy) = 0. Needs dim >= 4 whenever theta > 0.
inline TangentPlane sample_theta_plane(const HermitianPoint& H, double theta,
                                       SampleStream& rng) {
  constexpr double half_pi = std::numbers::pi / 2;
  if (!(theta >= 0.0 && theta <= half_pi + 1e-12))
    throw std::invalid_argument("sample_theta_plane: theta outside [0, pi/2]");
  double s = std::sin(theta);
  double c = std::cos(theta);
  Vec x = sample_unit(H, rng);
  Vec Jx = H.J * x;
  if (s == 0.0) return {std::move(Jx), std::move(x)};
  if (H.dim() < 4)
    throw std::invalid_argument("sample_theta_plane: theta > 0 needs dim >= 4");
  Vec y = detail::sample_unit_from(H, {x, Jx}, rng, "theta-plane partner");
  return {std::move(Jx), (c * x + s * y).eval()};
}

inline TangentPlane sample_theta_plane(const HermitianPoint& H, double theta,
                                       std::uint64_t seed) {
  SampleStream rng(seed);
  return sample_theta_plane(H, theta, rng);
}

/// An orthonormal triple spanning an antiholomorphic 3-plane, built by
/// iterated projection onto the g- and J-orthogonal complement. Needs
/// dim >= 6.
inline AntiholoTriple sample_antiholomorphic_triple(const HermitianPoint& H,
                                                    SampleStream& rng) {
  if (H.dim() < 6)
    throw std::invalid_argument(
        "sample_antiholomorphic_triple: no antiholomorphic 3-plane below dim 6");
  Vec x = sample_unit(H, rng);
  Vec y = detail::sample_unit_from(H, {x, (H.J * x).eval()}, rng, "triple y");
  Vec z = detail::sample_unit_from(
      H, {x, (H.J * x).eval(), y, (H.J * y).eval()}, rng, "triple z");
  return {std::move(x), std::move(y), std::move(z)};
}

inline AntiholoTriple sample_antiholomorphic_triple(const HermitianPoint& H,
                                                    std::uint64_t seed) {
  SampleStream rng(seed);
  return sample_antiholomorphic_triple(H, rng);
}

/// Max-norm residual of the nine orthonormality / antiholomorphy conditions.
inline double triple_residual(const HermitianPoint& H, const AntiholoTriple& t) {
  const Vec* v[3] = {&t.x, &t.y, &t.z};
  double r = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double want = (a == b) ? 1.0 : 0.0;
      r = std::max(r, std::abs(H.inner(*v[a], *v[b]) - want));
      r = std::max(r, std::abs(H.omega(*v[a], *v[b])));
    }
  return r;
}

inline void validate_triple(const HermitianPoint& H, const AntiholoTriple& t,
                            double tol = 1e-6) {
  if (t.x.size() != H.dim() || t.y.size() != H.dim() || t.z.size() != H.dim())
    throw std::invalid_argument("AntiholoTriple: dimension mismatch");
  double r = triple_residual(H, t);
  if (!(r <= tol))
    throw std::invalid_argument("AntiholoTriple: conditions violated, residual " +
                                std::to_string(r));
}

}  // namespace hermlab
