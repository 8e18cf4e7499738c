#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "support.hpp"

using namespace hermlab;
using Catch::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("theta constancy on constant and space-form tensors", "[constancy]") {
  HermitianPoint H = HermitianPoint::standard(6);

  for (double theta : {0.0, kPi / 6, kPi / 2}) {
    ConstancyReport rep = theta_constancy(pi1(H), H, theta, 32, 1);
    CHECK(rep.constant == Approx(1.0).margin(1e-12));
    CHECK(rep.spread < 1e-12);
    CHECK(rep.samples == 32);
    CHECK(rep.constant >= rep.kmin);
    CHECK(rep.constant <= rep.kmax);
  }

  // nu = 1, mu = 4: K(pi/4) = 1 + 3/2 = 2.5
  CurvatureTensor R = test::space_form_tensor(H, 1.0, 4.0);
  ConstancyReport rep = theta_constancy(R, H, kPi / 4, 64, 2);
  CHECK(rep.constant == Approx(2.5).margin(1e-12));
  CHECK(rep.spread < 1e-12);

  SampleStream rng(3);
  CurvatureTensor bad = test::random_curvature(H, rng);
  CHECK(theta_constancy(bad, H, kPi / 4, 64, 2).spread > 1e-2);

  CHECK_THROWS_AS(theta_constancy(R, H, kPi / 4, 1, 2), std::invalid_argument);
}

TEST_CASE("theta constancy is sample-order independent", "[constancy]") {
  SampleStream rng(5);
  HermitianPoint H = HermitianPoint::random(6, rng);
  CurvatureTensor R = test::random_curvature(H, rng);
  const int n = 48;
  const std::uint64_t seed = 17;
  ConstancyReport rep = theta_constancy(R, H, kPi / 3, n, seed);
  // recompute the mean in reverse order from the same split streams
  SampleStream base(seed);
  double mean = 0.0;
  for (int s = n - 1; s >= 0; --s) {
    SampleStream sub = base.split(static_cast<std::uint64_t>(s));
    TangentPlane p = sample_theta_plane(H, kPi / 3, sub);
    mean += R.eval(p.x, p.y, p.y, p.x);
  }
  mean /= n;
  CHECK(rep.constant == Approx(mean).margin(1e-12));
}

TEST_CASE("the two-constant family satisfies the proof-chain identities", "[constancy]") {
  SampleStream rng(7);
  for (int t = 0; t < 20; ++t) {
    HermitianPoint H = HermitianPoint::random(6, rng);
    double nu = 3.0 * rng.gaussian();
    double mu = 3.0 * rng.gaussian();
    CurvatureTensor R = test::space_form_tensor(H, nu, mu);

    CHECK(holomorphic_variation_residual(R, H, 16, t) < 1e-12);

    double theta = 0.1 + 1.3 * rng.uniform();
    ConstancyReport rep = theta_constancy(R, H, theta, 16, t);
    double want = nu + (mu - nu) * std::cos(theta) * std::cos(theta);
    CHECK(rep.constant == Approx(want).margin(1e-11));
    CHECK(rep.spread < 1e-11);
    CHECK(theta_interpolation_residual(mu, nu, theta, rep.constant) < 1e-11);
  }
}

TEST_CASE("holomorphic variation residual: zero cases and generic failure", "[constancy]") {
  HermitianPoint H = HermitianPoint::standard(6);
  CHECK(holomorphic_variation_residual(CurvatureTensor(6), H, 8, 0) == 0.0);
  SampleStream rng(9);
  CHECK(holomorphic_variation_residual(test::random_curvature(H, rng), H, 16, 0) > 1e-3);
}

TEST_CASE("theta interpolation residual worked examples", "[constancy]") {
  CHECK(theta_interpolation_residual(4.0, 1.0, kPi / 3, 1.75) < 1e-15);
  for (double theta : {0.0, 0.4, 1.1, kPi / 2})
    CHECK(theta_interpolation_residual(2.5, 2.5, theta, 2.5) < 1e-15);
  CHECK(theta_interpolation_residual(4.0, 1.0, 0.0, 4.0) < 1e-15);
}

TEST_CASE("space form fit", "[constancy]") {
  HermitianPoint H = HermitianPoint::standard(6);

  SpaceFormFit fit = fit_space_form(test::space_form_tensor(H, 1.0, 4.0), H);
  CHECK(fit.nu == Approx(1.0).margin(1e-12));
  CHECK(fit.mu == Approx(4.0).margin(1e-12));
  CHECK(fit.residual < 1e-12);

  fit = fit_space_form(pi1(H), H);
  CHECK(fit.nu == Approx(1.0).margin(1e-12));
  CHECK(fit.mu == Approx(1.0).margin(1e-12));
  CHECK(fit.residual < 1e-12);

  SampleStream rng(11);
  CurvatureTensor R = pi1(H);
  R.comps().axpy(1e-3, test::random_curvature(H, rng).comps());
  CHECK(fit_space_form(R, H).residual > 1e-5);
}

TEST_CASE("rk form fit closes on the worked substitutions", "[constancy]") {
  HermitianPoint H = HermitianPoint::standard(6);

  // R = pi1: S = 5g, psi(S) = 10 pi2, nu = 1; (10/6) pi2 + pi1 - (5/3) pi2 = pi1
  RkFormFit fit = fit_rk_form(pi1(H), H);
  CHECK(fit.nu == Approx(1.0).margin(1e-12));
  CHECK(max_abs(fit.S.S - 5.0 * H.g) < 1e-12);
  CHECK(fit.residual < 1e-12);
  CHECK(fit.rk_residual < 1e-12);

  fit = fit_rk_form(CurvatureTensor(6), H);
  CHECK(fit.nu == 0.0);
  CHECK(fit.residual == 0.0);

  // R = (c/4)(pi1 + pi2) with c = 4: S = 8g, nu = 1
  fit = fit_rk_form(test::space_form_tensor(H, 1.0, 4.0), H);
  CHECK(max_abs(fit.S.S - 8.0 * H.g) < 1e-12);
  CHECK(fit.nu == Approx(1.0).margin(1e-12));
  CHECK(fit.residual < 1e-12);

  CHECK_THROWS_AS(fit_rk_form(pi1(HermitianPoint::standard(4)),
                              HermitianPoint::standard(4)),
                  std::invalid_argument);
}
