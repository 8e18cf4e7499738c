#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace hermlab;
using Catch::Approx;

namespace {

double frame_residual(const JAdaptedFrame& f, const HermitianPoint& H) {
  const int n = H.dim();
  double r = max_abs(f.frame.transpose() * H.g * f.frame - Mat::Identity(n, n));
  for (int i = 0; i < f.m(); ++i)
    r = std::max(r, (H.J * f.e(i) - f.je(i)).cwiseAbs().maxCoeff());
  return r;
}

}  // namespace

TEST_CASE("scalar Ricci gives any J-adapted frame", "[eigenframe]") {
  SampleStream rng(1);
  HermitianPoint H = HermitianPoint::random(6, rng);
  RicciForm S{(5.0 * H.g).eval()};
  JAdaptedFrame f = j_adapted_eigenframe(S, H);
  CHECK(f.m() == 3);
  CHECK(frame_residual(f, H) < 1e-10);
  for (int i = 0; i < 3; ++i) CHECK(f.lambda[i] == Approx(5.0).margin(1e-10));
}

TEST_CASE("distinct eigenvalues are recovered with their eigenspaces", "[eigenframe]") {
  SampleStream rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    HermitianPoint H = HermitianPoint::random(6, rng);
    // build S from a known J-adapted frame with distinct eigenvalues
    Vec x1 = sample_unit(H, rng);
    Vec jx1 = H.J * x1;
    Vec x2 = detail::sample_unit_from(H, {x1, jx1}, rng, "x2");
    Vec jx2 = H.J * x2;
    Vec x3 = detail::sample_unit_from(H, {x1, jx1, x2, jx2}, rng, "x3");
    Vec jx3 = H.J * x3;
    const double lam[3] = {1.0, 2.0, 5.0};
    const Vec* pairs[3][2] = {{&x1, &jx1}, {&x2, &jx2}, {&x3, &jx3}};
    Mat S = Mat::Zero(6, 6);
    for (int i = 0; i < 3; ++i)
      for (const Vec* v : pairs[i]) {
        Vec gv = H.g * (*v);
        S += lam[i] * (gv * gv.transpose());
      }
    S = 0.5 * (S + S.transpose()).eval();
    REQUIRE(j_invariance_residual(S, H) < 1e-12);

    JAdaptedFrame f = j_adapted_eigenframe(RicciForm{S}, H);
    CHECK(frame_residual(f, H) < 1e-10);
    std::vector<double> got(f.lambda.data(), f.lambda.data() + 3);
    std::sort(got.begin(), got.end());
    for (int i = 0; i < 3; ++i) CHECK(got[i] == Approx(lam[i]).margin(1e-10));
    // every frame vector is an eigenvector of the Ricci endomorphism
    Mat Q = H.g.llt().solve(S);
    for (int i = 0; i < 3; ++i) {
      CHECK((Q * f.e(i) - f.lambda[i] * f.e(i)).cwiseAbs().maxCoeff() < 1e-9);
      CHECK((Q * f.je(i) - f.lambda[i] * f.je(i)).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("J-breaking S is rejected", "[eigenframe]") {
  SampleStream rng(3);
  HermitianPoint H = HermitianPoint::standard(6);
  Mat S = rng.gaussian_mat(6, 6);
  S = 0.5 * (S + S.transpose()).eval();
  REQUIRE(j_invariance_residual(S, H) > 1e-3);
  CHECK_THROWS_AS(j_adapted_eigenframe(RicciForm{S}, H), std::invalid_argument);
}

TEST_CASE("degenerate spectra still pair correctly", "[eigenframe]") {
  SampleStream rng(4);
  HermitianPoint H = HermitianPoint::random(8, rng);
  // two eigenvalues, multiplicities 4 and 4
  Mat S = 2.0 * H.g;
  Vec x = sample_unit(H, rng);
  Vec jx = H.J * x;
  Vec y = detail::sample_unit_from(H, {x, jx}, rng, "y");
  Vec jy = H.J * y;
  for (const Vec* v : {&x, &jx, &y, &jy}) {
    Vec gv = H.g * (*v);
    S += 3.0 * (gv * gv.transpose());
  }
  S = 0.5 * (S + S.transpose()).eval();
  JAdaptedFrame f = j_adapted_eigenframe(RicciForm{S}, H);
  CHECK(f.m() == 4);
  CHECK(frame_residual(f, H) < 1e-9);
  std::vector<double> got(f.lambda.data(), f.lambda.data() + 4);
  std::sort(got.begin(), got.end());
  CHECK(got[0] == Approx(2.0).margin(1e-9));
  CHECK(got[1] == Approx(2.0).margin(1e-9));
  CHECK(got[2] == Approx(5.0).margin(1e-9));
  CHECK(got[3] == Approx(5.0).margin(1e-9));
}
