#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "support.hpp"

using namespace hermlab;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Vec> model_points(const ChartManifold& M, int count,
                              std::uint64_t seed = 0) {
  SamplePlan plan;
  plan.grid_points = count;
  plan.random_points = 0;
  plan.seed = seed;
  return sample_points(M, plan);
}

}  // namespace

TEST_CASE("seven-dimensional cross product identities", "[models]") {
  using V7 = Eigen::Matrix<double, 7, 1>;
  SampleStream rng(1);
  for (int t = 0; t < 50; ++t) {
    V7 a, b;
    for (int i = 0; i < 7; ++i) {
      a[i] = rng.gaussian();
      b[i] = rng.gaussian();
    }
    V7 ab = detail::cross7(a, b);
    CHECK(std::abs(ab.dot(a)) < 1e-12);
    CHECK(std::abs(ab.dot(b)) < 1e-12);
    CHECK(ab.squaredNorm() ==
          Approx(a.squaredNorm() * b.squaredNorm() - std::pow(a.dot(b), 2))
              .margin(1e-10));
    V7 aab = detail::cross7(a, ab);
    V7 want = a.dot(b) * a - a.squaredNorm() * b;
    CHECK((aab - want).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((detail::cross7(a, b) + detail::cross7(b, a)).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("Fubini-Study CP^3 is the complex space form with K_hol = c", "[models]") {
  for (double c : {4.0, 2.0}) {
    ChartManifold M = fubini_study(3, c);
    for (const Vec& p : model_points(M, 4)) {
      HermitianPoint H = M.at(p);
      CurvatureTensor R = riemann(M, p);
      CurvatureTensor oracle = test::space_form_tensor(H, c / 4.0, c);
      CHECK(R.comps().max_abs_diff(oracle.comps()) < 1e-5);
      CHECK(nabla_j(M, p).max_abs() < 1e-6);
      CHECK(rk_residual(R, H) < 1e-6);
      CHECK(max_abs(ricci(R, H).S - (c / 4.0) * (6 + 2) * H.g) < 1e-4);
    }
  }
}

TEST_CASE("Fubini-Study analytic and FD metric derivatives agree", "[models]") {
  ChartManifold an = fubini_study(3, 4.0);
  ChartManifold fd = an;
  fd.metric_grad = nullptr;
  for (const Vec& p : model_points(an, 3)) {
    Tensor3 ga = christoffel(an, p);
    Tensor3 gf = christoffel(fd, p);
    for (int k = 0; k < 6; ++k)
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          CHECK(ga(k, i, j) == Approx(gf(k, i, j)).margin(1e-7));
  }
}

TEST_CASE("complex hyperbolic ball has K_hol = c < 0", "[models]") {
  ChartManifold M = complex_hyperbolic(3, -4.0);
  for (const Vec& p : model_points(M, 3)) {
    HermitianPoint H = M.at(p);
    CurvatureTensor R = riemann(M, p);
    CHECK(R.comps().max_abs_diff(test::space_form_tensor(H, -1.0, -4.0).comps()) <
          1e-5);
    CHECK(nabla_j(M, p).max_abs() < 1e-6);
  }
}

TEST_CASE("nearly Kaehler S^6: round, RK, and genuinely non-Kaehler", "[models]") {
  ChartManifold M = nearly_kahler_s6();
  SampleStream rng(3);
  for (const Vec& p : model_points(M, 4)) {
    HermitianPoint H = M.at(p);  // validates compatibility at 1e-8
    CHECK(H.compat_residual() < 1e-12);
    CurvatureTensor R = riemann(M, p);
    CHECK(R.comps().max_abs_diff(pi1(H).comps()) < 1e-5);
    CHECK(rk_residual(R, H) < 1e-6);
    CHECK(nabla_j(M, p).max_abs() > 0.1);
    // locally symmetric: nabla R = 0 within the second FD tier
    CHECK(nabla_r(M, p).max_abs() < 1e-4);
    AntiholoTriple t = sample_antiholomorphic_triple(H, rng);
    CHECK(bianchi2_residual(M, p, t) < 1e-4);
    CHECK(six_term_identity_residual(M, p, t) < 1e-3);
  }
  Vec p0 = model_points(M, 1)[0];
  Vec grad = nu_gradient(M, p0);
  CHECK(grad.cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("second Bianchi holds across the catalog", "[models]") {
  // a pure self-test of the FD stack: the identity is universal
  SampleStream rng(5);
  for (const ModelSpec& spec : catalog()) {
    ChartManifold M = make_model(spec);
    Vec p = model_points(M, 2)[1];
    AntiholoTriple t = sample_antiholomorphic_triple(M.at(p), rng);
    INFO(spec.name);
    CHECK(bianchi2_residual(M, p, t) < 1e-4);
  }
}

TEST_CASE("full second Bianchi cyclic sum vanishes componentwise", "[models]") {
  SampleStream rng(13);
  for (const char* name : {"fubini-study", "nearly-kahler-s6", "perturbed-torus"}) {
    ChartManifold M = make_model(find_model(name));
    Vec p = model_points(M, 2, 13)[0];
    Tensor5 nr = nabla_r(M, p);
    const int n = M.dim();
    double worst = 0.0;
    for (int t = 0; t < 40; ++t) {
      int a = static_cast<int>(rng.next_bits() % n);
      int b = static_cast<int>(rng.next_bits() % n);
      int c = static_cast<int>(rng.next_bits() % n);
      int d = static_cast<int>(rng.next_bits() % n);
      int e = static_cast<int>(rng.next_bits() % n);
      worst = std::max(worst, std::abs(nr(a, b, c, d, e) + nr(b, c, a, d, e) +
                                       nr(c, a, b, d, e)));
    }
    INFO(name);
    CHECK(worst < 1e-4);
  }
}

TEST_CASE("singular metrics are rejected", "[models]") {
  ChartManifold M = flat_torus(3);
  M.metric = [](const Vec&) {
    Mat g = Mat::Identity(6, 6);
    g(0, 0) = 0.0;  // degenerate direction
    return g;
  };
  CHECK_THROWS_AS(christoffel(M, Vec::Zero(6)), std::invalid_argument);
}

TEST_CASE("catalog-wide pointwise invariants", "[models]") {
  for (const ModelSpec& spec : catalog()) {
    ChartManifold M = make_model(spec);
    INFO(spec.name);
    for (const Vec& p : model_points(M, 3, 9)) {
      HermitianPoint H = M.at(p);
      CHECK(H.compat_residual() < 1e-8);
      Tensor3 gamma = christoffel(M, p);
      for (int k = 0; k < M.dim(); ++k)
        for (int i = 0; i < M.dim(); ++i)
          for (int j = 0; j < i; ++j)
            CHECK(gamma(k, i, j) == gamma(k, j, i));
      CurvatureTensor R = riemann(M, p);
      CHECK(R.symmetry_residual() < 1e-6);
      CHECK(R.bianchi1_residual() < 1e-6);
    }
  }
}

TEST_CASE("scaled product: Kaehler but not pointwise antiholomorphic constant",
          "[models]") {
  ChartManifold M = scaled_product(2.0, 6.0);
  Vec p = model_points(M, 2)[0];
  HermitianPoint H = M.at(p);
  CurvatureTensor R = riemann(M, p);
  CHECK(nabla_j(M, p).max_abs() < 1e-6);
  CHECK(rk_residual(R, H) < 1e-6);
  ConstancyReport anti = theta_constancy(R, H, kPi / 2, 64, 0);
  CHECK(anti.spread > 0.1);
  // the six-term identity's preconditions fail: reported, not silent
  SampleStream rng(7);
  AntiholoTriple t = sample_antiholomorphic_triple(H, rng);
  CHECK_THROWS_AS(six_term_identity_residual(M, p, t), std::invalid_argument);
  CHECK_THROWS_AS(nu_gradient(M, p), std::invalid_argument);
}

TEST_CASE("perturbed torus breaks every constancy", "[models]") {
  ChartManifold M = perturbed_torus(3, 0.05);
  Vec p = model_points(M, 2)[0];
  HermitianPoint H = M.at(p);
  CHECK(H.compat_residual() < 1e-12);
  CurvatureTensor R = riemann(M, p);
  CHECK(theta_constancy(R, H, kPi / 4, 64, 0).spread > 1e-3);
  CHECK(rk_residual(R, H) > 1e-3);
  // eps = 0 degenerates to the flat chart
  ChartManifold flat = perturbed_torus(3, 0.0);
  CHECK(riemann(flat, p).comps().max_abs() < 1e-9);
}

TEST_CASE("catalog lookups and parameter validation", "[models]") {
  auto specs = catalog();
  CHECK(specs.size() == 6);
  for (const ModelSpec& s : specs) CHECK_NOTHROW(make_model(s));
  CHECK_THROWS_AS(find_model("no-such-model"), std::invalid_argument);
  CHECK_THROWS_AS(flat_torus(0), std::invalid_argument);
  CHECK_THROWS_AS(fubini_study(3, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(fubini_study(9, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(complex_hyperbolic(3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(perturbed_torus(3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(scaled_product(-2.0, 6.0), std::invalid_argument);
}

TEST_CASE("catalog expectations encode the intended hypothesis classes", "[models]") {
  ModelSpec torus = find_model("flat-torus");
  CHECK(torus.expect.kahler);
  CHECK(torus.expect.rk);
  CHECK(torus.expect.constant_k);
  CHECK(*torus.expect.nu == 0.0);
  ModelSpec fs = find_model("fubini-study");
  CHECK(fs.expect.kahler);
  CHECK(fs.expect.rk);
  CHECK_FALSE(fs.expect.constant_k);
  CHECK(*fs.expect.nu == 1.0);
  CHECK(*fs.expect.mu == 4.0);
  ModelSpec s6 = find_model("nearly-kahler-s6");
  CHECK_FALSE(s6.expect.kahler);
  CHECK(s6.expect.rk);
  CHECK(s6.expect.constant_k);
  CHECK(*s6.expect.nu == 1.0);
}
