#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "quadriclab/quadric_geometry.hpp"
#include "support/test_util.hpp"

using namespace qlab;
using testing::random_combination;

namespace {

SoElement random_p(int n, std::mt19937_64& rng) {
  return random_combination(standard_p_basis(n), rng);
}

} // namespace

TEST_CASE("metric normalization and frames") {
  const int n = 4;
  const auto frame = p_frame(n);
  REQUIRE(frame.size() == static_cast<std::size_t>(2 * n));
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = 0; j < frame.size(); ++j)
      CHECK(g_metric(frame[i], frame[j]) ==
            doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-13));
}

TEST_CASE("complex structure comes from the center of k") {
  const int n = 4;
  std::mt19937_64 rng(29);
  const SoElement z = kaehler_generator(n);
  for (int k = 0; k < 5; ++k) {
    const SoElement x = random_p(n, rng);
    CHECK((j_apply(x) - bracket(z, x)).norm_inf() < 1e-13);
    CHECK((j_apply(j_apply(x)) + x).norm_inf() < 1e-13);
    const SoElement y = random_p(n, rng);
    CHECK(g_metric(j_apply(x), j_apply(y)) ==
          doctest::Approx(g_metric(x, y)).epsilon(1e-12));
    CHECK(g_metric(j_apply(x), y) ==
          doctest::Approx(-g_metric(x, j_apply(y))).epsilon(1e-12));
  }
}

TEST_CASE("real structure circle") {
  const int n = 5;
  std::mt19937_64 rng(31);
  for (const double phi : {0.0, 0.6, std::numbers::pi / 2.0, 2.9}) {
    const SoElement x = random_p(n, rng);
    const SoElement y = random_p(n, rng);
    const SoElement cx = real_structure_apply(x, phi);
    // Involutive, anti-linear over J, g-symmetric.
    CHECK((real_structure_apply(cx, phi) - x).norm_inf() < 1e-12);
    CHECK((j_apply(cx) + real_structure_apply(j_apply(x), phi)).norm_inf() <
          1e-12);
    CHECK(g_metric(cx, y) ==
          doctest::Approx(g_metric(x, real_structure_apply(y, phi)))
              .epsilon(1e-12));
  }

  // V(C_phi) is the +1 eigenspace and J maps it to the -1 eigenspace.
  for (const double phi : {0.0, 1.3}) {
    const Subspace v = v_of_c(n, phi);
    CHECK(v.dimension() == n);
    for (const SoElement& u : v.basis()) {
      CHECK((real_structure_apply(u, phi) - u).norm_inf() < 1e-13);
      CHECK((real_structure_apply(j_apply(u), phi) + j_apply(u)).norm_inf() <
            1e-13);
      CHECK(jv_of_c(n, phi).contains(j_apply(u)));
    }
  }
}

TEST_CASE("curvature tensor symmetries and independence of phi") {
  const int n = 4;
  std::mt19937_64 rng(37);
  for (int k = 0; k < 10; ++k) {
    const SoElement x = random_p(n, rng);
    const SoElement y = random_p(n, rng);
    const SoElement z = random_p(n, rng);
    const SoElement w = random_p(n, rng);
    const double scale = 1.0 + x.norm_inf() * y.norm_inf() * z.norm_inf();

    CHECK((curvature(x, y, z, 1.7) - curvature(x, y, z)).norm_inf() / scale <
          1e-12);
    CHECK((curvature(x, y, z) + curvature(y, x, z)).norm_inf() / scale <
          1e-12);
    CHECK(std::abs(g_metric(curvature(x, y, z), w) +
                   g_metric(curvature(x, y, w), z)) /
              scale < 1e-12);
    CHECK(std::abs(g_metric(curvature(x, y, z), w) -
                   g_metric(curvature(z, w, x), y)) /
              scale < 1e-12);
    const SoElement bianchi =
        curvature(x, y, z) + curvature(y, z, x) + curvature(z, x, y);
    CHECK(bianchi.norm_inf() / scale < 1e-12);
  }
}

TEST_CASE("Einstein constant") {
  for (int n : {3, 4, 5, 6}) CHECK(einstein_residual(n) < 1e-9);
}

TEST_CASE("Jacobi spectra follow the closed form in the singular angle") {
  const int n = 5;
  const auto v = v_c0_frame(n);
  for (int i = 0; i <= 10; ++i) {
    const double t = (std::numbers::pi / 4.0) * i / 10.0;
    const SoElement vec = v[0] * std::cos(t) + j_apply(v[1]) * std::sin(t);
    const JacobiSpectrumReport rep = jacobi_spectrum(vec);
    CHECK(rep.residual < 1e-8);
    CHECK(std::abs(rep.cls.t - t) < 1e-6);
    int total = 0;
    for (const EigenCluster& c : rep.spectrum.clusters)
      total += c.multiplicity;
    CHECK(total == 2 * n);
  }
}

TEST_CASE("pinned spectra at the distinguished angles") {
  const int n = 4;
  const auto v = v_c0_frame(n);

  const JacobiSpectrumReport principal = jacobi_spectrum(v[0]);
  CHECK(principal.spectrum.match_residual(
            Spectrum::merge_expected({{0.0, n}, {-2.0, n}})) < 1e-8);

  const SoElement iso = (v[0] + j_apply(v[1])) * (1.0 / std::numbers::sqrt2);
  CHECK(jacobi_spectrum(iso).spectrum.match_residual(
            Spectrum::merge_expected({{0.0, 3}, {-1.0, 2 * n - 4},
                                      {-4.0, 1}})) < 1e-8);

  const double tm = std::atan(0.5);
  const SoElement mid = v[0] * std::cos(tm) + j_apply(v[1]) * std::sin(tm);
  CHECK(jacobi_spectrum(mid).spectrum.match_residual(
            Spectrum::merge_expected({{0.0, 2},
                                      {-0.4, n - 1},
                                      {-1.6, n - 2},
                                      {-3.6, 1}})) < 1e-8);
}

TEST_CASE("singular vector classification") {
  const int n = 4;
  std::mt19937_64 rng(41);
  const auto v = v_c0_frame(n);

  CHECK(classify_singular(v[2]).kind == SingularKind::APrincipal);
  const SoElement iso = (v[0] + j_apply(v[1])) * (1.0 / std::numbers::sqrt2);
  CHECK(classify_singular(iso).kind == SingularKind::AIsotropic);

  const double t = 0.3;
  const SoElement mixed = v[0] * std::cos(t) + j_apply(v[1]) * std::sin(t);
  const SingularityClass cls = classify_singular(mixed);
  CHECK(cls.kind == SingularKind::Regular);
  CHECK(cls.t == doctest::Approx(t).epsilon(1e-8));

  // Random unit vectors always land in [0, pi/4].
  for (int k = 0; k < 5; ++k) {
    SoElement x = random_p(n, rng);
    x = x * (1.0 / std::sqrt(g_metric(x, x)));
    const SingularityClass c = classify_singular(x);
    CHECK(c.t >= -1e-12);
    CHECK(c.t <= std::numbers::pi / 4.0 + 1e-12);
  }
}

TEST_CASE("jacobi operator matrix is symmetric and tangent framed") {
  const int n = 4;
  const auto frame = p_frame(n);
  const auto v = v_c0_frame(n);
  const SoElement w = v[0] * std::cos(0.5) + j_apply(v[1]) * std::sin(0.5);
  const Eigen::MatrixXd k = jacobi_operator_matrix(w, frame);
  CHECK((k - k.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  // The direction w itself is in the kernel.
  Eigen::VectorXd coords(2 * n);
  for (int i = 0; i < 2 * n; ++i) coords(i) = g_metric(frame[i], w);
  CHECK((k * coords).cwiseAbs().maxCoeff() < 1e-12);
}
