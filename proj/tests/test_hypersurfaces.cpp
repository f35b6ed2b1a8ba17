#include <doctest.h>

#include <cmath>
#include <numbers>

#include "quadriclab/hypersurfaces.hpp"
#include "quadriclab/quadric_geometry.hpp"

using namespace qlab;

TEST_CASE("model parameterization round trips") {
  CHECK(HypersurfaceModel::from_alpha(0.0).kind == ModelKind::Minimal);
  CHECK(HypersurfaceModel::from_alpha(2.0).kind == ModelKind::Horocyclic);
  CHECK(HypersurfaceModel::from_alpha(1.2).kind == ModelKind::Equidistant);
  CHECK(HypersurfaceModel::from_alpha(3.5).kind == ModelKind::Tube);
  CHECK_THROWS_AS((void)HypersurfaceModel::from_alpha(-0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)HypersurfaceModel::tube(0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)HypersurfaceModel::equidistant(-1.0),
                  std::invalid_argument);

  for (const double r : {0.25, 0.7, 1.5}) {
    const HypersurfaceModel t = HypersurfaceModel::tube(r);
    CHECK(t.alpha() == doctest::Approx(2.0 / std::tanh(2.0 * r)));
    const HypersurfaceModel rt = HypersurfaceModel::from_alpha(t.alpha());
    CHECK(rt.kind == ModelKind::Tube);
    CHECK(rt.r == doctest::Approx(r).epsilon(1e-12));

    const HypersurfaceModel e = HypersurfaceModel::equidistant(r);
    CHECK(e.alpha() == doctest::Approx(2.0 * std::tanh(2.0 * r)));
    const HypersurfaceModel re = HypersurfaceModel::from_alpha(e.alpha());
    CHECK(re.kind == ModelKind::Equidistant);
    CHECK(re.r == doctest::Approx(r).epsilon(1e-12));
  }
  CHECK(HypersurfaceModel::minimal().alpha() == 0.0);
  CHECK(HypersurfaceModel::horocyclic().alpha() == 2.0);
  CHECK(HypersurfaceModel::tube(1.0).name() == "tube");
  CHECK(HypersurfaceModel::minimal().name() == "minimal");
  CHECK(HypersurfaceModel::equidistant(1.0).name() == "equidistant");
  CHECK(HypersurfaceModel::horocyclic().name() == "horocyclic");
}

TEST_CASE("complex hypersurface shape operator") {
  const int n = 5;
  const RootSystem rs(n);
  const auto expected = Spectrum::merge_expected(
      {{-1.0, n - 2}, {0.0, 2}, {1.0, n - 2}});

  for (const double phi : {0.0, std::numbers::pi / 3.0, std::numbers::pi}) {
    const PModel p = build_P(rs, phi);
    CHECK(p.diagonal_residual < 1e-12);
    CHECK(p.shape.symmetry_residual < 1e-12);
    CHECK(p.shape.spectrum.match_residual(expected) < 1e-12);
    CHECK(p.tangent_space.dimension() == 2 * n - 2);
    CHECK(p.normal_space.dimension() == 2);
    CHECK(p.normal_space.contains(p.normal));
    CHECK(std::abs(g_metric(p.normal, p.normal) - 1.0) < 1e-12);
  }

  // Rotating the normal by J composes the shape operator with J.
  const PModel p0 = build_P(rs, 0.0);
  const int d = 2 * n - 2;
  Eigen::MatrixXd jmat(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i)
      jmat(i, j) = g_metric(p0.tangent[i], j_apply(p0.tangent[j]));
  const Eigen::MatrixXd a0 = shape_matrix_in_frame(
      rs, rs.named("d"), rs.an_representative(p0.normal), p0.tangent);
  const Eigen::MatrixXd a90 = shape_matrix_in_frame(
      rs, rs.named("d"), rs.an_representative(j_apply(p0.normal)),
      p0.tangent);
  CHECK((a90 - jmat * a0).cwiseAbs().maxCoeff() < 1e-12);

  // The normal bundle directions are isotropic singular vectors.
  CHECK(std::abs(classify_singular(p0.normal).t - std::numbers::pi / 4.0) <
        1e-6);
  CHECK(lie_triple_residual(p0.normal_space) < 1e-12);
}

TEST_CASE("hypersurface frames are orthonormal and adapted") {
  const int n = 4;
  const RootSystem rs(n);
  for (const HypersurfaceModel& m :
       {HypersurfaceModel::tube(0.8), HypersurfaceModel::minimal(),
        HypersurfaceModel::equidistant(0.6),
        HypersurfaceModel::horocyclic()}) {
    const BuiltModel built = build_M(rs, m);
    const HypersurfaceFrame& f = built.frame;
    CHECK(f.dim() == 2 * n - 1);
    CHECK(f.orthonormality_residual() < 1e-12);
    CHECK(f.xi_index() == 2 * n - 2);
    CHECK((f.xi() - j_apply(built.frame.normal) * -1.0).norm_inf() < 1e-12);
    CHECK(f.t1_space().dimension() == n - 2);
    CHECK(f.tm1_space().dimension() == n - 2);
    CHECK(f.c_space().dimension() == 2 * n - 2);

    const Eigen::MatrixXd phi = f.phi_matrix();
    CHECK((phi + phi.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    const Eigen::VectorXd eta = f.eta();
    CHECK(eta(f.xi_index()) == doctest::Approx(1.0));
    CHECK(eta.head(2 * n - 2).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("shape operators take the advertised diagonal form") {
  const int n = 4;
  const RootSystem rs(n);

  for (const double r : {0.25, 0.5, 1.0, 2.0}) {
    const BuiltModel tube = build_M(rs, HypersurfaceModel::tube(r));
    CHECK(tube.diagonal_residual < 1e-10);
    CHECK(tube.alpha == doctest::Approx(2.0 / std::tanh(2.0 * r)));
    const BuiltModel eq = build_M(rs, HypersurfaceModel::equidistant(r));
    CHECK(eq.diagonal_residual < 1e-10);
    CHECK(eq.alpha == doctest::Approx(2.0 * std::tanh(2.0 * r)));
    // Outward orientation reverses the sign of the whole diagonal.
    for (int i = 0; i < 2 * n - 1; ++i) {
      CHECK(tube.signed_diagonal[i] ==
            doctest::Approx(-tube.shape.matrix(i, i)).epsilon(1e-10));
      CHECK(eq.signed_diagonal[i] ==
            doctest::Approx(-eq.shape.matrix(i, i)).epsilon(1e-10));
    }
  }

  const BuiltModel minimal = build_M(rs, HypersurfaceModel::minimal());
  CHECK(minimal.diagonal_residual < 1e-12);
  CHECK(minimal.alpha == 0.0);
  const BuiltModel horo = build_M(rs, HypersurfaceModel::horocyclic());
  CHECK(horo.diagonal_residual < 1e-12);
  CHECK(horo.alpha == 2.0);

  // Trace = mean curvature normalization: only the Reeb entry varies.
  double trace = 0.0;
  for (int i = 0; i < 2 * n - 1; ++i) trace += horo.shape.matrix(i, i);
  CHECK(trace == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("transport diagonal closed forms") {
  const int n = 5;
  for (const double r : {0.3, 0.9}) {
    const auto tube = transport_diagonal(ModelKind::Tube, n, r);
    REQUIRE(tube.size() == static_cast<std::size_t>(2 * n - 1));
    CHECK(tube[0] == doctest::Approx(0.0));
    CHECK(tube[1] == doctest::Approx(0.0));
    CHECK(tube[2] == doctest::Approx(1.0));
    CHECK(tube[n] == doctest::Approx(-1.0));
    CHECK(tube[2 * n - 2] == doctest::Approx(2.0 / std::tanh(2.0 * r)));

    const auto eq = transport_diagonal(ModelKind::Equidistant, n, r);
    CHECK(eq[2 * n - 2] == doctest::Approx(2.0 * std::tanh(2.0 * r)));
    CHECK(eq[2] == doctest::Approx(1.0));
    CHECK(eq[n] == doctest::Approx(-1.0));
  }
}

TEST_CASE("model identities hold at machine precision") {
  const int n = 4;
  const RootSystem rs(n);
  for (const HypersurfaceModel& m :
       {HypersurfaceModel::tube(0.5), HypersurfaceModel::minimal(),
        HypersurfaceModel::equidistant(1.0),
        HypersurfaceModel::horocyclic()}) {
    const BuiltModel built = build_M(rs, m);
    for (const ModelIdentity& id : model_identities(built)) {
      INFO(m.name(), " / ", id.name);
      CHECK(id.residual < 1e-10);
    }
  }
}

TEST_CASE("structure alignment phase matches the normal phase") {
  const int n = 5;
  const RootSystem rs(n);
  const auto phase_of = [&](const HypersurfaceModel& m) {
    const BuiltModel built = build_M(rs, m);
    const std::vector<SoElement> t1(
        built.frame.tangent.begin() + built.frame.t1_begin(),
        built.frame.tangent.begin() + built.frame.tm1_begin());
    return aligned_structure_phase(t1);
  };
  const auto angle_close = [](double a, double b) {
    const double d = std::remainder(a - b, 2.0 * std::numbers::pi);
    return std::abs(d) < 1e-9;
  };
  CHECK(angle_close(phase_of(HypersurfaceModel::horocyclic()), 0.0));
  CHECK(angle_close(phase_of(HypersurfaceModel::minimal()),
                    std::numbers::pi / 2.0));
  CHECK(angle_close(phase_of(HypersurfaceModel::tube(0.7)),
                    std::numbers::pi));
  CHECK(angle_close(phase_of(HypersurfaceModel::equidistant(0.7)),
                    3.0 * std::numbers::pi / 2.0));
}

TEST_CASE("orbit shape operators agree with the diagonal model") {
  const int n = 4;
  const RootSystem rs(n);
  const BuiltModel minimal = build_M(rs, HypersurfaceModel::minimal());
  const ShapeOperatorReport rep = shape_by_bracket(
      rs, rs.named("s1"), rs.an_representative(minimal.frame.normal));
  CHECK(rep.symmetry_residual < 1e-12);
  CHECK(rep.spectrum.match_residual(Spectrum::merge_expected(
            {{-1.0, n - 2}, {0.0, 3}, {1.0, n - 2}})) < 1e-12);

  const BuiltModel horo = build_M(rs, HypersurfaceModel::horocyclic());
  const ShapeOperatorReport hrep = shape_by_bracket(
      rs, rs.named("h1"), rs.an_representative(horo.frame.normal));
  CHECK(hrep.spectrum.match_residual(Spectrum::merge_expected(
            {{-1.0, n - 2}, {0.0, 2}, {1.0, n - 2}, {2.0, 1}})) < 1e-12);
}

TEST_CASE("lie triple residual flags non-triples") {
  const int n = 4;
  const RootSystem rs(n);
  std::vector<SoElement> nu_basis = {rs.root_vector({1, 0})};
  for (const SoElement& x : rs.p_alpha({1, 0}).basis()) nu_basis.push_back(x);
  CHECK(lie_triple_residual(Subspace(nu_basis)) < 1e-12);

  std::vector<SoElement> bad = rs.p_alpha({1, 0}).basis();
  for (const SoElement& x : rs.p_alpha({0, 1}).basis()) bad.push_back(x);
  CHECK(lie_triple_residual(Subspace(bad)) > 0.1);
}
