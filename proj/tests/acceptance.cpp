// Acceptance gate: nine timed, toleranced criteria over the full library.
// Each criterion prints one PASS/FAIL line; the exit code is the number of
// failed criteria capped at 1.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "quadriclab/contact_curvature.hpp"
#include "quadriclab/quadric_geometry.hpp"
#include "quadriclab/verification.hpp"
#include "support/ode_oracle.hpp"

using namespace qlab;

namespace {

int g_failures = 0;

void report(int idx, const std::string& what, bool ok,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", idx,
              what.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

void criterion_1_einstein() {
  double worst = 0.0, worst_time = 0.0;
  for (int n = 3; n <= 8; ++n) {
    const auto start = std::chrono::steady_clock::now();
    worst = std::max(worst, einstein_residual(n));
    worst_time = std::max(worst_time, seconds_since(start));
  }
  report(1, "Einstein constant for n = 3..8", worst < 1e-9 && worst_time < 1.0,
         "max residual " + fmt(worst) + ", max time " + fmt(worst_time) + "s");
}

void criterion_2_jacobi() {
  double worst = 0.0;
  for (const int n : {3, 4, 5, 6}) {
    const auto v = v_c0_frame(n);
    for (int i = 0; i < 20; ++i) {
      const double t = (std::numbers::pi / 4.0) * i / 19.0;
      const SoElement vec = v[0] * std::cos(t) + j_apply(v[1]) * std::sin(t);
      worst = std::max(worst, jacobi_spectrum(vec).residual);
    }
    worst = std::max(worst, jacobi_spectrum(v[0]).spectrum.match_residual(
                                Spectrum::merge_expected(
                                    {{0.0, n}, {-2.0, n}})));
    const SoElement iso =
        (v[0] + j_apply(v[1])) * (1.0 / std::numbers::sqrt2);
    worst = std::max(worst, jacobi_spectrum(iso).spectrum.match_residual(
                                Spectrum::merge_expected(
                                    {{0.0, 3}, {-1.0, 2 * n - 4},
                                     {-4.0, 1}})));
    const double tm = std::atan(0.5);
    const SoElement mid =
        v[0] * std::cos(tm) + j_apply(v[1]) * std::sin(tm);
    worst = std::max(worst, jacobi_spectrum(mid).spectrum.match_residual(
                                Spectrum::merge_expected(
                                    {{0.0, 2}, {-0.4, n - 1},
                                     {-1.6, n - 2}, {-3.6, 1}})));
  }
  report(2, "Jacobi spectra on the angle grid and pinned angles",
         worst < 1e-8, "max residual " + fmt(worst));
}

void criterion_3_complex_hypersurface() {
  double worst = 0.0;
  for (int n = 3; n <= 10; ++n) {
    const RootSystem rs(n);
    const auto expected = Spectrum::merge_expected(
        {{-1.0, n - 2}, {0.0, 2}, {1.0, n - 2}});
    for (const double phi : {0.0, std::numbers::pi / 4.0,
                             std::numbers::pi / 2.0, std::numbers::pi}) {
      const PModel p = build_P(rs, phi);
      worst = std::max({worst, p.shape.spectrum.match_residual(expected),
                        p.diagonal_residual});
    }
  }
  report(3, "complex hypersurface spectrum for n = 3..10 with rotations",
         worst < 1e-9, "max residual " + fmt(worst));
}

void criterion_4_model_spectra() {
  double worst = 0.0;
  for (int n = 3; n <= 10; ++n) {
    const RootSystem rs(n);
    std::vector<HypersurfaceModel> models = {HypersurfaceModel::minimal(),
                                             HypersurfaceModel::horocyclic()};
    for (const double r : {0.25, 0.5, 1.0, 2.0}) {
      models.push_back(HypersurfaceModel::tube(r));
      models.push_back(HypersurfaceModel::equidistant(r));
    }
    for (const HypersurfaceModel& m : models) {
      const BuiltModel built = build_M(rs, m);
      const auto expected = Spectrum::merge_expected(
          {{-1.0, n - 2}, {0.0, 2}, {1.0, n - 2}, {built.alpha, 1}});
      worst = std::max({worst, built.shape.spectrum.match_residual(expected),
                        built.diagonal_residual});
    }
  }
  report(4, "model spectra for n = 3..10 over the radius grid", worst < 1e-9,
         "max residual " + fmt(worst));
}

void criterion_5_transport_oracle() {
  const int n = 4;
  const int dim = 2 * n - 1;
  const RootSystem rs(n);
  double worst = 0.0;
  for (const double r : {0.25, 0.5, 1.0}) {
    for (const ModelKind kind : {ModelKind::Tube, ModelKind::Equidistant}) {
      const HypersurfaceModel m = kind == ModelKind::Tube
                                      ? HypersurfaceModel::tube(r)
                                      : HypersurfaceModel::equidistant(r);
      const BuiltModel built = build_M(rs, m);
      const Eigen::MatrixXd k = normal_jacobi(built).matrix;
      Eigen::MatrixXd d0 = Eigen::MatrixXd::Identity(dim, dim);
      Eigen::MatrixXd v0 = Eigen::MatrixXd::Zero(dim, dim);
      for (int i = built.frame.t1_begin(); i < built.frame.tm1_begin(); ++i)
        v0(i, i) = 1.0;
      for (int i = built.frame.tm1_begin(); i < dim - 1; ++i)
        v0(i, i) = -1.0;
      if (kind == ModelKind::Tube) {
        d0(dim - 1, dim - 1) = 0.0;
        v0(dim - 1, dim - 1) = 1.0;
      }
      const auto [d, v] = testing::integrate_jacobi(k, d0, v0, r);
      Eigen::VectorXd closed(dim);
      for (int i = 0; i < dim; ++i) {
        if (i < 2) closed(i) = 1.0;
        else if (i < n) closed(i) = std::exp(r);
        else if (i < 2 * n - 2) closed(i) = std::exp(-r);
        else closed(i) = kind == ModelKind::Tube ? 0.5 * std::sinh(2.0 * r)
                                                 : std::cosh(2.0 * r);
      }
      worst = std::max(worst, (d - Eigen::MatrixXd(closed.asDiagonal()))
                                  .cwiseAbs()
                                  .maxCoeff());
      const Eigen::MatrixXd a_out = -v * d.inverse();
      for (int i = 0; i < dim; ++i)
        worst = std::max(worst,
                         std::abs(a_out(i, i) - built.signed_diagonal[i]));
    }
  }
  report(5, "transport flow matches both closed forms at three radii",
         worst < 1e-6, "max residual " + fmt(worst));
}

void criterion_6_identities() {
  double worst = 0.0;
  for (const int n : {3, 4, 5, 6}) {
    const RootSystem rs(n);
    std::vector<HypersurfaceModel> models = {HypersurfaceModel::minimal(),
                                             HypersurfaceModel::horocyclic()};
    for (const double r : {0.5, 1.0}) {
      models.push_back(HypersurfaceModel::tube(r));
      models.push_back(HypersurfaceModel::equidistant(r));
    }
    for (const HypersurfaceModel& m : models) {
      const BuiltModel built = build_M(rs, m);
      for (const ModelIdentity& id : model_identities(built))
        worst = std::max(worst, id.residual);
      worst = std::max(worst, contact_data(built.frame).structure_residual);
    }
  }
  report(6, "pointwise structure identities over the grid", worst < 1e-9,
         "max residual " + fmt(worst));
}

void criterion_7_ricci() {
  const int n = 4;
  const RootSystem rs(n);
  double worst_match = 0.0, worst_exact = 0.0;
  bool clusters_ok = true;
  for (const double alpha : {0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0}) {
    const BuiltModel built =
        build_M(rs, HypersurfaceModel::from_alpha(alpha));
    const RicciReport ric = ricci(built);
    worst_match = std::max(worst_match, ric.match_residual);
    worst_exact = std::max({worst_exact, ric.phi_relation_residual,
                            ric.scalar_residual});
    const Eigen::MatrixXd gauss = ricci_gauss_oracle(built);
    worst_match = std::max(
        worst_match, (ric.matrix - gauss).cwiseAbs().maxCoeff());
    int expect = 4;
    if (alpha == 0.0) expect = 2;
    else if (alpha == 4.0) expect = 3;
    if (ric.cluster_count != expect) clusters_ok = false;
    if ((alpha == 0.0) != ric.pseudo_einstein) clusters_ok = false;
  }
  report(7, "Ricci spectra, clusters and scalar across the parameter line",
         worst_match < 1e-8 && worst_exact < 1e-9 && clusters_ok,
         "max residual " + fmt(std::max(worst_match, worst_exact)) +
             (clusters_ok ? "" : ", cluster mismatch"));
}

void criterion_8_algebra() {
  bool ok = true;
  double worst = 0.0;
  for (const int n : {3, 4, 5, 6}) {
    for (const CheckRecord& c : algebra_checks(n, 2024)) {
      ok = ok && c.pass;
      worst = std::max(worst, c.residual);
    }
  }
  report(8, "structural algebra checks for n = 3..6", ok,
         "max residual " + fmt(worst));
}

void criterion_9_full_report() {
  const auto start = std::chrono::steady_clock::now();
  RunConfig cfg;
  cfg.command = "report-all";
  const VerificationReport r = run_verification(cfg);
  const double elapsed = seconds_since(start);
  report(9, "full default grid report", r.all_pass() && elapsed < 60.0,
         std::to_string(r.passed()) + "/" + std::to_string(r.total()) +
             " checks in " + fmt(elapsed) + "s");
}

} // namespace

int main() {
  criterion_1_einstein();
  criterion_2_jacobi();
  criterion_3_complex_hypersurface();
  criterion_4_model_spectra();
  criterion_5_transport_oracle();
  criterion_6_identities();
  criterion_7_ricci();
  criterion_8_algebra();
  criterion_9_full_report();
  if (g_failures == 0) {
    std::puts("all acceptance criteria satisfied");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failures);
  return 1;
}
