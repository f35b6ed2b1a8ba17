#ifndef QUADRICLAB_VERIFICATION_HPP
#define QUADRICLAB_VERIFICATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadriclab/hypersurfaces.hpp"
#include "quadriclab/report.hpp"

namespace qlab {

/// Configuration of a verification run. The default grid covers
/// n in {3,4,5,6} and radii {0.25, 0.5, 1, 2} for the radius-bearing
/// models.
struct RunConfig {
  std::vector<int> ns{3, 4, 5, 6};
  std::vector<double> radii{0.25, 0.5, 1.0, 2.0};
  bool with_algebra = true;
  bool with_quadric = true;
  bool with_complex_hypersurface = true;
  std::vector<ModelKind> kinds{ModelKind::Tube, ModelKind::Minimal,
                               ModelKind::Equidistant, ModelKind::Horocyclic};
  std::optional<double> tol_override;
  std::uint64_t seed = 12345;
  int threads = 0;  // 0 = resolve from the environment
  std::string command;
};

/// Worker cap: QUADRIC_LAB_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
int resolve_thread_cap();

/// Check layers. Each returns records for a fixed n; results are
/// deterministic in (n, seed) and independent of scheduling.
std::vector<CheckRecord> algebra_checks(int n, std::uint64_t seed,
                                        std::optional<double> tol_override = {});
std::vector<CheckRecord> quadric_checks(int n, std::uint64_t seed,
                                        std::optional<double> tol_override = {});
std::vector<CheckRecord> complex_hypersurface_checks(
    int n, std::optional<double> tol_override = {});
std::vector<CheckRecord> model_checks(int n, const HypersurfaceModel& model,
                                      std::optional<double> tol_override = {});

/// Runs the configured layers over the grid (work units fan out across the
/// worker cap; assembly order is fixed) and returns the sorted report.
VerificationReport run_verification(const RunConfig& cfg);

/// Data behind the `spectrum` subcommand: principal curvatures with
/// multiplicities and eigenspace labels, the Ricci spectrum and scalar
/// curvature for the hypersurface models, and an optional radius sweep.
struct SpectrumTable {
  std::string model;
  int n = 0;
  bool has_r = false;
  double r = 0.0;
  bool has_alpha = false;
  double alpha = 0.0;

  struct Row {
    double value = 0.0;
    int multiplicity = 0;
    std::string label;
  };
  std::vector<Row> principal;
  bool has_ricci = false;
  std::vector<Row> ricci_rows;
  double scalar = 0.0;

  struct SweepRow {
    double r = 0.0;
    double alpha = 0.0;
    double scalar = 0.0;
  };
  std::vector<SweepRow> sweep;
};

SpectrumTable spectrum_table(int n, const HypersurfaceModel& model,
                             const std::vector<double>& sweep_radii = {});
SpectrumTable spectrum_table_complex_hypersurface(int n, double phi = 0.0);

std::string spectrum_to_json(const SpectrumTable& t);
std::string spectrum_to_markdown(const SpectrumTable& t);

} // namespace qlab

#endif
