#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadriclab/hypersurfaces.hpp"
#include "quadriclab/report.hpp"
#include "quadriclab/verification.hpp"

namespace {

struct CommonOpts {
  std::optional<int> n;
  std::string model;
  std::optional<double> r;
  std::optional<double> alpha;
  std::optional<double> tol;
  std::uint64_t seed = 12345;
  std::string format = "json";
  std::string out;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_geometry) {
  if (with_geometry) {
    cmd->add_option("--n", o.n, "Complex dimension of the ambient quadric")
        ->check(CLI::Range(3, 32));
    cmd->add_option("--model", o.model,
                    "Hypersurface model, or P for the complex hypersurface")
        ->check(CLI::IsMember(
            {"tube", "minimal", "equidistant", "horocyclic", "P"}));
    auto* r_opt = cmd->add_option("--r", o.r, "Model radius (tube, equidistant)")
                      ->check(CLI::PositiveNumber);
    cmd->add_option("--alpha", o.alpha,
                    "Reeb principal curvature; selects the model radius")
        ->excludes(r_opt);
  }
  cmd->add_option("--tol", o.tol, "Override the per-check tolerances")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Seed for randomized identity checks");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "markdown"}));
  cmd->add_option("--out", o.out, "Write the report to this file");
}

std::string canonical_command(const std::string& name, const CommonOpts& o) {
  std::string c = name;
  if (o.n) c += " --n " + std::to_string(*o.n);
  if (!o.model.empty()) c += " --model " + o.model;
  if (o.r) c += " --r " + num(*o.r);
  if (o.alpha) c += " --alpha " + num(*o.alpha);
  if (o.tol) c += " --tol " + num(*o.tol);
  c += " --seed " + std::to_string(o.seed);
  c += " --format " + o.format;
  return c;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Maps --model/--r/--alpha onto the run configuration. Parameterless
/// models reject both numeric flags; radius-bearing models accept either.
void resolve_model_flags(const CommonOpts& o, qlab::RunConfig& cfg) {
  using qlab::HypersurfaceModel;
  using qlab::ModelKind;

  const auto radius_for = [&o](ModelKind kind) -> std::optional<double> {
    if (o.r) return *o.r;
    if (!o.alpha) return std::nullopt;
    const HypersurfaceModel m = HypersurfaceModel::from_alpha(*o.alpha);
    if (m.kind != kind)
      throw UsageError("--alpha " + num(*o.alpha) +
                       " is outside the range of model '" +
                       HypersurfaceModel{kind, 1.0}.name() + "'");
    return m.r;
  };

  if (o.model.empty()) {
    if (o.alpha) {
      const HypersurfaceModel m = HypersurfaceModel::from_alpha(*o.alpha);
      cfg.with_algebra = cfg.with_quadric = cfg.with_complex_hypersurface =
          false;
      cfg.kinds = {m.kind};
      if (m.kind == ModelKind::Tube || m.kind == ModelKind::Equidistant)
        cfg.radii = {m.r};
    } else if (o.r) {
      cfg.radii = {*o.r};
    }
    return;
  }

  cfg.with_algebra = cfg.with_quadric = cfg.with_complex_hypersurface = false;
  if (o.model == "P") {
    if (o.r || o.alpha)
      throw UsageError("model 'P' does not take --r or --alpha");
    cfg.with_complex_hypersurface = true;
    cfg.kinds = {};
    return;
  }
  if (o.model == "minimal" || o.model == "horocyclic") {
    if (o.r || o.alpha)
      throw UsageError("model '" + o.model + "' does not take --r or --alpha");
    cfg.kinds = {o.model == "minimal" ? ModelKind::Minimal
                                      : ModelKind::Horocyclic};
    return;
  }
  const ModelKind kind =
      o.model == "tube" ? ModelKind::Tube : ModelKind::Equidistant;
  cfg.kinds = {kind};
  if (const std::optional<double> r = radius_for(kind)) cfg.radii = {*r};
}

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << out << " for writing\n";
    return 2;
  }
  f << text;
  return 0;
}

int run_verify(const CommonOpts& o, const std::string& name) {
  qlab::RunConfig cfg;
  if (o.n) cfg.ns = {*o.n};
  cfg.tol_override = o.tol;
  cfg.seed = o.seed;
  resolve_model_flags(o, cfg);
  cfg.command = canonical_command(name, o);

  const qlab::VerificationReport report = qlab::run_verification(cfg);
  const std::string text =
      o.format == "markdown" ? report.to_markdown() : report.to_json();
  const int rc = emit(text, o.out);
  if (rc != 0) return rc;
  return report.all_pass() ? 0 : 1;
}

int run_spectrum(const CommonOpts& o) {
  using qlab::HypersurfaceModel;
  using qlab::ModelKind;
  if (o.model.empty())
    throw UsageError("spectrum requires --model");
  const int n = o.n.value_or(4);

  qlab::SpectrumTable table;
  if (o.model == "P") {
    if (o.r || o.alpha)
      throw UsageError("model 'P' does not take --r or --alpha");
    table = qlab::spectrum_table_complex_hypersurface(n);
  } else if (o.model == "minimal" || o.model == "horocyclic") {
    if (o.r || o.alpha)
      throw UsageError("model '" + o.model + "' does not take --r or --alpha");
    table = qlab::spectrum_table(n, o.model == "minimal"
                                        ? HypersurfaceModel::minimal()
                                        : HypersurfaceModel::horocyclic());
  } else {
    const ModelKind kind =
        o.model == "tube" ? ModelKind::Tube : ModelKind::Equidistant;
    double r = 1.0;
    if (o.r) {
      r = *o.r;
    } else if (o.alpha) {
      const HypersurfaceModel m = HypersurfaceModel::from_alpha(*o.alpha);
      if (m.kind != kind)
        throw UsageError("--alpha " + num(*o.alpha) +
                         " is outside the range of model '" + o.model + "'");
      r = m.r;
    }
    const HypersurfaceModel m = kind == ModelKind::Tube
                                    ? HypersurfaceModel::tube(r)
                                    : HypersurfaceModel::equidistant(r);
    table = qlab::spectrum_table(n, m, {0.25, 0.5, 1.0, 2.0});
  }

  const std::string text = o.format == "markdown"
                               ? qlab::spectrum_to_markdown(table)
                               : qlab::spectrum_to_json(table);
  return emit(text, o.out);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Constructs the curvature-adapted real hypersurfaces of the complex "
      "hyperbolic quadric and verifies their quantitative invariants"};
  app.require_subcommand(1);

  CommonOpts verify_opts, spectrum_opts, all_opts;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the verification checks");
  add_common(verify, verify_opts, true);
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Print principal curvature and Ricci spectra");
  add_common(spectrum, spectrum_opts, true);
  CLI::App* report_all = app.add_subcommand(
      "report-all", "Run every check layer over the default grid");
  add_common(report_all, all_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return run_verify(verify_opts, "verify");
    if (app.got_subcommand(spectrum)) return run_spectrum(spectrum_opts);
    return run_verify(all_opts, "report-all");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
