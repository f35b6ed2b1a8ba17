#ifndef QUADRICLAB_REPORT_HPP
#define QUADRICLAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qlab {

/// One verified claim: a unique name, the stable claim-family anchor it
/// belongs to, rendered expected/computed values, and the residual measured
/// against the tolerance.
struct CheckRecord {
  std::string name;
  std::string anchor;
  std::string expected;
  std::string computed;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Residual check: passes iff the residual is finite and within tol.
CheckRecord make_check(std::string name, std::string anchor,
                       std::string expected, std::string computed,
                       double residual, double tol);

/// Boolean check: residual 0 or 1 against tolerance 0.
CheckRecord make_bool_check(std::string name, std::string anchor,
                            std::string expected, std::string computed,
                            bool ok);

struct ReportMeta {
  std::string tool = "quadric-lab";
  std::string version;
  std::string command;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Deterministic verification report: checks are sorted by (anchor, name)
/// and both renderings are byte-stable for a fixed configuration and seed.
struct VerificationReport {
  ReportMeta meta;
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;

  int total() const { return static_cast<int>(checks.size()); }
  int passed() const;
  int failed() const { return total() - passed(); }
  bool all_pass() const { return failed() == 0; }

  void sort_checks();
  void append(std::vector<CheckRecord> more);

  std::string to_json() const;
  std::string to_markdown() const;
};

/// Shortest-width fixed formatting with 17 significant digits; non-finite
/// values render as quoted strings in JSON.
std::string format_double(double v);

/// Escapes backslashes, quotes and control characters.
std::string json_escape(const std::string& s);

} // namespace qlab

#endif
