#include "quadriclab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

namespace qlab {

CheckRecord make_check(std::string name, std::string anchor,
                       std::string expected, std::string computed,
                       double residual, double tol) {
  CheckRecord c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.expected = std::move(expected);
  c.computed = std::move(computed);
  c.residual = residual;
  c.tol = tol;
  c.pass = std::isfinite(residual) && residual <= tol;
  return c;
}

CheckRecord make_bool_check(std::string name, std::string anchor,
                            std::string expected, std::string computed,
                            bool ok) {
  return make_check(std::move(name), std::move(anchor), std::move(expected),
                    std::move(computed), ok ? 0.0 : 1.0, 0.0);
}

int VerificationReport::passed() const {
  int k = 0;
  for (const CheckRecord& c : checks) k += c.pass ? 1 : 0;
  return k;
}

void VerificationReport::sort_checks() {
  std::sort(checks.begin(), checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) {
              return a.anchor != b.anchor ? a.anchor < b.anchor
                                          : a.name < b.name;
            });
}

void VerificationReport::append(std::vector<CheckRecord> more) {
  for (CheckRecord& c : more) checks.push_back(std::move(c));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (const char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

namespace {

std::string json_number(double v) {
  // Non-finite values are not valid JSON numbers; quote them.
  if (!std::isfinite(v)) return "\"" + format_double(v) + "\"";
  return format_double(v);
}

} // namespace

std::string VerificationReport::to_json() const {
  std::ostringstream os;
  os << "{\n";
  os << "  \"meta\": {\n";
  os << "    \"tool\": \"" << json_escape(meta.tool) << "\",\n";
  os << "    \"version\": \"" << json_escape(meta.version) << "\",\n";
  os << "    \"command\": \"" << json_escape(meta.command) << "\",\n";
  os << "    \"seed\": " << meta.seed << ",\n";
  os << "    \"threads\": " << meta.threads << "\n";
  os << "  },\n";
  os << "  \"checks\": [";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const CheckRecord& c = checks[i];
    os << (i == 0 ? "\n" : ",\n");
    os << "    {\"name\": \"" << json_escape(c.name) << "\", \"anchor\": \""
       << json_escape(c.anchor) << "\", \"expected\": \""
       << json_escape(c.expected) << "\", \"computed\": \""
       << json_escape(c.computed) << "\", \"residual\": " << json_number(c.residual)
       << ", \"tol\": " << json_number(c.tol) << ", \"pass\": "
       << (c.pass ? "true" : "false") << "}";
  }
  os << (checks.empty() ? "],\n" : "\n  ],\n");
  os << "  \"summary\": {\n";
  os << "    \"total\": " << total() << ",\n";
  os << "    \"passed\": " << passed() << ",\n";
  os << "    \"failed\": " << failed() << ",\n";
  os << "    \"notes\": [";
  for (std::size_t i = 0; i < notes.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n");
    os << "      \"" << json_escape(notes[i]) << "\"";
  }
  os << (notes.empty() ? "]\n" : "\n    ]\n");
  os << "  }\n";
  os << "}\n";
  return os.str();
}

std::string VerificationReport::to_markdown() const {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "- tool: " << meta.tool << " " << meta.version << "\n";
  os << "- command: `" << meta.command << "`\n";
  os << "- seed: " << meta.seed << "\n";
  os << "- threads: " << meta.threads << "\n\n";
  os << "| status | anchor | check | expected | computed | residual | tol |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const CheckRecord& c : checks) {
    os << "| " << (c.pass ? "pass" : "FAIL") << " | " << c.anchor << " | "
       << c.name << " | " << c.expected << " | " << c.computed << " | "
       << format_double(c.residual) << " | " << format_double(c.tol) << " |\n";
  }
  os << "\n**Summary:** " << passed() << "/" << total() << " checks passed";
  if (failed() > 0) os << ", " << failed() << " failed";
  os << ".\n";
  if (!notes.empty()) {
    os << "\nNotes:\n";
    for (const std::string& n : notes) os << "- " << n << "\n";
  }
  return os.str();
}

} // namespace qlab
