#include "quadriclab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace qlab {

Spectrum Spectrum::from_symmetric(const Eigen::MatrixXd& m, double sym_tol,
                                  double cluster_scale) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > sym_tol)
    throw std::invalid_argument("operator matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed");
  const Eigen::VectorXd& ev = es.eigenvalues();
  const Eigen::MatrixXd& vec = es.eigenvectors();

  Spectrum s;
  int i = 0;
  const int d = static_cast<int>(ev.size());
  while (i < d) {
    int j = i + 1;
    while (j < d &&
           ev(j) - ev(j - 1) < cluster_scale * (1.0 + std::abs(ev(j)))) {
      ++j;
    }
    EigenCluster c;
    c.multiplicity = j - i;
    c.value = ev.segment(i, j - i).mean();
    c.vectors = vec.middleCols(i, j - i);
    s.clusters.push_back(std::move(c));
    i = j;
  }
  return s;
}

std::vector<std::pair<double, int>> Spectrum::merge_expected(
    std::vector<std::pair<double, int>> expected, double cluster_scale) {
  std::sort(expected.begin(), expected.end());
  std::vector<std::pair<double, int>> out;
  for (const auto& [v, m] : expected) {
    if (m == 0) continue;
    if (!out.empty() &&
        v - out.back().first < cluster_scale * (1.0 + std::abs(v))) {
      // weighted mean keeps the merged value representative
      const auto& [pv, pm] = out.back();
      out.back() = {(pv * pm + v * m) / (pm + m), pm + m};
    } else {
      out.emplace_back(v, m);
    }
  }
  return out;
}

int Spectrum::total_multiplicity() const {
  int t = 0;
  for (const EigenCluster& c : clusters) t += c.multiplicity;
  return t;
}

double Spectrum::match_residual(
    const std::vector<std::pair<double, int>>& expected) const {
  if (expected.size() != clusters.size())
    return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].multiplicity != expected[i].second)
      return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::abs(clusters[i].value - expected[i].first));
  }
  return worst;
}

namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

} // namespace

std::string Spectrum::to_string() const {
  std::vector<std::pair<double, int>> flat;
  flat.reserve(clusters.size());
  for (const EigenCluster& c : clusters) flat.emplace_back(c.value, c.multiplicity);
  return spectrum_string(flat);
}

std::string spectrum_string(const std::vector<std::pair<double, int>>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += format_value(s[i].first);
    out += " x";
    out += std::to_string(s[i].second);
  }
  out += "}";
  return out;
}

} // namespace qlab
