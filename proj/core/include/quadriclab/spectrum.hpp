#ifndef QUADRICLAB_SPECTRUM_HPP
#define QUADRICLAB_SPECTRUM_HPP

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace qlab {

/// One cluster of numerically coincident eigenvalues of a symmetric
/// operator, together with the spanning eigenvector columns (coordinates in
/// whatever frame the operator matrix was expressed in).
struct EigenCluster {
  double value = 0.0;
  int multiplicity = 0;
  Eigen::MatrixXd vectors;
};

/// Clustered spectrum of a symmetric operator, ascending by eigenvalue.
struct Spectrum {
  std::vector<EigenCluster> clusters;

  /// Eigen-decomposes a symmetric matrix (symmetry asserted, not forced,
  /// within sym_tol) and merges eigenvalues whose gap is below
  /// cluster_scale * (1 + |lambda|).
  static Spectrum from_symmetric(const Eigen::MatrixXd& m,
                                 double sym_tol = 1e-9,
                                 double cluster_scale = 1e-6);

  /// Expected spectrum {value, multiplicity} sorted ascending with values
  /// closer than cluster_scale merged; convenience for closed forms.
  static std::vector<std::pair<double, int>> merge_expected(
      std::vector<std::pair<double, int>> expected,
      double cluster_scale = 1e-6);

  int total_multiplicity() const;

  /// Largest |computed - expected| across clusters when the cluster
  /// pattern (count and multiplicities) matches; +infinity otherwise.
  double match_residual(const std::vector<std::pair<double, int>>& expected) const;

  bool matches(const std::vector<std::pair<double, int>>& expected,
               double tol) const {
    return match_residual(expected) <= tol;
  }

  /// "{v1 x m1, v2 x m2, ...}" with short fixed formatting.
  std::string to_string() const;
};

/// Formats an expected spectrum the same way Spectrum::to_string does.
std::string spectrum_string(const std::vector<std::pair<double, int>>& s);

} // namespace qlab

#endif
