#include "quadriclab/oracles.hpp"

namespace qlab {

Eigen::MatrixXd ad_matrix(const SoElement& x) {
  const int n = x.n();
  const std::vector<SoElement> basis = standard_basis(n);
  const int d = static_cast<int>(basis.size());
  const double norm_sq = 2.0 * n;
  Eigen::MatrixXd m(d, d);
  for (int j = 0; j < d; ++j) {
    const SoElement br = bracket(x, basis[j]);
    for (int i = 0; i < d; ++i) m(i, j) = b_theta(br, basis[i]) / norm_sq;
  }
  return m;
}

double killing_by_structure_constants(const SoElement& x, const SoElement& y) {
  return (ad_matrix(x) * ad_matrix(y)).trace();
}

} // namespace qlab
