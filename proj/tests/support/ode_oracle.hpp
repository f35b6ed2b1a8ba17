#ifndef QUADRICLAB_TESTS_SUPPORT_ODE_ORACLE_HPP
#define QUADRICLAB_TESTS_SUPPORT_ODE_ORACLE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <utility>

namespace qlab::testing {

/// Integrates the matrix Jacobi equation D'' = -K D with constant
/// coefficient K by classical fixed-step RK4 and returns (D(r), D'(r)).
inline std::pair<Eigen::MatrixXd, Eigen::MatrixXd> integrate_jacobi(
    const Eigen::MatrixXd& k, const Eigen::MatrixXd& d0,
    const Eigen::MatrixXd& v0, double r, double h = 1e-4) {
  Eigen::MatrixXd d = d0, v = v0;
  const int steps = static_cast<int>(std::ceil(r / h));
  const double step = r / steps;
  for (int i = 0; i < steps; ++i) {
    const Eigen::MatrixXd k1d = v;
    const Eigen::MatrixXd k1v = -k * d;
    const Eigen::MatrixXd k2d = v + 0.5 * step * k1v;
    const Eigen::MatrixXd k2v = -k * (d + 0.5 * step * k1d);
    const Eigen::MatrixXd k3d = v + 0.5 * step * k2v;
    const Eigen::MatrixXd k3v = -k * (d + 0.5 * step * k2d);
    const Eigen::MatrixXd k4d = v + step * k3v;
    const Eigen::MatrixXd k4v = -k * (d + step * k3d);
    d += (step / 6.0) * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    v += (step / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }
  return {d, v};
}

} // namespace qlab::testing

#endif
