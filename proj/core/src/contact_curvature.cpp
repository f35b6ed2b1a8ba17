#include "quadriclab/contact_curvature.hpp"

#include <cmath>
#include <utility>

namespace qlab {

ContactData contact_data(const HypersurfaceFrame& f) {
  const int d = f.dim();
  ContactData c;
  c.phi = f.phi_matrix();
  c.eta = f.eta();

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  Eigen::VectorXd xi = Eigen::VectorXd::Zero(d);
  xi(f.xi_index()) = 1.0;

  double worst =
      (c.phi * c.phi + id - xi * c.eta.transpose()).cwiseAbs().maxCoeff();
  worst = std::max(worst, (c.phi * xi).cwiseAbs().maxCoeff());
  worst = std::max(worst, std::abs(c.eta.dot(xi) - 1.0));
  // g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y) in the orthonormal frame.
  worst = std::max(worst, (c.phi.transpose() * c.phi -
                           (id - c.eta * c.eta.transpose()))
                              .cwiseAbs()
                              .maxCoeff());
  c.structure_residual = worst;
  return c;
}

Eigen::MatrixXd d_eta_tensor(const HypersurfaceFrame& f,
                             const Eigen::MatrixXd& shape) {
  const Eigen::MatrixXd phi = f.phi_matrix();
  return shape * phi + phi * shape;
}

NormalJacobiReport normal_jacobi(const BuiltModel& m) {
  const HypersurfaceFrame& f = m.frame;
  const int d = f.dim();
  const int n = f.n;

  NormalJacobiReport rep;
  rep.matrix.resize(d, d);
  for (int j = 0; j < d; ++j) {
    const SoElement rj = curvature(f.tangent[j], f.normal, f.normal);
    SoElement expanded = SoElement::zero(rj.n());
    for (int i = 0; i < d; ++i) {
      rep.matrix(i, j) = g_metric(f.tangent[i], rj);
      expanded += f.tangent[i] * rep.matrix(i, j);
    }
    rep.tangency_residual =
        std::max(rep.tangency_residual, (rj - expanded).norm_inf());
  }

  Eigen::MatrixXd deviation = rep.matrix;
  for (int k = 0; k < 2 * (n - 2); ++k) deviation(2 + k, 2 + k) += 1.0;
  deviation(d - 1, d - 1) += 4.0;
  rep.block_residual = deviation.cwiseAbs().maxCoeff();
  rep.commutator_residual = (rep.matrix * m.shape.matrix -
                             m.shape.matrix * rep.matrix)
                                .cwiseAbs()
                                .maxCoeff();
  return rep;
}

RicciReport ricci(const BuiltModel& m) {
  const HypersurfaceFrame& f = m.frame;
  const int d = f.dim();
  const int n = f.n;
  const double a = m.alpha;
  const Eigen::MatrixXd& shape = m.shape.matrix;

  RicciReport rep;
  const NormalJacobiReport nj = normal_jacobi(m);
  rep.matrix = -2.0 * n * Eigen::MatrixXd::Identity(d, d) - nj.matrix +
               a * shape - shape * shape;

  rep.expected = Spectrum::merge_expected({{-2.0 * n, 2},
                                           {-2.0 * n + a, n - 2},
                                           {-2.0 * n - a, n - 2},
                                           {-2.0 * n + 4.0, 1}});
  rep.spectrum = Spectrum::from_symmetric(rep.matrix);
  rep.match_residual = rep.spectrum.match_residual(rep.expected);
  rep.cluster_count = static_cast<int>(rep.spectrum.clusters.size());

  Eigen::VectorXd eta = f.eta();
  const Eigen::MatrixXd pseudo =
      rep.matrix + 2.0 * n * Eigen::MatrixXd::Identity(d, d) -
      4.0 * eta * eta.transpose();
  rep.pseudo_einstein_residual = pseudo.cwiseAbs().maxCoeff();
  rep.pseudo_einstein =
      std::abs(a) <= 1e-12 && rep.pseudo_einstein_residual < 1e-9 &&
      rep.spectrum.matches(
          Spectrum::merge_expected({{-2.0 * n, 2 * n - 2}, {-2.0 * n + 4.0, 1}}),
          1e-9);

  const Eigen::MatrixXd phi = f.phi_matrix();
  rep.phi_relation_residual =
      (rep.matrix * phi + phi * rep.matrix + 4.0 * n * phi)
          .cwiseAbs()
          .maxCoeff();

  rep.scalar = rep.matrix.trace();
  rep.scalar_residual = std::abs(rep.scalar - (4.0 - 2.0 * n * (2.0 * n - 1.0)));
  return rep;
}

Eigen::MatrixXd ricci_gauss_oracle(const BuiltModel& m) {
  const HypersurfaceFrame& f = m.frame;
  const int d = f.dim();
  const Eigen::MatrixXd& shape = m.shape.matrix;

  Eigen::MatrixXd ambient = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const SoElement r = curvature(f.tangent[i], f.tangent[k], f.tangent[k]);
      for (int j = 0; j < d; ++j) ambient(i, j) += g_metric(r, f.tangent[j]);
    }
  return ambient + shape.trace() * shape - shape * shape;
}

double scalar_curvature(const BuiltModel& m) { return ricci(m).scalar; }

} // namespace qlab
