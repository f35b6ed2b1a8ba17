#ifndef QUADRICLAB_CONTACT_CURVATURE_HPP
#define QUADRICLAB_CONTACT_CURVATURE_HPP

#include <utility>
#include <vector>

#include "quadriclab/hypersurfaces.hpp"
#include "quadriclab/spectrum.hpp"

namespace qlab {

/// Almost contact metric data induced on a hypersurface frame: structure
/// tensor phi (tangential part of J), contact form eta and the residuals of
/// the defining identities phi^2 = -id + eta (x) xi, phi xi = 0,
/// eta(xi) = 1 and g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y).
struct ContactData {
  Eigen::MatrixXd phi;
  Eigen::VectorXd eta;
  double structure_residual = 0.0;
};

ContactData contact_data(const HypersurfaceFrame& f);

/// d eta (X, Y) = g((A phi + phi A) X, Y) / 2 up to the sign convention
/// used throughout: the matrix with entries g((A phi + phi A) e_i, e_j).
Eigen::MatrixXd d_eta_tensor(const HypersurfaceFrame& f,
                             const Eigen::MatrixXd& shape);

/// Normal Jacobi operator R(., normal) normal restricted to the tangent
/// frame. Its blocks are 0 on the complex span of C(normal), -1 on the
/// orthogonal complement of that span in the complex subbundle and -4 on
/// the Reeb direction; it commutes with the shape operator.
struct NormalJacobiReport {
  Eigen::MatrixXd matrix;
  double tangency_residual = 0.0;   // image component outside the frame span
  double block_residual = 0.0;      // vs diag(0, 0, -1, ..., -1, -4)
  double commutator_residual = 0.0; // vs the shape operator
};

NormalJacobiReport normal_jacobi(const BuiltModel& m);

/// Ricci tensor of a model hypersurface, assembled from the curvature
/// contraction identity Ric = -2n id - K + alpha A - A^2 with K the normal
/// Jacobi operator.
struct RicciReport {
  Eigen::MatrixXd matrix;
  Spectrum spectrum;
  std::vector<std::pair<double, int>> expected; // -2n, -2n -/+ alpha, -2n + 4
  double match_residual = 0.0;
  int cluster_count = 0;
  bool pseudo_einstein = false;
  double pseudo_einstein_residual = 0.0; // ||Ric + 2n id - 4 eta (x) eta||
  double phi_relation_residual = 0.0;    // ||Ric phi + phi Ric + 4n phi||
  double scalar = 0.0;
  double scalar_residual = 0.0;          // vs 4 - 2n(2n - 1)
};

RicciReport ricci(const BuiltModel& m);

/// Independent Ricci computation: contraction of the ambient curvature over
/// the tangent frame plus tr(A) A - A^2 (the Gauss equation route).
Eigen::MatrixXd ricci_gauss_oracle(const BuiltModel& m);

double scalar_curvature(const BuiltModel& m);

} // namespace qlab

#endif
