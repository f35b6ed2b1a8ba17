#ifndef QUADRICLAB_ORACLES_HPP
#define QUADRICLAB_ORACLES_HPP

#include "quadriclab/lie_core.hpp"

namespace qlab {

/// Killing form tr(ad x . ad y) computed from structure constants over the
/// standard basis; an independent cross-check of the closed form n tr(xy).
double killing_by_structure_constants(const SoElement& x, const SoElement& y);

/// Matrix of ad x in the standard basis (coordinates extracted with
/// B_theta, under which the basis is orthogonal with norm squared 2n).
Eigen::MatrixXd ad_matrix(const SoElement& x);

} // namespace qlab

#endif
