#ifndef QUADRICLAB_HYPERSURFACES_HPP
#define QUADRICLAB_HYPERSURFACES_HPP

#include <string>
#include <vector>

#include "quadriclab/quadric_geometry.hpp"
#include "quadriclab/root_system.hpp"
#include "quadriclab/spectrum.hpp"

namespace qlab {

/// The four members of the homogeneous Hopf hypersurface family, indexed by
/// the Hopf principal curvature alpha = 2 coth(2r) (tube over the singular
/// complex hypersurface orbit), 0 (the minimal orbit), 2 tanh(2r)
/// (equidistants of the minimal orbit) and 2 (the horosphere-type limit).
enum class ModelKind { Tube, Minimal, Equidistant, Horocyclic };

/// A member of the family: kind plus radius parameter where one applies.
struct HypersurfaceModel {
  ModelKind kind = ModelKind::Minimal;
  double r = 0.0;

  static HypersurfaceModel tube(double r);
  static HypersurfaceModel minimal();
  static HypersurfaceModel equidistant(double r);
  static HypersurfaceModel horocyclic();

  /// Inverts alpha(): 0 -> minimal, (0,2) -> equidistant, 2 -> horocyclic,
  /// (2,inf) -> tube. Throws for alpha < 0.
  static HypersurfaceModel from_alpha(double alpha, double tol = 1e-12);

  /// Hopf principal curvature of the model.
  double alpha() const;

  std::string name() const;
};

/// Ordered g-orthonormal tangent frame at the base point of a model.
/// Layout: [0..1] the complex span of C(normal), [2..n-1] the +1 curvature
/// block T1, [n..2n-3] the -1 block T-1, [2n-2] the Reeb vector -J(normal).
struct HypersurfaceFrame {
  int n = 0;
  SoElement normal;
  std::vector<SoElement> tangent;

  int dim() const { return 2 * n - 1; }
  int t1_begin() const { return 2; }
  int tm1_begin() const { return n; }
  int xi_index() const { return 2 * n - 2; }
  const SoElement& xi() const { return tangent[xi_index()]; }

  Subspace t1_space() const;
  Subspace tm1_space() const;
  /// Complement of the Reeb direction (the maximal complex subbundle).
  Subspace c_space() const;
  /// T1 + T-1 (the complement of the complex span of C(normal) inside it).
  Subspace q_space() const;

  /// Matrix of the structure tensor: the tangential part of J.
  Eigen::MatrixXd phi_matrix() const;
  /// Coordinates of the contact form (the g-dual of the Reeb vector).
  Eigen::VectorXd eta() const;

  /// Worst deviation from g-orthonormality and tangency to the normal.
  double orthonormality_residual() const;
};

/// Shape operator matrix, its clustered spectrum and the symmetry residual
/// (symmetry is asserted, never forced).
struct ShapeOperatorReport {
  Eigen::MatrixXd matrix;
  Spectrum spectrum;
  double symmetry_residual = 0.0;
};

/// Shape operator of the orbit of the subalgebra s of a + n through the
/// base point, relative to a unit normal in a + n: X |-> [zeta, X]_s with
/// zeta the p part of the normal, expressed in an an_metric-orthonormal
/// basis of s. The normal must be an_metric-orthogonal to s.
ShapeOperatorReport shape_by_bracket(const RootSystem& rs, const Subspace& s,
                                     const SoElement& normal_hat);

/// The same operator transported to p by the isometry a + n -> p and
/// expressed in the given ordered g-orthonormal frame (whose vectors must
/// represent elements of s). If expansion_residual is non-null it receives
/// the worst distance of an operator image from the frame span.
Eigen::MatrixXd shape_matrix_in_frame(const RootSystem& rs, const Subspace& s,
                                      const SoElement& normal_hat,
                                      const std::vector<SoElement>& frame,
                                      double* expansion_residual = nullptr);

/// The singular orbit: a homogeneous complex hypersurface of complex
/// codimension one. Its unit normals form a circle zeta_phi; the shape
/// operator w.r.t. zeta_phi is diag(0, 0, +1, -1) in the ordered frame
/// (C-block fixed, +1 block rotating with the half angle phi/2).
struct PModel {
  int n = 0;
  double phi = 0.0;
  SoElement normal;
  std::vector<SoElement> tangent;  // c, Jc, T1(phi) [n-2], T-1(phi) [n-2]
  Subspace tangent_space;          // dimension 2n-2, J-invariant
  Subspace normal_space;           // dimension 2, J-invariant
  ShapeOperatorReport shape;
  double diagonal_residual = 0.0;  // vs diag(0, 0, +1, -1)
};

PModel build_P(const RootSystem& rs, double phi = 0.0);

/// Flipped shape diagonal of a transported model (tube or equidistant) at
/// radius r > 0, in its frame order: (0, 0, +1 x (n-2), -1 x (n-2), alpha).
std::vector<double> transport_diagonal(ModelKind kind, int n, double r);

/// A fully constructed model hypersurface at the base point. The shape
/// matrix uses the orientation with Hopf principal curvature +alpha; for
/// the transported models signed_diagonal keeps the values relative to the
/// outgoing geodesic direction (the negatives of the flipped ones).
struct BuiltModel {
  HypersurfaceModel model;
  double alpha = 0.0;
  HypersurfaceFrame frame;
  ShapeOperatorReport shape;
  std::vector<double> signed_diagonal;
  double diagonal_residual = 0.0;  // vs the expected diagonal, computed parts
};

BuiltModel build_M(const RootSystem& rs, const HypersurfaceModel& model);

/// Named residuals of the pointwise model identities: Reeb eigenvector,
/// anticommutation with the structure tensor, vanishing of the exterior
/// derivative of the contact form, commutation with the normal Jacobi
/// operator, trace = alpha, isotropy of the normal, J swapping the +1/-1
/// blocks, and containment of those blocks in the +1 eigenspace of the
/// aligned real structure and its J image.
struct ModelIdentity {
  std::string name;
  double residual = 0.0;
};

std::vector<ModelIdentity> model_identities(const BuiltModel& m);

/// Phase phi* maximizing the mean alignment g(C_phi v, v) over the given
/// g-unit vectors (closed form of the sinusoid's maximum).
double aligned_structure_phase(const std::vector<SoElement>& vecs);

/// max over basis triples of the distance of [[x, y], z] from m, scaled by
/// 1 + the bracket norm (a Lie triple system test).
double lie_triple_residual(const Subspace& m);

/// True iff s is a Heisenberg algebra of dimension 2n - 3: one-dimensional
/// derived algebra equal to the center, two-step nilpotent.
bool is_heisenberg(const Subspace& s, double rank_tol = 1e-9);

} // namespace qlab

#endif
