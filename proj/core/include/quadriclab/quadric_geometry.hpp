#ifndef QUADRICLAB_QUADRIC_GEOMETRY_HPP
#define QUADRICLAB_QUADRIC_GEOMETRY_HPP

#include "quadriclab/lie_core.hpp"
#include "quadriclab/spectrum.hpp"

namespace qlab {

/// Riemannian metric on p: g = B_theta / (4n).  Normalized so that the
/// space has minimal sectional curvature -4 and is Einstein with constant
/// -2n.  Valid on all of so(2,n) as a bilinear form; geometric meaning is
/// on p.
double g_metric(const SoElement& x, const SoElement& y);

/// Generator of the Kaehler structure: z in k with top 2x2 block
/// [[0,-1],[1,0]].  ad(z) restricted to p squares to -id exactly.
SoElement kaehler_generator(int n);

/// Complex structure J = ad(z)|p.
SoElement j_apply(const SoElement& x);

/// Standard real structure C0 = Ad(c0)|p with c0 = diag(1,-1,1,...,1);
/// defined by entrywise sign flips, exact.
SoElement c0_apply(const SoElement& x);

/// Rotated real structure C_phi = cos(phi) C0 + sin(phi) J C0.
SoElement real_structure_apply(const SoElement& x, double phi);

/// g-orthonormal frame of p (2n vectors): sqrt(2) * (E_ij + E_ji) over the
/// off-diagonal block, row-major.
std::vector<SoElement> p_frame(int n);

/// g-unit basis of V(C0) (n vectors, first block row) and of JV(C0)
/// (second block row).
std::vector<SoElement> v_c0_frame(int n);
std::vector<SoElement> jv_c0_frame(int n);

/// +1 eigenspace V(C_phi) = {cos(phi/2) u + sin(phi/2) Ju : u in V(C0)}
/// and its image JV(C_phi).
Subspace v_of_c(int n, double phi);
Subspace jv_of_c(int n, double phi);

/// Curvature tensor R(x,y)z of the quadric model at the base point,
/// evaluated with the real structure C_phi.  The value is independent of
/// phi.
SoElement curvature(const SoElement& x, const SoElement& y,
                    const SoElement& z, double phi = 0.0);

/// Matrix of v |-> R(v, w) w on a g-orthonormal frame.
Eigen::MatrixXd jacobi_operator_matrix(const SoElement& w,
                                       const std::vector<SoElement>& frame,
                                       double phi = 0.0);

enum class SingularKind { APrincipal, Regular, AIsotropic };

/// Classification of a unit tangent vector by the circle of real
/// structures: t (in [0, pi/4]) is the canonical angle of the singular
/// decomposition v = cos(t) u + sin(t) J w, aligned_phi the angle of the
/// maximizing real structure.  Kind resolves t = 0 / t = pi/4 within
/// kind_tol.
struct SingularityClass {
  SingularKind kind = SingularKind::Regular;
  double t = 0.0;
  double aligned_phi = 0.0;
  double max_alignment = 0.0;  // max over phi of g(C_phi v, v) = cos(2t)
};

/// Classifies a tangent vector by maximizing g(C_phi v, v) over a 256-point
/// phi grid refined by 30 bisection steps.  Vectors within 1e-6 of unit
/// norm are normalized silently; anything farther is rejected.
SingularityClass classify_singular(const SoElement& v, double kind_tol = 1e-6);

/// Jacobi operator spectrum report for a unit tangent vector: numerical
/// clustered spectrum, the closed-form spectrum at the classified angle t,
/// and the largest deviation between the two.
struct JacobiSpectrumReport {
  SingularityClass cls;
  Spectrum spectrum;
  std::vector<std::pair<double, int>> closed_form;
  double residual = 0.0;
};

/// Closed-form Jacobi eigenvalues at angle t:
/// {0 x2, -1+cos(2t) x(n-2), -1-cos(2t) x(n-2), -2+2sin(2t) x1,
///  -2-2sin(2t) x1}, merged at the degenerate angles.
std::vector<std::pair<double, int>> jacobi_closed_form(int n, double t);

JacobiSpectrumReport jacobi_spectrum(const SoElement& v);

/// Ricci operator residual: max over a p-basis of
/// |sum_i R(v, e_i) e_i + 2n v| (Einstein constant -2n).
double einstein_residual(int n);

} // namespace qlab

#endif
