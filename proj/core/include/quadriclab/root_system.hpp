#ifndef QUADRICLAB_ROOT_SYSTEM_HPP
#define QUADRICLAB_ROOT_SYSTEM_HPP

#include <map>
#include <string>
#include <vector>

#include "quadriclab/lie_core.hpp"

namespace qlab {

/// Restricted root c1*alpha1 + c2*alpha2 of so(2,n) relative to the maximal
/// abelian subspace a of p; the roots form a system of type B2 with
/// positive roots (1,0), (0,1), (1,1), (1,2).
struct RootCoeffs {
  int c1 = 0;
  int c2 = 0;
  bool operator<(const RootCoeffs& o) const {
    return c1 != o.c1 ? c1 < o.c1 : c2 < o.c2;
  }
  bool operator==(const RootCoeffs& o) const { return c1 == o.c1 && c2 == o.c2; }
  RootCoeffs operator-() const { return {-c1, -c2}; }
};

/// One restricted root space with its root vector (metric dual of the root
/// functional in a).
struct RootDatum {
  RootCoeffs coeffs;
  Subspace space;
  SoElement root_vector;
  int multiplicity = 0;
};

/// Basis data for the solvable part a + n of the Iwasawa decomposition.
struct IwasawaFrame {
  std::vector<SoElement> a_basis;  // H^1, H^2 (dual to alpha1, alpha2)
  std::vector<SoElement> n_basis;  // positive root space bases, concatenated
};

/// The restricted root decomposition of so(2,n) and everything built from
/// it: root spaces, g0 = a + k0, the k_alpha / p_alpha pieces under the
/// Cartan involution, and the named subalgebras used by the hypersurface
/// constructions.
class RootSystem {
public:
  explicit RootSystem(int n);

  int n() const { return m_n; }

  /// Element of a with prescribed diagonal parameters (a1, a2).
  SoElement a_element(double a1, double a2) const;

  /// Dual basis vectors: alpha_i(h_j) = delta_ij.
  const SoElement& h1() const { return m_h1; }
  const SoElement& h2() const { return m_h2; }

  /// Value of the root functional on an element of a.
  static double root_value(const RootCoeffs& r, double a1, double a2) {
    return r.c1 * (a1 - a2) + r.c2 * a2;
  }

  /// All eight root data, negative roots included.
  const std::vector<RootDatum>& roots() const { return m_roots; }
  const RootDatum& root(const RootCoeffs& r) const;
  const RootDatum& root(int c1, int c2) const { return root(RootCoeffs{c1, c2}); }

  /// Metric dual H_alpha of a root, solved from the 2x2 linear system
  /// <H_alpha, H> = alpha(H) on a (inner product g = B_theta / 4n).
  SoElement root_vector(const RootCoeffs& r) const;

  const Subspace& a_space() const { return m_a; }
  const Subspace& k0() const { return m_k0; }
  const Subspace& g0() const { return m_g0; }
  const Subspace& n_space() const { return m_n_space; }

  /// p and k parts of g_alpha + g_{-alpha} for a positive root.
  const Subspace& p_alpha(const RootCoeffs& r) const;
  const Subspace& k_alpha(const RootCoeffs& r) const;

  /// Named subalgebras and subspaces:
  ///   "d"     R H_{a1+2a2} + n1          (complex hypersurface algebra)
  ///   "n1"    g_{a2} + g_{a1+a2} + g_{a1+2a2}   (Heisenberg algebra)
  ///   "s1"    a + n1
  ///   "h1"    a1 + n                      (horosphere-type algebra)
  ///   "l1"    g_{-a1} + g0 + g_{a1}
  ///   "m1"    g_{-a1} + a^1 + g_{a1} + k0
  ///   "q1"    l1 + n1                     (parabolic-type algebra)
  ///   "a1"    R H_{a1+2a2} = ker(alpha1)
  ///   "a_up1" R H_{a1}
  ///   "g1"    g_{-a1} + a^1 + g_{a1}
  ///   "k1"    k_{a1} + k0
  const std::map<std::string, Subspace>& named_subalgebras() const {
    return m_named;
  }
  const Subspace& named(const std::string& key) const;

  IwasawaFrame iwasawa() const;

  /// Left-invariant metric on a + n: <H1 + X1, H2 + X2> =
  /// tr(H1 H2)/4 - tr(X1 theta(X2))/8.  Arguments must lie in a + n.
  double an_metric(const SoElement& x, const SoElement& y) const;

  /// Linear isometry a + n -> p: H + X  |->  H + (X - theta X)/2.
  SoElement p_projection(const SoElement& an_elt) const;

  /// Inverse of p_projection: the (a + n)-component of the argument in the
  /// Iwasawa decomposition g = k + a + n (not a B_theta-orthogonal
  /// projection).  Throws if the argument is not in p.
  SoElement an_representative(const SoElement& p_elt) const;

  /// Residual of the containment of x in a + n (B_theta geometry).
  double an_containment_residual(const SoElement& x) const {
    return m_an.containment_residual(x);
  }

private:
  int m_n;
  SoElement m_h1, m_h2;
  std::vector<RootDatum> m_roots;
  Subspace m_a, m_k0, m_g0, m_n_space, m_an;
  std::map<RootCoeffs, Subspace> m_p_alpha, m_k_alpha;
  std::map<std::string, Subspace> m_named;
  Eigen::PartialPivLU<Eigen::MatrixXd> m_iwasawa_lu;  // k+a+n coordinates
  Eigen::MatrixXd m_iwasawa_cols;                     // flattened basis columns
  std::vector<SoElement> m_iwasawa_basis;             // k basis, then a, then n
  int m_k_dim = 0;
};

/// Explicit bases of the positive root spaces (the generators behind
/// RootSystem); exposed for tests that pin the matrix patterns.
std::vector<SoElement> root_space_basis(int n, const RootCoeffs& positive);

} // namespace qlab

#endif
