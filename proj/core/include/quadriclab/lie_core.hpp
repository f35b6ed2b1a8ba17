#ifndef QUADRICLAB_LIE_CORE_HPP
#define QUADRICLAB_LIE_CORE_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace qlab {

/// Element of the matrix Lie algebra so(2,n), stored as a dense (n+2)x(n+2)
/// real matrix in the block form [[A1, B], [B^T, A2]] with A1 in so(2),
/// A2 in so(n) and B an arbitrary real 2xn block.  Rows and columns 0..1
/// belong to the "2" factor and rows and columns 2..n+1 to the "n" factor.
class SoElement {
public:
  SoElement() = default;

  /// Zero element for a given n (n >= 3).
  static SoElement zero(int n);

  /// Assembles an element from its blocks; the block form guarantees the
  /// defining invariant X^T I_{2,n} + I_{2,n} X = 0 exactly.
  static SoElement from_blocks(const Eigen::Matrix2d& a1,
                               const Eigen::MatrixXd& a2,
                               const Eigen::MatrixXd& b);

  /// Wraps a full matrix; throws std::invalid_argument if the block-form
  /// invariant is violated beyond `tol` (absolute, entrywise).
  static SoElement from_matrix(const Eigen::MatrixXd& m, double tol = 1e-10);

  int n() const { return m_n; }
  int ambient_dim() const { return m_n + 2; }
  const Eigen::MatrixXd& matrix() const { return m_mat; }

  Eigen::Matrix2d block_a1() const { return m_mat.topLeftCorner(2, 2); }
  Eigen::MatrixXd block_a2() const { return m_mat.bottomRightCorner(m_n, m_n); }
  Eigen::MatrixXd block_b() const { return m_mat.topRightCorner(2, m_n); }

  /// Max-norm of X^T I_{2,n} + I_{2,n} X; zero for valid elements.
  double invariant_residual() const;

  double norm_inf() const { return m_mat.size() == 0 ? 0.0 : m_mat.cwiseAbs().maxCoeff(); }
  bool is_zero(double tol = 0.0) const { return norm_inf() <= tol; }

  SoElement operator+(const SoElement& o) const;
  SoElement operator-(const SoElement& o) const;
  SoElement operator-() const;
  SoElement operator*(double c) const;
  SoElement& operator+=(const SoElement& o);
  SoElement& operator-=(const SoElement& o);

private:
  int m_n = 0;
  Eigen::MatrixXd m_mat;
};

inline SoElement operator*(double c, const SoElement& x) { return x * c; }

/// Commutator [x, y] = xy - yx.  Closes in so(2,n); the result is validated
/// against the block-form invariant.
SoElement bracket(const SoElement& x, const SoElement& y);

/// Killing form B(x, y) = n tr(xy).
double killing(const SoElement& x, const SoElement& y);

/// Cartan involution theta(x) = I_{2,n} x I_{2,n}: flips the sign of the
/// off-diagonal blocks.  Exact (sign changes only).
SoElement cartan_theta(const SoElement& x);

/// Positive definite form B_theta(x, y) = -B(x, theta(y)).
double b_theta(const SoElement& x, const SoElement& y);

/// Splits x into (k part, p part) with k = (x + theta x)/2 fixed by theta
/// and p = (x - theta x)/2 reversed by theta.
std::pair<SoElement, SoElement> cartan_split(const SoElement& x);

/// B_theta-orthogonal basis of the full algebra so(2,n):
/// one so(2) generator, n(n-1)/2 so(n) generators E_ij - E_ji, and 2n
/// symmetric off-block generators E_ij + E_ji.  Every member has
/// B_theta norm squared equal to 2n.
std::vector<SoElement> standard_basis(int n);

/// The 2n symmetric off-block generators only (a basis of the p part),
/// ordered row-major over the 2xn block.
std::vector<SoElement> standard_p_basis(int n);

using InnerProduct = std::function<double(const SoElement&, const SoElement&)>;

/// Modified Gram-Schmidt with one re-orthogonalization pass under the given
/// inner product.  Throws on (near-)dependent input.
std::vector<SoElement> gram_schmidt(const std::vector<SoElement>& vecs,
                                    const InnerProduct& ip);

/// Linear subspace of so(2,n) given by an ordered basis.  Projections and
/// containment tests use the B_theta geometry; the Gram matrix must be
/// positive definite (a dependent basis is rejected at construction).
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::vector<SoElement> basis);

  /// Extracts a maximal independent subset of `gens` (rank-revealing QR on
  /// the flattened matrices) and builds the subspace it spans.
  static Subspace from_spanning(const std::vector<SoElement>& gens,
                                double rank_tol = 1e-9);

  int dimension() const { return static_cast<int>(m_basis.size()); }
  const std::vector<SoElement>& basis() const { return m_basis; }
  const Eigen::MatrixXd& gram() const { return m_gram; }

  /// B_theta-orthogonal projection onto the subspace; the zero subspace
  /// projects everything to zero.
  SoElement project(const SoElement& x) const;

  /// Coordinates of project(x) in the stored basis.
  Eigen::VectorXd coordinates(const SoElement& x) const;

  /// ||x - project(x)|| / max(||x||, 1e-300) in the B_theta norm.
  double containment_residual(const SoElement& x) const;

  bool contains(const SoElement& x, double rtol = 1e-8) const {
    return containment_residual(x) <= rtol;
  }

  /// B_theta-orthonormal basis (Gram-Schmidt view; the stored basis is
  /// left untouched).
  std::vector<SoElement> orthonormal_basis() const;

private:
  std::vector<SoElement> m_basis;
  Eigen::MatrixXd m_gram;
  Eigen::LLT<Eigen::MatrixXd> m_llt;
};

/// Mutual containment of the two spans, each basis vector within rtol.
bool span_equal(const Subspace& a, const Subspace& b, double rtol = 1e-8);

/// Largest containment residual over both bases (the quantity behind
/// span_equal).
double span_distance(const Subspace& a, const Subspace& b);

/// Subspace spanned by the concatenated bases (must stay independent).
Subspace direct_sum(const std::vector<const Subspace*>& parts);

/// max over basis pairs of the containment residual of [s, s] in s.
double subalgebra_residual(const Subspace& s);

/// Derived series s, [s,s], ... reaches zero.
bool is_solvable(const Subspace& s, double rank_tol = 1e-9);

/// Lower central series s, [s,s], [s,[s,s]], ... reaches zero; if so,
/// `steps` (optional) receives the number of nonzero terms.
bool is_nilpotent(const Subspace& s, int* steps = nullptr,
                  double rank_tol = 1e-9);

} // namespace qlab

#endif
