#include "quadriclab/lie_core.hpp"

#include <cmath>
#include <stdexcept>

namespace qlab {

namespace {

void check_n(int n) {
  if (n < 3) throw std::invalid_argument("so(2,n) requires n >= 3");
}

// Applies the signature matrix I_{2,n} = diag(-1,-1,1,...,1) on the given
// side; equivalently flips the sign of the first two rows (or columns).
Eigen::MatrixXd flip_off_blocks(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd r = m;
  const int n = static_cast<int>(m.rows()) - 2;
  r.topRightCorner(2, n) *= -1.0;
  r.bottomLeftCorner(n, 2) *= -1.0;
  return r;
}

} // namespace

SoElement SoElement::zero(int n) {
  check_n(n);
  SoElement x;
  x.m_n = n;
  x.m_mat = Eigen::MatrixXd::Zero(n + 2, n + 2);
  return x;
}

SoElement SoElement::from_blocks(const Eigen::Matrix2d& a1,
                                 const Eigen::MatrixXd& a2,
                                 const Eigen::MatrixXd& b) {
  const int n = static_cast<int>(a2.rows());
  check_n(n);
  if (a2.cols() != n || b.rows() != 2 || b.cols() != n)
    throw std::invalid_argument("block dimensions inconsistent");
  if ((a1 + a1.transpose()).cwiseAbs().maxCoeff() != 0.0 ||
      (a2 + a2.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument("diagonal blocks must be skew-symmetric");
  SoElement x;
  x.m_n = n;
  x.m_mat = Eigen::MatrixXd::Zero(n + 2, n + 2);
  x.m_mat.topLeftCorner(2, 2) = a1;
  x.m_mat.bottomRightCorner(n, n) = a2;
  x.m_mat.topRightCorner(2, n) = b;
  x.m_mat.bottomLeftCorner(n, 2) = b.transpose();
  return x;
}

SoElement SoElement::from_matrix(const Eigen::MatrixXd& m, double tol) {
  const int n = static_cast<int>(m.rows()) - 2;
  check_n(n);
  if (m.cols() != m.rows()) throw std::invalid_argument("matrix must be square");
  SoElement x;
  x.m_n = n;
  x.m_mat = m;
  if (x.invariant_residual() > tol)
    throw std::invalid_argument("matrix is not in so(2,n)");
  return x;
}

double SoElement::invariant_residual() const {
  if (m_mat.size() == 0) return 0.0;
  // X^T I + I X = 0  <=>  (I X)^T = -(I X): I X flips the first two rows.
  Eigen::MatrixXd ix = m_mat;
  ix.topRows(2) *= -1.0;
  return (ix + ix.transpose()).cwiseAbs().maxCoeff();
}

SoElement SoElement::operator+(const SoElement& o) const {
  SoElement r = *this;
  r += o;
  return r;
}

SoElement SoElement::operator-(const SoElement& o) const {
  SoElement r = *this;
  r -= o;
  return r;
}

SoElement SoElement::operator-() const { return *this * -1.0; }

SoElement SoElement::operator*(double c) const {
  SoElement r = *this;
  r.m_mat *= c;
  return r;
}

SoElement& SoElement::operator+=(const SoElement& o) {
  if (m_n != o.m_n) throw std::invalid_argument("dimension mismatch");
  m_mat += o.m_mat;
  return *this;
}

SoElement& SoElement::operator-=(const SoElement& o) {
  if (m_n != o.m_n) throw std::invalid_argument("dimension mismatch");
  m_mat -= o.m_mat;
  return *this;
}

SoElement bracket(const SoElement& x, const SoElement& y) {
  if (x.n() != y.n()) throw std::invalid_argument("dimension mismatch");
  Eigen::MatrixXd c = x.matrix() * y.matrix() - y.matrix() * x.matrix();
  return SoElement::from_matrix(c, 1e-10 * (1.0 + x.norm_inf() * y.norm_inf()));
}

double killing(const SoElement& x, const SoElement& y) {
  if (x.n() != y.n()) throw std::invalid_argument("dimension mismatch");
  // tr(xy) as a coefficient-wise sum, avoiding the full product.
  const double tr = (x.matrix().array() * y.matrix().transpose().array()).sum();
  return static_cast<double>(x.n()) * tr;
}

SoElement cartan_theta(const SoElement& x) {
  return SoElement::from_matrix(flip_off_blocks(x.matrix()),
                                1e-10 * (1.0 + x.norm_inf()));
}

double b_theta(const SoElement& x, const SoElement& y) {
  return -killing(x, cartan_theta(y));
}

std::pair<SoElement, SoElement> cartan_split(const SoElement& x) {
  const SoElement tx = cartan_theta(x);
  return {(x + tx) * 0.5, (x - tx) * 0.5};
}

std::vector<SoElement> standard_basis(int n) {
  check_n(n);
  std::vector<SoElement> basis;
  basis.reserve((n + 1) * (n + 2) / 2);
  const int N = n + 2;
  auto skew = [&](int i, int j) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
    m(i, j) = 1.0;
    m(j, i) = -1.0;
    basis.push_back(SoElement::from_matrix(m));
  };
  skew(0, 1);
  for (int i = 2; i < N; ++i)
    for (int j = i + 1; j < N; ++j) skew(i, j);
  for (const SoElement& p : standard_p_basis(n)) basis.push_back(p);
  return basis;
}

std::vector<SoElement> standard_p_basis(int n) {
  check_n(n);
  std::vector<SoElement> basis;
  basis.reserve(2 * n);
  const int N = n + 2;
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < N; ++j) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
      m(i, j) = 1.0;
      m(j, i) = 1.0;
      basis.push_back(SoElement::from_matrix(m));
    }
  return basis;
}

std::vector<SoElement> gram_schmidt(const std::vector<SoElement>& vecs,
                                    const InnerProduct& ip) {
  std::vector<SoElement> out;
  out.reserve(vecs.size());
  for (const SoElement& v : vecs) {
    SoElement w = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const SoElement& e : out) w -= e * ip(e, w);
    const double nn = ip(w, w);
    if (!(nn > 1e-24)) throw std::invalid_argument("dependent vectors in gram_schmidt");
    out.push_back(w * (1.0 / std::sqrt(nn)));
  }
  return out;
}

Subspace::Subspace(std::vector<SoElement> basis) : m_basis(std::move(basis)) {
  const int d = dimension();
  m_gram.resize(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      m_gram(i, j) = m_gram(j, i) = b_theta(m_basis[i], m_basis[j]);
  if (d > 0) {
    // LLT alone can miss an exactly dependent basis when rounding leaves a
    // tiny positive pivot, so gate on the Gram eigenvalue ratio first.
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        m_gram, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 1e-10 * std::max(hi, 1e-300)))
      throw std::invalid_argument("basis is dependent (Gram matrix not positive definite)");
    m_llt.compute(m_gram);
    if (m_llt.info() != Eigen::Success)
      throw std::invalid_argument("basis is dependent (Gram matrix not positive definite)");
  }
}

Subspace Subspace::from_spanning(const std::vector<SoElement>& gens,
                                 double rank_tol) {
  if (gens.empty()) return Subspace{};
  const int N = gens.front().ambient_dim();
  Eigen::MatrixXd cols(N * N, static_cast<int>(gens.size()));
  for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
    if (gens[j].ambient_dim() != N) throw std::invalid_argument("dimension mismatch");
    cols.col(j) = Eigen::Map<const Eigen::VectorXd>(gens[j].matrix().data(), N * N);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(cols);
  qr.setThreshold(rank_tol);
  const int rank = static_cast<int>(qr.rank());
  std::vector<SoElement> basis;
  basis.reserve(rank);
  for (int k = 0; k < rank; ++k)
    basis.push_back(gens[qr.colsPermutation().indices()(k)]);
  return Subspace(std::move(basis));
}

SoElement Subspace::project(const SoElement& x) const {
  if (dimension() == 0) return SoElement::zero(x.n());
  const Eigen::VectorXd c = coordinates(x);
  SoElement r = SoElement::zero(x.n());
  for (int i = 0; i < dimension(); ++i) r += m_basis[i] * c(i);
  return r;
}

Eigen::VectorXd Subspace::coordinates(const SoElement& x) const {
  Eigen::VectorXd rhs(dimension());
  for (int i = 0; i < dimension(); ++i) rhs(i) = b_theta(m_basis[i], x);
  return m_llt.solve(rhs);
}

double Subspace::containment_residual(const SoElement& x) const {
  const SoElement d = x - project(x);
  const double nx = std::sqrt(std::max(b_theta(x, x), 0.0));
  const double nd = std::sqrt(std::max(b_theta(d, d), 0.0));
  if (nx < 1e-300) return 0.0;
  return nd / nx;
}

std::vector<SoElement> Subspace::orthonormal_basis() const {
  if (dimension() == 0) return {};
  return gram_schmidt(m_basis, [](const SoElement& a, const SoElement& b) {
    return b_theta(a, b);
  });
}

bool span_equal(const Subspace& a, const Subspace& b, double rtol) {
  if (a.dimension() != b.dimension()) return false;
  return span_distance(a, b) <= rtol;
}

double span_distance(const Subspace& a, const Subspace& b) {
  double worst = 0.0;
  for (const SoElement& v : a.basis())
    worst = std::max(worst, b.containment_residual(v));
  for (const SoElement& v : b.basis())
    worst = std::max(worst, a.containment_residual(v));
  return worst;
}

Subspace direct_sum(const std::vector<const Subspace*>& parts) {
  std::vector<SoElement> basis;
  for (const Subspace* p : parts)
    basis.insert(basis.end(), p->basis().begin(), p->basis().end());
  return Subspace(std::move(basis));
}

double subalgebra_residual(const Subspace& s) {
  double worst = 0.0;
  for (const SoElement& x : s.basis())
    for (const SoElement& y : s.basis())
      worst = std::max(worst, s.containment_residual(bracket(x, y)));
  return worst;
}

namespace {

Subspace bracket_span(const Subspace& a, const Subspace& b, double rank_tol) {
  std::vector<SoElement> gens;
  gens.reserve(a.dimension() * b.dimension());
  for (const SoElement& x : a.basis())
    for (const SoElement& y : b.basis()) {
      SoElement z = bracket(x, y);
      if (z.norm_inf() > rank_tol) gens.push_back(z);
    }
  return Subspace::from_spanning(gens, rank_tol);
}

} // namespace

bool is_solvable(const Subspace& s, double rank_tol) {
  Subspace d = s;
  for (int k = 0; k <= s.dimension(); ++k) {
    if (d.dimension() == 0) return true;
    Subspace next = bracket_span(d, d, rank_tol);
    if (next.dimension() >= d.dimension()) return false;
    d = std::move(next);
  }
  return false;
}

bool is_nilpotent(const Subspace& s, int* steps, double rank_tol) {
  Subspace c = s;
  for (int k = 1; k <= s.dimension() + 1; ++k) {
    Subspace next = bracket_span(s, c, rank_tol);
    if (next.dimension() == 0) {
      if (steps) *steps = k;
      return true;
    }
    if (next.dimension() >= c.dimension()) return false;
    c = std::move(next);
  }
  return false;
}

} // namespace qlab
