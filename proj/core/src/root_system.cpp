#include "quadriclab/root_system.hpp"

#include <cmath>
#include <stdexcept>

namespace qlab {

namespace {

const RootCoeffs kA1{1, 0};
const RootCoeffs kA2{0, 1};
const RootCoeffs kA12{1, 1};
const RootCoeffs kA122{1, 2};
const RootCoeffs kPositive[4] = {kA1, kA2, kA12, kA122};

int root_multiplicity(int n, const RootCoeffs& r) {
  return (r == kA1 || r == kA122 || -r == kA1 || -r == kA122) ? 1 : n - 2;
}

} // namespace

std::vector<SoElement> root_space_basis(int n, const RootCoeffs& r) {
  const int N = n + 2;
  std::vector<SoElement> basis;
  if (r == kA1) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
    m(0, 1) = 1; m(0, 3) = 1; m(1, 0) = -1; m(1, 2) = 1;
    m(2, 1) = 1; m(2, 3) = 1; m(3, 0) = 1; m(3, 2) = -1;
    basis.push_back(SoElement::from_matrix(m));
  } else if (r == kA122) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
    m(0, 1) = 1; m(0, 3) = -1; m(1, 0) = -1; m(1, 2) = 1;
    m(2, 1) = 1; m(2, 3) = -1; m(3, 0) = -1; m(3, 2) = 1;
    basis.push_back(SoElement::from_matrix(m));
  } else if (r == kA12) {
    for (int k = 4; k < N; ++k) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
      m(0, k) = 1; m(2, k) = 1; m(k, 0) = 1; m(k, 2) = -1;
      basis.push_back(SoElement::from_matrix(m));
    }
  } else if (r == kA2) {
    for (int k = 4; k < N; ++k) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
      m(1, k) = 1; m(3, k) = 1; m(k, 1) = 1; m(k, 3) = -1;
      basis.push_back(SoElement::from_matrix(m));
    }
  } else {
    throw std::invalid_argument("not a positive restricted root");
  }
  return basis;
}

RootSystem::RootSystem(int n) : m_n(n) {
  if (n < 3) throw std::invalid_argument("root system requires n >= 3");
  m_h1 = a_element(1.0, 0.0);
  m_h2 = a_element(1.0, 1.0);
  m_a = Subspace({m_h1, m_h2});

  // k0 = so(n-2) acting on the trailing n-2 coordinates
  {
    const int N = n + 2;
    std::vector<SoElement> k0basis;
    for (int i = 4; i < N; ++i)
      for (int j = i + 1; j < N; ++j) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
        m(i, j) = 1.0;
        m(j, i) = -1.0;
        k0basis.push_back(SoElement::from_matrix(m));
      }
    m_k0 = Subspace(std::move(k0basis));
  }
  m_g0 = direct_sum({&m_a, &m_k0});

  for (const RootCoeffs& r : kPositive) {
    RootDatum pos;
    pos.coeffs = r;
    pos.space = Subspace(root_space_basis(n, r));
    pos.root_vector = root_vector(r);
    pos.multiplicity = root_multiplicity(n, r);

    RootDatum neg;
    neg.coeffs = -r;
    std::vector<SoElement> nb;
    for (const SoElement& x : pos.space.basis()) nb.push_back(cartan_theta(x));
    neg.space = Subspace(std::move(nb));
    neg.root_vector = -pos.root_vector;
    neg.multiplicity = pos.multiplicity;

    std::vector<SoElement> pb, kb;
    for (const SoElement& x : pos.space.basis()) {
      auto [k, p] = cartan_split(x);
      pb.push_back(p);
      kb.push_back(k);
    }
    m_p_alpha.emplace(r, Subspace(std::move(pb)));
    m_k_alpha.emplace(r, Subspace(std::move(kb)));

    m_roots.push_back(std::move(pos));
    m_roots.push_back(std::move(neg));
  }

  {
    std::vector<const Subspace*> nparts;
    for (const RootCoeffs& r : kPositive) nparts.push_back(&root(r).space);
    m_n_space = direct_sum(nparts);
    m_an = direct_sum({&m_a, &m_n_space});
  }

  // Iwasawa coordinates: columns are flattened k, a, n basis elements.
  {
    std::vector<SoElement> kbasis;
    const int N = n + 2;
    {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
      m(0, 1) = 1.0;
      m(1, 0) = -1.0;
      kbasis.push_back(SoElement::from_matrix(m));
    }
    for (int i = 2; i < N; ++i)
      for (int j = i + 1; j < N; ++j) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
        m(i, j) = 1.0;
        m(j, i) = -1.0;
        kbasis.push_back(SoElement::from_matrix(m));
      }
    m_k_dim = static_cast<int>(kbasis.size());
    m_iwasawa_basis = std::move(kbasis);
    m_iwasawa_basis.insert(m_iwasawa_basis.end(), m_a.basis().begin(),
                           m_a.basis().end());
    m_iwasawa_basis.insert(m_iwasawa_basis.end(), m_n_space.basis().begin(),
                           m_n_space.basis().end());
    const int dim = static_cast<int>(m_iwasawa_basis.size());
    Eigen::MatrixXd cols(N * N, dim);
    for (int j = 0; j < dim; ++j)
      cols.col(j) = Eigen::Map<const Eigen::VectorXd>(
          m_iwasawa_basis[j].matrix().data(), N * N);
    // The Iwasawa basis spans so(2,n); invert through the normal equations
    // of the full-rank rectangular system.
    m_iwasawa_lu.compute(cols.transpose() * cols);
    m_iwasawa_cols = std::move(cols);
  }

  // Named subalgebras
  {
    const Subspace& ga2 = root(kA2).space;
    const Subspace& ga12 = root(kA12).space;
    const Subspace& ga122 = root(kA122).space;
    const Subspace& ga1 = root(kA1).space;
    const Subspace& gma1 = root(-kA1.c1, -kA1.c2).space;

    Subspace a1(std::vector<SoElement>{root_vector(kA122)});
    Subspace a_up1(std::vector<SoElement>{root_vector(kA1)});
    Subspace n1 = direct_sum({&ga2, &ga12, &ga122});
    Subspace d = direct_sum({&a1, &ga2, &ga12, &ga122});
    Subspace s1 = direct_sum({&m_a, &n1});
    Subspace h1 = direct_sum({&a1, &m_n_space});
    Subspace l1 = direct_sum({&gma1, &m_g0, &ga1});
    Subspace g1 = direct_sum({&gma1, &a_up1, &ga1});
    Subspace m1 = direct_sum({&gma1, &a_up1, &ga1, &m_k0});
    Subspace q1 = direct_sum({&l1, &n1});
    Subspace k1 = direct_sum({&m_k_alpha.at(kA1), &m_k0});

    m_named.emplace("a1", std::move(a1));
    m_named.emplace("a_up1", std::move(a_up1));
    m_named.emplace("n1", std::move(n1));
    m_named.emplace("d", std::move(d));
    m_named.emplace("s1", std::move(s1));
    m_named.emplace("h1", std::move(h1));
    m_named.emplace("l1", std::move(l1));
    m_named.emplace("g1", std::move(g1));
    m_named.emplace("m1", std::move(m1));
    m_named.emplace("q1", std::move(q1));
    m_named.emplace("k1", std::move(k1));
  }
}

SoElement RootSystem::a_element(double a1, double a2) const {
  const int N = m_n + 2;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
  m(0, 2) = a1;
  m(2, 0) = a1;
  m(1, 3) = a2;
  m(3, 1) = a2;
  return SoElement::from_matrix(m);
}

const RootDatum& RootSystem::root(const RootCoeffs& r) const {
  for (const RootDatum& d : m_roots)
    if (d.coeffs == r) return d;
  throw std::invalid_argument("unknown restricted root");
}

SoElement RootSystem::root_vector(const RootCoeffs& r) const {
  // Solve <H_alpha, H_j> = alpha(H_j) for the dual basis H^1, H^2 with the
  // inner product g = B_theta/(4n) = tr/4 on a.
  auto g_a = [&](const SoElement& x, const SoElement& y) {
    return b_theta(x, y) / (4.0 * m_n);
  };
  Eigen::Matrix2d gram;
  gram << g_a(m_h1, m_h1), g_a(m_h1, m_h2), g_a(m_h2, m_h1), g_a(m_h2, m_h2);
  Eigen::Vector2d rhs(root_value(r, 1.0, 0.0), root_value(r, 1.0, 1.0));
  Eigen::Vector2d c = gram.fullPivLu().solve(rhs);
  return m_h1 * c(0) + m_h2 * c(1);
}

const Subspace& RootSystem::p_alpha(const RootCoeffs& r) const {
  auto it = m_p_alpha.find(r);
  if (it == m_p_alpha.end()) throw std::invalid_argument("not a positive root");
  return it->second;
}

const Subspace& RootSystem::k_alpha(const RootCoeffs& r) const {
  auto it = m_k_alpha.find(r);
  if (it == m_k_alpha.end()) throw std::invalid_argument("not a positive root");
  return it->second;
}

const Subspace& RootSystem::named(const std::string& key) const {
  auto it = m_named.find(key);
  if (it == m_named.end()) throw std::out_of_range("unknown subalgebra: " + key);
  return it->second;
}

IwasawaFrame RootSystem::iwasawa() const {
  IwasawaFrame f;
  f.a_basis = {m_h1, m_h2};
  f.n_basis = m_n_space.basis();
  return f;
}

double RootSystem::an_metric(const SoElement& x, const SoElement& y) const {
  if (m_an.containment_residual(x) > 1e-8 ||
      m_an.containment_residual(y) > 1e-8)
    throw std::invalid_argument("an_metric arguments must lie in a + n");
  const SoElement hx = m_a.project(x);
  const SoElement hy = m_a.project(y);
  const SoElement nx = x - hx;
  const SoElement ny = y - hy;
  const double a_part =
      (hx.matrix().array() * hy.matrix().transpose().array()).sum() / 4.0;
  const double n_part =
      (nx.matrix().array() * cartan_theta(ny).matrix().transpose().array())
          .sum() /
      8.0;
  return a_part - n_part;
}

SoElement RootSystem::p_projection(const SoElement& x) const {
  const SoElement h = m_a.project(x);
  const SoElement rest = x - h;
  return h + (rest - cartan_theta(rest)) * 0.5;
}

SoElement RootSystem::an_representative(const SoElement& y) const {
  const auto [k, p] = cartan_split(y);
  if (k.norm_inf() > 1e-8 * (1.0 + y.norm_inf()))
    throw std::invalid_argument("an_representative argument must lie in p");
  const int N = m_n + 2;
  Eigen::VectorXd flat = Eigen::Map<const Eigen::VectorXd>(y.matrix().data(), N * N);
  Eigen::VectorXd coords = m_iwasawa_lu.solve(m_iwasawa_cols.transpose() * flat);
  SoElement z = SoElement::zero(m_n);
  for (int j = m_k_dim; j < static_cast<int>(m_iwasawa_basis.size()); ++j)
    z += m_iwasawa_basis[j] * coords(j);
  return z;
}

} // namespace qlab
