#include "quadriclab/hypersurfaces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qlab {

namespace {

constexpr double k_struct_tol = 1e-8;

/// Distinguished g-unit vectors of the constructions: the half dual vector
/// of the long simple-side root with its J image (spanning the normal
/// circle of the singular orbit), their images under the fixed real
/// structure, and J-paired unit bases of the two short root p spaces.
struct Anchors {
  SoElement zeta0;            // H_{a1}/2, in a
  SoElement jzeta0;           // J zeta0, spans p_{a1}
  SoElement czeta0;           // C0 zeta0 = H_{a1+2a2}/2, in a
  SoElement jczeta0;          // J C0 zeta0, spans p_{a1+2a2}
  std::vector<SoElement> u;   // g-unit basis of p_{a1+a2}
  std::vector<SoElement> ju;  // J u, g-unit basis of p_{a2}
};

Anchors make_anchors(const RootSystem& rs) {
  Anchors a;
  a.zeta0 = rs.root_vector({1, 0}) * 0.5;
  a.jzeta0 = j_apply(a.zeta0);
  a.czeta0 = c0_apply(a.zeta0);
  a.jczeta0 = j_apply(a.czeta0);
  for (const SoElement& b : rs.p_alpha({1, 1}).basis()) {
    const SoElement unit = b * (1.0 / std::sqrt(g_metric(b, b)));
    a.u.push_back(unit);
    a.ju.push_back(j_apply(unit));
  }
  return a;
}

void check_orbit_data(const RootSystem& rs, const Subspace& s,
                      const SoElement& normal_hat) {
  if (subalgebra_residual(s) > k_struct_tol)
    throw std::invalid_argument("orbit spanning space is not a subalgebra");
  if (rs.an_containment_residual(normal_hat) > k_struct_tol)
    throw std::invalid_argument("orbit normal must lie in a + n");
  if (std::abs(rs.an_metric(normal_hat, normal_hat) - 1.0) > 1e-6)
    throw std::invalid_argument("orbit normal must be a unit vector");
  for (const SoElement& b : s.basis())
    if (std::abs(rs.an_metric(normal_hat, b)) >
        k_struct_tol * (1.0 + b.norm_inf()))
      throw std::invalid_argument("orbit normal must be orthogonal to the orbit");
}

} // namespace

HypersurfaceModel HypersurfaceModel::tube(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("tube radius must be positive");
  return {ModelKind::Tube, r};
}

HypersurfaceModel HypersurfaceModel::minimal() {
  return {ModelKind::Minimal, 0.0};
}

HypersurfaceModel HypersurfaceModel::equidistant(double r) {
  if (!(r > 0.0))
    throw std::invalid_argument("equidistant radius must be positive");
  return {ModelKind::Equidistant, r};
}

HypersurfaceModel HypersurfaceModel::horocyclic() {
  return {ModelKind::Horocyclic, 0.0};
}

HypersurfaceModel HypersurfaceModel::from_alpha(double alpha, double tol) {
  if (alpha < -tol)
    throw std::invalid_argument("the Hopf curvature alpha must be nonnegative");
  if (std::abs(alpha) <= tol) return minimal();
  if (std::abs(alpha - 2.0) <= tol) return horocyclic();
  if (alpha < 2.0) return equidistant(0.5 * std::atanh(alpha / 2.0));
  return tube(0.5 * std::atanh(2.0 / alpha));
}

double HypersurfaceModel::alpha() const {
  switch (kind) {
    case ModelKind::Tube:
      return 2.0 / std::tanh(2.0 * r);
    case ModelKind::Minimal:
      return 0.0;
    case ModelKind::Equidistant:
      return 2.0 * std::tanh(2.0 * r);
    case ModelKind::Horocyclic:
      return 2.0;
  }
  return 0.0;
}

std::string HypersurfaceModel::name() const {
  switch (kind) {
    case ModelKind::Tube:
      return "tube";
    case ModelKind::Minimal:
      return "minimal";
    case ModelKind::Equidistant:
      return "equidistant";
    case ModelKind::Horocyclic:
      return "horocyclic";
  }
  return "unknown";
}

Subspace HypersurfaceFrame::t1_space() const {
  return Subspace(std::vector<SoElement>(tangent.begin() + t1_begin(),
                                         tangent.begin() + tm1_begin()));
}

Subspace HypersurfaceFrame::tm1_space() const {
  return Subspace(std::vector<SoElement>(tangent.begin() + tm1_begin(),
                                         tangent.begin() + xi_index()));
}

Subspace HypersurfaceFrame::c_space() const {
  return Subspace(std::vector<SoElement>(tangent.begin(),
                                         tangent.begin() + xi_index()));
}

Subspace HypersurfaceFrame::q_space() const {
  return Subspace(std::vector<SoElement>(tangent.begin() + t1_begin(),
                                         tangent.begin() + xi_index()));
}

Eigen::MatrixXd HypersurfaceFrame::phi_matrix() const {
  const int d = dim();
  Eigen::MatrixXd m(d, d);
  for (int j = 0; j < d; ++j) {
    const SoElement jv = j_apply(tangent[j]);
    for (int i = 0; i < d; ++i) m(i, j) = g_metric(tangent[i], jv);
  }
  return m;
}

Eigen::VectorXd HypersurfaceFrame::eta() const {
  const int d = dim();
  Eigen::VectorXd e(d);
  for (int i = 0; i < d; ++i) e(i) = g_metric(tangent[i], xi());
  return e;
}

double HypersurfaceFrame::orthonormality_residual() const {
  const int d = dim();
  double worst = std::abs(g_metric(normal, normal) - 1.0);
  for (int i = 0; i < d; ++i) {
    worst = std::max(worst, std::abs(g_metric(normal, tangent[i])));
    for (int j = i; j < d; ++j) {
      const double expect = i == j ? 1.0 : 0.0;
      worst =
          std::max(worst, std::abs(g_metric(tangent[i], tangent[j]) - expect));
    }
  }
  return worst;
}

ShapeOperatorReport shape_by_bracket(const RootSystem& rs, const Subspace& s,
                                     const SoElement& normal_hat) {
  check_orbit_data(rs, s, normal_hat);
  const SoElement zeta = cartan_split(normal_hat).second;
  const InnerProduct an = [&rs](const SoElement& x, const SoElement& y) {
    return rs.an_metric(x, y);
  };
  const std::vector<SoElement> f = gram_schmidt(s.basis(), an);
  const int d = static_cast<int>(f.size());
  Eigen::MatrixXd m(d, d);
  for (int j = 0; j < d; ++j) {
    const SoElement img = s.project(bracket(zeta, f[j]));
    for (int i = 0; i < d; ++i) m(i, j) = rs.an_metric(f[i], img);
  }
  ShapeOperatorReport rep;
  rep.symmetry_residual = (m - m.transpose()).cwiseAbs().maxCoeff();
  rep.spectrum = Spectrum::from_symmetric(m);
  rep.matrix = std::move(m);
  return rep;
}

Eigen::MatrixXd shape_matrix_in_frame(const RootSystem& rs, const Subspace& s,
                                      const SoElement& normal_hat,
                                      const std::vector<SoElement>& frame,
                                      double* expansion_residual) {
  check_orbit_data(rs, s, normal_hat);
  const SoElement zeta = cartan_split(normal_hat).second;
  const int d = static_cast<int>(frame.size());
  Eigen::MatrixXd m(d, d);
  double worst = 0.0;
  for (int j = 0; j < d; ++j) {
    const SoElement rep = rs.an_representative(frame[j]);
    if (s.containment_residual(rep) > k_struct_tol)
      throw std::invalid_argument(
          "frame vector does not represent an element of the orbit algebra");
    const SoElement img = rs.p_projection(s.project(bracket(zeta, rep)));
    SoElement expanded = SoElement::zero(img.n());
    for (int i = 0; i < d; ++i) {
      m(i, j) = g_metric(frame[i], img);
      expanded += frame[i] * m(i, j);
    }
    worst = std::max(worst, (img - expanded).norm_inf());
  }
  if (expansion_residual) *expansion_residual = worst;
  return m;
}

PModel build_P(const RootSystem& rs, double phi) {
  const int n = rs.n();
  const Anchors a = make_anchors(rs);

  PModel p;
  p.n = n;
  p.phi = phi;
  p.normal = a.zeta0 * std::cos(phi) + a.jzeta0 * std::sin(phi);
  p.tangent.reserve(2 * n - 2);
  p.tangent.push_back(a.czeta0);
  p.tangent.push_back(a.jczeta0);
  const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
  for (int k = 0; k < n - 2; ++k)
    p.tangent.push_back(a.u[k] * c + a.ju[k] * s);
  for (int k = 0; k < n - 2; ++k)
    p.tangent.push_back(a.u[k] * s - a.ju[k] * c);

  const Subspace& d = rs.named("d");
  std::vector<SoElement> tangent_basis;
  tangent_basis.reserve(d.dimension());
  for (const SoElement& b : d.basis()) tangent_basis.push_back(rs.p_projection(b));
  p.tangent_space = Subspace(std::move(tangent_basis));
  p.normal_space = Subspace({a.zeta0, a.jzeta0});

  double expansion = 0.0;
  Eigen::MatrixXd m = shape_matrix_in_frame(
      rs, d, rs.an_representative(p.normal), p.tangent, &expansion);
  Eigen::MatrixXd deviation = m;
  for (int k = 0; k < n - 2; ++k) {
    deviation(2 + k, 2 + k) -= 1.0;
    deviation(n + k, n + k) += 1.0;
  }
  p.diagonal_residual = std::max(deviation.cwiseAbs().maxCoeff(), expansion);
  p.shape.symmetry_residual = (m - m.transpose()).cwiseAbs().maxCoeff();
  p.shape.spectrum = Spectrum::from_symmetric(m);
  p.shape.matrix = std::move(m);
  return p;
}

std::vector<double> transport_diagonal(ModelKind kind, int n, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("transport radius must be positive");
  double alpha = 0.0;
  if (kind == ModelKind::Tube)
    alpha = 2.0 / std::tanh(2.0 * r);
  else if (kind == ModelKind::Equidistant)
    alpha = 2.0 * std::tanh(2.0 * r);
  else
    throw std::invalid_argument("transport applies to tube and equidistant models");
  std::vector<double> diag(2 * n - 1, 0.0);
  for (int k = 0; k < n - 2; ++k) {
    diag[2 + k] = 1.0;
    diag[n + k] = -1.0;
  }
  diag[2 * n - 2] = alpha;
  return diag;
}

BuiltModel build_M(const RootSystem& rs, const HypersurfaceModel& model) {
  const int n = rs.n();
  const Anchors a = make_anchors(rs);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

  BuiltModel out;
  out.model = model;
  out.alpha = model.alpha();

  HypersurfaceFrame& f = out.frame;
  f.n = n;
  std::vector<SoElement> t1, tm1;
  t1.reserve(n - 2);
  tm1.reserve(n - 2);
  switch (model.kind) {
    case ModelKind::Tube:
      f.normal = -a.zeta0;
      t1 = a.ju;
      tm1 = a.u;
      break;
    case ModelKind::Minimal:
      f.normal = a.jzeta0;
      for (int k = 0; k < n - 2; ++k) {
        t1.push_back((a.u[k] + a.ju[k]) * inv_sqrt2);
        tm1.push_back((a.u[k] - a.ju[k]) * inv_sqrt2);
      }
      break;
    case ModelKind::Equidistant:
      f.normal = -a.jzeta0;
      for (int k = 0; k < n - 2; ++k) {
        t1.push_back((a.u[k] - a.ju[k]) * inv_sqrt2);
        tm1.push_back((a.u[k] + a.ju[k]) * inv_sqrt2);
      }
      break;
    case ModelKind::Horocyclic:
      f.normal = a.zeta0;
      t1 = a.u;
      tm1 = a.ju;
      break;
  }
  const SoElement cz = c0_apply(f.normal);
  f.tangent.reserve(2 * n - 1);
  f.tangent.push_back(cz);
  f.tangent.push_back(j_apply(cz));
  f.tangent.insert(f.tangent.end(), t1.begin(), t1.end());
  f.tangent.insert(f.tangent.end(), tm1.begin(), tm1.end());
  f.tangent.push_back(-j_apply(f.normal));
  if (f.orthonormality_residual() > 1e-6)
    throw std::logic_error("model frame failed orthonormality");

  const int d = f.dim();
  std::vector<double> expected(d, 0.0);
  for (int k = 0; k < n - 2; ++k) {
    expected[2 + k] = 1.0;
    expected[n + k] = -1.0;
  }
  expected[d - 1] = out.alpha;

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  double expansion = 0.0;
  switch (model.kind) {
    case ModelKind::Minimal:
      m = shape_matrix_in_frame(rs, rs.named("s1"),
                                rs.an_representative(f.normal), f.tangent,
                                &expansion);
      break;
    case ModelKind::Horocyclic:
      m = shape_matrix_in_frame(rs, rs.named("h1"),
                                rs.an_representative(f.normal), f.tangent,
                                &expansion);
      break;
    case ModelKind::Tube: {
      // The tube normal at the base point is also a unit normal of the focal
      // complex hypersurface, whose shape operator supplies the +1/-1 part;
      // the Reeb eigenvalue 2 coth(2r) is the transport closed form.
      const std::vector<SoElement> cframe(f.tangent.begin(),
                                          f.tangent.end() - 1);
      m.topLeftCorner(d - 1, d - 1) =
          shape_matrix_in_frame(rs, rs.named("d"),
                                rs.an_representative(f.normal), cframe,
                                &expansion);
      m(d - 1, d - 1) = out.alpha;
      break;
    }
    case ModelKind::Equidistant: {
      // No orbit algebra passes through the base point; the diagonal is the
      // transport closed form, validated against the integration oracle and
      // the pointwise identities.
      const std::vector<double> diag =
          transport_diagonal(ModelKind::Equidistant, n, model.r);
      for (int i = 0; i < d; ++i) m(i, i) = diag[i];
      break;
    }
  }

  Eigen::MatrixXd deviation = m;
  for (int i = 0; i < d; ++i) deviation(i, i) -= expected[i];
  out.diagonal_residual = std::max(deviation.cwiseAbs().maxCoeff(), expansion);

  out.signed_diagonal = expected;
  if (model.kind == ModelKind::Tube || model.kind == ModelKind::Equidistant)
    for (double& v : out.signed_diagonal) v = -v;

  out.shape.symmetry_residual = (m - m.transpose()).cwiseAbs().maxCoeff();
  out.shape.spectrum = Spectrum::from_symmetric(m);
  out.shape.matrix = std::move(m);
  return out;
}

std::vector<ModelIdentity> model_identities(const BuiltModel& m) {
  const HypersurfaceFrame& f = m.frame;
  const int d = f.dim();
  const Eigen::MatrixXd& shape = m.shape.matrix;
  const Eigen::MatrixXd phi = f.phi_matrix();
  std::vector<ModelIdentity> out;

  Eigen::VectorXd xi = Eigen::VectorXd::Zero(d);
  xi(f.xi_index()) = 1.0;
  out.push_back({"reeb_is_shape_eigenvector",
                 (shape * xi - m.alpha * xi).cwiseAbs().maxCoeff()});

  const Eigen::MatrixXd anti = shape * phi + phi * shape;
  out.push_back({"shape_anticommutes_structure", anti.cwiseAbs().maxCoeff()});
  out.push_back({"contact_form_closed_on_complex_subbundle",
                 anti.topLeftCorner(d - 1, d - 1).cwiseAbs().maxCoeff()});

  Eigen::MatrixXd kappa(d, d);
  double tangency = 0.0;
  for (int j = 0; j < d; ++j) {
    const SoElement rj = curvature(f.tangent[j], f.normal, f.normal);
    SoElement expanded = SoElement::zero(rj.n());
    for (int i = 0; i < d; ++i) {
      kappa(i, j) = g_metric(f.tangent[i], rj);
      expanded += f.tangent[i] * kappa(i, j);
    }
    tangency = std::max(tangency, (rj - expanded).norm_inf());
  }
  out.push_back({"normal_jacobi_preserves_tangent_space", tangency});
  out.push_back({"normal_jacobi_commutes_with_shape",
                 (kappa * shape - shape * kappa).cwiseAbs().maxCoeff()});

  out.push_back({"trace_equals_reeb_curvature",
                 std::abs(shape.trace() - m.alpha)});

  const SingularityClass cls = classify_singular(f.normal);
  out.push_back({"normal_is_isotropic",
                 std::abs(cls.t - std::numbers::pi / 4.0)});

  const std::vector<SoElement> t1(f.tangent.begin() + f.t1_begin(),
                                  f.tangent.begin() + f.tm1_begin());
  const std::vector<SoElement> tm1(f.tangent.begin() + f.tm1_begin(),
                                   f.tangent.begin() + f.xi_index());
  std::vector<SoElement> jt1;
  jt1.reserve(t1.size());
  for (const SoElement& v : t1) jt1.push_back(j_apply(v));
  out.push_back({"structure_swaps_curvature_blocks",
                 span_distance(Subspace(jt1), f.tm1_space())});

  const double phase = aligned_structure_phase(t1);
  const Subspace v = v_of_c(f.n, phase);
  const Subspace jv = jv_of_c(f.n, phase);
  double align = 0.0;
  for (const SoElement& x : t1)
    align = std::max(align, v.containment_residual(x));
  for (const SoElement& x : tm1)
    align = std::max(align, jv.containment_residual(x));
  out.push_back({"blocks_align_with_rotated_real_structure", align});

  return out;
}

double aligned_structure_phase(const std::vector<SoElement>& vecs) {
  if (vecs.empty())
    throw std::invalid_argument("alignment phase needs at least one vector");
  double a = 0.0, b = 0.0;
  for (const SoElement& v : vecs) {
    const SoElement cv = c0_apply(v);
    a += g_metric(cv, v);
    b += g_metric(j_apply(cv), v);
  }
  return std::atan2(b, a);
}

double lie_triple_residual(const Subspace& m) {
  const auto& basis = m.basis();
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const SoElement bij = bracket(basis[i], basis[j]);
      for (const SoElement& bk : basis) {
        const SoElement x = bracket(bij, bk);
        const SoElement diff = x - m.project(x);
        worst = std::max(worst, std::sqrt(b_theta(diff, diff)) /
                                    (1.0 + std::sqrt(b_theta(x, x))));
      }
    }
  return worst;
}

bool is_heisenberg(const Subspace& s, double rank_tol) {
  const int d = s.dimension();
  if (d == 0) return false;
  if (subalgebra_residual(s) > k_struct_tol) return false;
  const int n = s.basis().front().n();
  if (d != 2 * n - 3) return false;

  std::vector<SoElement> gens;
  for (int i = 0; i + 1 < d; ++i)
    for (int j = i + 1; j < d; ++j)
      gens.push_back(bracket(s.basis()[i], s.basis()[j]));
  const Subspace derived = Subspace::from_spanning(gens, rank_tol);
  if (derived.dimension() != 1) return false;

  const SoElement& z = derived.basis().front();
  for (const SoElement& b : s.basis()) {
    const SoElement br = bracket(b, z);
    if (br.norm_inf() > rank_tol * (1.0 + b.norm_inf() * z.norm_inf()))
      return false;
  }

  // The center is the kernel of x |-> ([x, b_1], ..., [x, b_d]).
  const int nn = s.basis().front().ambient_dim();
  Eigen::MatrixXd stacked(d * nn * nn, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const SoElement br = bracket(s.basis()[i], s.basis()[j]);
      stacked.block(j * nn * nn, i, nn * nn, 1) =
          Eigen::Map<const Eigen::VectorXd>(br.matrix().data(), nn * nn);
    }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(stacked);
  qr.setThreshold(rank_tol);
  return d - static_cast<int>(qr.rank()) == 1;
}

} // namespace qlab
