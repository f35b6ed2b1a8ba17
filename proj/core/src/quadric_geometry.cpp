#include "quadriclab/quadric_geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qlab {

double g_metric(const SoElement& x, const SoElement& y) {
  return b_theta(x, y) / (4.0 * x.n());
}

SoElement kaehler_generator(int n) {
  const int N = n + 2;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
  m(0, 1) = -1.0;
  m(1, 0) = 1.0;
  return SoElement::from_matrix(m);
}

SoElement j_apply(const SoElement& x) {
  return bracket(kaehler_generator(x.n()), x);
}

SoElement c0_apply(const SoElement& x) {
  Eigen::MatrixXd m = x.matrix();
  m.row(1) *= -1.0;
  m.col(1) *= -1.0;
  return SoElement::from_matrix(m, 1e-10 * (1.0 + x.norm_inf()));
}

SoElement real_structure_apply(const SoElement& x, double phi) {
  const SoElement cx = c0_apply(x);
  if (phi == 0.0) return cx;
  return cx * std::cos(phi) + j_apply(cx) * std::sin(phi);
}

std::vector<SoElement> p_frame(int n) {
  std::vector<SoElement> f = standard_p_basis(n);
  const double s = std::sqrt(2.0);
  for (SoElement& x : f) x = x * s;
  return f;
}

std::vector<SoElement> v_c0_frame(int n) {
  std::vector<SoElement> f = p_frame(n);
  return {f.begin(), f.begin() + n};
}

std::vector<SoElement> jv_c0_frame(int n) {
  std::vector<SoElement> f = p_frame(n);
  return {f.begin() + n, f.end()};
}

Subspace v_of_c(int n, double phi) {
  const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
  std::vector<SoElement> basis;
  basis.reserve(n);
  for (const SoElement& u : v_c0_frame(n))
    basis.push_back(u * c + j_apply(u) * s);
  return Subspace(std::move(basis));
}

Subspace jv_of_c(int n, double phi) {
  const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
  std::vector<SoElement> basis;
  basis.reserve(n);
  for (const SoElement& u : v_c0_frame(n))
    basis.push_back(j_apply(u) * c - u * s);
  return Subspace(std::move(basis));
}

SoElement curvature(const SoElement& x, const SoElement& y,
                    const SoElement& z, double phi) {
  const SoElement jx = j_apply(x);
  const SoElement jy = j_apply(y);
  const SoElement jz = j_apply(z);
  const SoElement cx = real_structure_apply(x, phi);
  const SoElement cy = real_structure_apply(y, phi);
  const SoElement jcx = j_apply(cx);
  const SoElement jcy = j_apply(cy);

  SoElement r = y * g_metric(x, z) - x * g_metric(y, z);
  r += jy * g_metric(jx, z) - jx * g_metric(jy, z);
  r += jz * (2.0 * g_metric(jx, y));
  r += cy * g_metric(cx, z) - cx * g_metric(cy, z);
  r += jcy * g_metric(jcx, z) - jcx * g_metric(jcy, z);
  return r;
}

Eigen::MatrixXd jacobi_operator_matrix(const SoElement& w,
                                       const std::vector<SoElement>& frame,
                                       double phi) {
  const int d = static_cast<int>(frame.size());
  Eigen::MatrixXd m(d, d);
  for (int j = 0; j < d; ++j) {
    const SoElement rj = curvature(frame[j], w, w, phi);
    for (int i = 0; i < d; ++i) m(i, j) = g_metric(frame[i], rj);
  }
  return m;
}

namespace {

SoElement unit_or_throw(const SoElement& v) {
  const double nn = g_metric(v, v);
  const double nrm = std::sqrt(std::max(nn, 0.0));
  if (std::abs(nrm - 1.0) > 1e-6)
    throw std::invalid_argument("tangent vector must have unit g-norm");
  if (nrm == 1.0) return v;
  return v * (1.0 / nrm);
}

} // namespace

SingularityClass classify_singular(const SoElement& v, double kind_tol) {
  const SoElement u = unit_or_throw(v);
  auto m_of = [&](double phi) {
    return g_metric(real_structure_apply(u, phi), u);
  };

  constexpr int grid = 256;
  const double two_pi = 2.0 * std::numbers::pi;
  double best_phi = 0.0, best_m = -2.0;
  for (int i = 0; i < grid; ++i) {
    const double phi = two_pi * i / grid;
    const double m = m_of(phi);
    if (m > best_m) {
      best_m = m;
      best_phi = phi;
    }
  }
  // m(phi) is a sinusoid in phi; bisect on its derivative sign around the
  // best grid point.
  double lo = best_phi - two_pi / grid;
  double hi = best_phi + two_pi / grid;
  for (int it = 0; it < 30; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double h = 1e-7;
    if (m_of(mid + h) - m_of(mid - h) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double phi_star = 0.5 * (lo + hi);
  const double m_star = std::max(best_m, m_of(phi_star));

  SingularityClass c;
  c.aligned_phi = phi_star;
  c.max_alignment = m_star;
  const double clamped = std::min(1.0, std::max(-1.0, m_star));
  c.t = 0.5 * std::acos(clamped);
  if (c.t < kind_tol)
    c.kind = SingularKind::APrincipal;
  else if (std::abs(c.t - std::numbers::pi / 4.0) < kind_tol)
    c.kind = SingularKind::AIsotropic;
  else
    c.kind = SingularKind::Regular;
  return c;
}

std::vector<std::pair<double, int>> jacobi_closed_form(int n, double t) {
  const double c = std::cos(2.0 * t);
  const double s = std::sin(2.0 * t);
  return Spectrum::merge_expected({{0.0, 2},
                                   {-1.0 + c, n - 2},
                                   {-1.0 - c, n - 2},
                                   {-2.0 + 2.0 * s, 1},
                                   {-2.0 - 2.0 * s, 1}});
}

JacobiSpectrumReport jacobi_spectrum(const SoElement& v) {
  const SoElement u = unit_or_throw(v);
  JacobiSpectrumReport rep;
  rep.cls = classify_singular(u);
  const Eigen::MatrixXd m = jacobi_operator_matrix(u, p_frame(u.n()));
  rep.spectrum = Spectrum::from_symmetric(m);
  rep.closed_form = jacobi_closed_form(u.n(), rep.cls.t);
  rep.residual = rep.spectrum.match_residual(rep.closed_form);
  return rep;
}

double einstein_residual(int n) {
  const std::vector<SoElement> frame = p_frame(n);
  double worst = 0.0;
  for (const SoElement& v : frame) {
    SoElement ric = SoElement::zero(n);
    for (const SoElement& e : frame) ric += curvature(v, e, e);
    worst = std::max(worst, (ric + v * (2.0 * n)).norm_inf());
  }
  return worst;
}

} // namespace qlab
