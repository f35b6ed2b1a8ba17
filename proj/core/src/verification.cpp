#include "quadriclab/verification.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "quadriclab/contact_curvature.hpp"
#include "quadriclab/oracles.hpp"
#include "quadriclab/quadric_geometry.hpp"
#include "quadriclab/version.hpp"

namespace qlab {

namespace {

double tolv(const std::optional<double>& o, double d) { return o.value_or(d); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string nsuf(int n) { return "_n" + std::to_string(n); }

SoElement random_combination(const std::vector<SoElement>& basis,
                             std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  SoElement x = SoElement::zero(basis.front().n());
  for (const SoElement& b : basis) x += b * dist(rng);
  return x;
}

SoElement random_p_unit(int n, std::mt19937_64& rng) {
  const SoElement x = random_combination(standard_p_basis(n), rng);
  return x * (1.0 / std::sqrt(g_metric(x, x)));
}

std::uint64_t mix_seed(std::uint64_t seed, int n) {
  return seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n + 1));
}

double rel_inf(const SoElement& x, double scale) {
  return x.norm_inf() / (1.0 + scale);
}

} // namespace

int resolve_thread_cap() {
  if (const char* env = std::getenv("QUADRIC_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

std::vector<CheckRecord> algebra_checks(int n, std::uint64_t seed,
                                        std::optional<double> tol_override) {
  std::vector<CheckRecord> out;
  std::mt19937_64 rng(mix_seed(seed, n));
  const RootSystem rs(n);
  const std::vector<SoElement> basis = standard_basis(n);
  const int dim_g = static_cast<int>(basis.size());

  // Defining invariant and bracket closure.
  {
    double worst = 0.0;
    for (const SoElement& b : basis)
      worst = std::max(worst, b.invariant_residual());
    for (int k = 0; k < 5; ++k)
      worst = std::max(worst,
                       random_combination(basis, rng).invariant_residual());
    out.push_back(make_check("so_invariant" + nsuf(n), "algebra.invariant",
                             "0", format_double(worst), worst,
                             tolv(tol_override, 1e-10)));
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const SoElement x = random_combination(basis, rng);
      const SoElement y = random_combination(basis, rng);
      worst = std::max(worst, bracket(x, y).invariant_residual() /
                                  (1.0 + x.norm_inf() * y.norm_inf()));
    }
    out.push_back(make_check("bracket_closes" + nsuf(n), "algebra.bracket",
                             "0", format_double(worst), worst,
                             tolv(tol_override, 1e-10)));
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const SoElement x = random_combination(basis, rng);
      const SoElement y = random_combination(basis, rng);
      const SoElement z = random_combination(basis, rng);
      const SoElement j = bracket(x, bracket(y, z)) +
                          bracket(y, bracket(z, x)) +
                          bracket(z, bracket(x, y));
      const double scale =
          x.norm_inf() * y.norm_inf() * z.norm_inf();
      worst = std::max(worst, rel_inf(j, scale));
    }
    out.push_back(make_check("jacobi_identity" + nsuf(n), "algebra.bracket",
                             "0", format_double(worst), worst,
                             tolv(tol_override, 1e-12)));
  }

  // Killing form against the structure-constant oracle.
  {
    std::vector<Eigen::MatrixXd> ads;
    ads.reserve(basis.size());
    for (const SoElement& b : basis) ads.push_back(ad_matrix(b));
    double worst = 0.0;
    for (int i = 0; i < dim_g; ++i)
      for (int j = i; j < dim_g; ++j) {
        const double closed = killing(basis[i], basis[j]);
        const double brute = (ads[i] * ads[j]).trace();
        worst = std::max(worst, std::abs(closed - brute) /
                                    (1.0 + std::abs(closed)));
      }
    for (int k = 0; k < 5; ++k) {
      const SoElement x = random_combination(basis, rng);
      const SoElement y = random_combination(basis, rng);
      const double closed = killing(x, y);
      worst = std::max(worst,
                       std::abs(closed - killing_by_structure_constants(x, y)) /
                           (1.0 + std::abs(closed)));
    }
    out.push_back(make_check("killing_closed_form" + nsuf(n),
                             "algebra.killing_oracle", "n tr(xy)",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-10)));
  }

  // Cartan involution: involutive isometry of the Killing form, bracket
  // automorphism, +1 on k and -1 on p.
  {
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      const SoElement x = random_combination(basis, rng);
      const SoElement y = random_combination(basis, rng);
      worst = std::max(worst, rel_inf(cartan_theta(cartan_theta(x)) - x,
                                      x.norm_inf()));
      worst = std::max(
          worst, rel_inf(cartan_theta(bracket(x, y)) -
                             bracket(cartan_theta(x), cartan_theta(y)),
                         x.norm_inf() * y.norm_inf()));
      worst = std::max(
          worst, std::abs(killing(cartan_theta(x), cartan_theta(y)) -
                          killing(x, y)) /
                     (1.0 + std::abs(killing(x, y))));
      const auto [xk, xp] = cartan_split(x);
      worst = std::max(worst, rel_inf(cartan_theta(xk) - xk, xk.norm_inf()));
      worst = std::max(worst, rel_inf(cartan_theta(xp) + xp, xp.norm_inf()));
      worst = std::max(worst, rel_inf(xk + xp - x, x.norm_inf()));
    }
    out.push_back(make_check("cartan_involution" + nsuf(n), "algebra.cartan",
                             "0", format_double(worst), worst,
                             tolv(tol_override, 1e-12)));
  }

  // B_theta is positive definite: the standard basis is orthogonal with
  // norm squared 2n.
  {
    Eigen::MatrixXd gram(dim_g, dim_g);
    for (int i = 0; i < dim_g; ++i)
      for (int j = 0; j < dim_g; ++j) gram(i, j) = b_theta(basis[i], basis[j]);
    const double worst =
        (gram - 2.0 * n * Eigen::MatrixXd::Identity(dim_g, dim_g))
            .cwiseAbs()
            .maxCoeff();
    out.push_back(make_check("b_theta_gram" + nsuf(n), "algebra.b_theta",
                             "2n I", format_double(worst), worst,
                             tolv(tol_override, 1e-10)));
  }

  // Restricted root decomposition.
  {
    bool ok = true;
    std::ostringstream got;
    for (const RootDatum& rd : rs.roots()) {
      const bool long_root = std::abs(rd.coeffs.c2) != 1;
      const int expect = long_root ? 1 : n - 2;
      if (rd.multiplicity != expect) ok = false;
    }
    const int g0_dim = 2 + (n - 2) * (n - 3) / 2;
    if (rs.g0().dimension() != g0_dim) ok = false;
    int total = rs.g0().dimension();
    for (const RootDatum& rd : rs.roots()) total += rd.multiplicity;
    if (total != dim_g) ok = false;
    got << "root dims 1,1," << n - 2 << "," << n - 2 << " (x2), g0 "
        << rs.g0().dimension() << ", total " << total;
    out.push_back(make_bool_check("root_space_dimensions" + nsuf(n),
                                  "algebra.roots.dimensions",
                                  "1,1,n-2,n-2 doubled, total dim g",
                                  got.str(), ok));
  }
  {
    double worst = 0.0;
    const std::vector<SoElement> hs = {rs.h1(), rs.h2(),
                                       rs.a_element(0.7, -0.3)};
    const std::vector<std::pair<double, double>> params = {
        {1.0, 0.0}, {1.0, 1.0}, {0.7, -0.3}};
    for (const RootDatum& rd : rs.roots())
      for (std::size_t h = 0; h < hs.size(); ++h) {
        const double val = RootSystem::root_value(rd.coeffs, params[h].first,
                                                  params[h].second);
        for (const SoElement& x : rd.space.basis())
          worst = std::max(
              worst, rel_inf(bracket(hs[h], x) - x * val, x.norm_inf()));
      }
    out.push_back(make_check("root_bracket_relation" + nsuf(n),
                             "algebra.roots.eigen_relation",
                             "[H, x] = alpha(H) x", format_double(worst),
                             worst, tolv(tol_override, 1e-10)));
  }
  {
    double worst = 0.0;
    const auto& roots = rs.roots();
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        for (const SoElement& x : roots[i].space.basis())
          for (const SoElement& y : roots[j].space.basis())
            worst = std::max(worst, std::abs(b_theta(x, y)));
    for (const RootDatum& rd : rs.roots())
      for (const SoElement& x : rd.space.basis())
        for (const SoElement& y : rs.g0().basis())
          worst = std::max(worst, std::abs(b_theta(x, y)));
    out.push_back(make_check("root_space_orthogonality" + nsuf(n),
                             "algebra.roots.orthogonality", "0",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-10)));
  }
  {
    double worst = 0.0;
    for (const RootDatum& rd : rs.roots()) {
      std::vector<SoElement> mirrored;
      for (const SoElement& x : rd.space.basis())
        mirrored.push_back(cartan_theta(x));
      worst = std::max(
          worst, span_distance(Subspace(mirrored), rs.root(-rd.coeffs).space));
    }
    out.push_back(make_check("root_space_theta_mirror" + nsuf(n),
                             "algebra.roots.theta_mirror",
                             "theta g_a = g_-a", format_double(worst), worst,
                             tolv(tol_override, 1e-8)));
  }
  {
    // [g_a, g_b] lands in g_{a+b}, in g0 when b = -a, and vanishes when
    // a + b is neither zero nor a root.
    double worst = 0.0;
    const auto& roots = rs.roots();
    for (const RootDatum& ra : roots)
      for (const RootDatum& rb : roots) {
        const RootCoeffs sum{ra.coeffs.c1 + rb.coeffs.c1,
                             ra.coeffs.c2 + rb.coeffs.c2};
        const Subspace* target = nullptr;
        bool expect_zero = false;
        if (sum.c1 == 0 && sum.c2 == 0) {
          target = &rs.g0();
        } else {
          bool is_root = false;
          for (const RootDatum& rc : roots)
            if (rc.coeffs == sum) {
              target = &rc.space;
              is_root = true;
              break;
            }
          expect_zero = !is_root;
        }
        for (const SoElement& x : ra.space.basis())
          for (const SoElement& y : rb.space.basis()) {
            const SoElement br = bracket(x, y);
            if (expect_zero)
              worst = std::max(worst,
                               rel_inf(br, x.norm_inf() * y.norm_inf()));
            else if (!br.is_zero(1e-14))
              worst = std::max(worst, target->containment_residual(br));
          }
      }
    out.push_back(make_check("root_space_sum_rule" + nsuf(n),
                             "algebra.roots.sum_rule",
                             "[g_a, g_b] in g_{a+b}", format_double(worst),
                             worst, tolv(tol_override, 1e-8)));
  }
  {
    double worst = 0.0;
    // Dual vectors of the four positive roots and the dual basis of a.
    const SoElement ha1 = rs.root_vector({1, 0});
    const SoElement ha2 = rs.root_vector({0, 1});
    const SoElement ha12 = rs.root_vector({1, 1});
    const SoElement ha122 = rs.root_vector({1, 2});
    worst = std::max(worst, std::abs(g_metric(ha1, ha1) - 4.0));
    worst = std::max(worst, std::abs(g_metric(ha2, ha2) - 2.0));
    worst = std::max(worst, (ha12 - rs.h1() * 2.0).norm_inf());
    worst = std::max(worst, (ha122 - rs.h2() * 2.0).norm_inf());
    const std::vector<std::pair<double, double>> params = {{1.0, 0.0},
                                                           {0.4, 1.3}};
    for (const auto& [a1, a2] : params) {
      const SoElement h = rs.a_element(a1, a2);
      for (const RootCoeffs& rc :
           {RootCoeffs{1, 0}, RootCoeffs{0, 1}, RootCoeffs{1, 1},
            RootCoeffs{1, 2}})
        worst = std::max(worst,
                         std::abs(g_metric(rs.root_vector(rc), h) -
                                  RootSystem::root_value(rc, a1, a2)));
    }
    out.push_back(make_check("root_dual_vectors" + nsuf(n),
                             "algebra.roots.dual_vectors",
                             "g(H_a, H) = a(H)", format_double(worst), worst,
                             tolv(tol_override, 1e-10)));
  }
  {
    // p = a + sum p_alpha and k = k0 + sum k_alpha; p_alpha + k_alpha spans
    // g_alpha + g_{-alpha}.
    double worst = 0.0;
    std::vector<const Subspace*> p_parts = {&rs.a_space()};
    std::vector<const Subspace*> k_parts = {&rs.k0()};
    for (const RootCoeffs& rc : {RootCoeffs{1, 0}, RootCoeffs{0, 1},
                                 RootCoeffs{1, 1}, RootCoeffs{1, 2}}) {
      p_parts.push_back(&rs.p_alpha(rc));
      k_parts.push_back(&rs.k_alpha(rc));
      std::vector<SoElement> both = rs.root(rc).space.basis();
      for (const SoElement& x : rs.root(-rc).space.basis()) both.push_back(x);
      worst = std::max(
          worst,
          span_distance(direct_sum({&rs.p_alpha(rc), &rs.k_alpha(rc)}),
                        Subspace(both)));
    }
    std::vector<SoElement> k_std, p_std;
    for (const SoElement& b : basis)
      if (cartan_theta(b).matrix() == b.matrix())
        k_std.push_back(b);
      else
        p_std.push_back(b);
    worst = std::max(worst,
                     span_distance(direct_sum(p_parts), Subspace(p_std)));
    worst = std::max(worst,
                     span_distance(direct_sum(k_parts), Subspace(k_std)));
    out.push_back(make_check("cartan_root_split" + nsuf(n),
                             "algebra.roots.pk_split",
                             "p and k split along roots",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-8)));
  }

  // Solvable metric model: the a + n metric makes the p projection a
  // linear isometry.
  {
    double worst = 0.0;
    const IwasawaFrame iw = rs.iwasawa();
    std::vector<SoElement> an_basis = iw.a_basis;
    for (const SoElement& x : iw.n_basis) an_basis.push_back(x);
    for (int k = 0; k < 8; ++k) {
      const SoElement x = random_combination(an_basis, rng);
      const SoElement y = random_combination(an_basis, rng);
      const double lhs = rs.an_metric(x, y);
      const double rhs = g_metric(rs.p_projection(x), rs.p_projection(y));
      worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
      // Round trip through the representative map.
      worst = std::max(
          worst,
          rel_inf(rs.an_representative(rs.p_projection(x)) - x, x.norm_inf()));
    }
    worst = std::max(worst,
                     std::abs(rs.an_metric(rs.h1(), rs.h1()) - 0.5));
    worst =
        std::max(worst, std::abs(rs.an_metric(rs.h2(), rs.h2()) - 1.0));
    out.push_back(make_check("solvable_metric_isometry" + nsuf(n),
                             "algebra.an_metric",
                             "<x,y> = g(px, py), |H^1|^2 = 1/2, |H^2|^2 = 1",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-10)));
  }

  // Named subalgebras: closure, solvability, nilpotency, the Heisenberg
  // algebra and the two presentations of the parabolic-type algebra.
  {
    double worst = 0.0;
    for (const auto& [key, sub] : rs.named_subalgebras())
      worst = std::max(worst, subalgebra_residual(sub));
    worst = std::max(worst, subalgebra_residual(rs.a_space()));
    worst = std::max(worst, subalgebra_residual(rs.n_space()));
    out.push_back(make_check("named_subalgebras_closed" + nsuf(n),
                             "algebra.subalgebras.closure", "0",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-8)));
  }
  {
    int steps = 0;
    const bool nil = is_nilpotent(rs.n_space(), &steps);
    const bool ok = is_solvable(rs.named("d")) && is_solvable(rs.named("s1")) &&
                    is_solvable(rs.named("h1")) && nil && steps == 3 &&
                    !is_solvable(rs.named("l1")) &&
                    !is_solvable(rs.named("q1"));
    std::ostringstream got;
    got << "d,s1,h1 solvable; n nilpotent in " << steps
        << " steps; l1,q1 not solvable";
    out.push_back(make_bool_check("solvability_flags" + nsuf(n),
                                  "algebra.subalgebras.solvable",
                                  "solvable orbits, 3-step nilpotent n",
                                  got.str(), ok));
  }
  {
    const Subspace& n1 = rs.named("n1");
    const bool ok = is_heisenberg(n1) && n1.dimension() == 2 * n - 3 &&
                    !is_heisenberg(rs.n_space());
    std::ostringstream got;
    got << "dim n1 = " << n1.dimension() << ", heisenberg = "
        << (ok ? "yes" : "no");
    out.push_back(make_bool_check("heisenberg_algebra" + nsuf(n),
                                  "algebra.subalgebras.heisenberg",
                                  "dim 2n-3, 1-dim center = derived algebra",
                                  got.str(), ok));
  }
  {
    double worst = span_distance(
        rs.named("q1"),
        direct_sum({&rs.named("m1"), &rs.named("a1"), &rs.named("n1")}));
    worst = std::max(
        worst, span_distance(rs.named("q1"),
                             direct_sum({&rs.named("l1"), &rs.named("n1")})));
    worst = std::max(
        worst, span_distance(rs.named("l1"),
                             direct_sum({&rs.named("m1"), &rs.named("a1")})));
    out.push_back(make_check("parabolic_decompositions" + nsuf(n),
                             "algebra.subalgebras.langlands",
                             "q1 = m1 + a^1 + n1 = l1 + n1",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-8)));
  }

  // Bracket relations of the reflective pair of short-root p spaces.
  {
    const Subspace& p12 = rs.p_alpha({1, 1});
    const Subspace& p2 = rs.p_alpha({0, 1});
    const Subspace& k1 = rs.k_alpha({1, 0});
    const Subspace& k122 = rs.k_alpha({1, 2});
    const Subspace k_target =
        direct_sum({&rs.k0(), &k1, &k122});
    double worst = 0.0;
    std::vector<SoElement> q_basis = p12.basis();
    for (const SoElement& x : p2.basis()) q_basis.push_back(x);
    for (const SoElement& x : q_basis)
      for (const SoElement& y : q_basis) {
        const SoElement br = bracket(x, y);
        if (!br.is_zero(1e-14))
          worst = std::max(worst, k_target.containment_residual(br));
      }
    const auto incl = [&worst](const Subspace& a, const Subspace& b,
                               const Subspace& target) {
      for (const SoElement& x : a.basis())
        for (const SoElement& y : b.basis()) {
          const SoElement br = bracket(x, y);
          if (!br.is_zero(1e-14))
            worst = std::max(worst, target.containment_residual(br));
        }
    };
    incl(rs.k0(), p12, p12);
    incl(k1, p12, p2);
    incl(k122, p12, p2);
    incl(rs.k0(), p2, p2);
    incl(k1, p2, p12);
    incl(k122, p2, p12);
    out.push_back(make_check("reflective_bracket_relations" + nsuf(n),
                             "algebra.brackets.inclusions",
                             "k pieces rotate the two short-root p spaces",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-8)));
  }

  // Lie triple systems giving totally geodesic submanifolds.
  {
    std::vector<SoElement> nu_basis = {rs.root_vector({1, 0})};
    for (const SoElement& x : rs.p_alpha({1, 0}).basis())
      nu_basis.push_back(x);
    const Subspace nu(nu_basis);

    std::vector<SoElement> c_nu_basis;
    for (const SoElement& x : nu_basis) c_nu_basis.push_back(c0_apply(x));
    const Subspace c_nu(c_nu_basis);
    std::vector<SoElement> fixed_basis = {rs.root_vector({1, 2})};
    for (const SoElement& x : rs.p_alpha({1, 2}).basis())
      fixed_basis.push_back(x);

    std::vector<SoElement> q_basis = rs.p_alpha({1, 1}).basis();
    for (const SoElement& x : rs.p_alpha({0, 1}).basis()) q_basis.push_back(x);
    const Subspace q_triple(q_basis);

    std::vector<SoElement> flat_basis = rs.a_space().basis();
    for (const SoElement& x : rs.p_alpha({1, 2}).basis())
      flat_basis.push_back(x);
    for (const SoElement& x : rs.p_alpha({1, 0}).basis())
      flat_basis.push_back(x);
    const Subspace flat_triple(flat_basis);

    double worst = std::max(
        {lie_triple_residual(nu), lie_triple_residual(c_nu),
         lie_triple_residual(q_triple), lie_triple_residual(flat_triple),
         span_distance(c_nu, Subspace(fixed_basis))});
    out.push_back(make_check("lie_triple_systems" + nsuf(n),
                             "algebra.lie_triple",
                             "[[m,m],m] in m for four distinguished m",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-10)));
  }

  return out;
}

std::vector<CheckRecord> quadric_checks(int n, std::uint64_t seed,
                                        std::optional<double> tol_override) {
  std::vector<CheckRecord> out;
  std::mt19937_64 rng(mix_seed(seed, n) ^ 0x517cc1b727220a95ULL);
  const RootSystem rs(n);
  const std::vector<SoElement> pb = standard_p_basis(n);

  // Complex structure: square -1, g-isometry, g-skew.
  {
    double worst = 0.0;
    for (const SoElement& b : pb)
      worst = std::max(worst, (j_apply(j_apply(b)) + b).norm_inf());
    for (int k = 0; k < 5; ++k) {
      const SoElement x = random_combination(pb, rng);
      const SoElement y = random_combination(pb, rng);
      worst = std::max(worst, rel_inf(j_apply(j_apply(x)) + x, x.norm_inf()));
      worst = std::max(worst, std::abs(g_metric(j_apply(x), j_apply(y)) -
                                       g_metric(x, y)));
      worst = std::max(worst, std::abs(g_metric(j_apply(x), y) +
                                       g_metric(x, j_apply(y))));
    }
    out.push_back(make_check("complex_structure_square" + nsuf(n),
                             "quadric.complex_structure", "J^2 = -id",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-12)));
  }
  {
    // J exchanges the short-root p spaces and rotates the a directions into
    // the long-root p spaces.
    const auto j_image = [](const Subspace& s) {
      std::vector<SoElement> img;
      for (const SoElement& x : s.basis()) img.push_back(j_apply(x));
      return Subspace(img);
    };
    double worst =
        span_distance(j_image(rs.p_alpha({0, 1})), rs.p_alpha({1, 1}));
    worst = std::max(
        worst, span_distance(Subspace({j_apply(rs.root_vector({1, 0}))}),
                             rs.p_alpha({1, 0})));
    worst = std::max(
        worst, span_distance(Subspace({j_apply(rs.root_vector({1, 2}))}),
                             rs.p_alpha({1, 2})));
    out.push_back(make_check("complex_structure_root_map" + nsuf(n),
                             "quadric.complex_structure",
                             "J g-rotates root blocks", format_double(worst),
                             worst, tolv(tol_override, 1e-8)));
  }

  // Circle of real structures.
  {
    double worst = 0.0;
    for (int k = 0; k < 16; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / 16.0;
      const SoElement x = random_combination(pb, rng);
      const SoElement y = random_combination(pb, rng);
      const SoElement cx = real_structure_apply(x, phi);
      worst = std::max(
          worst, rel_inf(real_structure_apply(cx, phi) - x, x.norm_inf()));
      worst = std::max(worst, std::abs(g_metric(cx, y) -
                                       g_metric(x, real_structure_apply(y, phi))));
      worst = std::max(
          worst,
          rel_inf(j_apply(cx) + real_structure_apply(j_apply(x), phi),
                  x.norm_inf()));
      const Subspace fixed = v_of_c(n, phi);
      for (const SoElement& v : fixed.basis())
        worst =
            std::max(worst, (real_structure_apply(v, phi) - v).norm_inf());
    }
    for (const SoElement& u : v_c0_frame(n))
      worst = std::max(worst, (c0_apply(u) - u).norm_inf());
    out.push_back(make_check("real_structure_circle" + nsuf(n),
                             "quadric.real_structures",
                             "C_phi involutive, anti-J, fixes V(C_phi)",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-12)));
  }

  // Curvature tensor: independence of the real structure choice, algebraic
  // symmetries, first Bianchi identity, Einstein constant.
  {
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      const SoElement x = random_combination(pb, rng);
      const SoElement y = random_combination(pb, rng);
      const SoElement z = random_combination(pb, rng);
      const SoElement r0 = curvature(x, y, z, 0.0);
      for (const double phi : {0.3, 1.1, 2.7, 4.9})
        worst = std::max(worst, rel_inf(curvature(x, y, z, phi) - r0,
                                        r0.norm_inf()));
    }
    out.push_back(make_check("curvature_phi_independent" + nsuf(n),
                             "quadric.curvature.phi_independence", "0",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-12)));
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const SoElement x = random_combination(pb, rng);
      const SoElement y = random_combination(pb, rng);
      const SoElement z = random_combination(pb, rng);
      const SoElement w = random_combination(pb, rng);
      const double scale = 1.0 + x.norm_inf() * y.norm_inf() * z.norm_inf();
      worst = std::max(worst,
                       (curvature(x, y, z) + curvature(y, x, z)).norm_inf() /
                           scale);
      worst = std::max(worst, std::abs(g_metric(curvature(x, y, z), w) +
                                       g_metric(curvature(x, y, w), z)) /
                                  scale);
      worst = std::max(worst, std::abs(g_metric(curvature(x, y, z), w) -
                                       g_metric(curvature(z, w, x), y)) /
                                  scale);
    }
    out.push_back(make_check("curvature_symmetries" + nsuf(n),
                             "quadric.curvature.symmetries", "0",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-9)));
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const SoElement x = random_combination(pb, rng);
      const SoElement y = random_combination(pb, rng);
      const SoElement z = random_combination(pb, rng);
      const SoElement b =
          curvature(x, y, z) + curvature(y, z, x) + curvature(z, x, y);
      worst = std::max(
          worst, rel_inf(b, x.norm_inf() * y.norm_inf() * z.norm_inf()));
    }
    out.push_back(make_check("first_bianchi" + nsuf(n),
                             "quadric.curvature.bianchi", "0",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-9)));
  }
  {
    const double worst = einstein_residual(n);
    out.push_back(make_check("einstein_constant" + nsuf(n),
                             "quadric.curvature.einstein",
                             "Ric = -2n g", format_double(worst), worst,
                             tolv(tol_override, 1e-9)));
  }

  // Jacobi operator spectra across the singular-angle range.
  {
    const std::vector<SoElement> v = v_c0_frame(n);
    double worst_spec = 0.0, worst_t = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double t = (std::numbers::pi / 4.0) * i / 19.0;
      const SoElement vec =
          v[0] * std::cos(t) + j_apply(v[1]) * std::sin(t);
      const JacobiSpectrumReport rep = jacobi_spectrum(vec);
      worst_spec = std::max(worst_spec, rep.residual);
      worst_t = std::max(worst_t, std::abs(rep.cls.t - t));
    }
    out.push_back(make_check("jacobi_closed_form_grid" + nsuf(n),
                             "quadric.jacobi.closed_form",
                             "eigenvalues from the angle closed form",
                             format_double(worst_spec), worst_spec,
                             tolv(tol_override, 1e-8)));
    out.push_back(make_check("jacobi_angle_recovery" + nsuf(n),
                             "quadric.singular.classify",
                             "classified angle = construction angle",
                             format_double(worst_t), worst_t,
                             tolv(tol_override, 1e-6)));
  }
  {
    const std::vector<SoElement> v = v_c0_frame(n);
    const SoElement principal = v[0];
    const SoElement isotropic =
        (v[0] + j_apply(v[1])) * (1.0 / std::numbers::sqrt2);
    const double tm = std::atan(0.5);
    const SoElement middle = v[0] * std::cos(tm) + j_apply(v[1]) * std::sin(tm);

    double worst = jacobi_spectrum(principal).spectrum.match_residual(
        Spectrum::merge_expected({{0.0, n}, {-2.0, n}}));
    worst = std::max(
        worst, jacobi_spectrum(isotropic).spectrum.match_residual(
                   Spectrum::merge_expected(
                       {{0.0, 3}, {-1.0, 2 * n - 4}, {-4.0, 1}})));
    worst = std::max(
        worst, jacobi_spectrum(middle).spectrum.match_residual(
                   Spectrum::merge_expected({{0.0, 2},
                                             {-0.4, n - 1},
                                             {-1.6, n - 2},
                                             {-3.6, 1}})));
    out.push_back(make_check("jacobi_special_angles" + nsuf(n),
                             "quadric.jacobi.special_angles",
                             "pinned spectra at t = 0, atan(1/2), pi/4",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-8)));

    const SingularityClass cp = classify_singular(principal);
    const SingularityClass ci = classify_singular(isotropic);
    const SingularityClass cr = classify_singular(random_p_unit(n, rng));
    const bool kinds_ok = cp.kind == SingularKind::APrincipal &&
                          ci.kind == SingularKind::AIsotropic &&
                          cr.t >= -1e-12 &&
                          cr.t <= std::numbers::pi / 4.0 + 1e-12;
    out.push_back(make_bool_check(
        "singular_kind_classification" + nsuf(n), "quadric.singular.classify",
        "fixed vector principal, mixed vector isotropic",
        kinds_ok ? "as expected" : "unexpected kinds", kinds_ok));
  }

  return out;
}

std::vector<CheckRecord> complex_hypersurface_checks(
    int n, std::optional<double> tol_override) {
  std::vector<CheckRecord> out;
  const RootSystem rs(n);
  const std::vector<double> phis = {0.0, std::numbers::pi / 4.0,
                                    std::numbers::pi / 2.0, std::numbers::pi};
  const std::vector<std::pair<double, int>> expected =
      Spectrum::merge_expected({{-1.0, n - 2}, {0.0, 2}, {1.0, n - 2}});

  const PModel p0 = build_P(rs, 0.0);

  double spec_worst = 0.0, rot_worst = 0.0, ker_worst = 0.0, iso_worst = 0.0,
         adapted_worst = 0.0;
  std::string computed_spec;
  for (const double phi : phis) {
    const PModel p = build_P(rs, phi);
    spec_worst = std::max({spec_worst,
                           p.shape.spectrum.match_residual(expected),
                           p.diagonal_residual, p.shape.symmetry_residual});
    if (phi == 0.0) computed_spec = p.shape.spectrum.to_string();

    const Subspace v = v_of_c(n, phi);
    const Subspace jv = jv_of_c(n, phi);
    for (int k = 0; k < n - 2; ++k) {
      rot_worst = std::max(rot_worst,
                           v.containment_residual(p.tangent[2 + k]));
      rot_worst = std::max(rot_worst,
                           jv.containment_residual(p.tangent[n + k]));
    }
    ker_worst = std::max(ker_worst,
                         p.shape.matrix.leftCols(2).cwiseAbs().maxCoeff());
    iso_worst = std::max(iso_worst, std::abs(classify_singular(p.normal).t -
                                             std::numbers::pi / 4.0));

    // Curvature-adapted: the normal Jacobi operator preserves the tangent
    // space and commutes with the shape operator.
    const int d = 2 * n - 2;
    Eigen::MatrixXd kappa(d, d);
    for (int j = 0; j < d; ++j) {
      const SoElement rj = curvature(p.tangent[j], p.normal, p.normal);
      SoElement expanded = SoElement::zero(n);
      for (int i = 0; i < d; ++i) {
        kappa(i, j) = g_metric(p.tangent[i], rj);
        expanded += p.tangent[i] * kappa(i, j);
      }
      adapted_worst = std::max(adapted_worst, (rj - expanded).norm_inf());
    }
    adapted_worst = std::max(
        adapted_worst,
        (kappa * p.shape.matrix - p.shape.matrix * kappa).cwiseAbs().maxCoeff());
  }
  out.push_back(make_check("complex_hypersurface_spectrum" + nsuf(n),
                           "complex_hypersurface.spectrum",
                           spectrum_string(expected), computed_spec,
                           spec_worst, tolv(tol_override, 1e-9)));
  out.push_back(make_check("complex_hypersurface_rotation" + nsuf(n),
                           "complex_hypersurface.rotation",
                           "half-angle block rotation",
                           format_double(rot_worst), rot_worst,
                           tolv(tol_override, 1e-8)));
  out.push_back(make_check("complex_hypersurface_kernel" + nsuf(n),
                           "complex_hypersurface.kernel",
                           "kernel independent of the normal",
                           format_double(ker_worst), ker_worst,
                           tolv(tol_override, 1e-9)));
  out.push_back(make_check("complex_hypersurface_normals_isotropic" + nsuf(n),
                           "complex_hypersurface.normals_isotropic",
                           "t = pi/4 on the normal circle",
                           format_double(iso_worst), iso_worst,
                           tolv(tol_override, 1e-6)));
  out.push_back(make_check("complex_hypersurface_curvature_adapted" + nsuf(n),
                           "complex_hypersurface.curvature_adapted", "0",
                           format_double(adapted_worst), adapted_worst,
                           tolv(tol_override, 1e-9)));

  // J intertwines the shape operators of J-rotated normals.
  {
    double worst = 0.0;
    const int d = 2 * n - 2;
    Eigen::MatrixXd jmat(d, d);
    for (int j = 0; j < d; ++j) {
      const SoElement jv = j_apply(p0.tangent[j]);
      for (int i = 0; i < d; ++i) jmat(i, j) = g_metric(p0.tangent[i], jv);
    }
    const Subspace& dd = rs.named("d");
    for (const double phi : {0.0, 0.7, 2.1}) {
      const SoElement zeta = p0.normal * std::cos(phi) +
                             j_apply(p0.normal) * std::sin(phi);
      const SoElement jzeta = j_apply(zeta);
      const Eigen::MatrixXd a0 = shape_matrix_in_frame(
          rs, dd, rs.an_representative(zeta), p0.tangent);
      const Eigen::MatrixXd a1 = shape_matrix_in_frame(
          rs, dd, rs.an_representative(jzeta), p0.tangent);
      worst = std::max(worst, (a1 - jmat * a0).cwiseAbs().maxCoeff());
    }
    out.push_back(make_check("complex_hypersurface_j_relation" + nsuf(n),
                             "complex_hypersurface.j_relation",
                             "A(J normal) = J A(normal)",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-9)));
  }

  // Tangent and normal spaces: complementary, J-invariant, the tangent
  // space is the isometric image of the orbit algebra and a Lie triple
  // system normal bundle.
  {
    double worst = span_distance(p0.tangent_space, Subspace(p0.tangent));
    const auto j_image = [](const Subspace& s) {
      std::vector<SoElement> img;
      for (const SoElement& x : s.basis()) img.push_back(j_apply(x));
      return Subspace(img);
    };
    worst = std::max(worst,
                     span_distance(j_image(p0.tangent_space), p0.tangent_space));
    worst = std::max(worst,
                     span_distance(j_image(p0.normal_space), p0.normal_space));
    for (const SoElement& x : p0.tangent)
      for (const SoElement& y : p0.normal_space.basis())
        worst = std::max(worst, std::abs(g_metric(x, y)));
    worst = std::max(worst, lie_triple_residual(p0.normal_space));
    const bool dims_ok = p0.tangent_space.dimension() == 2 * n - 2 &&
                         p0.normal_space.dimension() == 2;
    worst = std::max(worst, dims_ok ? 0.0 : 1.0);
    out.push_back(make_check("complex_hypersurface_splitting" + nsuf(n),
                             "complex_hypersurface.tangent",
                             "J-invariant orthogonal splitting",
                             format_double(worst), worst,
                             tolv(tol_override, 1e-8)));
  }

  // The same operator through the orbit-algebra inner product.
  {
    const ShapeOperatorReport an_side =
        shape_by_bracket(rs, rs.named("d"), rs.an_representative(p0.normal));
    const double worst = std::max(an_side.spectrum.match_residual(expected),
                                  an_side.symmetry_residual);
    out.push_back(make_check("complex_hypersurface_orbit_spectrum" + nsuf(n),
                             "complex_hypersurface.orbit_spectrum",
                             spectrum_string(expected),
                             an_side.spectrum.to_string(), worst,
                             tolv(tol_override, 1e-9)));
  }

  return out;
}

std::vector<CheckRecord> model_checks(int n, const HypersurfaceModel& model,
                                      std::optional<double> tol_override) {
  std::vector<CheckRecord> out;
  const RootSystem rs(n);
  const BuiltModel built = build_M(rs, model);
  const std::string mname = model.name();
  const bool radial = model.kind == ModelKind::Tube ||
                      model.kind == ModelKind::Equidistant;
  const std::string suffix =
      nsuf(n) + (radial ? "_r" + num(model.r) : std::string());
  const std::string anchor = "model." + mname + ".";
  const auto rec = [&](const std::string& stem, const std::string& anchor_leaf,
                       const std::string& expected, const std::string& computed,
                       double residual, double tol) {
    out.push_back(make_check(mname + "_" + stem + suffix,
                             anchor + anchor_leaf, expected, computed,
                             residual, tolv(tol_override, tol)));
  };

  // Shape spectrum, diagonal form and frame quality.
  const std::vector<std::pair<double, int>> expected_spec =
      Spectrum::merge_expected(
          {{-1.0, n - 2}, {0.0, 2}, {1.0, n - 2}, {built.alpha, 1}});
  rec("spectrum", "spectrum", spectrum_string(expected_spec),
      built.shape.spectrum.to_string(),
      std::max({built.shape.spectrum.match_residual(expected_spec),
                built.diagonal_residual, built.shape.symmetry_residual,
                built.frame.orthonormality_residual()}),
      1e-9);

  // Pointwise identities.
  for (const ModelIdentity& id : model_identities(built)) {
    std::string leaf;
    double tol = 1e-9;
    if (id.name == "reeb_is_shape_eigenvector") leaf = "hopf";
    else if (id.name == "shape_anticommutes_structure") leaf = "anticommutator";
    else if (id.name == "contact_form_closed_on_complex_subbundle")
      leaf = "integrability";
    else if (id.name == "normal_jacobi_preserves_tangent_space")
      leaf = "curvature_adapted";
    else if (id.name == "normal_jacobi_commutes_with_shape")
      leaf = "curvature_adapted";
    else if (id.name == "trace_equals_reeb_curvature") leaf = "trace";
    else if (id.name == "normal_is_isotropic") leaf = "normal_isotropic";
    else if (id.name == "structure_swaps_curvature_blocks") leaf = "j_swap";
    else if (id.name == "blocks_align_with_rotated_real_structure")
      leaf = "alignment";
    else leaf = "identity";
    rec(id.name, leaf, "0", format_double(id.residual), id.residual, tol);
  }

  // Almost contact metric structure.
  {
    const ContactData c = contact_data(built.frame);
    rec("contact_structure", "contact_structure",
        "phi^2 = -id + eta (x) xi", format_double(c.structure_residual),
        c.structure_residual, 1e-9);
  }

  // Normal Jacobi operator blocks.
  const NormalJacobiReport nj = normal_jacobi(built);
  rec("normal_jacobi_blocks", "normal_jacobi", "diag(0,0,-1,..,-1,-4)",
      format_double(nj.block_residual),
      std::max(nj.block_residual, nj.tangency_residual), 1e-9);

  // Ricci operator package.
  {
    const RicciReport ric = ricci(built);
    rec("ricci_eigenvalues", "ricci.eigenvalues",
        spectrum_string(ric.expected), ric.spectrum.to_string(),
        ric.match_residual, 1e-8);

    int expected_clusters = 4;
    if (std::abs(built.alpha) <= 1e-9) expected_clusters = 2;
    else if (std::abs(built.alpha - 4.0) <= 1e-9) expected_clusters = 3;
    out.push_back(make_bool_check(
        mname + "_ricci_clusters" + suffix, anchor + "ricci.clusters",
        std::to_string(expected_clusters) + " clusters",
        std::to_string(ric.cluster_count) + " clusters",
        ric.cluster_count == expected_clusters));

    const bool expect_pe = model.kind == ModelKind::Minimal;
    out.push_back(make_bool_check(
        mname + "_ricci_pseudo_einstein" + suffix,
        anchor + "ricci.pseudo_einstein", expect_pe ? "true" : "false",
        ric.pseudo_einstein ? "true" : "false",
        ric.pseudo_einstein == expect_pe));
    if (expect_pe)
      rec("ricci_pseudo_einstein_operator", "ricci.pseudo_einstein",
          "Ric = -2n id + 4 eta (x) xi",
          format_double(ric.pseudo_einstein_residual),
          ric.pseudo_einstein_residual, 1e-9);

    rec("ricci_phi_relation", "ricci.phi_relation",
        "Ric phi + phi Ric = -4n phi",
        format_double(ric.phi_relation_residual), ric.phi_relation_residual,
        1e-9);
    rec("ricci_scalar", "ricci.scalar",
        format_double(4.0 - 2.0 * n * (2.0 * n - 1.0)),
        format_double(ric.scalar), ric.scalar_residual, 1e-9);

    const Eigen::MatrixXd gauss = ricci_gauss_oracle(built);
    const double gauss_res =
        (ric.matrix - gauss).cwiseAbs().maxCoeff();
    rec("ricci_gauss_oracle", "ricci.gauss_oracle",
        "contraction route agrees", format_double(gauss_res), gauss_res,
        1e-8);
  }

  // Orbit-side spectrum for the two models carrying a group orbit through
  // the base point.
  if (model.kind == ModelKind::Minimal || model.kind == ModelKind::Horocyclic) {
    const Subspace& s =
        rs.named(model.kind == ModelKind::Minimal ? "s1" : "h1");
    const ShapeOperatorReport an_side =
        shape_by_bracket(rs, s, rs.an_representative(built.frame.normal));
    rec("orbit_spectrum", "orbit_spectrum", spectrum_string(expected_spec),
        an_side.spectrum.to_string(),
        std::max(an_side.spectrum.match_residual(expected_spec),
                 an_side.symmetry_residual),
        1e-9);
  }

  // Transport consistency for the tube and the parameter bridge.
  if (model.kind == ModelKind::Tube)
    rec("transport_agreement", "transport",
        "orbit bracket block matches the transport diagonal",
        format_double(built.diagonal_residual), built.diagonal_residual,
        1e-9);
  {
    const HypersurfaceModel round = HypersurfaceModel::from_alpha(built.alpha);
    double res = round.kind == model.kind ? 0.0 : 1.0;
    if (radial) res = std::max(res, std::abs(round.r - model.r));
    rec("alpha_bridge", "alpha_bridge", "kind and radius round-trip",
        format_double(res), res, 1e-9);
  }

  return out;
}

VerificationReport run_verification(const RunConfig& cfg) {
  std::vector<std::function<std::vector<CheckRecord>()>> tasks;
  for (const int n : cfg.ns) {
    if (cfg.with_algebra)
      tasks.push_back([n, &cfg] { return algebra_checks(n, cfg.seed, cfg.tol_override); });
    if (cfg.with_quadric)
      tasks.push_back([n, &cfg] { return quadric_checks(n, cfg.seed, cfg.tol_override); });
    if (cfg.with_complex_hypersurface)
      tasks.push_back(
          [n, &cfg] { return complex_hypersurface_checks(n, cfg.tol_override); });
    for (const ModelKind kind : cfg.kinds) {
      if (kind == ModelKind::Tube || kind == ModelKind::Equidistant) {
        for (const double r : cfg.radii) {
          const HypersurfaceModel m =
              kind == ModelKind::Tube ? HypersurfaceModel::tube(r)
                                      : HypersurfaceModel::equidistant(r);
          tasks.push_back([n, m, &cfg] { return model_checks(n, m, cfg.tol_override); });
        }
      } else {
        const HypersurfaceModel m = kind == ModelKind::Minimal
                                        ? HypersurfaceModel::minimal()
                                        : HypersurfaceModel::horocyclic();
        tasks.push_back([n, m, &cfg] { return model_checks(n, m, cfg.tol_override); });
      }
    }
  }

  std::vector<std::vector<CheckRecord>> slots(tasks.size());
  const int cap = cfg.threads > 0 ? cfg.threads : resolve_thread_cap();
  const int workers =
      std::max(1, std::min<int>(cap, static_cast<int>(tasks.size())));
  const auto run_task = [&](std::size_t i) {
    try {
      slots[i] = tasks[i]();
    } catch (const std::exception& e) {
      slots[i] = {make_bool_check("task_exception_" + std::to_string(i),
                                  "run.error", "no exception", e.what(),
                                  false)};
    }
  };
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size();
             i = next.fetch_add(1))
          run_task(i);
      });
    for (std::thread& t : pool) t.join();
  }

  VerificationReport report;
  report.meta.version = version;
  report.meta.command = cfg.command.empty() ? "run" : cfg.command;
  report.meta.seed = cfg.seed;
  report.meta.threads = workers;
  for (std::vector<CheckRecord>& s : slots) report.append(std::move(s));
  report.sort_checks();
  report.notes.push_back(
      "A family-wide tabulation of the principal curvature multiplicities as "
      "1, 2, n-1, n-1 sums to 2n+2 and exceeds dim M = 2n-1; all checks use "
      "the per-model multiplicities 1, 2, n-2, n-2.");
  return report;
}

namespace {

std::string block_label(int index, int n) {
  if (index < 2) return "C-span";
  if (index < n) return "plus block";
  if (index < 2 * n - 2) return "minus block";
  return "Reeb";
}

std::vector<SpectrumTable::Row> labeled_rows(
    const Spectrum& spec, const std::vector<double>& frame_values, int n) {
  std::vector<SpectrumTable::Row> rows;
  for (const EigenCluster& c : spec.clusters) {
    SpectrumTable::Row row;
    row.value = c.value;
    row.multiplicity = c.multiplicity;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < frame_values.size(); ++i)
      if (std::abs(frame_values[i] - c.value) <=
          1e-6 * (1.0 + std::abs(c.value))) {
        const std::string l = block_label(static_cast<int>(i), n);
        if (labels.empty() || labels.back() != l) labels.push_back(l);
      }
    for (std::size_t k = 0; k < labels.size(); ++k)
      row.label += (k ? " + " : "") + labels[k];
    rows.push_back(row);
  }
  return rows;
}

} // namespace

SpectrumTable spectrum_table(int n, const HypersurfaceModel& model,
                             const std::vector<double>& sweep_radii) {
  const RootSystem rs(n);
  const BuiltModel built = build_M(rs, model);
  SpectrumTable t;
  t.model = model.name();
  t.n = n;
  t.has_r = model.kind == ModelKind::Tube ||
            model.kind == ModelKind::Equidistant;
  t.r = model.r;
  t.has_alpha = true;
  t.alpha = built.alpha;

  std::vector<double> frame_values(2 * n - 1, 0.0);
  for (int k = 0; k < n - 2; ++k) {
    frame_values[2 + k] = 1.0;
    frame_values[n + k] = -1.0;
  }
  frame_values[2 * n - 2] = built.alpha;
  t.principal = labeled_rows(built.shape.spectrum, frame_values, n);

  const RicciReport ric = ricci(built);
  t.has_ricci = true;
  std::vector<double> ricci_values(2 * n - 1, -2.0 * n);
  for (int k = 0; k < n - 2; ++k) {
    ricci_values[2 + k] = -2.0 * n + built.alpha;
    ricci_values[n + k] = -2.0 * n - built.alpha;
  }
  ricci_values[2 * n - 2] = -2.0 * n + 4.0;
  t.ricci_rows = labeled_rows(ric.spectrum, ricci_values, n);
  t.scalar = ric.scalar;

  if (t.has_r)
    for (const double r : sweep_radii) {
      const HypersurfaceModel m = model.kind == ModelKind::Tube
                                      ? HypersurfaceModel::tube(r)
                                      : HypersurfaceModel::equidistant(r);
      const BuiltModel b = build_M(rs, m);
      t.sweep.push_back({r, b.alpha, ricci(b).scalar});
    }
  return t;
}

SpectrumTable spectrum_table_complex_hypersurface(int n, double phi) {
  const RootSystem rs(n);
  const PModel p = build_P(rs, phi);
  SpectrumTable t;
  t.model = "P";
  t.n = n;

  std::vector<double> frame_values(2 * n - 2, 0.0);
  for (int k = 0; k < n - 2; ++k) {
    frame_values[2 + k] = 1.0;
    frame_values[n + k] = -1.0;
  }
  for (const EigenCluster& c : p.shape.spectrum.clusters) {
    SpectrumTable::Row row;
    row.value = c.value;
    row.multiplicity = c.multiplicity;
    if (std::abs(c.value) <= 1e-6)
      row.label = "kernel";
    else
      row.label = c.value > 0 ? "plus block" : "minus block";
    t.principal.push_back(row);
  }
  return t;
}

std::string spectrum_to_json(const SpectrumTable& t) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"model\": \"" << json_escape(t.model) << "\",\n";
  os << "  \"n\": " << t.n << ",\n";
  if (t.has_r) os << "  \"r\": " << format_double(t.r) << ",\n";
  if (t.has_alpha) os << "  \"alpha\": " << format_double(t.alpha) << ",\n";
  os << "  \"principal\": [";
  for (std::size_t i = 0; i < t.principal.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n");
    os << "    {\"value\": " << format_double(t.principal[i].value)
       << ", \"multiplicity\": " << t.principal[i].multiplicity
       << ", \"label\": \"" << json_escape(t.principal[i].label) << "\"}";
  }
  os << (t.principal.empty() ? "]" : "\n  ]");
  if (t.has_ricci) {
    os << ",\n  \"ricci\": [";
    for (std::size_t i = 0; i < t.ricci_rows.size(); ++i) {
      os << (i == 0 ? "\n" : ",\n");
      os << "    {\"value\": " << format_double(t.ricci_rows[i].value)
         << ", \"multiplicity\": " << t.ricci_rows[i].multiplicity
         << ", \"label\": \"" << json_escape(t.ricci_rows[i].label) << "\"}";
    }
    os << (t.ricci_rows.empty() ? "]" : "\n  ]");
    os << ",\n  \"scalar\": " << format_double(t.scalar);
  }
  if (!t.sweep.empty()) {
    os << ",\n  \"sweep\": [";
    for (std::size_t i = 0; i < t.sweep.size(); ++i) {
      os << (i == 0 ? "\n" : ",\n");
      os << "    {\"r\": " << format_double(t.sweep[i].r)
         << ", \"alpha\": " << format_double(t.sweep[i].alpha)
         << ", \"scalar\": " << format_double(t.sweep[i].scalar) << "}";
    }
    os << "\n  ]";
  }
  os << "\n}\n";
  return os.str();
}

std::string spectrum_to_markdown(const SpectrumTable& t) {
  std::ostringstream os;
  os << "# Principal curvature spectrum\n\n";
  os << "- model: " << t.model << "\n";
  os << "- n: " << t.n << "\n";
  if (t.has_r) os << "- r: " << num(t.r) << "\n";
  if (t.has_alpha) os << "- alpha: " << format_double(t.alpha) << "\n";
  os << "\n| eigenvalue | multiplicity | eigenspace |\n|---|---|---|\n";
  for (const auto& row : t.principal)
    os << "| " << format_double(row.value) << " | " << row.multiplicity
       << " | " << row.label << " |\n";
  if (t.has_ricci) {
    os << "\n## Ricci spectrum\n\n";
    os << "| eigenvalue | multiplicity | eigenspace |\n|---|---|---|\n";
    for (const auto& row : t.ricci_rows)
      os << "| " << format_double(row.value) << " | " << row.multiplicity
         << " | " << row.label << " |\n";
    os << "\nscalar curvature: " << format_double(t.scalar) << "\n";
  }
  if (!t.sweep.empty()) {
    os << "\n## Radius sweep\n\n";
    os << "r,alpha,scalar\n";
    for (const auto& s : t.sweep)
      os << num(s.r) << "," << format_double(s.alpha) << ","
         << format_double(s.scalar) << "\n";
  }
  return os.str();
}

} // namespace qlab
