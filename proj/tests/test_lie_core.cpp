#include <doctest.h>

#include <cmath>
#include <random>

#include "quadriclab/lie_core.hpp"
#include "quadriclab/oracles.hpp"
#include "support/test_util.hpp"

using namespace qlab;
using testing::random_combination;

TEST_CASE("standard basis satisfies the defining invariant") {
  for (int n : {3, 4, 6}) {
    const auto basis = standard_basis(n);
    CHECK(basis.size() == static_cast<std::size_t>((n + 2) * (n + 1) / 2));
    for (const SoElement& b : basis) {
      CHECK(b.invariant_residual() == doctest::Approx(0.0).epsilon(1e-14));
      CHECK(b.n() == n);
      CHECK(b.ambient_dim() == n + 2);
    }
  }
}

TEST_CASE("from_matrix accepts members and rejects outsiders") {
  const int n = 4;
  std::mt19937_64 rng(7);
  const SoElement x = random_combination(standard_basis(n), rng);
  const SoElement y = SoElement::from_matrix(x.matrix());
  CHECK((y - x).norm_inf() == 0.0);

  Eigen::MatrixXd bad = x.matrix();
  bad(0, 2) += 1.0;  // breaks the pairing between the B block and its mirror
  CHECK_THROWS_AS((void)SoElement::from_matrix(bad), std::invalid_argument);
}

TEST_CASE("block round trip") {
  const int n = 5;
  std::mt19937_64 rng(11);
  const SoElement x = random_combination(standard_basis(n), rng);
  const SoElement y = SoElement::from_blocks(x.block_a1(), x.block_a2(),
                                             x.block_b());
  CHECK((y - x).norm_inf() == 0.0);
}

TEST_CASE("bracket closes and satisfies the Jacobi identity") {
  const int n = 4;
  std::mt19937_64 rng(13);
  const auto basis = standard_basis(n);
  for (int k = 0; k < 20; ++k) {
    const SoElement x = random_combination(basis, rng);
    const SoElement y = random_combination(basis, rng);
    const SoElement z = random_combination(basis, rng);
    CHECK(bracket(x, y).invariant_residual() < 1e-12);
    const SoElement jac = bracket(x, bracket(y, z)) +
                          bracket(y, bracket(z, x)) +
                          bracket(z, bracket(x, y));
    CHECK(jac.norm_inf() < 1e-12 * (1.0 + x.norm_inf() * y.norm_inf() *
                                              z.norm_inf()));
  }
}

TEST_CASE("Killing form equals the structure constant trace") {
  for (int n : {3, 5}) {
    std::mt19937_64 rng(17);
    const auto basis = standard_basis(n);
    for (int k = 0; k < 5; ++k) {
      const SoElement x = random_combination(basis, rng);
      const SoElement y = random_combination(basis, rng);
      const double closed = killing(x, y);
      const double brute = killing_by_structure_constants(x, y);
      CHECK(closed == doctest::Approx(brute).epsilon(1e-10));
      CHECK(closed ==
            doctest::Approx(n * (x.matrix() * y.matrix()).trace())
                .epsilon(1e-12));
    }
    // Invariance: B([z,x],y) + B(x,[z,y]) = 0.
    const SoElement x = random_combination(basis, rng);
    const SoElement y = random_combination(basis, rng);
    const SoElement z = random_combination(basis, rng);
    CHECK(std::abs(killing(bracket(z, x), y) + killing(x, bracket(z, y))) <
          1e-10 * (1.0 + std::abs(killing(x, y))));
  }
}

TEST_CASE("Cartan involution and the associated inner product") {
  const int n = 4;
  std::mt19937_64 rng(19);
  const auto basis = standard_basis(n);
  const int d = static_cast<int>(basis.size());

  for (int k = 0; k < 5; ++k) {
    const SoElement x = random_combination(basis, rng);
    const SoElement y = random_combination(basis, rng);
    CHECK((cartan_theta(cartan_theta(x)) - x).norm_inf() < 1e-14);
    CHECK((cartan_theta(bracket(x, y)) -
           bracket(cartan_theta(x), cartan_theta(y)))
              .norm_inf() < 1e-12);
    const auto [xk, xp] = cartan_split(x);
    CHECK((xk + xp - x).norm_inf() < 1e-14);
    CHECK((cartan_theta(xk) - xk).norm_inf() < 1e-14);
    CHECK((cartan_theta(xp) + xp).norm_inf() < 1e-14);
    CHECK(b_theta(x, x) > 0.0);
    // k and p are B_theta orthogonal.
    CHECK(std::abs(b_theta(xk, xp)) < 1e-12);
  }

  Eigen::MatrixXd gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram(i, j) = b_theta(basis[i], basis[j]);
  CHECK((gram - 2.0 * n * Eigen::MatrixXd::Identity(d, d)).norm() < 1e-12);
}

TEST_CASE("gram_schmidt orthonormalizes and flags dependence") {
  const int n = 3;
  const auto basis = standard_p_basis(n);
  const InnerProduct ip = [](const SoElement& a, const SoElement& b) {
    return b_theta(a, b);
  };
  std::vector<SoElement> tilted = {basis[0], basis[0] + basis[1] * 0.5,
                                   basis[2]};
  const auto ortho = gram_schmidt(tilted, ip);
  REQUIRE(ortho.size() == 3);
  for (std::size_t i = 0; i < ortho.size(); ++i)
    for (std::size_t j = 0; j < ortho.size(); ++j)
      CHECK(ip(ortho[i], ortho[j]) ==
            doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));

  std::vector<SoElement> dependent = {basis[0], basis[1],
                                      basis[0] - basis[1] * 2.0};
  CHECK_THROWS_AS((void)gram_schmidt(dependent, ip), std::invalid_argument);
}

TEST_CASE("Subspace projection, coordinates and containment") {
  const int n = 4;
  const auto pb = standard_p_basis(n);
  const Subspace s({pb[0], pb[1], pb[2] + pb[3]});
  CHECK(s.dimension() == 3);

  const SoElement inside = pb[0] * 2.0 - (pb[2] + pb[3]) * 0.25;
  CHECK(s.contains(inside));
  CHECK(s.containment_residual(inside) < 1e-12);
  CHECK((s.project(inside) - inside).norm_inf() < 1e-12);
  const Eigen::VectorXd c = s.coordinates(inside);
  CHECK(c(0) == doctest::Approx(2.0));
  CHECK(c(1) == doctest::Approx(0.0));
  CHECK(c(2) == doctest::Approx(-0.25));

  const SoElement outside = pb[4];
  CHECK(!s.contains(outside));
  // Projection of an orthogonal vector is zero.
  CHECK(s.project(outside).norm_inf() < 1e-12);
  CHECK(s.containment_residual(outside) == doctest::Approx(1.0));

  const auto on = s.orthonormal_basis();
  REQUIRE(on.size() == 3);
  for (std::size_t i = 0; i < on.size(); ++i)
    for (std::size_t j = 0; j < on.size(); ++j)
      CHECK(b_theta(on[i], on[j]) ==
            doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
}

TEST_CASE("from_spanning drops dependent generators") {
  const int n = 3;
  const auto pb = standard_p_basis(n);
  const Subspace s = Subspace::from_spanning(
      {pb[0], pb[1], pb[0] + pb[1], pb[0] - pb[1], SoElement::zero(n)});
  CHECK(s.dimension() == 2);
  CHECK(span_equal(s, Subspace({pb[0], pb[1]})));
}

TEST_CASE("span comparisons and direct sums") {
  const int n = 4;
  const auto pb = standard_p_basis(n);
  const Subspace a({pb[0], pb[1]});
  const Subspace b({pb[0] + pb[1], pb[0] - pb[1]});
  const Subspace c({pb[2]});
  CHECK(span_equal(a, b));
  CHECK(span_distance(a, b) < 1e-12);
  CHECK(!span_equal(a, c));

  const Subspace sum = direct_sum({&a, &c});
  CHECK(sum.dimension() == 3);
  CHECK(sum.contains(pb[2]));

  // Overlapping parts do not form a direct sum.
  CHECK_THROWS_AS((void)direct_sum({&a, &b}), std::invalid_argument);
}

TEST_CASE("solvability and nilpotency classification") {
  const int n = 4;
  const Subspace whole(standard_basis(n));
  CHECK(subalgebra_residual(whole) < 1e-12);
  CHECK(!is_solvable(whole));
  CHECK(!is_nilpotent(whole));

  // Strictly upper triangular 2x2 toy inside: span of one element is abelian.
  const auto pb = standard_p_basis(n);
  const Subspace line({pb[0]});
  CHECK(is_solvable(line));
  int steps = 0;
  CHECK(is_nilpotent(line, &steps));
  CHECK(steps == 1);
}
