#include <doctest.h>

#include <random>

#include "sonexp/invariants.hpp"
#include "sonexp/skew_basis.hpp"
#include "test_helpers.hpp"

using namespace sonexp;

namespace {

// Characteristic polynomial coefficients of A (monic, degree n) via the
// Faddeev-LeVerrier recurrence; c[k] multiplies x^k.
Eigen::VectorXd char_poly(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  Eigen::VectorXd c(n + 1);
  c(n) = 1.0;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    M = A * M + c(n - k + 1) * Eigen::MatrixXd::Identity(n, n);
    c(n - k) = -(A * M).trace() / k;
  }
  return c;
}

// Expected coefficients of P_n(x) for the normalized element.
Eigen::VectorXd expected_char_poly(const InvariantSet& inv) {
  const int n = inv.n;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
  c(n) = 1.0;
  c(n - 2) = 1.0;
  if (n >= 4) c(n - 4) = (n == 4) ? inv.eta : 0.5 - inv.xi / 4.0;
  if (n >= 6) c(n - 6) = (n == 6) ? inv.eta : (1.0 - inv.zeta) / 6.0 - inv.xi / 4.0;
  if (n >= 8)
    c(n - 8) = (n == 8) ? inv.eta
                        : 1.0 / 24.0 - (inv.xi + inv.chi) / 8.0 + inv.xi * inv.xi / 32.0 -
                              inv.zeta / 6.0;
  return c;
}

}  // namespace

TEST_CASE("pfaffian on the explicit so(4) numerator") {
  Eigen::VectorXd v(6);
  v << 1, 0, 0, 0, 0, 1;
  CHECK(pfaffian(assemble(AlgebraVector(4, v))) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pfaffian of 2x2 block diagonal") {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(4, 4);
  M(0, 1) = 0.7;
  M(1, 0) = -0.7;
  M(2, 3) = -1.3;
  M(3, 2) = 1.3;
  CHECK(pfaffian(M) == doctest::Approx(0.7 * -1.3).epsilon(1e-14));
}

TEST_CASE("pfaffian squared equals the determinant") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    int n = 2 * (2 + static_cast<int>(rng() % 3));  // 4, 6, 8
    Eigen::MatrixXd M = assemble(sonexp::testing::random_algebra_vector(rng, n));
    double pf = pfaffian(M);
    CHECK(pf * pf == doctest::Approx(M.determinant()).epsilon(1e-10));
  }
  CHECK_THROWS_AS(pfaffian(Eigen::MatrixXd::Zero(5, 5)), std::domain_error);
}

TEST_CASE("eta for the canonical so(4) examples") {
  Eigen::VectorXd v(6);
  v << 1, 0, 0, 0, 0, 1;
  InvariantSet inv = compute_invariants(AlgebraVector(4, v));
  CHECK(inv.eta == doctest::Approx(0.25).epsilon(1e-14));

  InvariantSet inv0 = compute_invariants(AlgebraVector(4, Eigen::VectorXd::Unit(6, 0)));
  CHECK(inv0.eta == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("zero vector is rejected") {
  CHECK_THROWS_AS(compute_invariants(AlgebraVector(4, Eigen::VectorXd::Zero(6))),
                  invariant_error);
}

TEST_CASE("random elements stay in the allowed region for every n") {
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 9; ++n) {
    for (int round = 0; round < 500; ++round) {
      InvariantSet inv = compute_invariants(sonexp::testing::random_algebra_vector(rng, n));
      CAPTURE(n);
      REQUIRE(region_contains(inv, 1e-10));
      if (n == 5) {
        CHECK(inv.xi >= 1.0 - 1e-12);
        CHECK(inv.xi <= 2.0 + 1e-12);
      }
      if (n == 9) CHECK(inv.eta9 >= -1e-12);
      if (n % 2 == 0) CHECK(inv.eta >= 0.0);  // Pf^2, structurally nonnegative
    }
  }
}

TEST_CASE("characteristic polynomial coefficients match the invariants") {
  std::mt19937_64 rng(13);
  for (int n = 4; n <= 9; ++n) {
    for (int round = 0; round < 20; ++round) {
      AlgebraVector av = sonexp::testing::random_algebra_vector(rng, n);
      InvariantSet inv = compute_invariants(av);
      Eigen::MatrixXd Sigma = assemble(av) / norm(av);
      Eigen::VectorXd got = char_poly(Sigma);
      Eigen::VectorXd want = expected_char_poly(inv);
      CAPTURE(n);
      CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }
}

TEST_CASE("region boundary points for n = 6") {
  auto mkinv = [](double xi, double eta) {
    InvariantSet inv;
    inv.n = 6;
    inv.V = 1.0;
    inv.xi = xi;
    inv.eta = eta;
    return inv;
  };
  CHECK(region_contains(mkinv(2.0 / 3.0, 1.0 / 27.0), 1e-10));  // triple root
  CHECK(region_contains(mkinv(2.0, 0.0), 1e-10));               // roots {1,0,0}
  CHECK_FALSE(region_contains(mkinv(0.5, 0.01), 1e-10));        // xi below 2/3
}

TEST_CASE("shear map carries the n=6 region onto the n=7 region") {
  // zeta = 1 - 6*eta - 3*xi/2 maps (xi, eta) admissible for so(6) to (xi, zeta)
  // admissible for so(7); checked pointwise on sampled interior/boundary points.
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> ux(2.0 / 3.0, 2.0), ue(0.0, 1.0 / 27.0);
  int tested = 0;
  while (tested < 1000) {
    InvariantSet inv6;
    inv6.n = 6;
    inv6.V = 1.0;
    inv6.xi = ux(rng);
    inv6.eta = ue(rng);
    if (!region_contains(inv6, 0.0)) continue;
    ++tested;
    InvariantSet inv7;
    inv7.n = 7;
    inv7.V = 1.0;
    inv7.xi = inv6.xi;
    inv7.zeta = 1.0 - 6.0 * inv6.eta - 1.5 * inv6.xi;
    inv7.eta7 = (1.0 - inv7.zeta) / 6.0 - inv7.xi / 4.0;
    CHECK(region_contains(inv7, 1e-9));
  }
}

TEST_CASE("region area Monte Carlo is deterministic and sane") {
  AreaEstimate a = region_area_mc(6, 50000, 99);
  AreaEstimate b = region_area_mc(6, 50000, 99);
  CHECK(a.estimate == b.estimate);
  CHECK(std::abs(a.estimate - 1.0 / 120.0) < 5.0 * a.stderr_ + 1e-4);

  AreaEstimate c = region_area_mc(7, 50000, 99);
  CHECK(std::abs(c.estimate - 1.0 / 20.0) < 5.0 * c.stderr_ + 1e-2);

  CHECK_THROWS_AS(region_area_mc(5, 50000, 1), std::domain_error);
  CHECK_THROWS_AS(region_area_mc(6, 100, 1), std::domain_error);
}
