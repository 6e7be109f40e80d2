#include <doctest.h>

#include <random>

#include "sonexp/closed_expm.hpp"
#include "sonexp/conjugacy.hpp"
#include "sonexp/invariants.hpp"
#include "test_helpers.hpp"

using namespace sonexp;

TEST_CASE("single angle for n = 2, 3") {
  std::mt19937_64 rng(51);
  AlgebraVector av = sonexp::testing::random_algebra_vector(rng, 3, 2.2);
  TorusAngles ta = torus_angles(av);
  REQUIRE(ta.phi.size() == 1);
  CHECK(ta.phi[0] == doctest::Approx(2.2).epsilon(1e-12));
}

TEST_CASE("equal angles at the n = 4 degeneracy") {
  Eigen::VectorXd v(6);
  v << 1, 0, 0, 0, 0, 1;  // eta = 1/4, z = 1/2, V = sqrt(2)
  TorusAngles ta = torus_angles(AlgebraVector(4, v));
  REQUIRE(ta.phi.size() == 2);
  // sqrt(1 - 4*eta) amplifies the Pf^2 rounding near eta = 1/4, so the
  // angles agree only to about the square root of machine precision
  CHECK(ta.phi[0] == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(ta.phi[1] == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("zero vector gives zero angles and trace n") {
  for (int n = 2; n <= 9; ++n) {
    AlgebraVector zero(n, Eigen::VectorXd::Zero(algebra_dim(n)));
    TorusAngles ta = torus_angles(zero);
    for (double phi : ta.phi) CHECK(phi == 0.0);
    CHECK(trace_closed_form(zero) == doctest::Approx(static_cast<double>(n)));
  }
}

TEST_CASE("closed trace equals the direct matrix trace") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> uV(0.1, 4.0 * M_PI);
  for (int n = 2; n <= 9; ++n) {
    for (int round = 0; round < 100; ++round) {
      AlgebraVector av = sonexp::testing::random_algebra_vector(rng, n, uV(rng));
      CAPTURE(n);
      CHECK(trace_closed_form(av) == doctest::Approx(expm_so(av).trace()).epsilon(1e-9));
    }
  }
}

TEST_CASE("angle identities") {
  std::mt19937_64 rng(53);
  for (int n = 4; n <= 9; ++n) {
    for (int round = 0; round < 50; ++round) {
      AlgebraVector av = sonexp::testing::random_algebra_vector(rng, n, 1.0 + round * 0.05);
      double V = norm(av);
      InvariantSet inv = compute_invariants(av);
      TorusAngles ta = torus_angles(av);
      double sum2 = 0.0, prod = 1.0;
      for (double phi : ta.phi) {
        sum2 += phi * phi;
        prod *= phi;
      }
      CAPTURE(n);
      CHECK(sum2 == doctest::Approx(V * V).epsilon(1e-10));
      int d = static_cast<int>(ta.phi.size());
      double scale = std::max(1.0, std::pow(V, d));
      if (n == 4 || n == 6 || n == 8)
        CHECK(std::abs(prod - std::sqrt(inv.eta) * std::pow(V, d)) <= 1e-8 * scale);
      if (n == 5)
        CHECK(std::abs(prod - std::sqrt(2.0 - inv.xi) * V * V / 2.0) <= 1e-8 * scale);
      if (n == 7)
        CHECK(std::abs(prod - std::sqrt(inv.eta7) * std::pow(V, 3)) <= 1e-8 * scale);
      for (std::size_t j = 1; j < ta.phi.size(); ++j) CHECK(ta.phi[j - 1] >= ta.phi[j]);
    }
  }
}
