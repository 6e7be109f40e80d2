#include <doctest.h>

#include <random>

#include "sonexp/skew_basis.hpp"
#include "test_helpers.hpp"

using namespace sonexp;

TEST_CASE("generator placement follows row-major upper-triangle order") {
  // n=3: J1 acts in (1,2), J3 in (2,3)
  Eigen::MatrixXd J1 = generator(3, 1);
  CHECK(J1(0, 1) == 1.0);
  CHECK(J1(1, 0) == -1.0);
  CHECK(J1.cwiseAbs().sum() == 2.0);

  Eigen::MatrixXd J3 = generator(3, 3);
  CHECK(J3(1, 2) == 1.0);
  CHECK(J3(2, 1) == -1.0);
}

TEST_CASE("generator normalization tr(Ja Jb) = -2 delta_ab") {
  Eigen::MatrixXd J2 = generator(5, 2);
  CHECK((J2 * J2).trace() == doctest::Approx(-2.0).epsilon(1e-14));

  for (int n : {4, 7, 9}) {
    for (int a = 1; a <= algebra_dim(n); ++a)
      for (int b = a; b <= algebra_dim(n); ++b) {
        double tr = (generator(n, a) * generator(n, b)).trace();
        CHECK(tr == doctest::Approx(a == b ? -2.0 : 0.0).epsilon(1e-14));
      }
  }
}

TEST_CASE("generator rejects out-of-range arguments") {
  CHECK_THROWS_AS(generator(1, 1), std::domain_error);
  CHECK_THROWS_AS(generator(10, 1), std::domain_error);
  CHECK_THROWS_AS(generator(3, 0), std::domain_error);
  CHECK_THROWS_AS(generator(3, 4), std::domain_error);
}

TEST_CASE("assemble reproduces the printed so(3) layout") {
  AlgebraVector av(3, Eigen::Vector3d(1.0, 2.0, 3.0));
  Eigen::MatrixXd M = assemble(av);
  Eigen::MatrixXd expected(3, 3);
  expected << 0, 1, 2, -1, 0, 3, -2, -3, 0;
  CHECK((M - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("assemble of a single basis direction is the generator") {
  AlgebraVector av(4, Eigen::VectorXd::Unit(6, 0));
  Eigen::MatrixXd M = assemble(av);
  CHECK(M(0, 1) == 1.0);
  CHECK(M(1, 0) == -1.0);
  CHECK(M.cwiseAbs().sum() == 2.0);
}

TEST_CASE("assemble is exactly antisymmetric and linear") {
  std::mt19937_64 rng(1);
  for (int n = 2; n <= 9; ++n) {
    AlgebraVector u = testing::random_algebra_vector(rng, n);
    AlgebraVector v = testing::random_algebra_vector(rng, n);
    Eigen::MatrixXd Mu = assemble(u);
    CHECK((Mu + Mu.transpose()).cwiseAbs().maxCoeff() == 0.0);

    AlgebraVector lin(n, 2.0 * u.v - 3.0 * v.v);
    double err = (assemble(lin) - 2.0 * assemble(u) + 3.0 * assemble(v)).cwiseAbs().maxCoeff();
    CHECK(err <= 1e-14);
  }
}

TEST_CASE("decompose inverts assemble exactly") {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 100; ++round) {
    int n = 2 + static_cast<int>(rng() % 8);
    AlgebraVector av = testing::random_algebra_vector(rng, n);
    AlgebraVector back = decompose(assemble(av));
    CHECK(back.v == av.v);
  }
}

TEST_CASE("decompose edge cases") {
  CHECK(decompose(Eigen::MatrixXd::Zero(5, 5)).v.isZero());

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(3, 3);
  M(0, 1) = 2.0;
  M(1, 0) = -2.0;
  Eigen::VectorXd v = decompose(M).v;
  CHECK(v(0) == 2.0);
  CHECK(v(1) == 0.0);
  CHECK(v(2) == 0.0);

  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(decompose(bad), invariant_error);
}

TEST_CASE("norm") {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(6);
  v(0) = 3.0;
  v(1) = 4.0;
  CHECK(norm(AlgebraVector(4, v)) == 5.0);
  CHECK(norm(AlgebraVector(4, Eigen::VectorXd::Zero(6))) == 0.0);

  // tr((J.v)^2) = -2 V^2
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 9; ++n) {
    AlgebraVector av = testing::random_algebra_vector(rng, n);
    double V = norm(av);
    Eigen::MatrixXd M = assemble(av);
    CHECK((M * M).trace() == doctest::Approx(-2.0 * V * V).epsilon(1e-12));
  }
}

TEST_CASE("AlgebraVector validates its invariants") {
  CHECK_THROWS_AS(AlgebraVector(4, Eigen::VectorXd::Zero(5)), std::domain_error);
  Eigen::VectorXd nanv = Eigen::VectorXd::Zero(6);
  nanv(2) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(AlgebraVector(4, nanv), std::domain_error);
}
