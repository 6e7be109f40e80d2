#pragma once

#include <random>

#include "sonexp/skew_basis.hpp"
#include "sonexp/types.hpp"

namespace sonexp::testing {

inline AlgebraVector random_algebra_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(algebra_dim(n));
  for (int i = 0; i < v.size(); ++i) v(i) = gauss(rng);
  return AlgebraVector(n, std::move(v));
}

// Random vector rescaled to the given norm.
inline AlgebraVector random_algebra_vector(std::mt19937_64& rng, int n, double V) {
  AlgebraVector av = random_algebra_vector(rng, n);
  av.v *= V / av.v.norm();
  return av;
}

// Random orthogonal matrix with det +1, via QR of a Gaussian matrix.
inline Eigen::MatrixXd random_rotation(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
  Eigen::MatrixXd Q = qr.householderQ();
  if (Q.determinant() < 0) Q.col(0) *= -1.0;
  return Q;
}

// so(n) element whose torus angles are exactly phi: 2x2 rotation blocks on
// the diagonal, conjugated by a random rotation so the coefficient vector is
// generic.  phi must have floor(n/2) entries.
inline AlgebraVector from_angles(std::mt19937_64& rng, int n, const std::vector<double>& phi) {
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < phi.size(); ++j) {
    B(2 * j, 2 * j + 1) = phi[j];
    B(2 * j + 1, 2 * j) = -phi[j];
  }
  Eigen::MatrixXd Q = random_rotation(rng, n);
  Eigen::MatrixXd M = Q * B * Q.transpose();
  M = 0.5 * (M - M.transpose().eval());  // kill symmetric round-off
  return decompose(M);
}

}  // namespace sonexp::testing
