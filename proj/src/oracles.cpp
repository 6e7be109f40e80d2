#include "sonexp/oracles.hpp"

#include <cmath>

namespace sonexp {

Eigen::MatrixXd expm_taylor_ss(const Eigen::MatrixXd& M, double tol) {
  const int n = static_cast<int>(M.rows());
  if (M.cols() != n) throw std::domain_error("expm_taylor_ss: matrix must be square");
  if (!M.allFinite()) throw std::domain_error("expm_taylor_ss: non-finite entries");

  double norm1 = M.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  while (norm1 / std::exp2(squarings) > 0.5) ++squarings;
  Eigen::MatrixXd A = M / std::exp2(squarings);

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 64; ++k) {
    term = (term * A) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().colwise().sum().maxCoeff() < tol) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Eigen::MatrixXd iteration_matrix(int n, const InvariantSet& inv) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) M(i, i - 1) = 1.0;

  const double xi = inv.xi, zeta = inv.zeta;
  switch (n) {
    case 2:
      // Sigma^2 = -1
      M(0, 1) = -1.0;
      break;
    case 3:
      // Sigma^3 = -Sigma
      M(1, 2) = -1.0;
      break;
    case 4:
      M(0, 3) = -inv.eta;
      M(2, 3) = -1.0;
      break;
    case 5:
      M(1, 4) = xi / 4.0 - 0.5;
      M(3, 4) = -1.0;
      break;
    case 6:
      M(0, 5) = -inv.eta;
      M(2, 5) = xi / 4.0 - 0.5;
      M(4, 5) = -1.0;
      break;
    case 7:
      M(1, 6) = -inv.eta7;
      M(3, 6) = xi / 4.0 - 0.5;
      M(5, 6) = -1.0;
      break;
    case 8:
      M(0, 7) = -inv.eta;
      M(2, 7) = xi / 4.0 + (zeta - 1.0) / 6.0;
      M(4, 7) = xi / 4.0 - 0.5;
      M(6, 7) = -1.0;
      break;
    case 9:
      M(1, 8) = -inv.eta9;
      M(3, 8) = xi / 4.0 + (zeta - 1.0) / 6.0;
      M(5, 8) = xi / 4.0 - 0.5;
      M(7, 8) = -1.0;
      break;
    default:
      throw std::domain_error("iteration_matrix: unsupported n");
  }
  return M;
}

CoefficientVector coefficients_oracle(int n, double V, const InvariantSet& inv) {
  CoefficientVector cv;
  cv.n = n;
  cv.c = expm_taylor_ss(V * iteration_matrix(n, inv)).col(0);
  return cv;
}

}  // namespace sonexp
