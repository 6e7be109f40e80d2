#include "sonexp/skew_basis.hpp"

#include <cmath>

namespace sonexp {

namespace {

void check_dim(int n) {
  if (n < kMinDim || n > kMaxDim)
    throw std::domain_error("dimension n must be in [2, 9], got " + std::to_string(n));
}

}  // namespace

AlgebraVector::AlgebraVector(int dim, Eigen::VectorXd coeffs) : n(dim), v(std::move(coeffs)) {
  check_dim(n);
  if (v.size() != algebra_dim(n))
    throw std::domain_error("AlgebraVector for n=" + std::to_string(n) + " needs " +
                            std::to_string(algebra_dim(n)) + " components, got " +
                            std::to_string(v.size()));
  if (!v.allFinite()) throw std::domain_error("AlgebraVector has non-finite components");
}

std::pair<int, int> generator_pair(int n, int a) {
  check_dim(n);
  if (a < 1 || a > algebra_dim(n))
    throw std::domain_error("generator index a=" + std::to_string(a) + " out of range for n=" +
                            std::to_string(n));
  int k = a - 1;
  for (int i = 0; i < n - 1; ++i) {
    int row_len = n - 1 - i;
    if (k < row_len) return {i, i + 1 + k};
    k -= row_len;
  }
  throw std::logic_error("unreachable");
}

Eigen::MatrixXd generator(int n, int a) {
  auto [i, j] = generator_pair(n, a);
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  J(i, j) = 1.0;
  J(j, i) = -1.0;
  return J;
}

Eigen::MatrixXd assemble(const AlgebraVector& av) {
  const int n = av.n;
  check_dim(n);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  int a = 0;
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j < n; ++j) {
      M(i, j) = av.v(a);
      M(j, i) = -av.v(a);
      ++a;
    }
  }
  return M;
}

AlgebraVector decompose(const Eigen::MatrixXd& M, double atol) {
  const int n = static_cast<int>(M.rows());
  check_dim(n);
  if (M.cols() != n) throw std::domain_error("decompose: matrix must be square");
  double asym = (M + M.transpose()).cwiseAbs().maxCoeff();
  if (asym > atol)
    throw invariant_error("decompose: matrix is not antisymmetric, max asymmetry " +
                          std::to_string(asym));
  Eigen::VectorXd v(algebra_dim(n));
  int a = 0;
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n; ++j) v(a++) = M(i, j);
  return AlgebraVector(n, std::move(v));
}

double norm(const AlgebraVector& av) { return av.v.norm(); }

}  // namespace sonexp
