#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace sonexp {

// Invariants of the normalized algebra element fall outside their allowed
// region, or an input violates a documented precondition.
class invariant_error : public std::runtime_error {
public:
  explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical procedure failed to produce a usable result (e.g. no valid
// square-root sign assignment in the quartic solver).
class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Number of independent components of an so(n) element.
constexpr int algebra_dim(int n) { return n * (n - 1) / 2; }

constexpr int kMinDim = 2;
constexpr int kMaxDim = 9;

// Coefficient vector v of an so(n) element, n(n-1)/2 components enumerating
// the strict upper triangle row-major.
struct AlgebraVector {
  int n = 0;
  Eigen::VectorXd v;

  AlgebraVector() = default;
  AlgebraVector(int dim, Eigen::VectorXd coeffs);
};

// Scalar invariants of the normalized matrix S = J.v / V.  Fields that are
// not meaningful for a given n stay NaN.
struct InvariantSet {
  int n = 0;
  double V = 0.0;
  double xi = std::numeric_limits<double>::quiet_NaN();    // tr S^4
  double zeta = std::numeric_limits<double>::quiet_NaN();  // tr S^6
  double eta = std::numeric_limits<double>::quiet_NaN();   // det S (even n)
  double chi = std::numeric_limits<double>::quiet_NaN();   // tr S^8 (n=9)
  double eta7 = std::numeric_limits<double>::quiet_NaN();  // (1-zeta)/6 - xi/4
  double eta9 = std::numeric_limits<double>::quiet_NaN();
};

// Nonnegative roots y_j of the reduced characteristic polynomial in y = -x^2,
// sorted descending, plus degeneracy diagnostics.
struct RootSet {
  int n = 0;
  std::vector<double> roots;
  double psi = 0.0;  // trisection angle (n>=6) or spectral angle theta (n=5)
  bool degenerate = false;
  double min_gap = 0.0;
  double min_root = 0.0;
};

// Expansion coefficients c_k with R = sum_k c_k S^k, k = 0..n-1.
struct CoefficientVector {
  int n = 0;
  Eigen::VectorXd c;
};

}  // namespace sonexp
