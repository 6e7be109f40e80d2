#include "sonexp/invariants.hpp"

#include <cmath>
#include <random>

#include "sonexp/skew_basis.hpp"

namespace sonexp {

namespace {

// Cubic resolvent of the reduced quartic, R3(T) = 0 gives the Theta values.
double resolvent_r3(double t, double xi, double zeta, double eta) {
  double a2 = 1.0 - 2.0 * xi;
  double a1 = 5.0 / 3.0 - 64.0 * eta - 4.0 * xi + xi * xi - 8.0 * zeta / 3.0;
  double s = 3.0 * xi + 4.0 * zeta - 1.0;
  double a0 = -s * s / 9.0;
  return ((t + a2) * t + a1) * t + a0;
}

bool region_n6(double xi, double eta, double tol) {
  if (xi < 2.0 / 3.0 - tol || xi > 2.0 + tol) return false;
  if (eta < -tol || eta > 1.0 / 27.0 + tol) return false;
  double lhs = std::pow(3.0 * xi - 2.0, 3);
  double r = 9.0 * xi + 108.0 * eta - 10.0;
  return lhs >= r * r - tol;
}

bool region_n7(double xi, double zeta, double tol) {
  double eta7 = (1.0 - zeta) / 6.0 - xi / 4.0;
  if (eta7 < -tol) return false;
  if (zeta < -2.0 - tol || zeta > -2.0 / 9.0 + tol) return false;
  if (xi < 2.0 / 3.0 - tol || xi > 2.0 + tol) return false;
  double lhs = std::pow(3.0 * xi - 2.0, 3);
  double r = 4.0 - 9.0 * (xi + zeta);
  return lhs >= 4.0 * r * r - tol;
}

bool region_n8(double xi, double zeta, double eta, double tol) {
  double rad = 192.0 * eta + 8.0 * zeta + 8.0 * xi + xi * xi - 4.0;
  if (rad < -tol) return false;
  double root = std::sqrt(std::max(rad, 0.0));
  double tp = (2.0 * xi - 1.0 + root) / 3.0;
  double tm = (2.0 * xi - 1.0 - root) / 3.0;
  if (tp < -tol || tm < -tol) return false;
  return resolvent_r3(tp, xi, zeta, eta) * resolvent_r3(tm, xi, zeta, eta) <= tol;
}

}  // namespace

double pfaffian(const Eigen::MatrixXd& M) {
  const int n = static_cast<int>(M.rows());
  if (n % 2 != 0) throw std::domain_error("pfaffian: matrix dimension must be even");
  Eigen::MatrixXd A = M;
  double pf = 1.0;
  for (int k = 0; k + 1 < n; k += 2) {
    // pivot: largest entry in row k to the right of the diagonal
    int kp = k + 1;
    for (int j = k + 2; j < n; ++j)
      if (std::abs(A(k, j)) > std::abs(A(k, kp))) kp = j;
    if (kp != k + 1) {
      A.row(k + 1).swap(A.row(kp));
      A.col(k + 1).swap(A.col(kp));
      pf = -pf;
    }
    double pivot = A(k, k + 1);
    if (pivot == 0.0) return 0.0;
    pf *= pivot;
    if (k + 2 < n) {
      int m = n - k - 2;
      Eigen::VectorXd tau = A.row(k).segment(k + 2, m).transpose() / pivot;
      Eigen::VectorXd col1 = A.col(k + 1).segment(k + 2, m);
      A.block(k + 2, k + 2, m, m).noalias() += tau * col1.transpose();
      A.block(k + 2, k + 2, m, m).noalias() -= col1 * tau.transpose();
    }
  }
  return pf;
}

InvariantSet compute_invariants(const AlgebraVector& av) {
  const double V = norm(av);
  if (V <= 0.0) throw invariant_error("compute_invariants: zero algebra vector");
  const int n = av.n;
  Eigen::MatrixXd S = assemble(av) / V;
  Eigen::MatrixXd S2 = S * S;  // symmetric, negative semidefinite

  InvariantSet inv;
  inv.n = n;
  inv.V = V;
  if (n >= 4) inv.xi = S2.squaredNorm();  // tr S^4 = ||S^2||_F^2
  if (n >= 7) inv.zeta = (S2 * S2).cwiseProduct(S2).sum();
  if (n == 9) inv.chi = (S2 * S2).squaredNorm();
  if (n % 2 == 0) {
    double pf = pfaffian(S);
    inv.eta = pf * pf;  // det S = Pf^2, nonnegative by construction
  }
  if (n == 7) inv.eta7 = (1.0 - inv.zeta) / 6.0 - inv.xi / 4.0;
  if (n == 9)
    inv.eta9 = 1.0 / 24.0 - (inv.xi + inv.chi) / 8.0 + inv.xi * inv.xi / 32.0 - inv.zeta / 6.0;
  return inv;
}

bool region_contains(const InvariantSet& inv, double tolerance) {
  switch (inv.n) {
    case 2:
    case 3:
      return true;
    case 4:
      return inv.eta >= -tolerance && inv.eta <= 0.25 + tolerance;
    case 5:
      return inv.xi >= 1.0 - tolerance && inv.xi <= 2.0 + tolerance;
    case 6:
      return region_n6(inv.xi, inv.eta, tolerance);
    case 7:
      return region_n7(inv.xi, inv.zeta, tolerance);
    case 8:
      return region_n8(inv.xi, inv.zeta, inv.eta, tolerance);
    case 9:
      return inv.eta9 >= -tolerance;
    default:
      throw std::domain_error("region_contains: unsupported n");
  }
}

AreaEstimate region_area_mc(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n != 6 && n != 7) throw std::domain_error("region_area_mc: only n = 6 or 7 supported");
  if (samples < 10000) throw std::domain_error("region_area_mc: need at least 1e4 samples");

  const double x_lo = 2.0 / 3.0, x_hi = 2.0;
  const double y_lo = (n == 6) ? 0.0 : -2.0;
  const double y_hi = (n == 6) ? 1.0 / 27.0 : -2.0 / 9.0;
  const double box = (x_hi - x_lo) * (y_hi - y_lo);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(x_lo, x_hi), uy(y_lo, y_hi);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    double x = ux(rng), y = uy(rng);
    bool in = (n == 6) ? region_n6(x, y, 0.0) : region_n7(x, y, 0.0);
    if (in) ++hits;
  }
  double p = static_cast<double>(hits) / static_cast<double>(samples);
  AreaEstimate est;
  est.n = n;
  est.estimate = box * p;
  est.stderr_ = box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  est.samples = samples;
  est.seed = seed;
  return est;
}

}  // namespace sonexp
