#include "sonexp/spectral_roots.hpp"

#include <algorithm>
#include <cmath>

namespace sonexp {

namespace {

constexpr double kClampWindow = 1e-9;   // how far outside [-1,1] an arccos argument may drift
constexpr double kRootClamp = 1e-12;    // roots this far below zero are snapped to zero

double clamped_acos(double arg) {
  if (arg > 1.0 + kClampWindow || arg < -1.0 - kClampWindow)
    throw invariant_error("arccos argument " + std::to_string(arg) +
                          " outside [-1, 1]: invalid invariants");
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

// arccos(num/den) where both sides vanish together at degeneracies, so the
// ratio is unreliable when den is tiny.  The admissible region is
// den^2 >= num^2; violations within an absolute slack are rounding and get
// clamped (the fallback path takes over there anyway), larger ones are
// genuinely invalid invariants.
double ratio_acos(double num, double den) {
  if (num * num > den * den + 1e-9) {
    if (den <= 0.0 || std::abs(num) / den > 1.0 + kClampWindow)
      throw invariant_error("arccos argument " + std::to_string(num) + "/" +
                            std::to_string(den) + " outside [-1, 1]: invalid invariants");
  }
  if (den <= 0.0) return num >= 0.0 ? 0.0 : M_PI;
  return std::acos(std::clamp(num / den, -1.0, 1.0));
}

double clamp_root(double y) {
  if (y < 0.0) {
    if (y < -kRootClamp) return y;  // left negative so residual/degeneracy checks can flag it
    return 0.0;
  }
  return y;
}

void finish(RootSet& rs) {
  for (double& y : rs.roots) y = clamp_root(y);
  std::sort(rs.roots.begin(), rs.roots.end(), std::greater<double>());
}

// The trigonometric formulas lose accuracy when the arccos argument nears
// +-1; a few Newton steps on the reduced polynomial restore full precision
// at simple roots (and are harmless at degenerate ones, where the fallback
// path takes over anyway).
void polish(RootSet& rs, int n, double xi, double zeta, double q) {
  for (double& y : rs.roots) {
    for (int it = 0; it < 3; ++it) {
      double p, dp;
      if (n <= 7) {
        p = ((y - 1.0) * y + 0.5 - xi / 4.0) * y - q;
        dp = (3.0 * y - 2.0) * y + 0.5 - xi / 4.0;
      } else {
        p = (((y - 1.0) * y + 0.5 - xi / 4.0) * y + (zeta - 1.0) / 6.0 + xi / 4.0) * y + q;
        dp = ((4.0 * y - 3.0) * y + 1.0 - xi / 2.0) * y + xi / 4.0 + (zeta - 1.0) / 6.0;
      }
      if (std::abs(dp) < 1e-8) break;
      double step = p / dp;
      if (std::abs(step) > 1e-3) break;  // off-basin, keep the trig value
      y -= step;
    }
  }
}

}  // namespace

double reduced_poly(int n, double xi, double zeta, double q, double y) {
  switch (n) {
    case 4:
      return (y - 1.0) * y + q;
    case 5:
      return (y - 1.0) * y + (2.0 - xi) / 4.0;
    case 6:
    case 7:
      return ((y - 1.0) * y + 0.5 - xi / 4.0) * y - q;
    case 8:
    case 9:
      return (((y - 1.0) * y + 0.5 - xi / 4.0) * y + (zeta - 1.0) / 6.0 + xi / 4.0) * y + q;
    default:
      throw std::domain_error("reduced_poly: unsupported n");
  }
}

RootSet roots_so4(double eta) {
  if (eta < -kClampWindow || eta > 0.25 + kClampWindow)
    throw invariant_error("roots_so4: eta = " + std::to_string(eta) + " outside [0, 1/4]");
  double z = (1.0 - std::sqrt(std::max(1.0 - 4.0 * eta, 0.0))) / 2.0;
  z = std::clamp(z, 0.0, 0.5);
  RootSet rs;
  rs.n = 4;
  rs.roots = {1.0 - z, z};
  finish(rs);
  return rs;
}

RootSet roots_so5(double xi) {
  if (xi < 1.0 - kClampWindow || xi > 2.0 + kClampWindow)
    throw invariant_error("roots_so5: xi = " + std::to_string(xi) + " outside [1, 2]");
  double theta = 0.5 * clamped_acos(std::sqrt(std::clamp(xi - 1.0, 0.0, 1.0)));
  double c = std::cos(theta), s = std::sin(theta);
  RootSet rs;
  rs.n = 5;
  rs.roots = {c * c, s * s};
  rs.psi = theta;
  finish(rs);
  return rs;
}

RootSet roots_cubic_trig(double xi, double q, int n) {
  if (n != 6 && n != 7) throw std::domain_error("roots_cubic_trig: n must be 6 or 7");
  if (q < -kClampWindow)
    throw invariant_error("roots_cubic_trig: constant term " + std::to_string(q) + " negative");
  double s = 3.0 * xi - 2.0;
  if (s < -kClampWindow)
    throw invariant_error("roots_cubic_trig: 3*xi - 2 = " + std::to_string(s) + " negative");
  s = std::max(s, 0.0);
  double root_s = std::sqrt(s);

  RootSet rs;
  rs.n = n;
  // s -> 0 is the triple-root limit y = 1/3; the angle becomes irrelevant.
  double psi = 0.0;
  if (root_s * s > 1e-18) psi = ratio_acos(9.0 * xi + 108.0 * q - 10.0, root_s * s) / 3.0;
  rs.psi = psi;
  double cp = std::cos(psi), sp = std::sin(psi);
  rs.roots = {(1.0 + root_s * cp) / 3.0,
              (2.0 + root_s * (std::sqrt(3.0) * sp - cp)) / 6.0,
              (2.0 + root_s * (-std::sqrt(3.0) * sp - cp)) / 6.0};
  polish(rs, n, xi, 0.0, q);
  finish(rs);
  return rs;
}

RootSet roots_quartic_resolvent(double xi, double zeta, double q, int n) {
  if (n != 8 && n != 9) throw std::domain_error("roots_quartic_resolvent: n must be 8 or 9");
  double rad = 192.0 * q + 8.0 * zeta + 8.0 * xi + xi * xi - 4.0;
  if (rad < -kClampWindow)
    throw invariant_error("roots_quartic_resolvent: resolvent radicand " + std::to_string(rad) +
                          " negative");
  rad = std::max(rad, 0.0);
  double r = std::sqrt(rad);

  double psi = 0.0;
  if (r * rad > 1e-18) {
    double num = 8.0 * (1.0 - 36.0 * q - 3.0 * zeta + 3.0 * zeta * zeta) - xi * xi * xi +
                 42.0 * xi * xi + 12.0 * xi * (5.0 * zeta + 48.0 * q - 3.0);
    psi = ratio_acos(num, r * rad) / 3.0;
  }

  double t[3];
  for (int k = 0; k < 3; ++k) {
    double theta = (2.0 * xi - 1.0 + 2.0 * r * std::cos(psi + k * 2.0 * M_PI / 3.0)) / 3.0;
    t[k] = std::sqrt(std::max(theta, 0.0));
  }

  // The product of the three signed square-roots must equal 1/3 - xi - 4*zeta/3.
  // The formula does not say which one flips when that is negative, so try:
  // no flip, flip the smallest, then each in turn; accept the first assignment
  // giving nonnegative roots with small residuals.
  int smallest = 0;
  if (t[1] < t[smallest]) smallest = 1;
  if (t[2] < t[smallest]) smallest = 2;
  const int trials[5] = {-1, smallest, 0, 1, 2};

  double best_residual = std::numeric_limits<double>::infinity();
  for (int flip : trials) {
    double s1 = (flip == 0) ? -t[0] : t[0];
    double s2 = (flip == 1) ? -t[1] : t[1];
    double s3 = (flip == 2) ? -t[2] : t[2];
    double y[4] = {(1.0 + s1 + s2 + s3) / 4.0, (1.0 + s1 - s2 - s3) / 4.0,
                   (1.0 - s1 + s2 - s3) / 4.0, (1.0 - s1 - s2 + s3) / 4.0};
    bool ok = true;
    double worst = 0.0;
    for (double yj : y) {
      if (yj < -1e-10) ok = false;
      worst = std::max(worst, std::abs(reduced_poly(n, xi, zeta, q, yj)));
    }
    best_residual = std::min(best_residual, worst);
    if (ok && worst <= 1e-9) {
      RootSet rs;
      rs.n = n;
      rs.psi = psi;
      rs.roots = {y[0], y[1], y[2], y[3]};
      polish(rs, n, xi, zeta, q);
      finish(rs);
      return rs;
    }
  }
  throw numerical_error("roots_quartic_resolvent: no valid sign assignment, best residual " +
                        std::to_string(best_residual));
}

RootSet degeneracy_classify(RootSet rs, double delta) {
  const std::size_t m = rs.roots.size();
  rs.min_root = m ? *std::min_element(rs.roots.begin(), rs.roots.end()) : 0.0;
  rs.min_gap = 1.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      rs.min_gap = std::min(rs.min_gap, std::abs(rs.roots[i] - rs.roots[j]));
  // Conditioning of the closed form at root y_j goes like 1/prod_{i!=j}|y_i-y_j|
  // (the derivative of the reduced polynomial), so near a triple or quadruple
  // root the pairwise gap alone under-reports the danger; use the smallest gap
  // product.  For two roots this reduces to the pairwise gap.
  double min_cond = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    double p = 1.0;
    for (std::size_t i = 0; i < m; ++i)
      if (i != j) p *= std::abs(rs.roots[i] - rs.roots[j]);
    min_cond = std::min(min_cond, p);
  }
  rs.degenerate = m > 1 && (min_cond < delta || rs.min_root < delta);
  return rs;
}

RootSet solve_roots(const InvariantSet& inv, double delta) {
  RootSet rs;
  switch (inv.n) {
    case 2:
    case 3:
      rs.n = inv.n;
      rs.roots = {1.0};
      break;
    case 4:
      rs = roots_so4(inv.eta);
      break;
    case 5:
      rs = roots_so5(inv.xi);
      break;
    case 6:
      rs = roots_cubic_trig(inv.xi, inv.eta, 6);
      break;
    case 7:
      rs = roots_cubic_trig(inv.xi, inv.eta7, 7);
      break;
    case 8:
      rs = roots_quartic_resolvent(inv.xi, inv.zeta, inv.eta, 8);
      break;
    case 9:
      rs = roots_quartic_resolvent(inv.xi, inv.zeta, inv.eta9, 9);
      break;
    default:
      throw std::domain_error("solve_roots: unsupported n");
  }
  return degeneracy_classify(std::move(rs), delta);
}

}  // namespace sonexp
