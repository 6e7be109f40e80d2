#include "sonexp/closed_expm.hpp"

#include <cmath>

#include "sonexp/invariants.hpp"
#include "sonexp/oracles.hpp"
#include "sonexp/skew_basis.hpp"

namespace sonexp {

namespace {

// The per-n formulas cancel large intermediate terms (the 1/eta7, 1/eta9
// blocks and the 1/P'(y_j) prefactors), so coefficients and reconstruction
// are evaluated in extended precision; inputs and results stay double.
using ld = long double;
using VectorXld = Eigen::Matrix<ld, Eigen::Dynamic, 1>;
using MatrixXld = Eigen::Matrix<ld, Eigen::Dynamic, Eigen::Dynamic>;

// Refine the double-precision roots against the reduced polynomial in
// extended precision; consistency between roots and invariants is what keeps
// the cancellations exact.
std::vector<ld> refined_roots(int n, const InvariantSet& inv, const RootSet& rs, ld q) {
  ld xi = inv.xi, zeta = inv.zeta;
  std::vector<ld> roots(rs.roots.begin(), rs.roots.end());
  for (ld& y : roots) {
    for (int it = 0; it < 3; ++it) {
      ld p, dp;
      if (n <= 7) {
        p = ((y - 1.0L) * y + 0.5L - xi / 4.0L) * y - q;
        dp = (3.0L * y - 2.0L) * y + 0.5L - xi / 4.0L;
      } else {
        p = (((y - 1.0L) * y + 0.5L - xi / 4.0L) * y + (zeta - 1.0L) / 6.0L + xi / 4.0L) * y + q;
        dp = ((4.0L * y - 3.0L) * y + 1.0L - xi / 2.0L) * y + xi / 4.0L + (zeta - 1.0L) / 6.0L;
      }
      if (std::abs((double)dp) < 1e-8) break;
      ld step = p / dp;
      if (std::abs((double)step) > 1e-3) break;
      y -= step;
    }
    if (y < 0.0L) y = 0.0L;
  }
  return roots;
}

ld comp_product(const std::vector<ld>& roots, std::size_t j) {
  ld p = 1.0L;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (i != j) p *= roots[i];
  return p;
}

VectorXld coeffs_so4(ld V, const InvariantSet& inv, const RootSet& rs) {
  // z recomputed in extended precision from eta for consistency
  ld eta = inv.eta;
  ld z = (1.0L - std::sqrt(std::max<ld>(1.0L - 4.0L * eta, 0.0L))) / 2.0L;
  if (z <= 0.0L) z = rs.roots[1];
  ld sz = std::sqrt(z), sw = std::sqrt(1.0L - z);
  ld cz = std::cos(V * sz), cw = std::cos(V * sw);
  ld snz = std::sin(V * sz), snw = std::sin(V * sw);
  ld pre = 1.0L / (1.0L - 2.0L * z);
  VectorXld c(4);
  c(0) = pre * ((1.0L - z) * cz - z * cw);
  c(1) = pre * ((1.0L - z) / sz * snz - z / sw * snw);
  c(2) = pre * (cz - cw);
  c(3) = pre * (snz / sz - snw / sw);
  return c;
}

VectorXld coeffs_so5(ld V, const RootSet& rs) {
  ld th = rs.psi;
  ld s = std::sin(th), co = std::cos(th);
  ld d = co * co - s * s;  // cos(2 theta)
  ld ss = s * s, cc = co * co;
  ld sns = std::sin(V * s), snc = std::sin(V * co);
  ld cs = std::cos(V * s), ccv = std::cos(V * co);
  VectorXld c(5);
  c(0) = 1.0L;
  c(1) = (cc / s * sns - ss / co * snc) / d;
  c(2) = (1.0L / ss - 1.0L / cc + ss / cc * ccv - cc / ss * cs) / d;
  c(3) = (sns / s - snc / co) / d;
  c(4) = ((1.0L - cs) / ss - (1.0L - ccv) / cc) / d;
  return c;
}

VectorXld coeffs_so6(ld V, const InvariantSet& inv, const RootSet& rs) {
  std::vector<ld> y = refined_roots(6, inv, rs, inv.eta);
  ld xi = inv.xi;
  VectorXld c = VectorXld::Zero(6);
  for (std::size_t j = 0; j < 3; ++j) {
    ld w = 1.0L / ((3.0L * y[j] - 2.0L) * y[j] + 0.5L - xi / 4.0L);  // P3'(y_j)
    ld eta_over_y = comp_product(y, j);
    ld ry = std::sqrt(y[j]);
    ld cj = std::cos(V * ry);
    ld qj = (ry > 1e-9L) ? std::sin(V * ry) / ry : V;
    c(0) += w * eta_over_y * cj;
    c(1) += w * eta_over_y * qj;
    c(2) += w * (1.0L - y[j]) * cj;
    c(3) += w * (1.0L - y[j]) * qj;
    c(4) += w * cj;
    c(5) += w * qj;
  }
  return c;
}

VectorXld coeffs_so7(ld V, const InvariantSet& inv, const RootSet& rs) {
  std::vector<ld> y = refined_roots(7, inv, rs, inv.eta7);
  ld xi = inv.xi;
  ld eta7 = y[0] * y[1] * y[2];  // consistent with the refined roots
  VectorXld c = VectorXld::Zero(7);
  c(0) = 1.0L;
  ld pre = 1.0L / eta7;
  c(2) += pre * (0.5L - xi / 4.0L);
  c(4) += pre;
  c(6) += pre;
  for (std::size_t j = 0; j < 3; ++j) {
    ld w = 1.0L / (((7.0L * y[j] - 5.0L) * y[j] + 0.75L * (2.0L - xi)) * y[j] - eta7);
    ld eta7_over_y = comp_product(y, j);
    ld ry = std::sqrt(y[j]);
    ld a = ry * std::sin(V * ry);
    ld b = -std::cos(V * ry);
    c(1) += 2.0L * w * eta7_over_y * a;
    c(2) += 2.0L * w * eta7_over_y * b;
    c(3) += 2.0L * w * (1.0L - y[j]) * a;
    c(4) += 2.0L * w * (1.0L - y[j]) * b;
    c(5) += 2.0L * w * a;
    c(6) += 2.0L * w * b;
  }
  return c;
}

VectorXld coeffs_so8(ld V, const InvariantSet& inv, const RootSet& rs) {
  std::vector<ld> y = refined_roots(8, inv, rs, inv.eta);
  ld xi = inv.xi, zeta = inv.zeta;
  VectorXld c = VectorXld::Zero(8);
  for (std::size_t j = 0; j < 4; ++j) {
    ld w = 1.0L / (((4.0L * y[j] - 3.0L) * y[j] + 1.0L - xi / 2.0L) * y[j] + xi / 4.0L +
                   (zeta - 1.0L) / 6.0L);  // P4'(y_j)
    ld ry = std::sqrt(y[j]);
    ld p = std::cos(V * ry);
    ld q = (ry > 1e-9L) ? std::sin(V * ry) / ry : V;
    ld A = -comp_product(y, j);  // -eta / y_j
    ld B = xi / 4.0L - 0.5L + y[j] - y[j] * y[j];
    ld C = y[j] - 1.0L;
    c(0) += w * p * A;
    c(1) += w * q * A;
    c(2) += w * p * B;
    c(3) += w * q * B;
    c(4) += w * p * C;
    c(5) += w * q * C;
    c(6) -= w * p;
    c(7) -= w * q;
  }
  return c;
}

VectorXld coeffs_so9(ld V, const InvariantSet& inv, const RootSet& rs) {
  std::vector<ld> y = refined_roots(9, inv, rs, inv.eta9);
  ld xi = inv.xi, zeta = inv.zeta;
  ld eta9 = y[0] * y[1] * y[2] * y[3];
  VectorXld c = VectorXld::Zero(9);
  c(0) = 1.0L;
  ld pre = 1.0L / eta9;
  c(2) += pre * ((1.0L - zeta) / 6.0L - xi / 4.0L);
  c(4) += pre * (0.5L - xi / 4.0L);
  c(6) += pre;
  c(8) += pre;
  for (std::size_t j = 0; j < 4; ++j) {
    ld w = 1.0L / ((((9.0L * y[j] - 7.0L) * y[j] + 1.25L * (2.0L - xi)) * y[j] +
                    0.25L * (3.0L * xi + 2.0L * zeta - 2.0L)) * y[j] + eta9);
    ld ry = std::sqrt(y[j]);
    ld a = -ry * std::sin(V * ry);
    ld b = std::cos(V * ry);
    ld A = comp_product(y, j);  // eta9 / y_j
    ld B = 0.5L - xi / 4.0L - y[j] + y[j] * y[j];
    ld C = 1.0L - y[j];
    c(1) += 2.0L * w * A * a;
    c(2) += 2.0L * w * A * b;
    c(3) += 2.0L * w * B * a;
    c(4) += 2.0L * w * B * b;
    c(5) += 2.0L * w * C * a;
    c(6) += 2.0L * w * C * b;
    c(7) += 2.0L * w * a;
    c(8) += 2.0L * w * b;
  }
  return c;
}

VectorXld compute_coeffs(int n, ld V, const InvariantSet& inv, const RootSet& rs) {
  switch (n) {
    case 2: {
      VectorXld c(2);
      c << std::cos(V), std::sin(V);
      return c;
    }
    case 3: {
      VectorXld c(3);
      c << 1.0L, std::sin(V), 1.0L - std::cos(V);
      return c;
    }
    case 4:
      return coeffs_so4(V, inv, rs);
    case 5:
      return coeffs_so5(V, rs);
    case 6:
      return coeffs_so6(V, inv, rs);
    case 7:
      return coeffs_so7(V, inv, rs);
    case 8:
      return coeffs_so8(V, inv, rs);
    case 9:
      return coeffs_so9(V, inv, rs);
    default:
      throw std::domain_error("coefficients: unsupported n");
  }
}

Eigen::MatrixXd reconstruct(const Eigen::MatrixXd& Sigma, const Eigen::VectorXd& c) {
  const int n = static_cast<int>(Sigma.rows());
  MatrixXld S = Sigma.cast<ld>();
  MatrixXld R = (ld)c(0) * MatrixXld::Identity(n, n);
  MatrixXld power = MatrixXld::Identity(n, n);
  for (int k = 1; k < c.size(); ++k) {
    power = power * S;
    R += (ld)c(k) * power;
  }
  return R.cast<double>();
}

}  // namespace

CoefficientVector coefficients(int n, double V, const InvariantSet& inv, const RootSet& rs) {
  CoefficientVector cv;
  cv.n = n;
  cv.c = compute_coeffs(n, (ld)V, inv, rs).cast<double>();
  if (!cv.c.allFinite())
    throw numerical_error("coefficients: non-finite result (degenerate roots?)");
  return cv;
}

CoefficientVector coefficients_fallback(int n, double V, const InvariantSet& inv) {
  return coefficients_oracle(n, V, inv);
}

ExpmResult expm_so_detailed(const AlgebraVector& av, double delta) {
  const int n = av.n;
  ExpmResult out;
  const double V = norm(av);
  if (V < 1e-14) {
    out.R = Eigen::MatrixXd::Identity(n, n);
    out.coefficients = Eigen::VectorXd::Unit(n, 0);
    return out;
  }
  InvariantSet inv = compute_invariants(av);
  RootSet rs = solve_roots(inv, delta);
  out.degenerate = rs.degenerate;
  CoefficientVector cv;
  if (rs.degenerate && n >= 4) {
    cv = coefficients_fallback(n, V, inv);
    out.used_fallback = true;
  } else {
    // keep full extended precision between coefficients and reconstruction
    VectorXld c = compute_coeffs(n, (ld)V, inv, rs);
    if (!c.allFinite()) throw numerical_error("coefficients: non-finite result");
    cv.n = n;
    cv.c = c.cast<double>();
    MatrixXld S = (assemble(av) / V).cast<ld>();
    MatrixXld R = c(0) * MatrixXld::Identity(n, n);
    MatrixXld power = MatrixXld::Identity(n, n);
    for (int k = 1; k < n; ++k) {
      power = power * S;
      R += c(k) * power;
    }
    out.coefficients = cv.c;
    out.R = R.cast<double>();
    return out;
  }
  out.coefficients = cv.c;
  out.R = reconstruct(assemble(av) / V, cv.c);
  return out;
}

Eigen::MatrixXd expm_so(const AlgebraVector& av, double delta) {
  return expm_so_detailed(av, delta).R;
}

ExpmResult expm_with_method(const AlgebraVector& av, ExpmMethod method, double delta) {
  const int n = av.n;
  const double V = norm(av);
  ExpmResult out;
  if (method == ExpmMethod::Taylor) {
    out.R = expm_taylor_ss(assemble(av));
    return out;
  }
  if (V < 1e-14) {
    out.R = Eigen::MatrixXd::Identity(n, n);
    out.coefficients = Eigen::VectorXd::Unit(n, 0);
    return out;
  }
  if (method == ExpmMethod::Companion) {
    InvariantSet inv = compute_invariants(av);
    CoefficientVector cv = coefficients_fallback(n, V, inv);
    out.coefficients = cv.c;
    out.used_fallback = true;
    out.R = reconstruct(assemble(av) / V, cv.c);
    return out;
  }
  return expm_so_detailed(av, delta);
}

}  // namespace sonexp
