#include "sonexp/g2.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sonexp/closed_expm.hpp"
#include "sonexp/invariants.hpp"
#include "sonexp/skew_basis.hpp"

namespace sonexp {

G2Vector::G2Vector(Eigen::VectorXd coeffs) : w(std::move(coeffs)) {
  if (w.size() != 14) throw std::domain_error("G2Vector needs 14 components");
  if (!w.allFinite()) throw std::domain_error("G2Vector has non-finite components");
}

StructureConstants::StructureConstants() {
  f_.fill(0.0);
  // f = +1 on the listed cyclic triples (1-based: 123 145 176 246 257 347 365),
  // antisymmetrized over all index permutations.
  const int triples[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 6, 5}, {1, 3, 5},
                             {1, 4, 6}, {2, 3, 6}, {2, 5, 4}};
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (const auto& t : triples) {
    for (int p = 0; p < 6; ++p) {
      int j = t[perms[p][0]], k = t[perms[p][1]], l = t[perms[p][2]];
      f_[(j * 7 + k) * 7 + l] = (p < 3) ? 1.0 : -1.0;
    }
  }
}

const StructureConstants& structure_constants() {
  static const StructureConstants f;
  return f;
}

AlgebraVector embed_g2(const G2Vector& g) {
  const Eigen::VectorXd& w = g.w;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(21);
  v(0) = (w(0) + w(7)) / 2.0;    // v1
  v(1) = (w(1) + w(8)) / 2.0;    // v2
  v(2) = (w(2) + w(9)) / 2.0;    // v3
  v(3) = (w(3) + w(10)) / 2.0;   // v4
  v(4) = (w(4) + w(11)) / 2.0;   // v5
  v(5) = (w(5) + w(12)) / 2.0;   // v6
  v(6) = (w(6) + w(13)) / 2.0;   // v7
  v(7) = (w(5) - w(12)) / 2.0;   // v8
  v(8) = (w(11) - w(4)) / 2.0;   // v9
  v(9) = (w(3) - w(10)) / 2.0;   // v10
  v(10) = (w(9) - w(2)) / 2.0;   // v11
  v(15) = (w(6) - w(13)) / 2.0;  // v16
  v(16) = (w(8) - w(1)) / 2.0;   // v17
  v(17) = (w(0) - w(7)) / 2.0;   // v18
  // dependent components from the seven linear g2 relations
  v(11) = v(4) - v(8);           // v12 = v5 - v9
  v(12) = v(5) + v(7);           // v13 = v6 + v8
  v(13) = v(10) - v(2);          // v14 = v11 - v3
  v(14) = -v(3) - v(9);          // v15 = -v4 - v10
  v(18) = v(0) + v(17);          // v19 = v1 + v18
  v(19) = v(1) - v(16);          // v20 = v2 - v17
  v(20) = v(6) + v(15);          // v21 = v7 + v16
  return AlgebraVector(7, std::move(v));
}

double check_algebra_constraint(const AlgebraVector& av) {
  if (av.n != 7) throw std::domain_error("check_algebra_constraint: requires n = 7");
  const StructureConstants& f = structure_constants();
  Eigen::MatrixXd T = assemble(av);
  double worst = 0.0;
  for (int j = 0; j < 7; ++j)
    for (int k = 0; k < 7; ++k)
      for (int l = 0; l < 7; ++l) {
        double r = 0.0;
        for (int m = 0; m < 7; ++m)
          r += T(j, m) * f(m, k, l) + T(k, m) * f(m, l, j) + T(l, m) * f(m, j, k);
        worst = std::max(worst, std::abs(r));
      }
  return worst;
}

double check_automorphism(const Eigen::MatrixXd& S) {
  if (S.rows() != 7 || S.cols() != 7)
    throw std::domain_error("check_automorphism: requires a 7x7 matrix");
  const StructureConstants& f = structure_constants();
  // nonzero f entries only: 7 triples x 6 permutations
  struct Entry {
    int m, n, o;
    double val;
  };
  static const std::vector<Entry> nonzero = [] {
    std::vector<Entry> list;
    const StructureConstants& fc = structure_constants();
    for (int m = 0; m < 7; ++m)
      for (int n = 0; n < 7; ++n)
        for (int o = 0; o < 7; ++o)
          if (fc(m, n, o) != 0.0) list.push_back({m, n, o, fc(m, n, o)});
    return list;
  }();

  double worst = 0.0;
  for (int j = 0; j < 7; ++j)
    for (int k = 0; k < 7; ++k)
      for (int l = 0; l < 7; ++l) {
        double g = 0.0;
        for (const Entry& e : nonzero) g += S(j, e.m) * S(k, e.n) * S(l, e.o) * e.val;
        worst = std::max(worst, std::abs(g - f(j, k, l)));
      }
  return worst;
}

Eigen::MatrixXd expm_g2(const G2Vector& w) {
  AlgebraVector av = embed_g2(w);
  const double V = norm(av);
  if (V < 1e-14) return Eigen::MatrixXd::Identity(7, 7);

  InvariantSet inv = compute_invariants(av);
  if (std::abs(inv.xi - 1.0) > 1e-10)
    throw numerical_error("expm_g2: embedded element has tr Sigma^4 = " +
                          std::to_string(inv.xi) + ", expected 1 (embedding bug)");
  if (inv.zeta < -11.0 / 18.0 - 1e-10 || inv.zeta > -0.5 + 1e-10)
    throw invariant_error("expm_g2: zeta = " + std::to_string(inv.zeta) +
                          " outside [-11/18, -1/2]");
  inv.xi = 1.0;
  inv.eta7 = -(1.0 + 2.0 * inv.zeta) / 12.0;

  double psi = std::acos(std::clamp(-10.0 - 18.0 * inv.zeta, -1.0, 1.0)) / 3.0;
  RootSet rs;
  rs.n = 7;
  rs.psi = psi;
  double cp = std::cos(psi), sp = std::sin(psi);
  rs.roots = {(1.0 + cp) / 3.0, (2.0 + std::sqrt(3.0) * sp - cp) / 6.0,
              (2.0 - std::sqrt(3.0) * sp - cp) / 6.0};
  std::sort(rs.roots.begin(), rs.roots.end(), std::greater<double>());
  rs = degeneracy_classify(std::move(rs));

  CoefficientVector cv = rs.degenerate ? coefficients_fallback(7, V, inv)
                                       : coefficients(7, V, inv, rs);
  Eigen::MatrixXd Sigma = assemble(av) / V;
  Eigen::MatrixXd R = cv.c(0) * Eigen::MatrixXd::Identity(7, 7);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(7, 7);
  for (int k = 1; k < 7; ++k) {
    power = power * Sigma;
    R += cv.c(k) * power;
  }
  return R;
}

}  // namespace sonexp
