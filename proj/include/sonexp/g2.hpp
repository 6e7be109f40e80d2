#pragma once

#include <array>

#include "sonexp/types.hpp"

namespace sonexp {

// 14-parameter coordinate vector of the exceptional Lie algebra g2 in so(7).
struct G2Vector {
  Eigen::VectorXd w;  // length 14

  G2Vector() : w(Eigen::VectorXd::Zero(14)) {}
  explicit G2Vector(Eigen::VectorXd coeffs);
};

// Totally antisymmetric octonion structure constants f_{jkl} in {-1, 0, +1},
// indices 0-based.
class StructureConstants {
public:
  StructureConstants();
  double operator()(int j, int k, int l) const { return f_[(j * 7 + k) * 7 + l]; }

private:
  std::array<double, 343> f_;
};

const StructureConstants& structure_constants();

// The 21-component so(7) vector determined by w: the free components come
// from inverting the half-sum/half-difference parameterization, the seven
// dependent ones from the linear g2 constraints.
AlgebraVector embed_g2(const G2Vector& w);

// Max residual of the 343 linear Lie-algebra constraints for T = assemble(av);
// ~0 iff av lies in g2.
double check_algebra_constraint(const AlgebraVector& av);

// Max residual of the trilinear invariance condition
// sum S_jm S_kn S_lo f_mno = f_jkl; ~0 iff S is an octonion automorphism.
double check_automorphism(const Eigen::MatrixXd& S);

// exp of the embedded algebra element via the specialized xi = 1 closed form.
Eigen::MatrixXd expm_g2(const G2Vector& w);

}  // namespace sonexp
