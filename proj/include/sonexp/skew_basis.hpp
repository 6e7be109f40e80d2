#pragma once

#include "sonexp/types.hpp"

namespace sonexp {

// Generator J_a of so(n), a in 1..n(n-1)/2.  J_a has a single +1 above the
// diagonal at the a-th pair (i,j), i<j, in row-major order, mirrored to -1
// below, so that tr(J_a J_b) = -2 delta_ab.
Eigen::MatrixXd generator(int n, int a);

// The upper-triangle pair (i, j), 0-based, addressed by generator index a.
std::pair<int, int> generator_pair(int n, int a);

// Sum_a v_a J_a.  Both triangles are written explicitly.
Eigen::MatrixXd assemble(const AlgebraVector& av);

// Inverse of assemble: reads the strict upper triangle row-major.
// Throws invariant_error if M is not antisymmetric within atol.
AlgebraVector decompose(const Eigen::MatrixXd& M, double atol = 1e-12);

// Euclidean norm V of the coefficient vector.
double norm(const AlgebraVector& av);

}  // namespace sonexp
