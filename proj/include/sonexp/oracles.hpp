#pragma once

#include "sonexp/types.hpp"

namespace sonexp {

// exp(M) by scaling-and-squaring with a truncated Taylor series on the
// scaled matrix.  Reference implementation, independent of the closed forms.
Eigen::MatrixXd expm_taylor_ss(const Eigen::MatrixXd& M, double tol = 1e-18);

// Companion/iteration matrix M_n of the Cayley-Hamilton power recursion.
Eigen::MatrixXd iteration_matrix(int n, const InvariantSet& inv);

// First column of exp(V * M_n): the expansion coefficients via the
// companion-matrix route.  Well defined at degeneracies.
CoefficientVector coefficients_oracle(int n, double V, const InvariantSet& inv);

}  // namespace sonexp
