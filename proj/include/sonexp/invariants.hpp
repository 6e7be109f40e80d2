#pragma once

#include "sonexp/types.hpp"

namespace sonexp {

// Invariants of the normalized matrix S = assemble(av) / V.  Throws
// invariant_error when V = 0 (caller should shortcut to the identity).
InvariantSet compute_invariants(const AlgebraVector& av);

// Pfaffian of an even-dimensional antisymmetric matrix via skew-symmetric
// Gaussian elimination with pivoting.  Pf(M)^2 = det(M).
double pfaffian(const Eigen::MatrixXd& M);

// True iff the invariants lie inside the allowed region for their n, all
// inequalities checked with additive tolerance.
bool region_contains(const InvariantSet& inv, double tolerance = 1e-10);

struct AreaEstimate {
  int n = 0;
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo area of the allowed invariant region for n = 6 (xi-eta plane)
// or n = 7 (xi-zeta plane).  Deterministic for a fixed seed.
AreaEstimate region_area_mc(int n, std::uint64_t samples, std::uint64_t seed);

}  // namespace sonexp
