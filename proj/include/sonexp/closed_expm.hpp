#pragma once

#include "sonexp/spectral_roots.hpp"
#include "sonexp/types.hpp"

namespace sonexp {

enum class ExpmMethod { Closed, Companion, Taylor };

struct ExpmResult {
  Eigen::MatrixXd R;
  Eigen::VectorXd coefficients;  // empty when the Taylor method bypasses them
  bool used_fallback = false;
  bool degenerate = false;
};

// Closed-form expansion coefficients for a non-degenerate RootSet.
// Ratio terms q/y_j are evaluated as products of the complementary roots.
CoefficientVector coefficients(int n, double V, const InvariantSet& inv, const RootSet& rs);

// Companion-matrix coefficients exp(V*M_n) e_1; valid at degeneracies too.
CoefficientVector coefficients_fallback(int n, double V, const InvariantSet& inv);

// R = exp(assemble(av)) with the closed-form/fallback strategy split at the
// degeneracy threshold delta.
ExpmResult expm_so_detailed(const AlgebraVector& av, double delta = kDegeneracyThreshold);
Eigen::MatrixXd expm_so(const AlgebraVector& av, double delta = kDegeneracyThreshold);

// Forced-method evaluation for A/B comparison and benchmarks.
ExpmResult expm_with_method(const AlgebraVector& av, ExpmMethod method,
                            double delta = kDegeneracyThreshold);

}  // namespace sonexp
