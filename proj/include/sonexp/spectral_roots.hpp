#pragma once

#include "sonexp/types.hpp"

namespace sonexp {

// Default threshold below which a root gap (or a root itself) counts as
// degenerate and the exponential switches to the companion-matrix fallback.
constexpr double kDegeneracyThreshold = 1e-5;

// Two roots {1-z, z} of the reduced quadratic for n = 4, z = (1-sqrt(1-4*eta))/2.
RootSet roots_so4(double eta);

// Two roots {cos^2 theta, sin^2 theta} for n = 5, theta = arccos(sqrt(xi-1))/2.
RootSet roots_so5(double xi);

// Three roots of y^3 - y^2 + y(1/2 - xi/4) - q = 0 via angle trisection.
// q is eta for n = 6 or eta7 for n = 7; set n accordingly in the result.
RootSet roots_cubic_trig(double xi, double q, int n = 6);

// Four roots of the reduced quartic via its trigonometric cubic resolvent.
// q is eta for n = 8 or eta9 for n = 9.
RootSet roots_quartic_resolvent(double xi, double zeta, double q, int n = 8);

// Fills the degeneracy diagnostics of rs against threshold delta.
RootSet degeneracy_classify(RootSet rs, double delta = kDegeneracyThreshold);

// Value of the reduced polynomial in y for the given n and invariants;
// used for residual checks.  zeta is ignored for n <= 7.
double reduced_poly(int n, double xi, double zeta, double q, double y);

// Roots for any n = 2..9 from an InvariantSet (n = 2, 3 yield the single
// root {1}), classified with the given threshold.
RootSet solve_roots(const InvariantSet& inv, double delta = kDegeneracyThreshold);

}  // namespace sonexp
