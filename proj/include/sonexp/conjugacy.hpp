#pragma once

#include "sonexp/spectral_roots.hpp"
#include "sonexp/types.hpp"

namespace sonexp {

// Rotation angles phi_j = V * sqrt(y_j) of the maximal-torus representative,
// descending.  Reported unreduced (not folded into [0, 2*pi)) so that
// sum phi_j^2 = V^2 stays checkable.
struct TorusAngles {
  int n = 0;
  double V = 0.0;
  std::vector<double> phi;
};

TorusAngles torus_angles(const AlgebraVector& av);

// tr exp(J.v) from the angles alone: 2*sum cos(phi_j), plus 1 for odd n.
double trace_closed_form(const AlgebraVector& av);
double trace_from_angles(const TorusAngles& ta);

}  // namespace sonexp
