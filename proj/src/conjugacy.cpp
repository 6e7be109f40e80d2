#include "sonexp/conjugacy.hpp"

#include <cmath>

#include "sonexp/invariants.hpp"
#include "sonexp/skew_basis.hpp"

namespace sonexp {

TorusAngles torus_angles(const AlgebraVector& av) {
  TorusAngles ta;
  ta.n = av.n;
  ta.V = norm(av);
  if (ta.V < 1e-14) {
    ta.phi.assign(av.n / 2, 0.0);
    return ta;
  }
  if (av.n <= 3) {
    ta.phi = {ta.V};
    return ta;
  }
  RootSet rs = solve_roots(compute_invariants(av));
  ta.phi.reserve(rs.roots.size());
  for (double y : rs.roots) ta.phi.push_back(ta.V * std::sqrt(y));
  return ta;
}

double trace_from_angles(const TorusAngles& ta) {
  double tr = (ta.n % 2 == 1) ? 1.0 : 0.0;
  for (double phi : ta.phi) tr += 2.0 * std::cos(phi);
  return tr;
}

double trace_closed_form(const AlgebraVector& av) {
  if (norm(av) < 1e-14) return static_cast<double>(av.n);
  return trace_from_angles(torus_angles(av));
}

}  // namespace sonexp
