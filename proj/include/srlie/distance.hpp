#pragma once

#include <optional>

#include "srlie/groups.hpp"

// Exact sub-Riemannian distances from the identity, both metrics, both
// groups, via the five-case closed forms and their reductions.

namespace srlie {

/// Distance value plus solver bookkeeping. case_label is the dispatch branch
/// (1..5), or 0 for the identity shortcut. xi is the auxiliary root when one
/// was solved for; residual is the max absolute defining-equation residual at
/// the returned xi (0 for the rootless branches).
struct DistanceResult {
  double value = 0.0;
  int case_label = 0;
  std::optional<double> xi;
  double residual = 0.0;
};

DistanceResult dist_su2r_d2(const Su2RPoint& p);
/// d1 via the phase twist (A e^{iv/2}, B e^{-iv/2}, v) and the d2 solver.
DistanceResult dist_su2r_d1(const Su2RPoint& p);

DistanceResult dist_so3r_rho2(const So3RPoint& p);
/// rho1 via the v-rotation of the first two columns and the rho2 solver.
DistanceResult dist_so3r_rho1(const So3RPoint& p);

/// |d^2(p) - v^2 - d^2(p with v = 0)| under the product metric (D2).
double splitting_check(const Su2RPoint& p);
double splitting_check(const So3RPoint& p);

/// d(g, h) = d(Id, g^-1 h) by left invariance.
double distance_between(const Su2RPoint& g, const Su2RPoint& h,
                        BasisKind metric);
double distance_between(const So3RPoint& g, const So3RPoint& h,
                        BasisKind metric);

}  // namespace srlie
