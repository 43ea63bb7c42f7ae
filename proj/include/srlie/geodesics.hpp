#pragma once

#include "srlie/groups.hpp"

// Closed-form arclength-parametrized geodesics through the identity for both
// metrics on both groups, plus the parameter conversions between them.

namespace srlie {

/// Initial covector data (alpha1, alpha2, alpha3, beta) of an arclength
/// geodesic, with unit alpha-norm, tagged by metric and group.
struct GeodesicParams {
  double alpha1 = 1.0, alpha2 = 0.0, alpha3 = 0.0, beta = 0.0;
  BasisKind metric = BasisKind::D2;
  GroupKind group = GroupKind::Su2R;

  /// Validates the unit alpha-norm (renormalizes within 1e-6, rejects
  /// beyond). |alpha2| >= 1 - 1e-12 selects the abnormal branch and forces
  /// alpha1 = alpha3 = 0.
  static GeodesicParams make(double a1, double a2, double a3, double beta,
                             BasisKind metric, GroupKind group);

  /// (phi0, alpha2) parametrization: alpha1 = sqrt(1-alpha2^2) cos(phi0),
  /// alpha3 = sqrt(1-alpha2^2) sin(phi0).
  static GeodesicParams from_phi0(double phi0, double alpha2, double beta,
                                  BasisKind metric, GroupKind group);

  /// atan2(alpha3, alpha1), in (-pi, pi]. Meaningless on the abnormal branch.
  double phi0() const;
};

/// true iff alpha2 = +-1 (the nonstrictly abnormal one-parameter subgroups).
bool is_abnormal(const GeodesicParams& p);

/// Derived frequency w and the half-angle pair n = cos(wt/2),
/// m = sin(wt/2)/w; satisfies n^2 + w^2 m^2 = 1.
struct GeodesicFrame {
  double w = 1.0, n = 1.0, m = 0.0;
};

GeodesicFrame frame(const GeodesicParams& p, double t);

/// Effective e4-frequency: beta for D2, beta - alpha2 for D1.
double effective_beta(const GeodesicParams& p);

Su2RPoint geodesic_su2r(const GeodesicParams& p, double t);
So3RPoint geodesic_so3r(const GeodesicParams& p, double t);

/// gamma_1(alpha, beta; t) = gamma_2(alpha, beta - alpha2; t) exp(-t alpha2 e4).
GeodesicParams reparam_d1_to_d2(const GeodesicParams& p);

/// Recentering at t0: gamma(t0)^-1 gamma(t0 + s) = gamma(shifted params; s);
/// rotates (alpha1, alpha3) by beta*t0.
GeodesicParams leftshift_params(const GeodesicParams& p, double t0);

}  // namespace srlie
