#pragma once

#include <optional>

#include "srlie/geodesics.hpp"

// Conjugate times, first conjugate loci, cut times and cut-locus membership.

namespace srlie {

enum class LocusClass { LocalBranch, GlobalBranch, MetricLine };

struct CutInfo {
  double cut_time = 0.0;  // +inf on the abnormal branch
  LocusClass locus_class = LocusClass::LocalBranch;
  double first_conjugate_time = 0.0;
};

/// m-th ascending positive root of tan(x) = x, in (m*pi, m*pi + pi/2).
/// Memoized; the memo fill is idempotent and safe under concurrent access.
double tan_x_root(int m);

/// n-th conjugate time: 2*pi*m/w for n = 2m-1, 2*x_m/w for n = 2m.
/// Throws std::domain_error on the abnormal branch.
double conjugate_time(const GeodesicParams& p, int n);

/// sin(wt/2) * (sin(wt/2) - (wt/2) cos(wt/2)); vanishes exactly at the
/// conjugate times.
double conjugate_criterion(const GeodesicParams& p, double t);

CutInfo cut_time(const GeodesicParams& p);

bool in_first_conjugate_locus(const Su2RPoint& g, BasisKind metric,
                              double tol = 1e-9);
bool in_first_conjugate_locus(const So3RPoint& g, BasisKind metric,
                              double tol = 1e-9);

std::optional<LocusClass> in_cut_locus(const Su2RPoint& g, BasisKind metric,
                                       double tol = 1e-9);
/// positive_n_only selects the narrow reading of the D1 local-branch
/// condition psi + v != 2*pi*n (n natural instead of any integer).
std::optional<LocusClass> in_cut_locus(const So3RPoint& g, BasisKind metric,
                                       double tol = 1e-9,
                                       bool positive_n_only = false);

}  // namespace srlie
