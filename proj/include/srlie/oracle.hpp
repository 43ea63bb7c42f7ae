#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srlie/cutconj.hpp"

// Independent numerical ground truth: Runge-Kutta integration of the
// covector/group system and brute-force shooting distance.

namespace srlie {

/// Thrown when a scalar solve or a shooting search fails to locate its
/// target; carries the scanned interval.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_, hi_;
};

/// Bisection with guaranteed sign-change bracketing at every iteration.
/// Requires f(lo) * f(hi) <= 0; throws SolverError otherwise.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol);

/// Vertical coordinates psi_1..psi_4 of the Hamiltonian flow.
struct CovectorState {
  double psi1 = 1.0, psi2 = 0.0, psi3 = 0.0, psi4 = 0.0;
};

/// psi_j' = sum_{i<=3} sum_k C^k_{ij} psi_i psi_k from the bracket table.
CovectorState covector_rate(const CovectorState& s, BasisKind basis);

/// Covector launching the geodesic with the given parameters:
/// (alpha1, alpha2, alpha3) plus psi4 = effective_beta.
CovectorState initial_covector(const GeodesicParams& p);

template <typename Point>
struct Trajectory {
  std::vector<double> times;
  std::vector<Point> points;
  std::vector<CovectorState> covectors;
};

/// 4th-order integration of the coupled (group element, covector) system.
/// The group element advances by right-multiplying the exponential of the
/// step's algebra increment, so group invariants hold to machine precision.
/// Throws std::invalid_argument unless |u(0)| = 1 within 1e-10 and steps >= 1.
Trajectory<Su2RPoint> integrate_geodesic_su2r(BasisKind metric,
                                              const CovectorState& init,
                                              double t_end, int steps);
Trajectory<So3RPoint> integrate_geodesic_so3r(BasisKind metric,
                                              const CovectorState& init,
                                              double t_end, int steps);

struct ShootingGrid {
  int n_phi0 = 64;
  int n_alpha2 = 33;
  int n_beta = 65;
  int n_time = 128;
  double alpha2_max = 0.98;
  double beta_max = 6.0;
  int refine_iters = 40;  // refinement budget multiplier (8x simplex steps)
};

struct ShootingReport {
  double best_distance = 0.0;
  GeodesicParams best_params;
  double best_time = 0.0;
  double endpoint_error = 0.0;
  std::string grid_spec;
  int refinement_iterations = 0;
};

/// Grid scan over (alpha2, beta, t <= first conjugate time) with the phi0
/// angle eliminated in closed form per cell, endpoint error = Frobenius
/// distance on the compact block + |delta v|, followed by simplex
/// refinement of the most promising cells. Returns the smallest t
/// among tuples reaching the target within endpoint error 1e-6; throws
/// SolverError when no cell gets within capture range.
ShootingReport shooting_distance(const Su2RPoint& target, BasisKind metric,
                                 const ShootingGrid& grid = {});
ShootingReport shooting_distance(const So3RPoint& target, BasisKind metric,
                                 const ShootingGrid& grid = {});

}  // namespace srlie
