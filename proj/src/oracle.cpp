#include "srlie/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace srlie {

namespace {
constexpr double kPi = std::numbers::pi;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol) {
  if (!(lo < hi) || !(tol > 0.0)) {
    throw SolverError("bisect: need lo < hi and tol > 0", lo, hi);
  }
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) {
    std::ostringstream msg;
    msg << "bisect: no sign change, f(lo) = " << flo << ", f(hi) = " << fhi;
    throw SolverError(msg.str(), lo, hi);
  }
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

CovectorState covector_rate(const CovectorState& s, BasisKind basis) {
  const StructureTable& c = structure_constants(basis);
  const double psi[4] = {s.psi1, s.psi2, s.psi3, s.psi4};
  double rate[4] = {0, 0, 0, 0};
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 3; ++i) {  // controls: horizontal components only
      for (int k = 0; k < 4; ++k) {
        if (c[i][j][k] != 0) rate[j] += c[i][j][k] * psi[i] * psi[k];
      }
    }
  }
  return {rate[0], rate[1], rate[2], rate[3]};
}

CovectorState initial_covector(const GeodesicParams& p) {
  return {p.alpha1, p.alpha2, p.alpha3, effective_beta(p)};
}

namespace {

// Combined state for one step: algebra increment sigma (relative to the step
// start) and the covector psi.
struct StepState {
  AlgebraVector sigma;
  CovectorState psi;
};

StepState operator+(const StepState& x, const StepState& y) {
  return {x.sigma + y.sigma,
          {x.psi.psi1 + y.psi.psi1, x.psi.psi2 + y.psi.psi2,
           x.psi.psi3 + y.psi.psi3, x.psi.psi4 + y.psi.psi4}};
}

StepState operator*(double s, const StepState& x) {
  return {s * x.sigma,
          {s * x.psi.psi1, s * x.psi.psi2, s * x.psi.psi3, s * x.psi.psi4}};
}

// sigma' = u + [sigma,u]/2 + [sigma,[sigma,u]]/12 (truncated inverse
// differential of exp, exact to the integrator's order), psi' from the
// bracket table. u is the horizontal part of psi.
StepState rate(const StepState& s, BasisKind basis) {
  const AlgebraVector u{s.psi.psi1, s.psi.psi2, s.psi.psi3, 0.0};
  const AlgebraVector c1 = bracket(s.sigma, u, basis);
  const AlgebraVector c2 = bracket(s.sigma, c1, basis);
  return {u + 0.5 * c1 + (1.0 / 12.0) * c2, covector_rate(s.psi, basis)};
}

template <typename Point, typename ExpFn, typename MulFn>
Trajectory<Point> integrate(BasisKind metric, const CovectorState& init,
                            double t_end, int steps, ExpFn exp_fn,
                            MulFn mul_fn) {
  const double n2 = init.psi1 * init.psi1 + init.psi2 * init.psi2 +
                    init.psi3 * init.psi3;
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 1e-10) {
    throw std::invalid_argument(
        "integrate_geodesic: initial horizontal covector must be unit");
  }
  if (steps < 1) throw std::invalid_argument("integrate_geodesic: steps >= 1");

  Trajectory<Point> out;
  out.times.push_back(0.0);
  out.points.push_back(Point::identity());
  out.covectors.push_back(init);
  if (t_end == 0.0) return out;

  const double h = t_end / steps;
  Point g = Point::identity();
  CovectorState psi = init;
  for (int k = 0; k < steps; ++k) {
    const StepState s0{{}, psi};
    const StepState k1 = rate(s0, metric);
    const StepState k2 = rate(s0 + (0.5 * h) * k1, metric);
    const StepState k3 = rate(s0 + (0.5 * h) * k2, metric);
    const StepState k4 = rate(s0 + h * k3, metric);
    const StepState inc =
        (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    g = mul_fn(g, exp_fn(inc.sigma, metric));
    psi = {psi.psi1 + inc.psi.psi1, psi.psi2 + inc.psi.psi2,
           psi.psi3 + inc.psi.psi3, psi.psi4 + inc.psi.psi4};
    out.times.push_back((k + 1) * h);
    out.points.push_back(g);
    out.covectors.push_back(psi);
  }
  return out;
}

}  // namespace

Trajectory<Su2RPoint> integrate_geodesic_su2r(BasisKind metric,
                                              const CovectorState& init,
                                              double t_end, int steps) {
  return integrate<Su2RPoint>(metric, init, t_end, steps, exp_su2r, su2r_mul);
}

Trajectory<So3RPoint> integrate_geodesic_so3r(BasisKind metric,
                                              const CovectorState& init,
                                              double t_end, int steps) {
  return integrate<So3RPoint>(metric, init, t_end, steps, exp_so3r, so3r_mul);
}

namespace {

// Endpoint-error functional of the shooting search; built once per target.
// For SO(3)xR the Frobenius distance is evaluated through the lifted
// quaternion: |R1 - R2|_F^2 = 8 (1 - <q1, q2>^2).
struct ShootTarget {
  GroupKind group;
  // SU(2)xR data
  std::complex<double> At, Bt;
  // SO(3)xR data: lift quaternion (w, x, y, z)
  double q0 = 1, q1 = 0, q2 = 0, q3 = 0;
  double vt = 0;

  double error(const Su2RPoint& g) const {
    if (group == GroupKind::Su2R) {
      const double f2 =
          2.0 * (std::norm(g.A - At) + std::norm(g.B - Bt));
      return std::sqrt(std::max(f2, 0.0)) + std::abs(g.v - vt);
    }
    const double dot = g.A.real() * q0 + g.B.real() * q1 +
                       g.B.imag() * q2 + g.A.imag() * q3;
    const double f2 = 8.0 * std::max(1.0 - dot * dot, 0.0);
    return std::sqrt(f2) + std::abs(g.v - vt);
  }
};

struct Candidate {
  double err = std::numeric_limits<double>::infinity();
  double phi0 = 0, alpha2 = 0, beta = 0, t = 0;
  int i2 = -1, i3 = -1, kt = -1;  // grid indices, for the separation rule
};

double eval_error(const ShootTarget& tgt, BasisKind metric, double phi0,
                  double alpha2, double beta, double t) {
  const GeodesicParams p = GeodesicParams::from_phi0(
      phi0, alpha2, beta, metric,
      tgt.group);
  return tgt.error(geodesic_su2r(p, t));
}

// Endpoint error of the cell with phi0 already optimal: phi0 enters the
// endpoint only through the phase of B, so its best value (and the error
// there) is closed-form. This both collapses one grid dimension and leaves a
// smooth 3-variable function for the refinement stage.
struct CellError {
  double err;
  double phi0;
};

CellError cell_error(const ShootTarget& tgt, BasisKind metric, double alpha2,
                     double beta, double t) {
  const double s2 = 1.0 - alpha2 * alpha2;
  const double b = metric == BasisKind::D1 ? beta - alpha2 : beta;
  const double w = std::sqrt(s2 + b * b);
  const double half = 0.5 * w * t;
  const double n = std::cos(half);
  const double m = 0.5 * t * sinc(half);
  const double cb = std::cos(0.5 * beta * t), sb = std::sin(0.5 * beta * t);
  const std::complex<double> A{n * cb + b * m * sb, b * m * cb - n * sb};
  const double r = m * std::sqrt(std::max(s2, 0.0));
  const double theta = 0.5 * beta * t;
  const double dv = std::abs(alpha2 * t - tgt.vt);

  double err, phi0;
  if (tgt.group == GroupKind::Su2R) {
    const double babs = std::abs(tgt.Bt);
    const double gap = r - babs;
    err = std::sqrt(2.0 * (std::norm(A - tgt.At) + gap * gap)) + dv;
    phi0 = babs > 0.0 ? std::arg(tgt.Bt) - theta : 0.0;
  } else {
    const double c = A.real() * tgt.q0 + A.imag() * tgt.q3;
    const double rho = std::hypot(tgt.q1, tgt.q2);
    const double dot = std::abs(c) + rho * r;
    err = std::sqrt(8.0 * std::max(1.0 - dot * dot, 0.0)) + dv;
    phi0 = std::atan2(tgt.q2, tgt.q1) - theta + (c >= 0.0 ? 0.0 : kPi);
  }
  phi0 = std::remainder(phi0, 2.0 * kPi);
  return {err, phi0};
}

// Deterministic Nelder-Mead on (alpha2, beta, t); standard
// reflection/expansion/contraction/shrink coefficients.
template <typename F>
void nelder_mead(F f, std::array<double, 3>& x,
                 const std::array<double, 3>& scale, int iters) {
  std::array<std::array<double, 3>, 4> v;
  std::array<double, 4> fv;
  v[0] = x;
  for (int i = 1; i < 4; ++i) {
    v[i] = x;
    v[i][i - 1] += scale[i - 1];
  }
  for (int i = 0; i < 4; ++i) fv[i] = f(v[i]);
  for (int it = 0; it < iters; ++it) {
    // order vertices best..worst (stable, small fixed size)
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (fv[j] < fv[i]) {
          std::swap(fv[i], fv[j]);
          std::swap(v[i], v[j]);
        }
      }
    }
    std::array<double, 3> centroid{};
    for (int i = 0; i < 3; ++i) {
      centroid[i] = (v[0][i] + v[1][i] + v[2][i]) / 3.0;
    }
    const auto lerp = [&](double coef) {
      std::array<double, 3> p;
      for (int i = 0; i < 3; ++i) {
        p[i] = centroid[i] + coef * (centroid[i] - v[3][i]);
      }
      return p;
    };
    const auto refl = lerp(1.0);
    const double fr = f(refl);
    if (fr < fv[0]) {
      const auto exp_p = lerp(2.0);
      const double fe = f(exp_p);
      if (fe < fr) {
        v[3] = exp_p;
        fv[3] = fe;
      } else {
        v[3] = refl;
        fv[3] = fr;
      }
    } else if (fr < fv[2]) {
      v[3] = refl;
      fv[3] = fr;
    } else {
      const auto con = lerp(fr < fv[3] ? 0.5 : -0.5);
      const double fc = f(con);
      if (fc < std::min(fr, fv[3])) {
        v[3] = con;
        fv[3] = fc;
      } else {
        for (int i = 1; i < 4; ++i) {
          for (int j = 0; j < 3; ++j) v[i][j] = 0.5 * (v[i][j] + v[0][j]);
          fv[i] = f(v[i]);
        }
      }
    }
    if (fv[0] <= 1e-10) break;
  }
  int best = 0;
  for (int i = 1; i < 4; ++i) {
    if (fv[i] < fv[best]) best = i;
  }
  x = v[best];
}

ShootingReport shoot(const ShootTarget& tgt, BasisKind metric,
                     const ShootingGrid& grid) {
  constexpr double kCapture = 0.5;
  constexpr double kHitTol = 1e-6;
  constexpr int kMaxCandidates = 8;

  // --- coarse scan; the phi0 dimension is collapsed analytically.
  std::vector<Candidate> cands;
  for (int i2 = 0; i2 < grid.n_alpha2; ++i2) {
    const double alpha2 =
        grid.n_alpha2 == 1
            ? 0.0
            : -grid.alpha2_max +
                  2.0 * grid.alpha2_max * i2 / (grid.n_alpha2 - 1);
    const double s2 = 1.0 - alpha2 * alpha2;
    for (int i3 = 0; i3 < grid.n_beta; ++i3) {
      const double beta =
          grid.n_beta == 1
              ? 0.0
              : -grid.beta_max + 2.0 * grid.beta_max * i3 / (grid.n_beta - 1);
      const double b = metric == BasisKind::D1 ? beta - alpha2 : beta;
      const double w = std::sqrt(s2 + b * b);
      const double tmax = 2.0 * kPi / w;
      for (int kt = 1; kt <= grid.n_time; ++kt) {
        const double t = tmax * kt / grid.n_time;
        const CellError ce = cell_error(tgt, metric, alpha2, beta, t);
        if (ce.err > kCapture) continue;
        Candidate c{ce.err, ce.phi0, alpha2, beta, t, i2, i3, kt};
        // Merge into the candidate pool; nearby cells share one slot.
        bool merged = false;
        for (Candidate& existing : cands) {
          if (std::abs(existing.i2 - i2) <= 2 &&
              std::abs(existing.i3 - i3) <= 2 &&
              std::abs(existing.kt - kt) <= 6) {
            if (c.err < existing.err) existing = c;
            merged = true;
            break;
          }
        }
        if (!merged) {
          if (static_cast<int>(cands.size()) < kMaxCandidates) {
            cands.push_back(c);
          } else {
            auto worst = std::max_element(
                cands.begin(), cands.end(),
                [](const Candidate& x, const Candidate& y) {
                  return x.err < y.err;
                });
            if (c.err < worst->err) *worst = c;
          }
        }
      }
    }
  }
  if (cands.empty()) {
    throw SolverError(
        "shooting_distance: no grid cell within capture radius; "
        "use a denser grid",
        kCapture, kCapture);
  }

  // --- coordinate-descent refinement of each candidate.
  const double da = 2.0 * grid.alpha2_max / std::max(grid.n_alpha2 - 1, 1);
  const double db = 2.0 * grid.beta_max / std::max(grid.n_beta - 1, 1);
  const double a_cap = 0.999;
  bool have_hit = false;
  Candidate winner;
  double winner_err = std::numeric_limits<double>::infinity();
  for (Candidate c : cands) {
    const auto f = [&](const std::array<double, 3>& x) {
      const double a2 = std::clamp(x[0], -a_cap, a_cap);
      const double t = std::max(x[2], 0.0);
      return cell_error(tgt, metric, a2, x[1], t).err;
    };
    const double bw = metric == BasisKind::D1 ? c.beta - c.alpha2 : c.beta;
    const double dt =
        2.0 * kPi / std::sqrt(1.0 - c.alpha2 * c.alpha2 + bw * bw) /
        grid.n_time;
    std::array<double, 3> x{c.alpha2, c.beta, c.t};
    nelder_mead(f, x, {0.5 * da, 0.5 * db, 0.5 * dt},
                8 * grid.refine_iters);
    c.alpha2 = std::clamp(x[0], -a_cap, a_cap);
    c.beta = x[1];
    c.t = std::max(x[2], 0.0);
    const CellError ce = cell_error(tgt, metric, c.alpha2, c.beta, c.t);
    c.phi0 = ce.phi0;
    // Validate through the actual geodesic evaluation, not the scan kernel.
    c.err = eval_error(tgt, metric, c.phi0, c.alpha2, c.beta, c.t);
    const bool hit = c.err <= kHitTol;
    // Prefer hits; among hits take the smallest time, then the smaller
    // error. Deterministic: candidates are visited in scan order.
    if (hit) {
      if (!have_hit || c.t < winner.t ||
          (c.t == winner.t && c.err < winner_err)) {
        winner = c;
        winner_err = c.err;
        have_hit = true;
      }
    } else if (!have_hit && c.err < winner_err) {
      winner = c;
      winner_err = c.err;
    }
  }
  if (!have_hit) {
    throw SolverError(
        "shooting_distance: refinement did not reach the target within "
        "1e-6; use a denser grid",
        winner_err, kHitTol);
  }

  ShootingReport rep;
  rep.best_params = GeodesicParams::from_phi0(winner.phi0, winner.alpha2,
                                              winner.beta, metric, tgt.group);
  rep.best_time = winner.t;
  rep.best_distance = winner.t;
  rep.endpoint_error = winner_err;
  std::ostringstream spec;
  spec << "phi0:" << grid.n_phi0 << " x alpha2:" << grid.n_alpha2 << "@[+-"
       << grid.alpha2_max << "] x beta:" << grid.n_beta << "@[+-"
       << grid.beta_max << "] x t:" << grid.n_time << "@(0, 2pi/w]";
  rep.grid_spec = spec.str();
  rep.refinement_iterations = grid.refine_iters;
  return rep;
}

}  // namespace

ShootingReport shooting_distance(const Su2RPoint& target, BasisKind metric,
                                 const ShootingGrid& grid) {
  ShootTarget tgt;
  tgt.group = GroupKind::Su2R;
  tgt.At = target.A;
  tgt.Bt = target.B;
  tgt.vt = target.v;
  return shoot(tgt, metric, grid);
}

ShootingReport shooting_distance(const So3RPoint& target, BasisKind metric,
                                 const ShootingGrid& grid) {
  ShootTarget tgt;
  tgt.group = GroupKind::So3R;
  const Su2RPoint lift = lifts(target).first;
  tgt.q0 = lift.A.real();
  tgt.q1 = lift.B.real();
  tgt.q2 = lift.B.imag();
  tgt.q3 = lift.A.imag();
  tgt.vt = target.v;
  return shoot(tgt, metric, grid);
}

}  // namespace srlie
