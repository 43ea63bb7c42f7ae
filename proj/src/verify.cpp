#include "srlie/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "srlie/distance.hpp"
#include "srlie/oracle.hpp"

namespace srlie {

namespace {

constexpr double kPi = std::numbers::pi;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    const double u = (gen() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
};

struct Combo {
  GroupKind group;
  BasisKind metric;
};

constexpr Combo kCombos[4] = {
    {GroupKind::Su2R, BasisKind::D2},
    {GroupKind::Su2R, BasisKind::D1},
    {GroupKind::So3R, BasisKind::D2},
    {GroupKind::So3R, BasisKind::D1},
};

GeodesicParams random_params(Rng& rng, const Combo& c, double a2_range = 0.95,
                             double b_range = 3.0) {
  const double phi0 = rng.uniform(-kPi, kPi);
  const double a2 = rng.uniform(-a2_range, a2_range);
  const double beta = rng.uniform(-b_range, b_range);
  return GeodesicParams::from_phi0(phi0, a2, beta, c.metric, c.group);
}

double dist_value(const Su2RPoint& p, BasisKind metric) {
  return metric == BasisKind::D1 ? dist_su2r_d1(p).value
                                 : dist_su2r_d2(p).value;
}

double dist_value(const So3RPoint& p, BasisKind metric) {
  return metric == BasisKind::D1 ? dist_so3r_rho1(p).value
                                 : dist_so3r_rho2(p).value;
}

SuiteResult suite_ode(int count, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const Combo& c = kCombos[i % 4];
    const GeodesicParams p = random_params(rng, c);
    const double t_end = rng.uniform(0.5, 5.0);
    const CovectorState init = initial_covector(p);
    if (c.group == GroupKind::Su2R) {
      const auto traj = integrate_geodesic_su2r(c.metric, init, t_end, 10000);
      const Su2RPoint got = traj.points.back();
      const Su2RPoint want = geodesic_su2r(p, t_end);
      worst = std::max(worst, std::sqrt(std::norm(got.A - want.A) +
                                        std::norm(got.B - want.B)) +
                                  std::abs(got.v - want.v));
    } else {
      const auto traj = integrate_geodesic_so3r(c.metric, init, t_end, 10000);
      const So3RPoint got = traj.points.back();
      const So3RPoint want = geodesic_so3r(p, t_end);
      worst = std::max(worst, max_abs_diff(got.C, want.C) +
                                  std::abs(got.v - want.v));
    }
  }
  return {"ode", worst, 1e-8, count, worst <= 1e-8};
}

SuiteResult suite_roundtrip(int count, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const Combo& c = kCombos[i % 4];
    const GeodesicParams p = random_params(rng, c);
    const double T = rng.uniform(0.05, 0.999) * cut_time(p).cut_time;
    double d;
    if (c.group == GroupKind::Su2R) {
      d = dist_value(geodesic_su2r(p, T), c.metric);
    } else {
      d = dist_value(geodesic_so3r(p, T), c.metric);
    }
    worst = std::max(worst, std::abs(d - T));
  }
  return {"roundtrip", worst, 1e-6, count, worst <= 1e-6};
}

SuiteResult suite_covering(int count, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const BasisKind metric = i % 2 == 0 ? BasisKind::D2 : BasisKind::D1;
    const GeodesicParams p = random_params(
        rng, {GroupKind::Su2R, metric});
    const double t = rng.uniform(0.05, 1.5) * cut_time(p).cut_time;
    const Su2RPoint g = geodesic_su2r(p, t);
    const Su2RPoint gneg{-g.A, -g.B, g.v};
    const double down = dist_value(covering_pi_tilde(g), metric);
    const double up = std::min(dist_value(g, metric),
                               dist_value(gneg, metric));
    worst = std::max(worst, std::abs(down - up));
  }
  return {"covering", worst, 1e-8, count, worst <= 1e-8};
}

SuiteResult suite_splitting(int count, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const Combo& c = kCombos[(i % 2) * 2];  // both groups, metric D2
    const GeodesicParams p = random_params(rng, c);
    const double t = rng.uniform(0.05, 1.5) * cut_time(p).cut_time;
    const double v = rng.uniform(-3.0, 3.0);
    if (c.group == GroupKind::Su2R) {
      const Su2RPoint g = geodesic_su2r(p, t);
      worst = std::max(worst, splitting_check({g.A, g.B, v}));
    } else {
      const So3RPoint g = geodesic_so3r(p, t);
      worst = std::max(worst, splitting_check({g.C, v}));
    }
  }
  return {"splitting", worst, 1e-9, count, worst <= 1e-9};
}

SuiteResult suite_monotonicity(int count, std::uint64_t /*seed*/) {
  // Cut time on SO(3)xR under D2 as a function of |beta|: rises on
  // [0, sqrt((1-a2^2)/3)], falls beyond, starts at pi/sqrt(1-a2^2).
  const int n = std::max(count, 50);
  double worst = 0.0;
  for (const double a2 : {0.0, 0.5}) {
    const double knee = std::sqrt((1.0 - a2 * a2) / 3.0);
    double t0 = 0.0;
    std::vector<double> ts;
    for (int i = 0; i < n; ++i) {
      const double b = 3.0 * i / (n - 1);
      const GeodesicParams p = GeodesicParams::from_phi0(
          0.3, a2, b, BasisKind::D2, GroupKind::So3R);
      const double T = cut_time(p).cut_time;
      ts.push_back(T);
      if (i == 0) t0 = T;
    }
    worst = std::max(worst,
                     std::abs(t0 - kPi / std::sqrt(1.0 - a2 * a2)));
    for (int i = 0; i + 1 < n; ++i) {
      const double b_next = 3.0 * (i + 1) / (n - 1);
      if (b_next <= knee) {
        worst = std::max(worst, ts[i] - ts[i + 1]);  // must not decrease
      } else if (3.0 * i / (n - 1) >= knee) {
        worst = std::max(worst, ts[i + 1] - ts[i]);  // must not increase
      }
    }
  }
  worst = std::max(worst, 0.0);
  return {"monotonicity", worst, 1e-10, 2 * n, worst <= 1e-10};
}

SuiteResult suite_shooting(int count, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const Combo& c = kCombos[i % 4];
    const GeodesicParams p = random_params(rng, c, 0.9, 3.0);
    const double T = rng.uniform(0.1, 0.9) * cut_time(p).cut_time;
    double closed, shot;
    if (c.group == GroupKind::Su2R) {
      const Su2RPoint g = geodesic_su2r(p, T);
      closed = dist_value(g, c.metric);
      shot = shooting_distance(g, c.metric).best_distance;
    } else {
      const So3RPoint g = geodesic_so3r(p, T);
      closed = dist_value(g, c.metric);
      shot = shooting_distance(g, c.metric).best_distance;
    }
    worst = std::max(worst, std::abs(closed - shot));
  }
  return {"shooting", worst, 1e-4, count, worst <= 1e-4};
}

}  // namespace

std::vector<SuiteResult> run_verification(const std::string& suite, int count,
                                          std::uint64_t seed, bool deep) {
  std::vector<SuiteResult> out;
  const bool all = suite == "all";
  if (all || suite == "ode") out.push_back(suite_ode(count, seed));
  if (all || suite == "roundtrip") out.push_back(suite_roundtrip(count, seed));
  if (all || suite == "covering") out.push_back(suite_covering(count, seed));
  if (all || suite == "splitting") out.push_back(suite_splitting(count, seed));
  if (all || suite == "monotonicity") {
    out.push_back(suite_monotonicity(count, seed));
  }
  if ((all && deep) || suite == "shooting") {
    out.push_back(suite_shooting(count, seed));
  }
  if (out.empty()) {
    throw std::invalid_argument("unknown verification suite: " + suite);
  }
  return out;
}

}  // namespace srlie
