#include "srlie/cutconj.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace srlie {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Sign-change form of tan(x) = x, regular across the tangent poles.
double tanx_residual(double x) { return std::sin(x) - x * std::cos(x); }

}  // namespace

double tan_x_root(int m) {
  if (m < 1) throw std::domain_error("tan_x_root: m must be >= 1");
  static std::mutex mu;
  static std::vector<double> memo;
  {
    std::scoped_lock lock(mu);
    if (static_cast<int>(memo.size()) >= m) return memo[m - 1];
  }
  // Compute outside the lock; the fill is idempotent.
  std::vector<double> fresh;
  for (int i = 1; i <= m; ++i) {
    const double delta = 1e-9;
    double lo = i * kPi + delta, hi = i * kPi + kPi / 2 - delta;
    double flo = tanx_residual(lo);
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double fm = tanx_residual(mid);
      if (flo * fm <= 0.0) {
        hi = mid;
      } else {
        lo = mid;
        flo = fm;
      }
    }
    fresh.push_back(0.5 * (lo + hi));
  }
  std::scoped_lock lock(mu);
  if (static_cast<int>(memo.size()) < m) memo = std::move(fresh);
  return memo[m - 1];
}

double conjugate_time(const GeodesicParams& p, int n) {
  if (n < 1) throw std::domain_error("conjugate_time: n must be >= 1");
  if (is_abnormal(p)) {
    throw std::domain_error(
        "conjugate_time: undefined on the abnormal branch (alpha2 = +-1)");
  }
  const double w = frame(p, 0.0).w;
  if (n % 2 == 1) return 2.0 * kPi * ((n + 1) / 2) / w;
  return 2.0 * tan_x_root(n / 2) / w;
}

double conjugate_criterion(const GeodesicParams& p, double t) {
  if (is_abnormal(p)) {
    throw std::domain_error(
        "conjugate_criterion: undefined on the abnormal branch");
  }
  const double h = 0.5 * frame(p, 0.0).w * t;
  return std::sin(h) * (std::sin(h) - h * std::cos(h));
}

CutInfo cut_time(const GeodesicParams& p) {
  if (is_abnormal(p)) return {kInf, LocusClass::MetricLine, kInf};
  const double w = frame(p, 0.0).w;
  const double t_conj = 2.0 * kPi / w;
  if (p.group == GroupKind::Su2R) {
    return {t_conj, LocusClass::LocalBranch, t_conj};
  }
  const double b = std::abs(effective_beta(p));
  const double s2 = 1.0 - p.alpha2 * p.alpha2;
  if (b >= std::sqrt(s2 / 3.0)) {
    return {t_conj, LocusClass::LocalBranch, t_conj};
  }
  // F is strictly decreasing on (0, 2pi/w) in this regime, with F(0) = 1 and
  // F(2pi/w) < 0; plain bisection on the certified bracket.
  const auto F = [w, b](double t) {
    return std::cos(0.5 * w * t) * std::cos(0.5 * b * t) +
           (b / w) * std::sin(0.5 * w * t) * std::sin(0.5 * b * t);
  };
  const double eps = 1e-12 * t_conj;
  double lo = eps, hi = t_conj - eps;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (F(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), LocusClass::GlobalBranch, t_conj};
}

namespace {

// |A| = 1 within tol. The B-block is then forced to 0 by the group law.
bool on_equator(const Su2RPoint& g, double tol) {
  return std::abs(std::abs(g.A) - 1.0) <= tol;
}

// Distance of x to the nearest multiple of 2*pi.
double mod2pi_distance(double x) {
  return std::abs(std::remainder(x, 2.0 * kPi));
}

}  // namespace

bool in_first_conjugate_locus(const Su2RPoint& g, BasisKind metric,
                              double tol) {
  if (!on_equator(g, tol)) return false;
  if (metric == BasisKind::D2) return std::abs(g.A - 1.0) > tol;
  // D1: v must avoid -2 Arg(A), i.e. v/2 + arg(A) must avoid 2*pi*Z.
  return mod2pi_distance(0.5 * g.v + std::arg(g.A)) > tol;
}

bool in_first_conjugate_locus(const So3RPoint& g, BasisKind metric,
                              double tol) {
  const auto [l1, l2] = lifts(g);
  return in_first_conjugate_locus(l1, metric, tol) ||
         in_first_conjugate_locus(l2, metric, tol);
}

std::optional<LocusClass> in_cut_locus(const Su2RPoint& g, BasisKind metric,
                                       double tol) {
  // Cut = Conj^1 on SU(2)xR.
  if (in_first_conjugate_locus(g, metric, tol)) return LocusClass::LocalBranch;
  return std::nullopt;
}

namespace {

// z-rotation detector; on success stores the angle in [0, 2*pi).
bool z_rotation_angle(const Mat3& C, double tol, double& psi) {
  if (std::abs(C(0, 2)) > tol || std::abs(C(1, 2)) > tol ||
      std::abs(C(2, 0)) > tol || std::abs(C(2, 1)) > tol ||
      std::abs(C(2, 2) - 1.0) > tol) {
    return false;
  }
  if (std::abs(C(0, 0) - C(1, 1)) > tol || std::abs(C(0, 1) + C(1, 0)) > tol) {
    return false;
  }
  psi = std::atan2(C(1, 0), C(0, 0));
  if (psi < 0.0) psi += 2.0 * kPi;
  return true;
}

Mat3 rot_z(double theta) {
  Mat3 r{};
  const double c = std::cos(theta), s = std::sin(theta);
  r.a = {c, -s, 0, s, c, 0, 0, 0, 1};
  return r;
}

bool symmetric_trace_minus_one(const Mat3& C, double tol) {
  return max_abs_diff(C, transpose(C)) <= tol &&
         std::abs(C(0, 0) + C(1, 1) + C(2, 2) + 1.0) <= tol;
}

}  // namespace

std::optional<LocusClass> in_cut_locus(const So3RPoint& g, BasisKind metric,
                                       double tol, bool positive_n_only) {
  double psi = 0.0;
  if (metric == BasisKind::D2) {
    // Local and global branches overlap at psi = pi; local is reported first.
    if (z_rotation_angle(g.C, tol, psi) && psi > tol && psi < 2.0 * kPi - tol) {
      return LocusClass::LocalBranch;
    }
    if (symmetric_trace_minus_one(g.C, tol)) return LocusClass::GlobalBranch;
    return std::nullopt;
  }
  // D1: local branch is the z-rotation family with psi + v off 2*pi*n.
  if (z_rotation_angle(g.C, tol, psi)) {
    const double s = psi + g.v;
    const double k = std::round(s / (2.0 * kPi));
    const bool excluded = std::abs(s - 2.0 * kPi * k) <= tol &&
                          (!positive_n_only || k >= 1.0);
    if (!excluded) return LocusClass::LocalBranch;
    return std::nullopt;
  }
  // Global branch: undo the v-rotation of the first two columns.
  if (symmetric_trace_minus_one(g.C * rot_z(g.v), tol)) {
    return LocusClass::GlobalBranch;
  }
  return std::nullopt;
}

}  // namespace srlie
