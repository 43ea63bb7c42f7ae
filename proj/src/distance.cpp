#include "srlie/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "srlie/oracle.hpp"

namespace srlie {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCaseTol = 1e-12;

double wrap_pi(double x) {
  double r = std::remainder(x, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

// The two-equation xi-systems of cases 4/5 pin one angle as a continuous,
// monotone function of xi on |xi| <= a/s; the root is where that angle
// meets the data phase tau. Shared by both groups.
struct PhaseSolve {
  double xi;
  double psi;       // arcsin(s * sqrt(1 + xi^2)) at the root
  double residual;  // max defining-equation residual
};

PhaseSolve solve_phase(double a, double s, double tau, int case_label,
                       double cos_data, double sin_data) {
  const auto angle = [a, s, case_label](double xi) {
    const double q = std::sqrt(1.0 + xi * xi);
    const double psi = std::asin(std::min(s * q, 1.0));
    const double tilt = std::asin(clamp1(xi * s / a));
    if (case_label == 4) return -(xi / q) * psi + tilt;
    return (xi / q) * (kPi - psi) + tilt;
  };
  const auto h = [&](double xi) { return angle(xi) - tau; };

  const double ximax = a / s;
  const int kScan = 128;
  double root = 0.0;
  bool found = false;
  double prev_x = -ximax, prev_h = h(prev_x);
  for (int i = 1; i <= kScan && !found; ++i) {
    const double x = -ximax + 2.0 * ximax * i / kScan;
    const double hx = h(x);
    if (prev_h == 0.0) {
      root = prev_x;
      found = true;
    } else if (prev_h * hx <= 0.0 && std::abs(prev_h - hx) < kPi) {
      root = bisect(h, prev_x, x, 1e-15);
      found = true;
    }
    prev_x = x;
    prev_h = hx;
  }
  if (!found) {
    throw SolverError("distance: no xi bracket found on the admissible range",
                      -ximax, ximax);
  }
  const double psi = std::asin(std::min(s * std::sqrt(1.0 + root * root), 1.0));
  const double th = angle(root);
  double res;
  if (case_label == 4) {
    res = std::max(std::abs(std::cos(th) - cos_data),
                   std::abs(std::sin(th) - sin_data));
  } else {
    res = std::max(std::abs(-std::cos(th) - cos_data),
                   std::abs(std::sin(th) - sin_data));
  }
  return {root, psi, res};
}

double compact_part_sq(double xi, double psi, int case_label) {
  const double ang = case_label == 4 ? psi : kPi - psi;
  return 4.0 / (1.0 + xi * xi) * ang * ang;
}

}  // namespace

DistanceResult dist_su2r_d2(const Su2RPoint& p) {
  const double a = std::abs(p.A);
  const double v = p.v;
  if (a < kCaseTol) {
    return {std::sqrt(v * v + kPi * kPi), 1, std::nullopt, 0.0};
  }
  if (a > 1.0 - kCaseTol) {
    const double arg = std::abs(std::arg(p.A));
    return {std::sqrt(v * v + 4.0 * arg * (2.0 * kPi - arg)), 2, std::nullopt,
            0.0};
  }
  const double s = std::sqrt(1.0 - a * a);
  const double disc = p.A.real() - a * std::sin(kPi * a / 2.0);
  if (std::abs(disc) <= kCaseTol) {
    return {std::sqrt(v * v + kPi * kPi * s * s), 3, std::nullopt, 0.0};
  }
  const int case_label = disc > 0.0 ? 4 : 5;
  const double tau =
      case_label == 4 ? std::arg(p.A) : wrap_pi(kPi - std::arg(p.A));
  const PhaseSolve ps = solve_phase(a, s, tau, case_label, p.A.real() / a,
                                    p.A.imag() / a);
  const double d2 = compact_part_sq(ps.xi, ps.psi, case_label);
  return {std::sqrt(v * v + d2), case_label, ps.xi, ps.residual};
}

DistanceResult dist_su2r_d1(const Su2RPoint& p) {
  const std::complex<double> tw = std::polar(1.0, 0.5 * p.v);
  return dist_su2r_d2({p.A * tw, p.B * std::conj(tw), p.v});
}

namespace {

DistanceResult so3r_rho2_signed(const So3RPoint& p, double sgn) {
  const double c33 = p.C(2, 2);
  const double c11 = p.C(0, 0), c22 = p.C(1, 1);
  const double v = p.v;
  if (c33 <= -1.0 + kCaseTol) {
    return {std::sqrt(v * v + kPi * kPi), 1, std::nullopt, 0.0};
  }
  if (c33 >= 1.0 - kCaseTol) {
    // z-rotation family: invert the printed system for u directly.
    const double cosu = -0.5 * std::sqrt(std::max(1.0 + c11 + c22 + c33, 0.0));
    const double sinu =
        0.5 * sgn * std::sqrt(std::max(1.0 - c11 - c22 + c33, 0.0));
    const double u = std::atan2(sinu, cosu);
    const double gap = std::max(kPi * kPi - u * u, 1e-300);
    return {std::sqrt(v * v + 4.0 * gap), 2, u / std::sqrt(gap), 0.0};
  }
  const double a = std::sqrt((1.0 + c33) / 2.0);
  const double s = std::sqrt((1.0 - c33) / 2.0);
  const double disc =
      std::cos(kPi * a) + (c11 + c22) / (1.0 + c33);
  if (std::abs(disc) <= kCaseTol) {
    return {std::sqrt(v * v + kPi * kPi * s * s), 3, std::nullopt, 0.0};
  }
  const double cosT =
      std::sqrt(std::max((1.0 + c11 + c22 + c33) / (2.0 * (1.0 + c33)), 0.0));
  const double sinT =
      sgn * std::sqrt(std::max((1.0 - c11 - c22 + c33) / (2.0 * (1.0 + c33)),
                               0.0));
  const int case_label = disc > 0.0 ? 4 : 5;
  const double phase = std::atan2(sinT, cosT);
  const double tau = case_label == 4 ? phase : wrap_pi(kPi - phase);
  const PhaseSolve ps = solve_phase(a, s, tau, case_label, cosT, sinT);
  const double d2 = compact_part_sq(ps.xi, ps.psi, case_label);
  return {std::sqrt(v * v + d2), case_label, ps.xi, ps.residual};
}

}  // namespace

DistanceResult dist_so3r_rho2(const So3RPoint& p) {
  if (max_abs_diff(p.C, Mat3::identity()) <= kCaseTol) {
    return {std::abs(p.v), 0, std::nullopt, 0.0};
  }
  const double anti = p.C(1, 0) - p.C(0, 1);
  if (anti != 0.0) return so3r_rho2_signed(p, anti > 0.0 ? 1.0 : -1.0);
  // Antisymmetric part vanishes exactly: both sign readings must agree.
  const DistanceResult plus = so3r_rho2_signed(p, 1.0);
  const DistanceResult minus = so3r_rho2_signed(p, -1.0);
  if (std::abs(plus.value - minus.value) > 1e-9) {
    throw SolverError(
        "dist_so3r_rho2: sign tie c21 = c12 yields inconsistent values",
        minus.value, plus.value);
  }
  return plus;
}

DistanceResult dist_so3r_rho1(const So3RPoint& p) {
  // Mix the first two columns by the v-rotation; third column fixed.
  const double c = std::cos(p.v), s = std::sin(p.v);
  Mat3 ct{};
  for (int i = 0; i < 3; ++i) {
    ct(i, 0) = p.C(i, 0) * c + p.C(i, 1) * s;
    ct(i, 1) = -p.C(i, 0) * s + p.C(i, 1) * c;
    ct(i, 2) = p.C(i, 2);
  }
  return dist_so3r_rho2({ct, p.v});
}

double splitting_check(const Su2RPoint& p) {
  const double d = dist_su2r_d2(p).value;
  const double d0 = dist_su2r_d2({p.A, p.B, 0.0}).value;
  return std::abs(d * d - p.v * p.v - d0 * d0);
}

double splitting_check(const So3RPoint& p) {
  const double d = dist_so3r_rho2(p).value;
  const double d0 = dist_so3r_rho2({p.C, 0.0}).value;
  return std::abs(d * d - p.v * p.v - d0 * d0);
}

double distance_between(const Su2RPoint& g, const Su2RPoint& h,
                        BasisKind metric) {
  const Su2RPoint rel = su2r_mul(su2r_inverse(g), h);
  return metric == BasisKind::D1 ? dist_su2r_d1(rel).value
                                 : dist_su2r_d2(rel).value;
}

double distance_between(const So3RPoint& g, const So3RPoint& h,
                        BasisKind metric) {
  const So3RPoint rel = so3r_mul(so3r_inverse(g), h);
  return metric == BasisKind::D1 ? dist_so3r_rho1(rel).value
                                 : dist_so3r_rho2(rel).value;
}

}  // namespace srlie
