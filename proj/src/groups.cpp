#include "srlie/groups.hpp"

#include <cmath>
#include <stdexcept>

namespace srlie {

namespace {

constexpr double kConstructTol = 1e-10;

Mat3 inverse3(const Mat3& m) {
  const double d = det3(m);
  Mat3 r{};
  r(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / d;
  r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / d;
  r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / d;
  r(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / d;
  r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / d;
  r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / d;
  r(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / d;
  r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / d;
  r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / d;
  return r;
}

// Nearest-orthogonal projection, Newton iteration X <- (X + X^-T)/2.
Mat3 polar_project(Mat3 m) {
  for (int it = 0; it < 8; ++it) {
    const Mat3 inv_t = transpose(inverse3(m));
    Mat3 next{};
    for (int i = 0; i < 9; ++i) next.a[i] = 0.5 * (m.a[i] + inv_t.a[i]);
    if (max_abs_diff(next, m) < 1e-15) return next;
    m = next;
  }
  return m;
}

}  // namespace

Su2RPoint::Su2RPoint(std::complex<double> A_, std::complex<double> B_,
                     double v_)
    : A(A_), B(B_), v(v_) {
  const double n2 = std::norm(A) + std::norm(B);
  if (!std::isfinite(n2) || std::abs(std::sqrt(n2) - 1.0) > kConstructTol) {
    throw std::invalid_argument(
        "Su2RPoint: |(A, B)| deviates from 1 beyond 1e-10");
  }
  // Renormalize only when needed so reconstruction is bitwise idempotent.
  if (std::abs(n2 - 1.0) > 2e-15) {
    const double n = std::sqrt(n2);
    A /= n;
    B /= n;
  }
}

So3RPoint::So3RPoint(const Mat3& C_, double v_) : C(C_), v(v_) {
  const double defect = orthogonality_defect(C);
  if (!std::isfinite(defect) || defect > kConstructTol || det3(C) <= 0.0) {
    throw std::invalid_argument(
        "So3RPoint: C is not special orthogonal within 1e-10");
  }
  if (defect > 2e-15) C = polar_project(C);
}

Su2RPoint su2r_mul(const Su2RPoint& g, const Su2RPoint& h) {
  // 2x2 complex block product of [[A,B],[-conj(B),conj(A)]] matrices.
  return {g.A * h.A - g.B * std::conj(h.B), g.A * h.B + g.B * std::conj(h.A),
          g.v + h.v};
}

Su2RPoint su2r_inverse(const Su2RPoint& g) {
  return {std::conj(g.A), -g.B, -g.v};
}

So3RPoint so3r_mul(const So3RPoint& g, const So3RPoint& h) {
  return {g.C * h.C, g.v + h.v};
}

So3RPoint so3r_inverse(const So3RPoint& g) { return {transpose(g.C), -g.v}; }

std::array<double, 4> ambient_coords(const AlgebraVector& x, BasisKind basis) {
  // D1: e1=E1, e2=E4-E3, e3=E2, e4=E3;  D2: e1=E1, e2=E4, e3=E2, e4=E3.
  if (basis == BasisKind::D1) return {x.c1, x.c3, x.c4 - x.c2, x.c2};
  return {x.c1, x.c3, x.c4, x.c2};
}

AlgebraVector from_ambient_coords(const std::array<double, 4>& a,
                                  BasisKind basis) {
  if (basis == BasisKind::D1) return {a[0], a[3], a[1], a[2] + a[3]};
  return {a[0], a[3], a[1], a[2]};
}

Su2RPoint exp_su2r(const AlgebraVector& x, BasisKind basis) {
  const auto a = ambient_coords(x, basis);
  // E1 = (X=0, Y=1/2), E2 = (0, i/2), E3 = (1/2, 0) in su(2).
  const Su2Unit u =
      exp_su2({a[2] / 2.0, {a[0] / 2.0, a[1] / 2.0}});
  return {u.A, u.B, a[3]};
}

So3RPoint exp_so3r(const AlgebraVector& x, BasisKind basis) {
  const auto a = ambient_coords(x, basis);
  // E1 = e32 - e23, E2 = e13 - e31, E3 = e21 - e12.
  const Mat3 C = exp_so3({-a[2], a[1], -a[0]});
  return {C, a[3]};
}

Su2RPoint one_param_su2r(const AlgebraVector& x, BasisKind basis, double t) {
  return exp_su2r(t * x, basis);
}

So3RPoint one_param_so3r(const AlgebraVector& x, BasisKind basis, double t) {
  return exp_so3r(t * x, basis);
}

Mat3 covering_pi(std::complex<double> A, std::complex<double> B) {
  const double n2 = std::norm(A) + std::norm(B);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kConstructTol) {
    throw std::invalid_argument("covering_pi: (A,B) is not a unit pair");
  }
  const double a1 = A.real(), a2 = A.imag(), b1 = B.real(), b2 = B.imag();
  Mat3 r{};
  r(0, 0) = a1 * a1 - a2 * a2 + b1 * b1 - b2 * b2;
  r(0, 1) = 2 * (b1 * b2 - a1 * a2);
  r(0, 2) = 2 * (a1 * b2 + a2 * b1);
  r(1, 0) = 2 * (a1 * a2 + b1 * b2);
  r(1, 1) = a1 * a1 - a2 * a2 - b1 * b1 + b2 * b2;
  r(1, 2) = 2 * (a2 * b2 - a1 * b1);
  r(2, 0) = 2 * (a2 * b1 - a1 * b2);
  r(2, 1) = 2 * (a1 * b1 + a2 * b2);
  r(2, 2) = a1 * a1 + a2 * a2 - b1 * b1 - b2 * b2;
  return r;
}

So3RPoint covering_pi_tilde(const Su2RPoint& g) {
  return {covering_pi(g.A, g.B), g.v};
}

std::pair<Su2RPoint, Su2RPoint> lifts(const So3RPoint& p) {
  // Pi(A,B) equals the rotation of the unit quaternion
  // (w,x,y,z) = (Re A, Re B, Im B, Im A). Shepperd-style extraction:
  // pick the branch whose pivot radicand is largest.
  const Mat3& r = p.C;
  const double tr = r(0, 0) + r(1, 1) + r(2, 2);
  double w, x, y, z;
  const double q0 = 1.0 + tr;
  const double q1 = 1.0 + 2.0 * r(0, 0) - tr;
  const double q2 = 1.0 + 2.0 * r(1, 1) - tr;
  const double q3 = 1.0 + 2.0 * r(2, 2) - tr;
  if (q0 >= q1 && q0 >= q2 && q0 >= q3) {
    w = 0.5 * std::sqrt(q0);
    x = (r(2, 1) - r(1, 2)) / (4 * w);
    y = (r(0, 2) - r(2, 0)) / (4 * w);
    z = (r(1, 0) - r(0, 1)) / (4 * w);
  } else if (q1 >= q2 && q1 >= q3) {
    x = 0.5 * std::sqrt(q1);
    w = (r(2, 1) - r(1, 2)) / (4 * x);
    y = (r(0, 1) + r(1, 0)) / (4 * x);
    z = (r(0, 2) + r(2, 0)) / (4 * x);
  } else if (q2 >= q3) {
    y = 0.5 * std::sqrt(q2);
    w = (r(0, 2) - r(2, 0)) / (4 * y);
    x = (r(0, 1) + r(1, 0)) / (4 * y);
    z = (r(1, 2) + r(2, 1)) / (4 * y);
  } else {
    z = 0.5 * std::sqrt(q3);
    w = (r(1, 0) - r(0, 1)) / (4 * z);
    x = (r(0, 2) + r(2, 0)) / (4 * z);
    y = (r(1, 2) + r(2, 1)) / (4 * z);
  }
  const Su2RPoint g{{w, z}, {x, y}, p.v};
  return {g, {-g.A, -g.B, g.v}};
}

}  // namespace srlie
