#include "srlie/algebra.hpp"

#include <cmath>

namespace srlie {

AlgebraVector operator+(const AlgebraVector& x, const AlgebraVector& y) {
  return {x.c1 + y.c1, x.c2 + y.c2, x.c3 + y.c3, x.c4 + y.c4};
}

AlgebraVector operator-(const AlgebraVector& x, const AlgebraVector& y) {
  return {x.c1 - y.c1, x.c2 - y.c2, x.c3 - y.c3, x.c4 - y.c4};
}

AlgebraVector operator*(double s, const AlgebraVector& x) {
  return {s * x.c1, s * x.c2, s * x.c3, s * x.c4};
}

namespace {

// [e_i, e_j] = sum_k table[i][j][k] e_k, filled from the two bracket tables
// and completed by antisymmetry.
StructureTable build_table(BasisKind basis) {
  StructureTable t{};
  auto set = [&t](int i, int j, int k, int val) {
    t[i - 1][j - 1][k - 1] = val;
    t[j - 1][i - 1][k - 1] = -val;
  };
  if (basis == BasisKind::D1) {
    // [e1,e2] = e3, [e1,e4] = -e3, [e1,e3] = e4, [e2,e3] = e1,
    // [e3,e4] = e1, [e2,e4] = 0.
    set(1, 2, 3, 1);
    set(1, 4, 3, -1);
    set(1, 3, 4, 1);
    set(2, 3, 1, 1);
    set(3, 4, 1, 1);
  } else {
    // [e1,e3] = e4, [e1,e4] = -e3, [e3,e4] = e1; e2 is central.
    set(1, 3, 4, 1);
    set(1, 4, 3, -1);
    set(3, 4, 1, 1);
  }
  return t;
}

const StructureTable kTableD1 = build_table(BasisKind::D1);
const StructureTable kTableD2 = build_table(BasisKind::D2);

}  // namespace

const StructureTable& structure_constants(BasisKind basis) {
  return basis == BasisKind::D1 ? kTableD1 : kTableD2;
}

AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y,
                      BasisKind basis) {
  const StructureTable& t = structure_constants(basis);
  const std::array<double, 4> xc{x.c1, x.c2, x.c3, x.c4};
  const std::array<double, 4> yc{y.c1, y.c2, y.c3, y.c4};
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    if (xc[i] == 0.0) continue;
    for (int j = 0; j < 4; ++j) {
      if (yc[j] == 0.0) continue;
      const double c = xc[i] * yc[j];
      for (int k = 0; k < 4; ++k) {
        if (t[i][j][k] != 0) out[k] += c * t[i][j][k];
      }
    }
  }
  return {out[0], out[1], out[2], out[3]};
}

AlgebraVector ad_e4_rotation(double theta, const AlgebraVector& x) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {x.c1 * c - x.c3 * s, x.c2, x.c1 * s + x.c3 * c, x.c4};
}

double sinc(double w) {
  const double aw = std::abs(w);
  if (aw < 1e-4) {
    const double w2 = w * w;
    return 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
  }
  return std::sin(w) / w;
}

double versinc(double w) {
  const double aw = std::abs(w);
  if (aw < 1e-4) {
    const double w2 = w * w;
    return 0.5 - w2 / 24.0 + w2 * w2 / 720.0;
  }
  return (1.0 - std::cos(w)) / (w * w);
}

Su2Unit exp_su2(const Su2Tangent& z) {
  const double w = std::sqrt(z.X * z.X + std::norm(z.Y));
  const double cw = std::cos(w), sw = sinc(w);
  return {std::complex<double>(cw, sw * z.X), sw * z.Y};
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat3 transpose(const Mat3& m) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = m(j, i);
  return r;
}

double det3(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double max_abs_diff(const Mat3& x, const Mat3& y) {
  double r = 0.0;
  for (int i = 0; i < 9; ++i) r = std::max(r, std::abs(x.a[i] - y.a[i]));
  return r;
}

double orthogonality_defect(const Mat3& m) {
  return max_abs_diff(transpose(m) * m, Mat3::identity());
}

Mat3 exp_so3(const So3Tangent& c) {
  const double w =
      std::sqrt(c.c12 * c.c12 + c.c13 * c.c13 + c.c23 * c.c23);
  Mat3 C{};
  C.a = {0.0, c.c12, c.c13, -c.c12, 0.0, c.c23, -c.c13, -c.c23, 0.0};
  const double s = sinc(w), nu = versinc(w);
  const Mat3 C2 = C * C;
  Mat3 r = Mat3::identity();
  for (int i = 0; i < 9; ++i) r.a[i] += s * C.a[i] + nu * C2.a[i];
  return r;
}

}  // namespace srlie
