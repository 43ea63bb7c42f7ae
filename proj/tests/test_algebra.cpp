#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "srlie/algebra.hpp"

using namespace srlie;

namespace {

constexpr double kPi = std::numbers::pi;

AlgebraVector basis_vec(int i) {
  AlgebraVector x{};
  (&x.c1)[i] = 1.0;
  return x;
}

double coeff(const AlgebraVector& x, int i) { return (&x.c1)[i]; }

double max_coeff_diff(const AlgebraVector& x, const AlgebraVector& y) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(coeff(x, i) - coeff(y, i)));
  return m;
}

// Dense 2x2 complex arithmetic for the series/squaring oracle.
struct C2 {
  std::complex<double> a, b, c, d;
};
C2 mul(const C2& x, const C2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
C2 expm2(C2 z) {
  int squarings = 0;
  double nrm = std::abs(z.a) + std::abs(z.b) + std::abs(z.c) + std::abs(z.d);
  while (nrm > 0.25) {
    z = {0.5 * z.a, 0.5 * z.b, 0.5 * z.c, 0.5 * z.d};
    nrm *= 0.5;
    ++squarings;
  }
  C2 sum{1, 0, 0, 1}, term{1, 0, 0, 1};
  for (int k = 1; k <= 20; ++k) {
    term = mul(term, z);
    const double s = 1.0 / k;
    term = {s * term.a, s * term.b, s * term.c, s * term.d};
    sum = {sum.a + term.a, sum.b + term.b, sum.c + term.c, sum.d + term.d};
  }
  for (int i = 0; i < squarings; ++i) sum = mul(sum, sum);
  return sum;
}

Mat3 expm3(Mat3 z) {
  int squarings = 0;
  double nrm = 0.0;
  for (double e : z.a) nrm += std::abs(e);
  while (nrm > 0.25) {
    for (double& e : z.a) e *= 0.5;
    nrm *= 0.5;
    ++squarings;
  }
  Mat3 sum = Mat3::identity();
  Mat3 term = Mat3::identity();
  for (int k = 1; k <= 20; ++k) {
    term = term * z;
    for (double& e : term.a) e /= k;
    for (int i = 0; i < 9; ++i) sum.a[i] += term.a[i];
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace

TEST_CASE("bracket table entries") {
  // D1: [e1,e2] = e3, [e1,e4] = -e3
  auto b12 = bracket(basis_vec(0), basis_vec(1), BasisKind::D1);
  CHECK(b12.c3 == 1.0);
  CHECK(b12.c1 == 0.0);
  auto b14 = bracket(basis_vec(0), basis_vec(3), BasisKind::D1);
  CHECK(b14.c3 == -1.0);
  // D2: [e2, e4] = 0
  auto b24 = bracket(basis_vec(1), basis_vec(3), BasisKind::D2);
  CHECK(max_coeff_diff(b24, {}) == 0.0);
  // antisymmetry: [x,x] = 0 up to rounding in the summed cross terms
  for (auto basis : {BasisKind::D1, BasisKind::D2}) {
    AlgebraVector x{0.3, -1.2, 0.7, 2.5};
    CHECK(max_coeff_diff(bracket(x, x, basis), {}) < 1e-15);
  }
}

TEST_CASE("structure constants match brackets and antisymmetry") {
  const auto& c2 = structure_constants(BasisKind::D2);
  CHECK(c2[0][2][3] == 1);  // [e1,e3] = e4
  const auto& c1 = structure_constants(BasisKind::D1);
  CHECK(c1[0][1][2] == 1);   // [e1,e2] = e3
  CHECK(c1[0][3][2] == -1);  // [e1,e4] = -e3
  for (auto basis : {BasisKind::D1, BasisKind::D2}) {
    const auto& c = structure_constants(basis);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
          CHECK(c[i][j][k] == -c[j][i][k]);
          // table reproduces the bracket op
          auto br = bracket(basis_vec(i), basis_vec(j), basis);
          CHECK(coeff(br, k) == c[i][j][k]);
        }
      }
    }
  }
}

TEST_CASE("Jacobi identity on all basis triples") {
  for (auto basis : {BasisKind::D1, BasisKind::D2}) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
          auto x = basis_vec(i), y = basis_vec(j), z = basis_vec(k);
          auto s = bracket(x, bracket(y, z, basis), basis) +
                   bracket(y, bracket(z, x, basis), basis) +
                   bracket(z, bracket(x, y, basis), basis);
          CHECK(max_coeff_diff(s, {}) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("exp_su2 special values") {
  auto id = exp_su2({0.0, {0.0, 0.0}});
  CHECK(id.A == std::complex<double>(1.0, 0.0));
  CHECK(id.B == std::complex<double>(0.0, 0.0));
  auto half_turn = exp_su2({kPi, {0.0, 0.0}});
  CHECK(std::abs(half_turn.A - std::complex<double>(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(half_turn.B) < 1e-15);
}

TEST_CASE("exp_su2 against series/squaring oracle, inverse law") {
  std::mt19937_64 gen(11);
  auto uni = [&](double lo, double hi) {
    return lo + (hi - lo) * ((gen() >> 11) * 0x1.0p-53);
  };
  double worst = 0.0, worst_inv = 0.0, worst_unit = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Su2Tangent z{uni(-5, 5), {uni(-5, 5), uni(-5, 5)}};
    const auto e = exp_su2(z);
    const C2 zm{{0.0, z.X}, z.Y, -std::conj(z.Y), {0.0, -z.X}};
    const C2 o = expm2(zm);
    worst = std::max({worst, std::abs(e.A - o.a), std::abs(e.B - o.b)});
    const auto einv = exp_su2({-z.X, -z.Y});
    const std::complex<double> pa = e.A * einv.A - e.B * std::conj(einv.B);
    const std::complex<double> pb = e.A * einv.B + e.B * std::conj(einv.A);
    worst_inv = std::max({worst_inv, std::abs(pa - 1.0), std::abs(pb)});
    worst_unit = std::max(worst_unit,
                          std::abs(std::norm(e.A) + std::norm(e.B) - 1.0));
  }
  CHECK(worst < 1e-12);
  CHECK(worst_inv < 1e-12);
  CHECK(worst_unit < 1e-12);
}

TEST_CASE("exp_so3 special values and orthogonality") {
  const Mat3 id = exp_so3({0, 0, 0});
  CHECK(max_abs_diff(id, Mat3::identity()) == 0.0);
  const Mat3 r = exp_so3({-kPi, 0, 0});
  Mat3 want{};
  want.a = {-1, 0, 0, 0, -1, 0, 0, 0, 1};
  CHECK(max_abs_diff(r, want) < 1e-15);

  std::mt19937_64 gen(12);
  auto uni = [&](double lo, double hi) {
    return lo + (hi - lo) * ((gen() >> 11) * 0x1.0p-53);
  };
  double worst = 0.0, worst_orth = 0.0, worst_det = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const So3Tangent c{uni(-5, 5), uni(-5, 5), uni(-5, 5)};
    const Mat3 e = exp_so3(c);
    Mat3 z{};
    z.a = {0, c.c12, c.c13, -c.c12, 0, c.c23, -c.c13, -c.c23, 0};
    worst = std::max(worst, max_abs_diff(e, expm3(z)));
    worst_orth = std::max(worst_orth, orthogonality_defect(e));
    worst_det = std::max(worst_det, std::abs(det3(e) - 1.0));
  }
  CHECK(worst < 1e-12);
  CHECK(worst_orth < 1e-12);
  CHECK(worst_det < 1e-12);
}

TEST_CASE("ad_e4_rotation") {
  const AlgebraVector x{0.3, -1.0, 0.7, 2.0};
  CHECK(max_coeff_diff(ad_e4_rotation(0.0, x), x) == 0.0);
  const auto e3 = ad_e4_rotation(kPi / 2, basis_vec(0));
  CHECK(std::abs(e3.c3 - 1.0) < 1e-15);
  CHECK(std::abs(e3.c1) < 1e-15);
  // composition law and invariant
  const auto once = ad_e4_rotation(0.4, ad_e4_rotation(0.9, x));
  const auto both = ad_e4_rotation(1.3, x);
  CHECK(max_coeff_diff(once, both) < 1e-12);
  CHECK(std::abs(once.c1 * once.c1 + once.c3 * once.c3 -
                 (x.c1 * x.c1 + x.c3 * x.c3)) < 1e-12);
  CHECK(once.c2 == x.c2);
  CHECK(once.c4 == x.c4);
}

TEST_CASE("sinc and versinc near zero") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(versinc(0.0) == 0.5);
  CHECK(std::abs(sinc(1e-6) - 1.0) < 1e-12);
  CHECK(std::abs(versinc(1e-6) - 0.5) < 1e-12);
  CHECK(std::abs(sinc(2.0) - std::sin(2.0) / 2.0) < 1e-15);
  CHECK(std::abs(versinc(2.0) - (1 - std::cos(2.0)) / 4.0) < 1e-15);
}
