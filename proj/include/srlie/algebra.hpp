#pragma once

#include <array>
#include <complex>

// The Lie algebra su(2) + R in its two adapted bases, with exact integer
// structure constants and closed-form exponentials for the compact blocks.

namespace srlie {

/// Selects which adapted basis (and hence which bracket table and metric)
/// is in effect. D1 and D2 differ only in the meaning of e2 and e4.
enum class BasisKind { D1, D2 };

enum class GroupKind { Su2R, So3R };

/// Coefficient 4-tuple in the ordered basis e1..e4. Basis-relative: the
/// same tuple names different matrices under D1 and D2.
struct AlgebraVector {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;
};

AlgebraVector operator+(const AlgebraVector& x, const AlgebraVector& y);
AlgebraVector operator-(const AlgebraVector& x, const AlgebraVector& y);
AlgebraVector operator*(double s, const AlgebraVector& x);

// table[i][j][k] is the coefficient of e_{k+1} in [e_{i+1}, e_{j+1}].
using StructureTable = std::array<std::array<std::array<int, 4>, 4>, 4>;

const StructureTable& structure_constants(BasisKind basis);

AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y,
                      BasisKind basis);

/// Ad(exp(theta*e4)): rotates the (c1,c3) pair by theta, fixes c2 and c4.
/// Identical in both bases since ad(e4) = e31 - e13 under each table.
AlgebraVector ad_e4_rotation(double theta, const AlgebraVector& x);

/// Skew-hermitian traceless 2x2 matrix [[iX, Y], [-conj(Y), -iX]].
struct Su2Tangent {
  double X = 0.0;
  std::complex<double> Y{0.0, 0.0};
};

/// Unit pair (A,B) representing [[A, B], [-conj(B), conj(A)]] in SU(2).
struct Su2Unit {
  std::complex<double> A{1.0, 0.0};
  std::complex<double> B{0.0, 0.0};
};

/// exp(z) = cos(w)*I + sinc(w)*z with w = sqrt(X^2 + |Y|^2).
Su2Unit exp_su2(const Su2Tangent& z);

/// Dense row-major 3x3 matrix, just enough operations for this library.
struct Mat3 {
  std::array<double, 9> a{1, 0, 0, 0, 1, 0, 0, 0, 1};

  double& operator()(int i, int j) { return a[3 * i + j]; }
  double operator()(int i, int j) const { return a[3 * i + j]; }

  static Mat3 identity() { return Mat3{}; }
};

Mat3 operator*(const Mat3& x, const Mat3& y);
Mat3 transpose(const Mat3& m);
double det3(const Mat3& m);
double max_abs_diff(const Mat3& x, const Mat3& y);
/// max-norm of M^T M - I.
double orthogonality_defect(const Mat3& m);

/// Upper triangle of a skew-symmetric 3x3 matrix; the full matrix is
/// reconstructed with c21 = -c12 etc.
struct So3Tangent {
  double c12 = 0.0, c13 = 0.0, c23 = 0.0;
};

/// Rodrigues: exp(C) = I + sinc(w)*C + versinc(w)*C^2,
/// w = sqrt(c12^2 + c13^2 + c23^2).
Mat3 exp_so3(const So3Tangent& c);

/// sin(w)/w, Taylor series below |w| = 1e-4.
double sinc(double w);
/// (1 - cos w)/w^2, Taylor series below |w| = 1e-4.
double versinc(double w);

}  // namespace srlie
