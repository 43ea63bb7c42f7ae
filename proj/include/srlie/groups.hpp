#pragma once

#include <array>
#include <complex>
#include <utility>

#include "srlie/algebra.hpp"

// Group elements of SU(2)xR and SO(3)xR, one-parameter subgroups, and the
// double covering between them.

namespace srlie {

/// (A,B,v) with |A|^2 + |B|^2 = 1; the matrix realization carries e^v but v
/// is stored additively. Construction renormalizes within 1e-10 of the unit
/// sphere and throws std::invalid_argument beyond that.
struct Su2RPoint {
  std::complex<double> A{1.0, 0.0};
  std::complex<double> B{0.0, 0.0};
  double v = 0.0;

  Su2RPoint() = default;
  Su2RPoint(std::complex<double> A_, std::complex<double> B_, double v_);

  static Su2RPoint identity() { return {}; }
};

/// (C,v) with C special orthogonal. Construction projects C to the nearest
/// rotation when within 1e-10 of orthogonality, throws otherwise.
struct So3RPoint {
  Mat3 C{};
  double v = 0.0;

  So3RPoint() = default;
  So3RPoint(const Mat3& C_, double v_);

  static So3RPoint identity() { return {}; }
};

Su2RPoint su2r_mul(const Su2RPoint& g, const Su2RPoint& h);
Su2RPoint su2r_inverse(const Su2RPoint& g);
So3RPoint so3r_mul(const So3RPoint& g, const So3RPoint& h);
So3RPoint so3r_inverse(const So3RPoint& g);

/// Coefficients of an algebra vector on the ambient basis E1..E4
/// (compact part a[0..2], line part a[3]), resolving the BasisKind.
std::array<double, 4> ambient_coords(const AlgebraVector& x, BasisKind basis);

/// Inverse of ambient_coords.
AlgebraVector from_ambient_coords(const std::array<double, 4>& a,
                                  BasisKind basis);

Su2RPoint exp_su2r(const AlgebraVector& x, BasisKind basis);
So3RPoint exp_so3r(const AlgebraVector& x, BasisKind basis);

Su2RPoint one_param_su2r(const AlgebraVector& x, BasisKind basis, double t);
So3RPoint one_param_so3r(const AlgebraVector& x, BasisKind basis, double t);

/// The double covering SU(2) -> SO(3). Rejects non-unit (A,B).
Mat3 covering_pi(std::complex<double> A, std::complex<double> B);

/// (A,B,v) -> (Pi(A,B), v).
So3RPoint covering_pi_tilde(const Su2RPoint& g);

/// The two preimages {(A,B,v), (-A,-B,v)} of a point under covering_pi_tilde,
/// recovered by quaternion extraction with largest-diagonal pivoting.
std::pair<Su2RPoint, Su2RPoint> lifts(const So3RPoint& p);

}  // namespace srlie
