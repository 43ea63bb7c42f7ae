#include "srlie/geodesics.hpp"

#include <cmath>
#include <stdexcept>

namespace srlie {

namespace {
constexpr double kAbnormalTol = 1e-12;
}

GeodesicParams GeodesicParams::make(double a1, double a2, double a3,
                                    double beta, BasisKind metric,
                                    GroupKind group) {
  const double n2 = a1 * a1 + a2 * a2 + a3 * a3;
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 1e-6) {
    throw std::invalid_argument(
        "GeodesicParams: alpha must be unit-norm within 1e-6");
  }
  const double n = std::sqrt(n2);
  GeodesicParams p{a1 / n, a2 / n, a3 / n, beta, metric, group};
  if (std::abs(p.alpha2) >= 1.0 - kAbnormalTol) {
    p.alpha2 = p.alpha2 > 0 ? 1.0 : -1.0;
    p.alpha1 = p.alpha3 = 0.0;
  }
  return p;
}

GeodesicParams GeodesicParams::from_phi0(double phi0, double alpha2,
                                         double beta, BasisKind metric,
                                         GroupKind group) {
  if (std::abs(alpha2) > 1.0) {
    throw std::invalid_argument("GeodesicParams: |alpha2| must be <= 1");
  }
  const double r = std::sqrt(std::max(0.0, 1.0 - alpha2 * alpha2));
  return make(r * std::cos(phi0), alpha2, r * std::sin(phi0), beta, metric,
              group);
}

double GeodesicParams::phi0() const { return std::atan2(alpha3, alpha1); }

bool is_abnormal(const GeodesicParams& p) {
  return std::abs(p.alpha2) >= 1.0 - kAbnormalTol;
}

double effective_beta(const GeodesicParams& p) {
  return p.metric == BasisKind::D1 ? p.beta - p.alpha2 : p.beta;
}

GeodesicFrame frame(const GeodesicParams& p, double t) {
  const double b = effective_beta(p);
  const double w = std::sqrt(1.0 - p.alpha2 * p.alpha2 + b * b);
  const double half = 0.5 * w * t;
  return {w, std::cos(half), 0.5 * t * sinc(half)};
}

Su2RPoint geodesic_su2r(const GeodesicParams& p, double t) {
  if (is_abnormal(p)) {
    if (p.metric == BasisKind::D2) return {{1.0, 0.0}, {0.0, 0.0}, p.alpha2 * t};
    const double half = 0.5 * p.alpha2 * t;
    return {{std::cos(half), -std::sin(half)}, {0.0, 0.0}, p.alpha2 * t};
  }
  const auto [w, n, m] = frame(p, t);
  const double b = effective_beta(p);
  const double ch = std::cos(0.5 * p.beta * t), sh = std::sin(0.5 * p.beta * t);
  const std::complex<double> A{n * ch + b * m * sh, b * m * ch - n * sh};
  const double r = m * std::sqrt(1.0 - p.alpha2 * p.alpha2);
  const double phase = 0.5 * p.beta * t + p.phi0();
  const std::complex<double> B{r * std::cos(phase), r * std::sin(phase)};
  return {A, B, p.alpha2 * t};
}

So3RPoint geodesic_so3r(const GeodesicParams& p, double t) {
  const double v = p.alpha2 * t;
  if (is_abnormal(p)) {
    if (p.metric == BasisKind::D2) return {Mat3::identity(), v};
    // z-rotation block of the abnormal D1 geodesic.
    Mat3 C{};
    const double c = std::cos(p.alpha2 * t), s = std::sin(p.alpha2 * t);
    C.a = {c, s, 0, -s, c, 0, 0, 0, 1};
    return {C, v};
  }
  // Columns assembled with mu = sin(wt)/w, nu = (1 - cos(wt))/w^2 and the
  // effective e4-frequency; the trailing rotation angle stays beta*t.
  const double b = effective_beta(p);
  const double w = std::sqrt(1.0 - p.alpha2 * p.alpha2 + b * b);
  const double mu = t * sinc(w * t);
  const double nu = t * t * versinc(w * t);
  const double a1 = p.alpha1, a3 = p.alpha3;
  const double cb = std::cos(p.beta * t), sb = std::sin(p.beta * t);

  const double e11 = 1.0 - nu * (a3 * a3 + b * b);
  const double e12 = a1 * a3 * nu - b * mu;
  const double e13 = a1 * b * nu + a3 * mu;
  const double e21 = a1 * a3 * nu + b * mu;
  const double e22 = 1.0 - nu * (a1 * a1 + b * b);
  const double e23 = a3 * b * nu - a1 * mu;
  const double e31 = a1 * b * nu - a3 * mu;
  const double e32 = a3 * b * nu + a1 * mu;
  const double e33 = 1.0 - nu * (a1 * a1 + a3 * a3);

  Mat3 C{};
  C(0, 0) = e11 * cb - e12 * sb;
  C(1, 0) = e21 * cb - e22 * sb;
  C(2, 0) = e31 * cb - e32 * sb;
  C(0, 1) = e11 * sb + e12 * cb;
  C(1, 1) = e21 * sb + e22 * cb;
  C(2, 1) = e31 * sb + e32 * cb;
  C(0, 2) = e13;
  C(1, 2) = e23;
  C(2, 2) = e33;
  return {C, v};
}

GeodesicParams reparam_d1_to_d2(const GeodesicParams& p) {
  if (p.metric != BasisKind::D1) {
    throw std::invalid_argument("reparam_d1_to_d2: params must carry D1");
  }
  GeodesicParams q = p;
  q.metric = BasisKind::D2;
  q.beta = p.beta - p.alpha2;
  return q;
}

GeodesicParams leftshift_params(const GeodesicParams& p, double t0) {
  const double c = std::cos(p.beta * t0), s = std::sin(p.beta * t0);
  GeodesicParams q = p;
  q.alpha1 = p.alpha1 * c - p.alpha3 * s;
  q.alpha3 = p.alpha1 * s + p.alpha3 * c;
  return q;
}

}  // namespace srlie
