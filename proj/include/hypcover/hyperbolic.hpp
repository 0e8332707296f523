#pragma once

#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "hypcover/unimat.hpp"

namespace hypcover {

using Complex = std::complex<double>;

/// Point of the upper half-plane; construction rejects Im <= 0 and non-finite input.
class HPoint {
 public:
  HPoint(double re, double im);
  explicit HPoint(Complex z) : HPoint(z.real(), z.imag()) {}

  /// Parses "x+yi" / "x-yi" with decimal doubles, e.g. "-0.5+0.5i".
  static HPoint parse(std::string_view text);
  /// Shortest round-trip "x+yi" form.
  std::string to_string() const;

  double re() const { return re_; }
  double im() const { return im_; }
  Complex complex() const { return {re_, im_}; }

  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  double re_;
  double im_;
};

/// Piecewise path: consecutive nodes joined by Euclidean segments.
class HPath {
 public:
  /// At least two nodes, consecutive nodes distinct (DegeneratePair otherwise).
  explicit HPath(std::vector<HPoint> nodes);

  const std::vector<HPoint>& nodes() const { return nodes_; }

 private:
  std::vector<HPoint> nodes_;
};

/// Hyperbolic geodesic segment: a vertical line or a circular arc centred on the real axis.
struct Geodesic {
  enum class Kind { vertical, arc };

  Kind kind = Kind::vertical;
  // vertical
  double abscissa = 0.0;
  double height_from = 0.0;
  double height_to = 0.0;
  // arc; angles in (0, pi)
  double center = 0.0;
  double radius = 0.0;
  double angle_from = 0.0;
  double angle_to = 0.0;

  Complex point(double t) const;
  Complex velocity(double t) const;
  HPoint start() const { return HPoint(point(0.0)); }
  HPoint end() const { return HPoint(point(1.0)); }
};

/// Mobius action z -> (az + b) / (cz + d) of a real matrix with det 1.
template <typename Derived>
HPoint mobius_apply(const Eigen::MatrixBase<Derived>& m, const HPoint& z) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_floating_point_v<Scalar>, "evaluate Mobius maps on a floating matrix");
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const double x = z.re(), y = z.im();
  const double den_re = c * x + d;
  const double den_im = c * y;
  const double norm = den_re * den_re + den_im * den_im;
  // Im is y / |cz + d|^2 for det 1, which keeps the result in the half-plane.
  const double re = (a * c * (x * x + y * y) + (a * d + b * c) * x + b * d) / norm;
  return HPoint(re, y / norm);
}

HPoint mobius_apply(const UniMat& m, const HPoint& z);

/// Closed form arcosh(1 + |z - w|^2 / (2 Im z Im w)).
double dist_h(const HPoint& z, const HPoint& w);

/// Infinitesimal density |v| / Im z.
double kr_density(const HPoint& z, Complex v);

/// Throws DegeneratePair when z == w.
Geodesic geodesic_between(const HPoint& z, const HPoint& w);

/// Integral of kr_density along the path, by refined composite Simpson.
double path_length_kr(const HPath& path);
double path_length_kr(const Geodesic& geodesic);

/// Length of the geodesic from z to w, computed by quadrature.
double dist_by_integration(const HPoint& z, const HPoint& w);

namespace quadrature {

inline constexpr double kRelTol = 1e-11;
inline constexpr int kMaxDoublings = 22;

/**
 * Composite Simpson on [0, 1], doubling the panel count until two
 * successive estimates differ by at most kRelTol * max(1, value).
 * Throws NoConvergence after kMaxDoublings doublings.
 */
double simpson_unit(const std::function<double(double)>& f);

}  // namespace quadrature

}  // namespace hypcover
