#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "wbirkhoff/lyapunov.hpp"
#include "wbirkhoff/rotation.hpp"

namespace wbirkhoff {

// theta_n = theta0 + n rho (mod 1) per component, lifted exactly.
template <class Real>
AngleSequence<Real> rigid_rotation_orbit(std::span<const Real> rho, std::span<const Real> theta0, std::size_t n);

// theta + alpha cos(2 pi theta) + beta sin(2 pi theta), mod 1
template <class Real>
Real perturbed_observation(Real theta, Real alpha, Real beta);

// Angle of (cos 2 pi theta, sin 2 pi theta) seen from (1/2, 0), mod 1.
template <class Real>
Real offcenter_observer(Real theta);

// Polar angle about a center on the torus [0, period)^2, using the chart in
// which the center sits in the middle (offsets wrapped to [-period/2, period/2)).
template <class Real>
std::vector<Real> torus_angular_coordinate(std::span<const Vec2<Real>> points, Vec2<Real> center, Real period);

// (x + y, y + alpha sin(x + y)) mod 2 pi. Evaluated in turns, where the
// wrap is exact; the orbit carries turns between steps and converts only
// for output, so long orbits do not drift off their invariant circle.
template <class Real>
Vec2<Real> standard_map_step(const Vec2<Real>& p, Real alpha);
template <class Real>
Mat2<Real> standard_map_jacobian(const Vec2<Real>& p, Real alpha);
template <class Real>
std::vector<Vec2<Real>> standard_map_orbit(Vec2<Real> start, Real alpha, std::size_t n);

template <class Real>
struct TorusMapParams {
  Real epsilon{};
  Real omega1{};
  Real omega2{};
  std::array<std::array<Real, 4>, 2> a{};
  std::array<std::array<Real, 4>, 2> b{};
  std::array<int, 4> r{};
  std::array<int, 4> s{};

  // Coefficients of the reference two-frequency instance.
  static TorusMapParams reference();
  // Its published rotation vector.
  static std::array<Real, 2> reference_rotation();
};

template <class Real>
Vec2<Real> torus_map_step(const Vec2<Real>& p, const TorusMapParams<Real>& params);
template <class Real>
Mat2<Real> torus_map_jacobian(const Vec2<Real>& p, const TorusMapParams<Real>& params);
template <class Real>
std::vector<Vec2<Real>> torus_map_orbit(Vec2<Real> start, const TorusMapParams<Real>& params, std::size_t n);

// Row-major flattening of (x, y) points.
template <class Real>
std::vector<Real> flatten(std::span<const Vec2<Real>> points);

}  // namespace wbirkhoff
