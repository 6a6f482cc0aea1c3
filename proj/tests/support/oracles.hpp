#pragma once

// Reference computations written straight from the defining formulas, with
// no shared code paths into the library. Slow on purpose.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include <boost/multiprecision/float128.hpp>

namespace oracle {

using Quad = boost::multiprecision::float128;

inline Quad quad_pi() { return boost::math::constants::pi<Quad>(); }

enum class Family { Equal, Quadratic, SinSquared, Exponential };

// Unnormalized bump on [0,1].
inline Quad weight(Family f, Quad t, int p = 1) {
  if (f == Family::Equal) return (t >= 0 && t <= 1) ? Quad(1) : Quad(0);
  if (t <= 0 || t >= 1) return 0;
  switch (f) {
    case Family::Quadratic: return t * (1 - t);
    case Family::SinSquared: {
      Quad s = sin(quad_pi() * t);
      return s * s;
    }
    case Family::Exponential: return exp(-1 / pow(t * (1 - t), p));
    default: return 0;
  }
}

// sum_n w(n/N) f_n / sum_n w(n/N), accumulated in quad with compensation.
inline Quad weighted_average(const std::vector<double>& f, Family fam, int p = 1) {
  const std::size_t n = f.size();
  Quad num = 0, den = 0, cn = 0, cd = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Quad w = weight(fam, Quad(i) / Quad(n), p);
    Quad y = w * Quad(f[i]) - cn;
    Quad t = num + y;
    cn = (t - num) - y;
    num = t;
    y = w - cd;
    t = den + y;
    cd = (t - den) - y;
    den = t;
  }
  return num / den;
}

// Equal-weight psi as a geometric sum: (1/N)(z^N - 1)/(z - 1), z = exp(2 pi i k rho).
inline std::complex<double> equal_psi(std::size_t n, long long k, double rho) {
  const Quad x = Quad(k) * Quad(rho);
  const Quad frac = x - floor(x);
  const Quad xn = Quad(k) * Quad(rho) * Quad(n);
  const Quad frac_n = xn - floor(xn);
  const Quad a = 2 * quad_pi() * frac, b = 2 * quad_pi() * frac_n;
  // (e^{ib} - 1)/(e^{ia} - 1) = e^{i(b-a)/2} sin(b/2)/sin(a/2)
  const Quad mag = sin(b / 2) / sin(a / 2) / Quad(n);
  const Quad ph = (b - a) / 2;
  return {static_cast<double>(mag * cos(ph)), static_cast<double>(mag * sin(ph))};
}

// Periodic part of the angle seen from (1/2, 0) on the unit circle:
// a_k = -i (1/2)^k / (4 pi k) for k >= 1.
inline std::complex<double> observer_coefficient(int k) {
  if (k == 0) return {};
  return {0.0, -std::pow(0.5, k) / (4 * M_PI * k)};
}

// g(t) = angle(t) - t for the off-center observer, in turns.
inline Quad observer_g(Quad t) {
  const Quad tp = 2 * quad_pi();
  Quad phi = atan2(sin(tp * t), cos(tp * t) - Quad(0.5)) / tp;
  Quad d = phi - t;
  return d - round(d);
}

// Trapezoid rule for a periodic function: spectrally accurate.
inline std::complex<double> trapezoid_coefficient(const std::function<Quad(Quad)>& g, int k, int m) {
  const Quad tp = 2 * quad_pi();
  Quad re = 0, im = 0;
  for (int j = 0; j < m; ++j) {
    const Quad t = Quad(j) / Quad(m);
    const Quad v = g(t);
    const long long r = (static_cast<long long>(k) * j) % m;
    const Quad ang = tp * Quad(r) / Quad(m);
    re += v * cos(ang);
    im -= v * sin(ang);
  }
  return {static_cast<double>(re / m), static_cast<double>(im / m)};
}

// Central differences of a planar map, step h.
template <class Map>
std::array<double, 4> jacobian_fd(Map&& map, double x, double y, double h = 1e-6) {
  auto fx1 = map(x + h, y), fx0 = map(x - h, y);
  auto fy1 = map(x, y + h), fy0 = map(x, y - h);
  return {(fx1[0] - fx0[0]) / (2 * h), (fy1[0] - fy0[0]) / (2 * h), (fx1[1] - fx0[1]) / (2 * h),
          (fy1[1] - fy0[1]) / (2 * h)};
}

// Standard map in radians, wrapped with fmod in quad.
inline std::array<Quad, 2> standard_map(Quad x, Quad y, Quad alpha) {
  const Quad tp = 2 * quad_pi();
  Quad xn = fmod(x + y, tp);
  if (xn < 0) xn += tp;
  Quad yn = fmod(y + alpha * sin(x + y), tp);
  if (yn < 0) yn += tp;
  return {xn, yn};
}

}  // namespace oracle
