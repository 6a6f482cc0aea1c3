#include "wbirkhoff/systems.hpp"

#include <cmath>
#include <cstdlib>
#include <string>


namespace wbirkhoff {

std::string_view tier_name(PrecisionTier tier) {
  return tier == PrecisionTier::Standard ? "standard" : "extended";
}

PrecisionTier parse_tier(std::string_view name) {
  if (name == "standard" || name == "double") return PrecisionTier::Standard;
  if (name == "extended" || name == "quad") return PrecisionTier::Extended;
  throw ContractError("unknown precision tier '" + std::string(name) + "' (standard|extended)");
}

template <>
double real_from_string<double>(std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw ContractError("not a number: '" + s + "'");
  return v;
}

template <>
Extended real_from_string<Extended>(std::string_view text) {
  const std::string s(text);
  try {
    return Extended(s);
  } catch (const std::exception&) {
    throw ContractError("not a number: '" + s + "'");
  }
}

template <class Real>
AngleSequence<Real> rigid_rotation_orbit(std::span<const Real> rho, std::span<const Real> theta0, std::size_t n) {
  using std::floor;
  const std::size_t d = rho.size();
  if (d == 0 || theta0.size() != d) throw ContractError("rho and theta0 must have the same nonzero dimension");
  if (n < 2) throw ContractError("rigid_rotation_orbit needs N >= 2");
  std::vector<Real> angles(n * d), inc((n - 1) * d);
  std::vector<std::int64_t> wind(n * d);
  bool forward = false;
  for (std::size_t c = 0; c < d; ++c) {
    if (!is_finite(rho[c]) || !is_finite(theta0[c])) throw ContractError("non-finite rotation data");
    forward = forward || rho[c] > Real(0.5) || rho[c] < Real(-0.5);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      const Real base = floor(theta0[c]);
      const Real t0 = theta0[c] - base;
      const auto sp = split_product(static_cast<std::int64_t>(i), rho[c]);
      const Real s = t0 + sp.frac;  // in [0, 2)
      const Real carry = floor(s);
      Real a = s - carry;
      std::int64_t extra = static_cast<std::int64_t>(carry);
      if (a >= Real(1)) {
        a = Real(0);
        ++extra;
      }
      angles[i * d + c] = a;
      wind[i * d + c] = static_cast<std::int64_t>(base) + sp.whole + extra;
      if (i + 1 < n) inc[i * d + c] = rho[c];
    }
  }
  return AngleSequence<Real>::from_parts(d, std::move(angles), std::move(wind), std::move(inc),
                                         forward ? LiftBranch::Forward : LiftBranch::Nearest);
}

template <class Real>
Real perturbed_observation(Real theta, Real alpha, Real beta) {
  using std::cos;
  using std::sin;
  const Real a = two_pi_v<Real>() * theta;
  return unit_mod(theta + alpha * cos(a) + beta * sin(a));
}

template <class Real>
Real offcenter_observer(Real theta) {
  using std::atan2;
  using std::cos;
  using std::sin;
  const Real a = two_pi_v<Real>() * theta;
  return unit_mod(atan2(sin(a), cos(a) - Real(0.5)) / two_pi_v<Real>());
}

namespace {

template <class Real>
Real wrap_period(Real v, Real period) {
  using std::floor;
  Real r = v - period * floor(v / period);
  if (r >= period || r < Real(0)) r = Real(0);
  return r;
}

template <class Real>
Real wrap_centered(Real v, Real period) {
  Real r = wrap_period(v + period / Real(2), period);
  return r - period / Real(2);
}

// Standard map in turns (u = x / 2 pi): the mod-1 wrap is exact, whereas
// wrapping radians by the rounded 2 pi shifts every wrapped value the same
// way and the bias accumulates into a drift across invariant circles.
template <class Real>
Vec2<Real> standard_map_turns(const Vec2<Real>& u, Real alpha_turns) {
  using std::floor;
  using std::sin;
  Real s = u[0] + u[1];
  s -= floor(s);
  Real t = u[1] + alpha_turns * sin(two_pi_v<Real>() * s);
  t -= floor(t);
  if (t >= Real(1)) t = Real(0);
  return {s, t};
}

template <class Real>
Real turns_to_radians(Real u) {
  const Real x = two_pi_v<Real>() * u;
  return x < two_pi_v<Real>() ? x : Real(0);
}

}  // namespace

template <class Real>
std::vector<Real> torus_angular_coordinate(std::span<const Vec2<Real>> points, Vec2<Real> center, Real period) {
  std::vector<Real> xy(points.size() * 2);
  for (std::size_t i = 0; i < points.size(); ++i) {
    xy[2 * i] = wrap_centered(points[i][0] - center[0], period);
    xy[2 * i + 1] = wrap_centered(points[i][1] - center[1], period);
  }
  return angular_coordinate(std::span<const Real>(xy), Real(0), Real(0));
}

template <class Real>
Vec2<Real> standard_map_step(const Vec2<Real>& p, Real alpha) {
  const Real tp = two_pi_v<Real>();
  const auto u = standard_map_turns<Real>({unit_mod(p[0] / tp), unit_mod(p[1] / tp)}, alpha / tp);
  return {turns_to_radians(u[0]), turns_to_radians(u[1])};
}

template <class Real>
Mat2<Real> standard_map_jacobian(const Vec2<Real>& p, Real alpha) {
  using std::cos;
  const Real c = alpha * cos(p[0] + p[1]);
  return {Real(1), Real(1), c, Real(1) + c};
}

template <class Real>
std::vector<Vec2<Real>> standard_map_orbit(Vec2<Real> start, Real alpha, std::size_t n) {
  if (n == 0) throw ContractError("orbit length must be >= 1");
  std::vector<Vec2<Real>> orbit(n);
  const Real tp = two_pi_v<Real>();
  Vec2<Real> u = {unit_mod(start[0] / tp), unit_mod(start[1] / tp)};
  const Real a = alpha / tp;
  for (std::size_t i = 0; i < n; ++i) {
    orbit[i] = {turns_to_radians(u[0]), turns_to_radians(u[1])};
    u = standard_map_turns(u, a);
  }
  return orbit;
}

template <class Real>
TorusMapParams<Real> TorusMapParams<Real>::reference() {
  auto R = [](const char* s) { return real_from_string<Real>(s); };
  TorusMapParams p;
  p.epsilon = R("0.4234823");
  p.omega1 = R("0.71151134457776362264681206697006238");
  p.omega2 = R("0.87735009811261456100917086672849971");
  p.a = {{{R("-0.268"), R("-0.9106"), R("0.3"), R("-0.04")}, {R("0.08"), R("-0.56"), R("0.947"), R("-0.4003")}}};
  p.b = {{{R("0.985"), R("0.504"), R("0.947"), R("0.2334")}, {R("0.99"), R("0.33"), R("0.29"), R("0.155")}}};
  // Fourth mode is (1,-1). The printed r_4 = 0 gives a rotation vector about
  // 1e-2 away from the published one; (1,-1) lands within 5e-8.
  p.r = {1, 0, 1, 1};
  p.s = {0, 1, 1, -1};
  return p;
}

template <class Real>
std::array<Real, 2> TorusMapParams<Real>::reference_rotation() {
  return {real_from_string<Real>("0.718053759982066107095244936117"),
          real_from_string<Real>("0.885304666596099792113366824157")};
}

template <class Real>
Vec2<Real> torus_map_step(const Vec2<Real>& p, const TorusMapParams<Real>& q) {
  using std::sin;
  Real sum[2] = {Real(0), Real(0)};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j)
      sum[i] += q.a[i][j] * sin(two_pi_v<Real>() * (Real(q.r[j]) * p[0] + Real(q.s[j]) * p[1] + q.b[i][j]));
  const Real scale = q.epsilon / two_pi_v<Real>();
  return {unit_mod(p[0] + q.omega1 + scale * sum[0]), unit_mod(p[1] + q.omega2 + scale * sum[1])};
}

template <class Real>
Mat2<Real> torus_map_jacobian(const Vec2<Real>& p, const TorusMapParams<Real>& q) {
  using std::cos;
  Real dx[2] = {Real(0), Real(0)}, dy[2] = {Real(0), Real(0)};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Real c =
          q.a[i][j] * cos(two_pi_v<Real>() * (Real(q.r[j]) * p[0] + Real(q.s[j]) * p[1] + q.b[i][j]));
      dx[i] += c * Real(q.r[j]);
      dy[i] += c * Real(q.s[j]);
    }
  }
  return {Real(1) + q.epsilon * dx[0], q.epsilon * dy[0], q.epsilon * dx[1], Real(1) + q.epsilon * dy[1]};
}

template <class Real>
std::vector<Vec2<Real>> torus_map_orbit(Vec2<Real> start, const TorusMapParams<Real>& params, std::size_t n) {
  if (n == 0) throw ContractError("orbit length must be >= 1");
  std::vector<Vec2<Real>> orbit(n);
  orbit[0] = {unit_mod(start[0]), unit_mod(start[1])};
  for (std::size_t i = 1; i < n; ++i) orbit[i] = torus_map_step(orbit[i - 1], params);
  return orbit;
}

template <class Real>
std::vector<Real> flatten(std::span<const Vec2<Real>> points) {
  std::vector<Real> out(points.size() * 2);
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[2 * i] = points[i][0];
    out[2 * i + 1] = points[i][1];
  }
  return out;
}

#define WBIRKHOFF_INSTANTIATE(Real)                                                                        \
  template AngleSequence<Real> rigid_rotation_orbit<Real>(std::span<const Real>, std::span<const Real>,   \
                                                          std::size_t);                                   \
  template Real perturbed_observation<Real>(Real, Real, Real);                                            \
  template Real offcenter_observer<Real>(Real);                                                           \
  template std::vector<Real> torus_angular_coordinate<Real>(std::span<const Vec2<Real>>, Vec2<Real>, Real); \
  template Vec2<Real> standard_map_step<Real>(const Vec2<Real>&, Real);                                   \
  template Mat2<Real> standard_map_jacobian<Real>(const Vec2<Real>&, Real);                               \
  template std::vector<Vec2<Real>> standard_map_orbit<Real>(Vec2<Real>, Real, std::size_t);               \
  template struct TorusMapParams<Real>;                                                                   \
  template Vec2<Real> torus_map_step<Real>(const Vec2<Real>&, const TorusMapParams<Real>&);               \
  template Mat2<Real> torus_map_jacobian<Real>(const Vec2<Real>&, const TorusMapParams<Real>&);           \
  template std::vector<Vec2<Real>> torus_map_orbit<Real>(Vec2<Real>, const TorusMapParams<Real>&,         \
                                                         std::size_t);                                    \
  template std::vector<Real> flatten<Real>(std::span<const Vec2<Real>>);

WBIRKHOFF_INSTANTIATE(double)
WBIRKHOFF_INSTANTIATE(Extended)

}  // namespace wbirkhoff
