#include "wbirkhoff/lyapunov.hpp"

#include <cmath>
#include <string>

#include "wbirkhoff/errors.hpp"

namespace wbirkhoff {

template <class Real>
LyapunovAccumulator<Real>::LyapunovAccumulator(const WeightVector<Real>& weights, Vec2<Real> v0)
    : stretch_(weights), det_(weights), v_(v0) {
  if (!is_finite(v0[0]) || !is_finite(v0[1]) || (v0[0] == Real(0) && v0[1] == Real(0)))
    throw ContractError("initial tangent vector must be finite and nonzero");
}

template <class Real>
LyapunovAccumulator<Real>::LyapunovAccumulator(WeightKind kind, std::size_t n, Vec2<Real> v0)
    : LyapunovAccumulator(normalized_weights<Real>(kind, n), v0) {}

template <class Real>
void LyapunovAccumulator<Real>::observe(const Mat2<Real>& m) {
  using std::abs;
  using std::hypot;
  using std::log;
  const std::size_t n = stretch_.pushed();
  for (const Real& x : m)
    if (!is_finite(x)) throw ComputationError("non-finite Jacobian at orbit index " + std::to_string(n));
  const Real norm = hypot(v_[0], v_[1]);
  if (!(norm > Real(0)) || !is_finite(norm))
    throw ComputationError("singular derivative: tangent vector collapsed at orbit index " + std::to_string(n));
  const Real det = m[0] * m[3] - m[1] * m[2];
  if (det == Real(0)) throw ComputationError("singular derivative: zero determinant at orbit index " + std::to_string(n));
  stretch_.push(log(norm));
  det_.push(log(abs(det)));
  const Real u0 = v_[0] / norm, u1 = v_[1] / norm;
  v_ = {m[0] * u0 + m[1] * u1, m[2] * u0 + m[3] * u1};
}

template <class Real>
LyapunovPair<Real> LyapunovAccumulator<Real>::pair() const {
  const Real l2 = lambda_max();
  return {lambda_sum() - l2, l2};
}

namespace {

template <class Real>
void check_orbit(std::span<const Vec2<Real>> orbit) {
  if (orbit.size() < 3) throw ContractError("Lyapunov estimates need an orbit of length >= 3");
}

}  // namespace

template <class Real>
LyapunovPair<Real> lyapunov_pair(std::span<const Vec2<Real>> orbit, const JacobianFn<Real>& jacobian,
                                 Vec2<Real> v0, WeightKind kind) {
  check_orbit(orbit);
  LyapunovAccumulator<Real> acc(kind, orbit.size(), v0);
  for (const auto& x : orbit) acc.observe(jacobian(x));
  return acc.pair();
}

template <class Real>
Real lyapunov_max(std::span<const Vec2<Real>> orbit, const JacobianFn<Real>& jacobian, Vec2<Real> v0,
                  WeightKind kind) {
  return lyapunov_pair(orbit, jacobian, v0, kind).lambda2;
}

template <class Real>
Real lyapunov_sum(std::span<const Vec2<Real>> orbit, const JacobianFn<Real>& jacobian, WeightKind kind) {
  using std::abs;
  using std::log;
  check_orbit(orbit);
  WbAccumulator<Real> acc(kind, orbit.size());
  for (std::size_t n = 0; n < orbit.size(); ++n) {
    const Mat2<Real> m = jacobian(orbit[n]);
    const Real det = m[0] * m[3] - m[1] * m[2];
    if (det == Real(0) || !is_finite(det))
      throw ComputationError("singular derivative: zero determinant at orbit index " + std::to_string(n));
    acc.push(log(abs(det)));
  }
  return acc.finalize();
}

#define WBIRKHOFF_INSTANTIATE(Real)                                                                         \
  template class LyapunovAccumulator<Real>;                                                                 \
  template Real lyapunov_max<Real>(std::span<const Vec2<Real>>, const JacobianFn<Real>&, Vec2<Real>,       \
                                   WeightKind);                                                             \
  template Real lyapunov_sum<Real>(std::span<const Vec2<Real>>, const JacobianFn<Real>&, WeightKind);      \
  template LyapunovPair<Real> lyapunov_pair<Real>(std::span<const Vec2<Real>>, const JacobianFn<Real>&,    \
                                                  Vec2<Real>, WeightKind);

WBIRKHOFF_INSTANTIATE(double)
WBIRKHOFF_INSTANTIATE(Extended)

}  // namespace wbirkhoff
