#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>

#include "wbirkhoff/averaging.hpp"

namespace wbirkhoff {

template <class Real>
using Vec2 = std::array<Real, 2>;
// row-major {a, b, c, d} = [[a, b], [c, d]]
template <class Real>
using Mat2 = std::array<Real, 4>;
template <class Real>
using JacobianFn = std::function<Mat2<Real>(const Vec2<Real>&)>;

template <class Real>
struct LyapunovPair {
  Real lambda1{};  // smaller
  Real lambda2{};  // larger
  Real sum() const { return lambda1 + lambda2; }
};

// Streaming tangent recursion v_n = DT(x_{n-1}) v_{n-1} / |v_{n-1}|.
// Call observe(DT(x_n)) for n = 0..N-1 along the orbit.
template <class Real>
class LyapunovAccumulator {
 public:
  LyapunovAccumulator(WeightKind kind, std::size_t n, Vec2<Real> v0);
  LyapunovAccumulator(const WeightVector<Real>& weights, Vec2<Real> v0);

  void observe(const Mat2<Real>& jacobian);

  std::size_t observed() const { return stretch_.pushed(); }
  Real lambda_max() const { return stretch_.finalize(); }
  Real lambda_sum() const { return det_.finalize(); }
  LyapunovPair<Real> pair() const;

 private:
  WbAccumulator<Real> stretch_;
  WbAccumulator<Real> det_;
  Vec2<Real> v_;
};

// orbit has N >= 3 points; N weights are used.
template <class Real>
Real lyapunov_max(std::span<const Vec2<Real>> orbit, const JacobianFn<Real>& jacobian, Vec2<Real> v0,
                  WeightKind kind);
template <class Real>
Real lyapunov_sum(std::span<const Vec2<Real>> orbit, const JacobianFn<Real>& jacobian, WeightKind kind);
template <class Real>
LyapunovPair<Real> lyapunov_pair(std::span<const Vec2<Real>> orbit, const JacobianFn<Real>& jacobian,
                                 Vec2<Real> v0, WeightKind kind);

}  // namespace wbirkhoff
