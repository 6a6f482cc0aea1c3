#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wbirkhoff/errors.hpp"
#include "wbirkhoff/precision.hpp"

namespace wbirkhoff {

enum class WeightFamily { Equal, Quadratic, SinSquared, Exponential };

struct WeightKind {
  WeightFamily family = WeightFamily::Exponential;
  int p = 1;  // only meaningful for Exponential

  static WeightKind equal() { return {WeightFamily::Equal, 0}; }
  static WeightKind quadratic() { return {WeightFamily::Quadratic, 0}; }
  static WeightKind sin_squared() { return {WeightFamily::SinSquared, 0}; }
  static WeightKind exponential(int p = 1);

  // "equal", "quad", "sin2", "exp1", "exp2", ...
  std::string name() const;
  // Also accepts "exp" (p = 1).
  static WeightKind parse(std::string_view text);

  bool vanishes_at_ends() const { return family != WeightFamily::Equal; }

  friend bool operator==(const WeightKind&, const WeightKind&) = default;
};

// w(t). Zero outside (0,1); Equal is 1 on the closed interval.
template <class Real>
Real raw_weight(WeightKind kind, Real t);

// m-th derivative of w at t in (0,1). Exponential uses truncated Taylor
// arithmetic, so any order works.
template <class Real>
Real raw_weight_derivative(WeightKind kind, Real t, int m);

// Normalized weights w(n/N)/sum_j w(j/N), n = 0..N-1. Shares storage on copy.
template <class Real>
class WeightVector {
 public:
  WeightVector() = default;
  WeightVector(WeightKind kind, std::vector<Real> values, Real raw_sum);

  WeightKind kind() const { return kind_; }
  std::size_t n_terms() const { return values_ ? values_->size() : 0; }
  std::span<const Real> values() const { return {values_->data(), values_->size()}; }
  const Real& operator[](std::size_t n) const { return (*values_)[n]; }
  // sum_j w(j/N), before normalization
  Real raw_sum() const { return raw_sum_; }

 private:
  WeightKind kind_{};
  std::shared_ptr<const std::vector<Real>> values_;
  Real raw_sum_{};
};

template <class Real>
WeightVector<Real> normalized_weights(WeightKind kind, std::size_t n);

// sup over a uniform interior grid of |w^(m)|
template <class Real>
Real derivative_sup_norm(WeightKind kind, int m, std::size_t grid_points = 1000000);

}  // namespace wbirkhoff
