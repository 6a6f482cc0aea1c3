#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wbirkhoff/summation.hpp"
#include "wbirkhoff/weights.hpp"

namespace wbirkhoff {

template <class Real>
using Complex = std::complex<Real>;

template <class T>
struct scalar_of {
  using type = T;
};
template <class Real>
struct scalar_of<std::complex<Real>> {
  using type = Real;
};
template <class T>
using scalar_of_t = typename scalar_of<T>::type;

template <class Real>
inline bool is_finite(const std::complex<Real>& z) {
  return is_finite(z.real()) && is_finite(z.imag());
}

// Streaming WB_N. After exactly N pushes, finalize() equals the batch
// wb_average of the same values bit for bit (both use this class).
template <class T>
class WbAccumulator {
 public:
  using Real = scalar_of_t<T>;

  WbAccumulator(WeightKind kind, std::size_t n);
  explicit WbAccumulator(WeightVector<Real> weights);

  void push(const T& value);
  T finalize() const;

  std::size_t pushed() const { return next_; }
  std::size_t size() const { return weights_.n_terms(); }
  bool complete() const { return next_ == weights_.n_terms(); }
  const WeightVector<Real>& weights() const { return weights_; }

 private:
  WeightVector<Real> weights_;
  PairwiseSum<T> sum_;
  std::size_t next_ = 0;
};

template <class T>
T wb_average(std::span<const T> values, const WeightVector<scalar_of_t<T>>& weights);

template <class T>
T wb_average(std::span<const T> values, WeightKind kind);

template <class T>
T birkhoff_average(std::span<const T> values) {
  return wb_average(values, WeightKind::equal());
}

// Componentwise average of row-major vectors (values.size() == N * dim).
template <class Real>
std::vector<Real> wb_average_rows(std::span<const Real> values, std::size_t dim,
                                  const WeightVector<Real>& weights);

}  // namespace wbirkhoff
