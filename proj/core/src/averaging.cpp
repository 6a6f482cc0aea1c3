#include "wbirkhoff/averaging.hpp"

#include <string>

#include "wbirkhoff/errors.hpp"

namespace wbirkhoff {

template <class T>
WbAccumulator<T>::WbAccumulator(WeightKind kind, std::size_t n)
    : weights_(normalized_weights<Real>(kind, n)) {}

template <class T>
WbAccumulator<T>::WbAccumulator(WeightVector<Real> weights) : weights_(std::move(weights)) {
  if (weights_.n_terms() < 2) throw ContractError("accumulator needs N >= 2 weights");
}

template <class T>
void WbAccumulator<T>::push(const T& value) {
  if (next_ >= weights_.n_terms())
    throw ContractError("push beyond N = " + std::to_string(weights_.n_terms()));
  if (!is_finite(value))
    throw ContractError("non-finite observable value at index " + std::to_string(next_));
  sum_.add(value * weights_[next_]);
  ++next_;
}

template <class T>
T WbAccumulator<T>::finalize() const {
  if (next_ != weights_.n_terms())
    throw ContractError("finalize after " + std::to_string(next_) + " of " +
                        std::to_string(weights_.n_terms()) + " pushes");
  return sum_.total();
}

template <class T>
T wb_average(std::span<const T> values, const WeightVector<scalar_of_t<T>>& weights) {
  if (values.size() < 2) throw ContractError("wb_average needs at least 2 values");
  if (values.size() != weights.n_terms())
    throw ContractError("weight vector length does not match sequence length");
  WbAccumulator<T> acc(weights);
  for (const T& v : values) acc.push(v);
  return acc.finalize();
}

template <class T>
T wb_average(std::span<const T> values, WeightKind kind) {
  if (values.size() < 2) throw ContractError("wb_average needs at least 2 values");
  return wb_average(values, normalized_weights<scalar_of_t<T>>(kind, values.size()));
}

template <class Real>
std::vector<Real> wb_average_rows(std::span<const Real> values, std::size_t dim,
                                  const WeightVector<Real>& weights) {
  if (dim == 0 || values.size() % dim != 0) throw ContractError("row data does not match dimension");
  const std::size_t n = values.size() / dim;
  if (n < 2) throw ContractError("wb_average needs at least 2 values");
  if (n != weights.n_terms()) throw ContractError("weight vector length does not match sequence length");
  std::vector<WbAccumulator<Real>> acc(dim, WbAccumulator<Real>(weights));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < dim; ++c) acc[c].push(values[i * dim + c]);
  std::vector<Real> out(dim);
  for (std::size_t c = 0; c < dim; ++c) out[c] = acc[c].finalize();
  return out;
}

#define WBIRKHOFF_INSTANTIATE_T(T)                                              \
  template class WbAccumulator<T>;                                              \
  template T wb_average<T>(std::span<const T>, const WeightVector<scalar_of_t<T>>&); \
  template T wb_average<T>(std::span<const T>, WeightKind);

WBIRKHOFF_INSTANTIATE_T(double)
WBIRKHOFF_INSTANTIATE_T(Extended)
WBIRKHOFF_INSTANTIATE_T(std::complex<double>)
WBIRKHOFF_INSTANTIATE_T(std::complex<Extended>)

template std::vector<double> wb_average_rows<double>(std::span<const double>, std::size_t,
                                                     const WeightVector<double>&);
template std::vector<Extended> wb_average_rows<Extended>(std::span<const Extended>, std::size_t,
                                                         const WeightVector<Extended>&);

}  // namespace wbirkhoff
