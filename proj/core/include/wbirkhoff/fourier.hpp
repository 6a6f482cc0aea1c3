#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wbirkhoff/averaging.hpp"
#include "wbirkhoff/errors.hpp"
#include "wbirkhoff/execution.hpp"
#include "wbirkhoff/rotation.hpp"
#include "wbirkhoff/weights.hpp"

namespace wbirkhoff {

// Coefficients a_0..a_K of a real observable; negative indices are the
// conjugates, so conjugate symmetry holds by construction.
template <class Real>
struct FourierSeries1D {
  std::vector<Complex<Real>> nonnegative;
  Real rho{};
  std::size_t n_iterates = 0;

  int max_index() const { return static_cast<int>(nonnegative.size()) - 1; }
  Complex<Real> coefficient(int k) const {
    const int a = k < 0 ? -k : k;
    if (a > max_index()) return {};
    return k < 0 ? std::conj(nonnegative[a]) : nonnegative[a];
  }
};

// a_{j,k} for 0 <= j <= J, -K <= k <= K; (-j,-k) is the conjugate of (j,k).
template <class Real>
struct FourierSeries2D {
  int max_j = 0;
  int max_k = 0;
  std::vector<Complex<Real>> grid;  // row j, column k + max_k
  std::array<Real, 2> rho{};
  std::size_t n_iterates = 0;

  Complex<Real> coefficient(int j, int k) const {
    if (j < 0) return std::conj(coefficient(-j, -k));
    if (j > max_j || k > max_k || k < -max_k) return {};
    return grid[static_cast<std::size_t>(j) * (2 * max_k + 1) + (k + max_k)];
  }
};

template <class Real>
struct ConjugacyModel {
  FourierSeries1D<Real> series;  // periodic part g of V(theta) = theta + g(theta)
  Real rho{};
};

template <class Real>
Real modulus(const Complex<Real>& z) {
  using std::hypot;
  return hypot(z.real(), z.imag());
}

// a_k = sum_n w_n f_n exp(-2 pi i k n rho), single k, phases reduced exactly.
template <class Real>
Complex<Real> fourier_coefficient(std::span<const Real> values, Real rho, long long k,
                                  const WeightVector<Real>& weights);
template <class Real>
Complex<Real> fourier_coefficient(std::span<const Complex<Real>> values, Real rho, long long k,
                                  const WeightVector<Real>& weights);
template <class Real>
Complex<Real> fourier_coefficient(std::span<const Real> values, Real rho, long long k, WeightKind kind);

// a_0..a_K in one pass over the samples.
template <class Real>
FourierSeries1D<Real> fourier_coefficients(std::span<const Real> values, Real rho, int max_k,
                                           const WeightVector<Real>& weights,
                                           const ExecutionOptions& exec = {});
template <class Real>
FourierSeries1D<Real> fourier_coefficients(std::span<const Real> values, Real rho, int max_k,
                                           WeightKind kind, const ExecutionOptions& exec = {});

// g_n = lift_n - lift_0 - n rho for one component. rho is shifted by the
// integer that matches the lift's mean step, so g stays bounded whichever
// representative of rho mod 1 is passed.
template <class Real>
std::vector<Real> conjugacy_samples(const AngleSequence<Real>& phi, Real rho, std::size_t component = 0,
                                    WarningSink* warnings = nullptr);

template <class Real>
ConjugacyModel<Real> conjugacy_series(const AngleSequence<Real>& phi, Real rho, int max_k, WeightKind kind,
                                      WarningSink* warnings = nullptr, const ExecutionOptions& exec = {});

// Basis exp(-2 pi i (j x + k y)) on (x, y) = n (rho1, rho2).
template <class Real>
FourierSeries2D<Real> fourier_coefficients_2d(std::span<const Real> values, std::array<Real, 2> rho,
                                              int max_j, int max_k, WeightKind kind,
                                              const ExecutionOptions& exec = {});

// For real observables; throws ComputationError if the imaginary residual
// exceeds kImaginaryResidual.
inline constexpr double kImaginaryResidual = 1e-10;
template <class Real>
Real evaluate_series(const FourierSeries1D<Real>& series, Real theta);
template <class Real>
Real evaluate_series(const FourierSeries2D<Real>& series, Real x, Real y);
template <class Real>
Real evaluate_conjugacy(const ConjugacyModel<Real>& model, Real theta);

template <class Real>
struct ReconstructionError {
  int max_k = 0;
  Real delta1{};
  Real delta2{};
};

// delta1 = WB(|f - f^K|), delta2 = sqrt(WB((f - f^K)^2)) for every K in
// truncations (ascending, each <= series.max_index()), sampled at theta_n = n rho.
template <class Real>
std::vector<ReconstructionError<Real>> reconstruction_errors(std::span<const Real> values,
                                                             const FourierSeries1D<Real>& series,
                                                             std::span<const int> truncations,
                                                             WeightKind kind);
template <class Real>
ReconstructionError<Real> reconstruction_error(std::span<const Real> values,
                                               const FourierSeries1D<Real>& series, int max_k,
                                               WeightKind kind);

template <class Real>
struct DecayFit {
  Real alpha{};
  Real beta{};
  std::size_t n_used = 0;
  bool has_verdict = true;  // false for 2-D ray fits
  bool analytic = false;    // beta > 0
};

inline constexpr std::size_t kMinDecayPoints = 10;

// Slope from least squares of log|a_k| over k >= 1 above the floor, then
// alpha raised until log alpha - beta k bounds every used point.
template <class Real>
DecayFit<Real> decay_fit(const FourierSeries1D<Real>& series, Real floor);
template <class Real>
DecayFit<Real> decay_fit(const FourierSeries1D<Real>& series) {
  return decay_fit(series, TierTraits<Real>::noise_floor());
}
// Along the ray (m dj, m dk), m >= 1; no verdict.
template <class Real>
DecayFit<Real> decay_fit_ray(const FourierSeries2D<Real>& series, int dj, int dk, Real floor);

}  // namespace wbirkhoff
