#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wbirkhoff/averaging.hpp"
#include "wbirkhoff/errors.hpp"
#include "wbirkhoff/execution.hpp"
#include "wbirkhoff/fourier.hpp"

namespace wbirkhoff {

// psi_{N,k,rho} = sum_n w_n exp(2 pi i k n rho)
template <class Real>
Complex<Real> psi(const WeightVector<Real>& weights, long long k, Real rho);
template <class Real>
Complex<Real> psi(std::size_t n, long long k, Real rho, WeightKind kind);

template <class Real>
struct PsiSample {
  std::size_t n = 0;
  long long k = 0;
  Real rho{};
  WeightKind kind;
  Complex<Real> value;
};

// |exp(2 pi i k rho) - 1| = 2 |sin(pi frac(k rho))|, k rho reduced exactly.
template <class Real>
Real unit_divisor(long long k, Real rho);

// Delta(k, rho) = |k|^d |exp(2 pi i k.rho) - 1|, |k| Euclidean, d = k.size().
template <class Real>
Real small_divisor(std::span<const long long> k, std::span<const Real> rho);
template <class Real>
Real small_divisor(long long k, Real rho);

// c_m = sup|w^(m)| * N / sum_j w(j/N)
template <class Real>
Real bound_constant(const WeightVector<Real>& weights, Real sup_norm);

template <class Real>
struct BoundCheck {
  std::size_t n = 0;
  long long k = 0;
  int m = 0;
  Real lhs{};  // |psi|
  Real rhs{};  // c_m (N |exp(2 pi i k rho) - 1|)^-m
  bool satisfied = false;
};

template <class Real>
BoundCheck<Real> psi_bound_check(std::size_t n, long long k, Real rho, int m, WeightKind kind);
// sup_norm = derivative_sup_norm(kind, m), computed once by the caller
template <class Real>
BoundCheck<Real> psi_bound_check(std::size_t n, long long k, Real rho, int m, WeightKind kind, Real sup_norm);

inline constexpr double kResonanceThreshold = 0.1;
inline constexpr std::size_t kMaxListedResonances = 1000;

template <class Real>
struct Resonance {
  long long k = 0;
  Real delta{};
};

template <class Real>
struct DeltaScan {
  Real rho{};
  long long k_min = 2;
  long long k_max = 0;
  long long argmin = 0;
  Real min{};
  Real threshold{};
  std::size_t resonance_count = 0;
  std::vector<Resonance<Real>> resonances;  // first kMaxListedResonances, ascending k
};

// Scans k = k_min..k_max (1-D). One "resonance" warning lists every k with
// Delta below the threshold.
template <class Real>
DeltaScan<Real> delta_scan(Real rho, long long k_max, WarningSink* warnings = nullptr,
                           Real threshold = Real(kResonanceThreshold), long long k_min = 2,
                           const ExecutionOptions& exec = {});

template <class Real>
struct SawtoothPoint {
  long long k = 0;
  Complex<Real> error;  // predicted a_hat_k - a_k
};

// a_hat_k - a_k ~ a_{k - m k*} conj(psi_{N, m k*}) for |k - m k*| <= k*/2.
// psi_multiples[m-1] holds psi_{N, m k*}.
template <class Real>
std::vector<SawtoothPoint<Real>> predict_sawtooth(const FourierSeries1D<Real>& base, long long k_star,
                                                  std::span<const Complex<Real>> psi_multiples);
template <class Real>
std::vector<SawtoothPoint<Real>> predict_sawtooth(const FourierSeries1D<Real>& base, long long k_star,
                                                  Complex<Real> psi_star) {
  return predict_sawtooth(base, k_star, std::span<const Complex<Real>>(&psi_star, 1));
}

template <class Real>
struct DiagnosticsReport {
  std::vector<PsiSample<Real>> psi;
  std::vector<DeltaScan<Real>> scans;
  std::vector<BoundCheck<Real>> bounds;
  std::vector<SawtoothPoint<Real>> sawtooth;
  long long sawtooth_k_star = 0;
  WarningSink warnings;
};

}  // namespace wbirkhoff
