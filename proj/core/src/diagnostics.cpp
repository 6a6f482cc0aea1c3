#include "wbirkhoff/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace wbirkhoff {

template <class Real>
Complex<Real> psi(const WeightVector<Real>& weights, long long k, Real rho) {
  using std::cos;
  using std::sin;
  const std::size_t n = weights.n_terms();
  if (n < 2) throw ContractError("psi needs N >= 2");
  const long double limit = 9007199254740992.0L;
  if (static_cast<long double>(k < 0 ? -k : k) * static_cast<long double>(n) >= limit)
    throw ContractError("|k| * N too large for exact phase reduction");
  PairwiseSum<Complex<Real>> sum;
  for (std::size_t i = 0; i < n; ++i) {
    const long long m = k * static_cast<long long>(i);
    // exp(2 pi i m rho), negative m handled by conjugation
    const Real a = two_pi_v<Real>() * frac_product(m < 0 ? -m : m, rho);
    const Real s = m < 0 ? -sin(a) : sin(a);
    sum.add(Complex<Real>(weights[i] * cos(a), weights[i] * s));
  }
  return sum.total();
}

template <class Real>
Complex<Real> psi(std::size_t n, long long k, Real rho, WeightKind kind) {
  if (n < 2) throw ContractError("psi needs N >= 2");
  return psi(normalized_weights<Real>(kind, n), k, rho);
}

template <class Real>
Real unit_divisor(long long k, Real rho) {
  using std::abs;
  using std::sin;
  return Real(2) * abs(sin(pi_v<Real>() * frac_product(k < 0 ? -k : k, rho)));
}

template <class Real>
Real small_divisor(std::span<const long long> k, std::span<const Real> rho) {
  using std::abs;
  using std::pow;
  using std::sin;
  using std::sqrt;
  if (k.empty() || k.size() != rho.size()) throw ContractError("k and rho must have the same nonzero dimension");
  Real phase(0), norm2(0);
  bool zero = true;
  for (std::size_t i = 0; i < k.size(); ++i) {
    zero = zero && k[i] == 0;
    const Real f = frac_product(k[i] < 0 ? -k[i] : k[i], rho[i]);
    phase = unit_mod(phase + (k[i] < 0 ? Real(1) - f : f));
    norm2 += Real(k[i]) * Real(k[i]);
  }
  if (zero) throw ContractError("small_divisor is undefined for k = 0");
  const Real div = Real(2) * abs(sin(pi_v<Real>() * phase));
  return pow(sqrt(norm2), static_cast<int>(k.size())) * div;
}

template <class Real>
Real small_divisor(long long k, Real rho) {
  if (k == 0) throw ContractError("small_divisor is undefined for k = 0");
  return Real(k < 0 ? -k : k) * unit_divisor(k, rho);
}

template <class Real>
Real bound_constant(const WeightVector<Real>& weights, Real sup_norm) {
  return sup_norm * Real(static_cast<long long>(weights.n_terms())) / weights.raw_sum();
}

template <class Real>
BoundCheck<Real> psi_bound_check(std::size_t n, long long k, Real rho, int m, WeightKind kind, Real sup_norm) {
  using std::pow;
  if (m < 1) throw ContractError("bound order m must be >= 1");
  if (!kind.vanishes_at_ends()) throw ContractError("psi bound needs a weight vanishing at t = 0 and 1");
  const Real div = unit_divisor(k, rho);
  if (div == Real(0)) throw ContractError("resonant k: exp(2 pi i k rho) == 1");
  const WeightVector<Real> w = normalized_weights<Real>(kind, n);
  BoundCheck<Real> out;
  out.n = n;
  out.k = k;
  out.m = m;
  out.lhs = modulus(psi(w, k, rho));
  out.rhs = bound_constant(w, sup_norm) * pow(Real(static_cast<long long>(n)) * div, -m);
  out.satisfied = out.lhs <= out.rhs;
  return out;
}

template <class Real>
BoundCheck<Real> psi_bound_check(std::size_t n, long long k, Real rho, int m, WeightKind kind) {
  if (m < 1) throw ContractError("bound order m must be >= 1");
  return psi_bound_check(n, k, rho, m, kind, derivative_sup_norm<Real>(kind, m));
}

template <class Real>
DeltaScan<Real> delta_scan(Real rho, long long k_max, WarningSink* warnings, Real threshold, long long k_min,
                           const ExecutionOptions& exec) {
  if (k_min < 1) throw ContractError("delta_scan needs k_min >= 1");
  if (k_max < 2 || k_max < k_min) throw ContractError("delta_scan needs k_max >= max(2, k_min)");
  constexpr long long kBlock = 1 << 16;
  const long long span = k_max - k_min + 1;
  const std::size_t n_blocks = static_cast<std::size_t>((span + kBlock - 1) / kBlock);

  struct Partial {
    long long argmin = 0;
    Real min{};
    std::size_t count = 0;
    std::vector<Resonance<Real>> hits;
  };
  std::vector<Partial> parts(n_blocks);
  parallel_chunks(n_blocks, exec, [&](std::size_t b, std::size_t e) {
    for (std::size_t blk = b; blk < e; ++blk) {
      Partial& p = parts[blk];
      const long long k0 = k_min + static_cast<long long>(blk) * kBlock;
      const long long k1 = std::min(k_max, k0 + kBlock - 1);
      for (long long k = k0; k <= k1; ++k) {
        const Real d = small_divisor(k, rho);
        if (k == k0 || d < p.min) {
          p.min = d;
          p.argmin = k;
        }
        if (d < threshold) {
          if (p.count < kMaxListedResonances) p.hits.push_back({k, d});
          ++p.count;
        }
      }
    }
  });

  DeltaScan<Real> out;
  out.rho = rho;
  out.k_min = k_min;
  out.k_max = k_max;
  out.threshold = threshold;
  for (std::size_t blk = 0; blk < n_blocks; ++blk) {
    const Partial& p = parts[blk];
    if (blk == 0 || p.min < out.min) {
      out.min = p.min;
      out.argmin = p.argmin;
    }
    out.resonance_count += p.count;
    for (const auto& h : p.hits)
      if (out.resonances.size() < kMaxListedResonances) out.resonances.push_back(h);
  }
  if (out.resonance_count > 0) {
    std::ostringstream msg;
    msg.precision(6);
    msg << out.resonance_count << " near-resonant k with Delta < " << static_cast<double>(threshold) << ":";
    for (std::size_t i = 0; i < std::min<std::size_t>(out.resonances.size(), 20); ++i)
      msg << " k=" << out.resonances[i].k << " (" << static_cast<double>(out.resonances[i].delta) << ")";
    if (out.resonance_count > 20) msg << " ...";
    emit(warnings, "resonance", msg.str());
  }
  return out;
}

template <class Real>
std::vector<SawtoothPoint<Real>> predict_sawtooth(const FourierSeries1D<Real>& base, long long k_star,
                                                  std::span<const Complex<Real>> psi_multiples) {
  if (k_star < 1) throw ContractError("k_star must be >= 1");
  std::map<long long, Complex<Real>> acc;
  const long long half = k_star / 2;
  for (std::size_t mi = 0; mi < psi_multiples.size(); ++mi) {
    const long long center = static_cast<long long>(mi + 1) * k_star;
    const Complex<Real> ps = std::conj(psi_multiples[mi]);
    for (long long n = -half; n <= half; ++n) {
      const long long k = center + n;
      if (k < 0 || n > base.max_index() || -n > base.max_index()) continue;
      acc[k] += base.coefficient(static_cast<int>(n)) * ps;
    }
  }
  std::vector<SawtoothPoint<Real>> out;
  out.reserve(acc.size());
  for (const auto& [k, e] : acc) out.push_back({k, e});
  return out;
}

#define WBIRKHOFF_INSTANTIATE(Real)                                                                          \
  template Complex<Real> psi<Real>(const WeightVector<Real>&, long long, Real);                              \
  template Complex<Real> psi<Real>(std::size_t, long long, Real, WeightKind);                               \
  template Real unit_divisor<Real>(long long, Real);                                                        \
  template Real small_divisor<Real>(std::span<const long long>, std::span<const Real>);                     \
  template Real small_divisor<Real>(long long, Real);                                                       \
  template Real bound_constant<Real>(const WeightVector<Real>&, Real);                                      \
  template BoundCheck<Real> psi_bound_check<Real>(std::size_t, long long, Real, int, WeightKind);           \
  template BoundCheck<Real> psi_bound_check<Real>(std::size_t, long long, Real, int, WeightKind, Real);     \
  template DeltaScan<Real> delta_scan<Real>(Real, long long, WarningSink*, Real, long long,                 \
                                            const ExecutionOptions&);                                       \
  template std::vector<SawtoothPoint<Real>> predict_sawtooth<Real>(const FourierSeries1D<Real>&, long long, \
                                                                   std::span<const Complex<Real>>);

WBIRKHOFF_INSTANTIATE(double)
WBIRKHOFF_INSTANTIATE(Extended)

}  // namespace wbirkhoff
