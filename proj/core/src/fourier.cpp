#include "wbirkhoff/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace wbirkhoff {

namespace {

// k-chunk width of the phase recurrence; each chunk is re-seeded with an
// exactly reduced phase, so rounding from repeated multiplication stays
// bounded by the chunk width.
constexpr int kChunk = 16;

template <class Real>
struct Phase {
  Real re, im;
};

// exp(sign * 2 pi i f)
template <class Real>
inline Phase<Real> unit_phase(Real f, int sign) {
  using std::cos;
  using std::sin;
  const Real a = two_pi_v<Real>() * f;
  return {cos(a), sign > 0 ? sin(a) : -sin(a)};
}

template <class Real>
inline Phase<Real> mul(const Phase<Real>& a, const Phase<Real>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

void check_index_range(long long k, std::size_t n) {
  // m = k * n must be exact in a double significand
  const long double limit = 9007199254740992.0L;  // 2^53
  if (static_cast<long double>(k < 0 ? -k : k) * static_cast<long double>(n) >= limit)
    throw ContractError("|k| * N too large for exact phase reduction");
}

template <class T>
void check_samples(std::span<const T> values, std::size_t n_weights) {
  if (values.size() < 2) throw ContractError("need at least 2 samples");
  if (values.size() != n_weights) throw ContractError("weight vector length does not match sample count");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!is_finite(values[i])) throw ContractError("non-finite sample at index " + std::to_string(i));
}

template <class Real>
Real frac_sum(Real a, Real b) {
  return unit_mod(a + b);
}

}  // namespace

template <class Real>
Complex<Real> fourier_coefficient(std::span<const Complex<Real>> values, Real rho, long long k,
                                  const WeightVector<Real>& weights) {
  check_samples(values, weights.n_terms());
  check_index_range(k, values.size());
  PairwiseSum<Complex<Real>> sum;
  for (std::size_t n = 0; n < values.size(); ++n) {
    const Phase<Real> e = unit_phase(frac_product(k * static_cast<long long>(n), rho), -1);
    const Real w = weights[n];
    const Complex<Real>& f = values[n];
    sum.add(Complex<Real>(w * (f.real() * e.re - f.imag() * e.im), w * (f.real() * e.im + f.imag() * e.re)));
  }
  return sum.total();
}

template <class Real>
Complex<Real> fourier_coefficient(std::span<const Real> values, Real rho, long long k,
                                  const WeightVector<Real>& weights) {
  check_samples(values, weights.n_terms());
  check_index_range(k, values.size());
  PairwiseSum<Complex<Real>> sum;
  for (std::size_t n = 0; n < values.size(); ++n) {
    const Phase<Real> e = unit_phase(frac_product(k * static_cast<long long>(n), rho), -1);
    const Real b = weights[n] * values[n];
    sum.add(Complex<Real>(b * e.re, b * e.im));
  }
  return sum.total();
}

template <class Real>
Complex<Real> fourier_coefficient(std::span<const Real> values, Real rho, long long k, WeightKind kind) {
  if (values.size() < 2) throw ContractError("need at least 2 samples");
  return fourier_coefficient(values, rho, k, normalized_weights<Real>(kind, values.size()));
}

template <class Real>
FourierSeries1D<Real> fourier_coefficients(std::span<const Real> values, Real rho, int max_k,
                                           const WeightVector<Real>& weights, const ExecutionOptions& exec) {
  if (max_k < 0) throw ContractError("max_k must be >= 0");
  check_samples(values, weights.n_terms());
  check_index_range(max_k, values.size());
  const std::size_t n_coef = static_cast<std::size_t>(max_k) + 1;
  const std::size_t n_chunks = (n_coef + kChunk - 1) / kChunk;
  std::vector<PairwiseSum<Complex<Real>>> sums(n_coef);

  parallel_chunks(n_chunks, exec, [&](std::size_t cb, std::size_t ce) {
    for (std::size_t n = 0; n < values.size(); ++n) {
      const long long ln = static_cast<long long>(n);
      const Real b = weights[n] * values[n];
      const Phase<Real> z = unit_phase(frac_product(ln, rho), -1);
      for (std::size_t c = cb; c < ce; ++c) {
        const std::size_t k0 = c * kChunk, k1 = std::min(n_coef, k0 + kChunk);
        Phase<Real> e = unit_phase(frac_product(static_cast<long long>(k0) * ln, rho), -1);
        for (std::size_t k = k0; k < k1; ++k) {
          sums[k].add(Complex<Real>(b * e.re, b * e.im));
          e = mul(e, z);
        }
      }
    }
  });

  FourierSeries1D<Real> out;
  out.rho = rho;
  out.n_iterates = values.size();
  out.nonnegative.resize(n_coef);
  for (std::size_t k = 0; k < n_coef; ++k) out.nonnegative[k] = sums[k].total();
  // a real observable has a real mean
  out.nonnegative[0] = Complex<Real>(out.nonnegative[0].real(), Real(0));
  return out;
}

template <class Real>
FourierSeries1D<Real> fourier_coefficients(std::span<const Real> values, Real rho, int max_k, WeightKind kind,
                                           const ExecutionOptions& exec) {
  if (values.size() < 2) throw ContractError("need at least 2 samples");
  return fourier_coefficients(values, rho, max_k, normalized_weights<Real>(kind, values.size()), exec);
}

template <class Real>
std::vector<Real> conjugacy_samples(const AngleSequence<Real>& phi, Real rho, std::size_t component,
                                    WarningSink* warnings) {
  using std::abs;
  using std::llround;
  using boost::multiprecision::llround;
  const std::size_t n = phi.size();
  if (n < 2) throw ContractError("conjugacy needs at least 2 angles");
  if (component >= phi.dim()) throw ContractError("component out of range");
  const Real a0 = phi.angle(0, component);
  const std::int64_t w0 = phi.winding(0, component);
  const Real mean_step =
      (Real(static_cast<long long>(phi.winding(n - 1, component) - w0)) + (phi.angle(n - 1, component) - a0)) /
      Real(static_cast<long long>(n - 1));
  const std::int64_t shift = static_cast<std::int64_t>(llround(mean_step - rho));

  std::vector<Real> g(n);
  Real worst(0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto sp = split_product(static_cast<std::int64_t>(i), rho);
    const std::int64_t whole = phi.winding(i, component) - w0 - static_cast<std::int64_t>(i) * shift - sp.whole;
    g[i] = Real(static_cast<long long>(whole)) + ((phi.angle(i, component) - sp.frac) - a0);
    worst = std::max(worst, Real(abs(g[i])));
  }
  if (worst > Real(10)) {
    std::ostringstream msg;
    msg << "|g_n| reaches " << static_cast<double>(worst) << "; rotation number likely inconsistent with the orbit";
    emit(warnings, "conjugacy-drift", msg.str());
  }
  return g;
}

template <class Real>
ConjugacyModel<Real> conjugacy_series(const AngleSequence<Real>& phi, Real rho, int max_k, WeightKind kind,
                                      WarningSink* warnings, const ExecutionOptions& exec) {
  if (phi.dim() != 1) throw ContractError("conjugacy_series expects a one-dimensional angle sequence");
  const std::vector<Real> g = conjugacy_samples(phi, rho, 0, warnings);
  ConjugacyModel<Real> model;
  model.series = fourier_coefficients(std::span<const Real>(g), rho, max_k, kind, exec);
  model.rho = rho;
  return model;
}

template <class Real>
FourierSeries2D<Real> fourier_coefficients_2d(std::span<const Real> values, std::array<Real, 2> rho, int max_j,
                                              int max_k, WeightKind kind, const ExecutionOptions& exec) {
  if (max_j < 0 || max_k < 0) throw ContractError("J and K must be >= 0");
  if (values.size() < 2) throw ContractError("need at least 2 samples");
  const WeightVector<Real> weights = normalized_weights<Real>(kind, values.size());
  check_samples(values, weights.n_terms());
  check_index_range(std::max(max_j, max_k), values.size());

  const std::size_t width = static_cast<std::size_t>(2 * max_k + 1);
  const std::size_t rows = static_cast<std::size_t>(max_j) + 1;
  const std::size_t chunks_per_row = (width + kChunk - 1) / kChunk;
  std::vector<PairwiseSum<Complex<Real>>> sums(rows * width);

  parallel_chunks(rows * chunks_per_row, exec, [&](std::size_t ib, std::size_t ie) {
    for (std::size_t n = 0; n < values.size(); ++n) {
      const long long ln = static_cast<long long>(n);
      const Real b = weights[n] * values[n];
      const Phase<Real> zy = unit_phase(frac_product(ln, rho[1]), -1);
      for (std::size_t item = ib; item < ie; ++item) {
        const long long j = static_cast<long long>(item / chunks_per_row);
        const std::size_t c0 = (item % chunks_per_row) * kChunk, c1 = std::min(width, c0 + kChunk);
        const long long k0 = static_cast<long long>(c0) - max_k;
        // phase j x + k0 y with both products reduced exactly
        const Real f = frac_sum(frac_product(j * ln, rho[0]),
                                k0 >= 0 ? frac_product(k0 * ln, rho[1]) : Real(1) - frac_product(-k0 * ln, rho[1]));
        Phase<Real> e = unit_phase(f, -1);
        for (std::size_t c = c0; c < c1; ++c) {
          sums[static_cast<std::size_t>(j) * width + c].add(Complex<Real>(b * e.re, b * e.im));
          e = mul(e, zy);
        }
      }
    }
  });

  FourierSeries2D<Real> out;
  out.max_j = max_j;
  out.max_k = max_k;
  out.rho = rho;
  out.n_iterates = values.size();
  out.grid.resize(rows * width);
  for (std::size_t i = 0; i < out.grid.size(); ++i) out.grid[i] = sums[i].total();
  // row j = 0: k < 0 entries mirror k > 0
  for (int k = 1; k <= max_k; ++k)
    out.grid[static_cast<std::size_t>(max_k - k)] = std::conj(out.grid[static_cast<std::size_t>(max_k + k)]);
  out.grid[static_cast<std::size_t>(max_k)] = Complex<Real>(out.grid[static_cast<std::size_t>(max_k)].real(), Real(0));
  return out;
}

template <class Real>
Real evaluate_series(const FourierSeries1D<Real>& series, Real theta) {
  using std::abs;
  if (series.nonnegative.empty()) throw ContractError("empty series");
  if (!is_finite(theta)) throw ContractError("non-finite evaluation point");
  PairwiseSum<Real> re, im;
  const int kmax = series.max_index();
  for (int k = -kmax; k <= kmax; ++k) {
    const Complex<Real> a = series.coefficient(k);
    const Real f = k >= 0 ? frac_product(k, theta) : Real(1) - frac_product(-k, theta);
    const Phase<Real> e = unit_phase(f, +1);
    re.add(a.real() * e.re - a.imag() * e.im);
    im.add(a.real() * e.im + a.imag() * e.re);
  }
  if (abs(im.total()) > Real(kImaginaryResidual))
    throw ComputationError("series has an imaginary residual above tolerance; coefficients inconsistent");
  return re.total();
}

template <class Real>
Real evaluate_series(const FourierSeries2D<Real>& series, Real x, Real y) {
  using std::abs;
  if (series.grid.empty()) throw ContractError("empty series");
  PairwiseSum<Real> re, im;
  for (int j = -series.max_j; j <= series.max_j; ++j) {
    for (int k = -series.max_k; k <= series.max_k; ++k) {
      const Complex<Real> a = series.coefficient(j, k);
      const Real fx = j >= 0 ? frac_product(j, x) : Real(1) - frac_product(-j, x);
      const Real fy = k >= 0 ? frac_product(k, y) : Real(1) - frac_product(-k, y);
      const Phase<Real> e = unit_phase(frac_sum(fx, fy), +1);
      re.add(a.real() * e.re - a.imag() * e.im);
      im.add(a.real() * e.im + a.imag() * e.re);
    }
  }
  if (abs(im.total()) > Real(kImaginaryResidual))
    throw ComputationError("series has an imaginary residual above tolerance; coefficients inconsistent");
  return re.total();
}

template <class Real>
Real evaluate_conjugacy(const ConjugacyModel<Real>& model, Real theta) {
  return theta + evaluate_series(model.series, theta);
}

template <class Real>
std::vector<ReconstructionError<Real>> reconstruction_errors(std::span<const Real> values,
                                                             const FourierSeries1D<Real>& series,
                                                             std::span<const int> truncations, WeightKind kind) {
  using std::abs;
  using std::sqrt;
  if (truncations.empty()) return {};
  for (std::size_t i = 0; i < truncations.size(); ++i) {
    if (truncations[i] < 0 || truncations[i] > series.max_index())
      throw ContractError("truncation K outside the available coefficients");
    if (i > 0 && truncations[i] <= truncations[i - 1]) throw ContractError("truncations must be ascending");
  }
  const WeightVector<Real> weights = normalized_weights<Real>(kind, values.size());
  check_samples(values, weights.n_terms());
  const int kmax = truncations.back();
  check_index_range(kmax, values.size());

  std::vector<WbAccumulator<Real>> abs_acc(truncations.size(), WbAccumulator<Real>(weights));
  std::vector<WbAccumulator<Real>> sq_acc(truncations.size(), WbAccumulator<Real>(weights));
  const Real a0 = series.nonnegative[0].real();
  for (std::size_t n = 0; n < values.size(); ++n) {
    const long long ln = static_cast<long long>(n);
    const Phase<Real> z = unit_phase(frac_product(ln, series.rho), +1);
    Real partial = a0;
    std::size_t t = 0;
    auto record = [&](int k) {
      while (t < truncations.size() && truncations[t] == k) {
        const Real r = values[n] - partial;
        abs_acc[t].push(abs(r));
        sq_acc[t].push(r * r);
        ++t;
      }
    };
    record(0);
    Phase<Real> e{};
    for (int k = 1; k <= kmax; ++k) {
      if ((k - 1) % kChunk == 0) e = unit_phase(frac_product(static_cast<long long>(k) * ln, series.rho), +1);
      const Complex<Real>& a = series.nonnegative[static_cast<std::size_t>(k)];
      partial += Real(2) * (a.real() * e.re - a.imag() * e.im);
      record(k);
      e = mul(e, z);
    }
  }
  std::vector<ReconstructionError<Real>> out(truncations.size());
  for (std::size_t t = 0; t < truncations.size(); ++t) {
    out[t].max_k = truncations[t];
    out[t].delta1 = abs_acc[t].finalize();
    out[t].delta2 = sqrt(sq_acc[t].finalize());
  }
  return out;
}

template <class Real>
ReconstructionError<Real> reconstruction_error(std::span<const Real> values, const FourierSeries1D<Real>& series,
                                               int max_k, WeightKind kind) {
  const int ks[1] = {max_k};
  return reconstruction_errors(values, series, std::span<const int>(ks), kind).front();
}

namespace {

template <class Real>
DecayFit<Real> fit_points(const std::vector<std::pair<Real, Real>>& pts) {
  if (pts.size() < kMinDecayPoints)
    throw ComputationError("decay fit needs at least " + std::to_string(kMinDecayPoints) +
                           " coefficients above the noise floor, found " + std::to_string(pts.size()));
  Real sx(0), sy(0);
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
  }
  const Real m = Real(static_cast<long long>(pts.size()));
  const Real mx = sx / m, my = sy / m;
  Real sxx(0), sxy(0);
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  DecayFit<Real> fit;
  fit.beta = -sxy / sxx;
  Real log_alpha = -std::numeric_limits<Real>::infinity();
  for (const auto& [x, y] : pts) log_alpha = std::max(log_alpha, Real(y + fit.beta * x));
  using std::exp;
  fit.alpha = exp(log_alpha);
  fit.n_used = pts.size();
  fit.analytic = fit.beta > Real(0);
  return fit;
}

}  // namespace

template <class Real>
DecayFit<Real> decay_fit(const FourierSeries1D<Real>& series, Real floor) {
  using std::log;
  std::vector<std::pair<Real, Real>> pts;
  for (int k = 1; k <= series.max_index(); ++k) {
    const Real mag = modulus(series.nonnegative[static_cast<std::size_t>(k)]);
    if (mag > floor) pts.emplace_back(Real(k), log(mag));
  }
  return fit_points(pts);
}

template <class Real>
DecayFit<Real> decay_fit_ray(const FourierSeries2D<Real>& series, int dj, int dk, Real floor) {
  using std::log;
  using std::sqrt;
  if (dj < 0 || (dj == 0 && dk == 0)) throw ContractError("ray direction must have dj >= 0 and be nonzero");
  const Real step = sqrt(Real(dj * dj + dk * dk));
  std::vector<std::pair<Real, Real>> pts;
  for (int m = 1;; ++m) {
    const int j = m * dj, k = m * dk;
    if (j > series.max_j || k > series.max_k || k < -series.max_k) break;
    const Real mag = modulus(series.coefficient(j, k));
    if (mag > floor) pts.emplace_back(Real(m) * step, log(mag));
  }
  DecayFit<Real> fit = fit_points(pts);
  fit.has_verdict = false;
  fit.analytic = false;
  return fit;
}

#define WBIRKHOFF_INSTANTIATE(Real)                                                                             \
  template Complex<Real> fourier_coefficient<Real>(std::span<const Real>, Real, long long,                     \
                                                   const WeightVector<Real>&);                                  \
  template Complex<Real> fourier_coefficient<Real>(std::span<const Complex<Real>>, Real, long long,            \
                                                   const WeightVector<Real>&);                                  \
  template Complex<Real> fourier_coefficient<Real>(std::span<const Real>, Real, long long, WeightKind);        \
  template FourierSeries1D<Real> fourier_coefficients<Real>(std::span<const Real>, Real, int,                  \
                                                            const WeightVector<Real>&, const ExecutionOptions&); \
  template FourierSeries1D<Real> fourier_coefficients<Real>(std::span<const Real>, Real, int, WeightKind,      \
                                                            const ExecutionOptions&);                          \
  template std::vector<Real> conjugacy_samples<Real>(const AngleSequence<Real>&, Real, std::size_t,            \
                                                     WarningSink*);                                            \
  template ConjugacyModel<Real> conjugacy_series<Real>(const AngleSequence<Real>&, Real, int, WeightKind,      \
                                                       WarningSink*, const ExecutionOptions&);                 \
  template FourierSeries2D<Real> fourier_coefficients_2d<Real>(std::span<const Real>, std::array<Real, 2>, int, \
                                                               int, WeightKind, const ExecutionOptions&);      \
  template Real evaluate_series<Real>(const FourierSeries1D<Real>&, Real);                                     \
  template Real evaluate_series<Real>(const FourierSeries2D<Real>&, Real, Real);                               \
  template Real evaluate_conjugacy<Real>(const ConjugacyModel<Real>&, Real);                                   \
  template std::vector<ReconstructionError<Real>> reconstruction_errors<Real>(                                 \
      std::span<const Real>, const FourierSeries1D<Real>&, std::span<const int>, WeightKind);                  \
  template ReconstructionError<Real> reconstruction_error<Real>(std::span<const Real>,                         \
                                                                const FourierSeries1D<Real>&, int, WeightKind); \
  template DecayFit<Real> decay_fit<Real>(const FourierSeries1D<Real>&, Real);                                 \
  template DecayFit<Real> decay_fit_ray<Real>(const FourierSeries2D<Real>&, int, int, Real);

WBIRKHOFF_INSTANTIATE(double)
WBIRKHOFF_INSTANTIATE(Extended)

}  // namespace wbirkhoff
