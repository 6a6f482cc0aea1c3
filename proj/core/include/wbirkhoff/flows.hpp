#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "wbirkhoff/errors.hpp"
#include "wbirkhoff/lyapunov.hpp"
#include "wbirkhoff/precision.hpp"

namespace wbirkhoff {

template <class Real, std::size_t D>
using State = std::array<Real, D>;

// Coefficients of the 12-stage, 8th-order Dormand-Prince pair (the 8th-order
// solution only; used here with a fixed step).
template <class Real>
struct Dop853Tableau {
  std::array<Real, 12> c{};
  std::array<std::array<Real, 12>, 12> a{};
  std::array<Real, 12> b{};
};

template <class Real>
const Dop853Tableau<Real>& dop853_tableau();

template <class Real, std::size_t D>
inline bool all_finite(const State<Real, D>& y) {
  for (const Real& v : y)
    if (!is_finite(v)) return false;
  return true;
}

// One fixed step; f(t, y) -> dy/dt.
template <class Real, std::size_t D, class F>
State<Real, D> rk_step(F&& f, Real t, const State<Real, D>& y, Real h) {
  const auto& tab = dop853_tableau<Real>();
  std::array<State<Real, D>, 12> k;
  k[0] = f(t, y);
  for (std::size_t s = 1; s < 12; ++s) {
    State<Real, D> ys = y;
    for (std::size_t i = 0; i < D; ++i) {
      Real acc(0);
      for (std::size_t j = 0; j < s; ++j)
        if (tab.a[s][j] != Real(0)) acc += tab.a[s][j] * k[j][i];
      ys[i] = y[i] + h * acc;
    }
    k[s] = f(t + tab.c[s] * h, ys);
  }
  State<Real, D> out = y;
  for (std::size_t i = 0; i < D; ++i) {
    Real acc(0);
    for (std::size_t s = 0; s < 12; ++s)
      if (tab.b[s] != Real(0)) acc += tab.b[s] * k[s][i];
    out[i] = y[i] + h * acc;
  }
  if (!all_finite<Real, D>(out)) throw ComputationError("integration produced a non-finite state at t = " +
                                                        std::to_string(static_cast<double>(t)));
  return out;
}

template <class Real, std::size_t D>
struct Trajectory {
  std::vector<Real> times;
  std::vector<State<Real, D>> states;
};

template <class Real>
void check_step(Real h, Real duration) {
  if (!(h > Real(0)) || !is_finite(h)) throw ContractError("step size must be positive and finite");
  if (!(duration >= Real(0)) || !is_finite(duration)) throw ContractError("duration must be >= 0 and finite");
}

// Fixed steps of exactly h from t0 up to t0 + T (the final partial interval,
// if any, is covered by one shorter step). Time is recomputed as t0 + i h to
// avoid drift.
template <class Real, std::size_t D, class F>
Trajectory<Real, D> integrate(F&& f, const State<Real, D>& y0, Real t0, Real h, Real duration) {
  using std::floor;
  check_step(h, duration);
  if (!all_finite<Real, D>(y0)) throw ContractError("non-finite initial state");
  Trajectory<Real, D> traj;
  const Real ratio = duration / h;
  std::size_t full = static_cast<std::size_t>(static_cast<long long>(floor(ratio + Real(1e-9))));
  traj.times.reserve(full + 2);
  traj.states.reserve(full + 2);
  traj.times.push_back(t0);
  traj.states.push_back(y0);
  State<Real, D> y = y0;
  const Real done = Real(static_cast<long long>(full)) * h;
  const Real rest = duration - done;
  const bool partial = rest > h * Real(1e-9);
  for (std::size_t i = 0; i < full; ++i) {
    const Real t = Real(static_cast<long long>(i)) * h;
    // when duration/h is an integer up to rounding, the last full step ends exactly at duration
    const bool last = !partial && i + 1 == full;
    y = rk_step<Real, D>(f, t0 + t, y, last ? duration - t : h);
    traj.times.push_back(last ? t0 + duration : t0 + Real(static_cast<long long>(i + 1)) * h);
    traj.states.push_back(y);
  }
  if (partial) {
    y = rk_step<Real, D>(f, t0 + done, y, rest);
    traj.times.push_back(t0 + duration);
    traj.states.push_back(y);
  }
  return traj;
}

// ---- Poincare sections: component c crosses zero upward ----

template <class Real, std::size_t D>
struct SectionCrossing {
  Real time{};
  State<Real, D> state{};
  Real rate{};  // d(state[c])/dt at the crossing
  bool tangential = false;
};

inline constexpr double kTangentialRate = 1e-8;
inline constexpr double kSectionTolerance = 1e-12;

// Given y at t with y[c] < 0 and a step of h that ends with y[c] >= 0,
// locate the crossing by bisection on partial steps, then Newton in time.
template <class Real, std::size_t D, class F>
SectionCrossing<Real, D> refine_crossing(F&& f, Real t, const State<Real, D>& y, Real h, std::size_t c) {
  using std::abs;
  Real lo(0), hi = h;
  for (int it = 0; it < 20; ++it) {
    const Real mid = (lo + hi) / Real(2);
    const State<Real, D> ym = rk_step<Real, D>(f, t, y, mid);
    if (ym[c] < Real(0))
      lo = mid;
    else
      hi = mid;
  }
  Real tau = (lo + hi) / Real(2);
  State<Real, D> yc = rk_step<Real, D>(f, t, y, tau);
  State<Real, D> dy = f(t + tau, yc);
  for (int it = 0; it < 6 && abs(yc[c]) >= Real(kSectionTolerance) * Real(1e-3); ++it) {
    if (dy[c] == Real(0)) break;
    tau -= yc[c] / dy[c];
    yc = rk_step<Real, D>(f, t, y, tau);
    dy = f(t + tau, yc);
  }
  SectionCrossing<Real, D> out;
  out.time = t + tau;
  out.state = yc;
  out.rate = dy[c];
  out.tangential = abs(dy[c]) < Real(kTangentialRate);
  return out;
}

template <class Real, std::size_t D>
struct SectionResult {
  std::vector<SectionCrossing<Real, D>> crossings;
  std::size_t tangential = 0;
  std::size_t steps = 0;
  Real end_time{};
  State<Real, D> end_state{};
};

template <class Real, std::size_t D>
void flag_tangential(const SectionResult<Real, D>& r, WarningSink* warnings) {
  if (r.tangential > 0)
    emit(warnings, "tangential-crossing",
         std::to_string(r.tangential) + " section crossing(s) with |rate| < " + std::to_string(kTangentialRate));
}

// Section points from a stored trajectory (fixed-step grid).
template <class Real, std::size_t D, class F>
SectionResult<Real, D> poincare_section(F&& f, const Trajectory<Real, D>& traj, std::size_t c,
                                        WarningSink* warnings = nullptr) {
  if (c >= D) throw ContractError("section component out of range");
  SectionResult<Real, D> out;
  for (std::size_t i = 0; i + 1 < traj.states.size(); ++i) {
    if (traj.states[i][c] < Real(0) && traj.states[i + 1][c] >= Real(0)) {
      auto x = refine_crossing<Real, D>(f, traj.times[i], traj.states[i], traj.times[i + 1] - traj.times[i], c);
      if (x.rate > Real(0) || x.tangential) {
        out.tangential += x.tangential ? 1 : 0;
        out.crossings.push_back(x);
      }
    }
  }
  out.steps = traj.states.empty() ? 0 : traj.states.size() - 1;
  if (!traj.states.empty()) {
    out.end_time = traj.times.back();
    out.end_state = traj.states.back();
  }
  flag_tangential(out, warnings);
  return out;
}

// Integrates on the fixed grid until max_returns upward crossings or t_max,
// without storing the trajectory. on_step(t, y) sees every grid state.
template <class Real, std::size_t D, class F, class StepObserver>
SectionResult<Real, D> integrate_to_section(F&& f, const State<Real, D>& y0, Real t0, Real h, std::size_t c,
                                            std::size_t max_returns, Real t_max, StepObserver&& on_step,
                                            WarningSink* warnings = nullptr) {
  if (c >= D) throw ContractError("section component out of range");
  check_step(h, t_max);
  SectionResult<Real, D> out;
  State<Real, D> y = y0;
  on_step(t0, y);
  std::size_t i = 0;
  Real t = t0;
  while (out.crossings.size() < max_returns && t < t0 + t_max) {
    const State<Real, D> next = rk_step<Real, D>(f, t, y, h);
    if (y[c] < Real(0) && next[c] >= Real(0)) {
      auto x = refine_crossing<Real, D>(f, t, y, h, c);
      if (x.rate > Real(0) || x.tangential) {
        out.tangential += x.tangential ? 1 : 0;
        out.crossings.push_back(x);
      }
    }
    y = next;
    ++i;
    t = t0 + Real(static_cast<long long>(i)) * h;
    on_step(t, y);
  }
  out.steps = i;
  out.end_time = t;
  out.end_state = y;
  flag_tangential(out, warnings);
  return out;
}

template <class Real, std::size_t D, class F>
SectionResult<Real, D> integrate_to_section(F&& f, const State<Real, D>& y0, Real t0, Real h, std::size_t c,
                                            std::size_t max_returns, Real t_max,
                                            WarningSink* warnings = nullptr) {
  return integrate_to_section<Real, D>(f, y0, t0, h, c, max_returns, t_max, [](Real, const State<Real, D>&) {},
                                       warnings);
}

// ---- Planar circular restricted three-body problem, rotating frame ----
// State (q1, q2, p1, p2); planet (mass 1 - mu) at q1 = -mu, moon at q1 = 1 - mu.

inline constexpr double kCollisionDistance = 1e-6;

template <class Real>
State<Real, 4> r3bp_field(const State<Real, 4>& s, Real mu);

template <class Real>
Real r3bp_hamiltonian(const State<Real, 4>& s, Real mu);

// p2 > q1 solving H(q1, 0, 0, p2) = energy (the relation is quadratic in p2).
template <class Real>
Real r3bp_momentum_for_energy(Real q1, Real energy, Real mu);

template <class Real>
struct R3bpField {
  Real mu;
  State<Real, 4> operator()(Real, const State<Real, 4>& s) const { return r3bp_field(s, mu); }
};

template <class Real>
struct R3bpSectionRun {
  std::vector<Vec2<Real>> points;  // (q1, p1) at q2 = 0, dq2/dt > 0
  std::vector<Real> times;
  Real initial_energy{};
  Real max_energy_drift{};
  std::size_t tangential = 0;
  std::size_t steps = 0;
};

template <class Real>
R3bpSectionRun<Real> r3bp_section_orbit(const State<Real, 4>& start, Real mu, Real h, std::size_t returns,
                                        WarningSink* warnings = nullptr);

// ---- Forced van der Pol oscillator, sampled once per forcing period ----
// x'' - 0.2 (1 - x^2) x' + 20 x^3 = F sin(0.83 t)

inline constexpr double kVdpForcingFrequency = 0.83;

template <class Real>
State<Real, 2> vdp_field(Real t, const State<Real, 2>& s, Real forcing);

template <class Real>
struct VdpOptions {
  std::size_t transient = 500;
  std::size_t steps_per_period = 2000;
};

// Samples (x, dx/dt) at t_k = 2 pi k / 0.83 after discarding `transient` samples.
template <class Real>
std::vector<Vec2<Real>> vdp_stroboscopic(Real forcing, Vec2<Real> start, std::size_t n_samples,
                                         const VdpOptions<Real>& opts = {});

}  // namespace wbirkhoff
