// Acceptance gates. Each criterion prints one line per check:
//   [PASS] <id> <what>: measured <value> <op> <tolerance>
// and exits nonzero if any check failed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <wbirkhoff/wbirkhoff.hpp>
#include <wbirkhoff_cli/experiment.hpp>
#include <wbirkhoff_cli/presets.hpp>

#include "oracles.hpp"

using namespace wbirkhoff;

namespace {

class Report {
 public:
  explicit Report(int criterion) : criterion_(criterion) {}

  void below(const std::string& what, double measured, double tol) {
    line(measured < tol, what, fmt(measured) + " < " + fmt(tol));
  }
  void above(const std::string& what, double measured, double tol) {
    line(measured > tol, what, fmt(measured) + " > " + fmt(tol));
  }
  void within(const std::string& what, double measured, double target, double tol) {
    line(std::abs(measured - target) <= tol, what, fmt(measured) + " = " + fmt(target) + " +- " + fmt(tol));
  }
  void equal(const std::string& what, long long measured, long long target) {
    line(measured == target, what, std::to_string(measured) + " == " + std::to_string(target));
  }
  void check(const std::string& what, bool ok, const std::string& detail) { line(ok, what, detail); }
  void runtime(double seconds, double budget) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s < %.0f s", seconds, budget);
    line(seconds < budget, "runtime", buf);
  }

  bool ok() const { return failures_ == 0; }

 private:
  static std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
  }
  void line(bool ok, const std::string& what, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", criterion_, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures_;
  }

  int criterion_;
  int failures_ = 0;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

const double kSilver = std::sqrt(2.0) - 1;
const double kPi3 = M_PI - 3;

template <class Real>
AngleSequence<Real> perturbed_lift(Real rho, std::size_t n) {
  std::vector<Real> a(n);
  for (std::size_t i = 0; i < n; ++i)
    a[i] = perturbed_observation<Real>(frac_product<Real>(static_cast<std::int64_t>(i), rho), Real(0.1), Real(0.2));
  return build_lift<Real>(a, 1, LiftBranch::Auto);
}

AngleSequence<double> observer_lift(double rho, double theta0, std::size_t n) {
  std::vector<double> a(n);
  for (std::size_t i = 0; i < n; ++i)
    a[i] = offcenter_observer<double>(unit_mod(theta0 + frac_product<double>(static_cast<std::int64_t>(i), rho)));
  return build_lift<double>(a, 1, LiftBranch::Auto);
}

// Rotation estimate from the first n increments.
double prefix_rho(const AngleSequence<double>& s, std::size_t n, WeightKind kind) {
  auto inc = s.increments().subspan(0, n);
  return unit_mod(wb_average<double>(inc, normalized_weights<double>(kind, n)));
}

double slope(const std::vector<double>& ns, const std::vector<double>& errs) {
  const std::size_t m = ns.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = std::log(ns[i]), y = std::log(errs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

// ---- criteria ----

bool criterion1() {
  Report r(1);
  Stopwatch sw;
  auto s = perturbed_lift<double>(kSilver, 50001);
  auto est = rotation_vector(s, WeightKind::exponential(1));
  const double t = sw.seconds();
  r.below("perturbed rotation |rho - (sqrt2-1)| at N=5e4, exp1, standard", circle_distance(est.rho[0], kSilver), 1e-13);
  r.runtime(t, 1);

  const Extended rho = sqrt(Extended(2)) - 1;
  auto se = perturbed_lift<Extended>(rho, 100001);
  auto ee = rotation_vector(se, WeightKind::exponential(1));
  r.below("perturbed rotation |rho - (sqrt2-1)| at N=1e5, exp1, extended",
          static_cast<double>(circle_distance(ee.rho[0], rho)), 1e-28);
  return r.ok();
}

bool criterion2() {
  Report r(2);
  Stopwatch sw;
  auto s = observer_lift(kSilver, 0, 100001);
  const std::vector<double> ns{1e3, 3e3, 1e4, 3e4, 1e5};
  const std::pair<WeightKind, double> cases[] = {
      {WeightKind::equal(), -1}, {WeightKind::quadratic(), -2}, {WeightKind::sin_squared(), -3}};
  for (auto [kind, want] : cases) {
    std::vector<double> errs;
    for (double n : ns) errs.push_back(circle_distance(prefix_rho(s, static_cast<std::size_t>(n), kind), kSilver));
    r.within("off-center observer log-error slope, " + kind.name(), slope(ns, errs), want, 0.5);
  }
  r.below("off-center observer exp1 error at N=3e4",
          circle_distance(prefix_rho(s, 30000, WeightKind::exponential(1)), kSilver), 1e-13);
  r.runtime(sw.seconds(), 10);
  return r.ok();
}

bool criterion3() {
  Report r(3);
  Stopwatch sw;
  const std::size_t n = 1000000;
  const int kmax = 700;
  auto orbit = standard_map_orbit<double>({1.159692208627139, 0.0}, 1.0, n + 1);
  auto th = torus_angular_coordinate<double>(orbit, {M_PI, 0.0}, two_pi_v<double>());
  auto seq = build_lift<double>(th, 1, LiftBranch::Auto);
  const double rho = rotation_vector(seq, WeightKind::exponential(1)).rho[0];
  r.below("standard map |rho - 0.120552721973755133| (either orientation) at N=1e6",
          rotation_number_distance(rho, 0.120552721973755133), 1e-12);

  const auto g = conjugacy_samples(seq, rho);
  auto series = fourier_coefficients<double>(g, rho, kmax, WeightKind::exponential(1));
  // floor: median of the per-block maxima of even |a_k| over the flat tail
  std::vector<double> block_max;
  for (int b = 400; b < kmax; b += 50) {
    double m = 0;
    for (int k = b; k < b + 50; k += 2) m = std::max(m, std::abs(series.coefficient(k)));
    block_max.push_back(m);
  }
  std::nth_element(block_max.begin(), block_max.begin() + block_max.size() / 2, block_max.end());
  const double floor = block_max[block_max.size() / 2];
  double odd = 0;
  for (int k = 1; k <= kmax; k += 2) odd = std::max(odd, std::abs(series.coefficient(k)));
  char label[128];
  std::snprintf(label, sizeof label, "standard map max odd |a_k|, k<=700, vs 10x even envelope floor %.3g", floor);
  r.below(label, odd, 10 * floor);
  r.runtime(sw.seconds(), 30);
  return r.ok();
}

bool criterion4() {
  Report r(4);
  Stopwatch sw;
  const auto params = TorusMapParams<double>::reference();
  const auto ref = TorusMapParams<double>::reference_rotation();
  const std::size_t n_rho = 1000000, n_lyap = 10000000;
  auto orbit = torus_map_orbit<double>({0, 0}, params, n_lyap + 1);
  {
    std::vector<double> rows;
    rows.reserve(2 * (n_rho + 1));
    for (std::size_t i = 0; i <= n_rho; ++i) {
      rows.push_back(orbit[i][0]);
      rows.push_back(orbit[i][1]);
    }
    auto seq = build_lift<double>(rows, 2, LiftBranch::Auto);
    auto est = rotation_vector(seq, WeightKind::exponential(1));
    r.below("torus map |rho1 - reference| at N=1e6", circle_distance(est.rho[0], ref[0]), 1e-10);
    r.below("torus map |rho2 - reference| at N=1e6", circle_distance(est.rho[1], ref[1]), 1e-10);
  }
  orbit.resize(n_lyap);
  JacobianFn<double> jac = [&](const Vec2<double>& p) { return torus_map_jacobian(p, params); };
  auto p = lyapunov_pair<double>(orbit, jac, {1, 0}, WeightKind::exponential(1));
  r.below("torus map |lambda1| at N=1e7", std::abs(p.lambda1), 1e-8);
  r.below("torus map |lambda2| at N=1e7", std::abs(p.lambda2), 1e-8);
  r.below("torus map |lambda1 + lambda2| at N=1e7", std::abs(p.sum()), 1e-8);
  r.runtime(sw.seconds(), 300);
  return r.ok();
}

bool criterion5() {
  Report r(5);
  Stopwatch sw;
  auto phi = observer_lift(kSilver, 0, 100001);
  const auto g = conjugacy_samples(phi, kSilver);
  auto s = fourier_coefficients<double>(g, kSilver, 60, WeightKind::exponential(1));
  const double t = sw.seconds();
  const std::function<oracle::Quad(oracle::Quad)> gq = oracle::observer_g;
  double worst = 0;
  for (int k = 1; k <= 60; ++k) worst = std::max(worst, std::abs(s.coefficient(k) - oracle::trapezoid_coefficient(gq, k, 1024)));
  r.below("observer |a_k - quadrature oracle|, k=1..60, N=1e5", worst, 1e-10);
  Stopwatch sw2;
  auto e = reconstruction_error<double>(g, s, 60, WeightKind::exponential(1));
  r.below("observer delta2 at K=60", e.delta2, 1e-12);
  r.runtime(t + sw2.seconds(), 10);
  return r.ok();
}

bool criterion6() {
  Report r(6);
  Stopwatch sw;
  r.within("Delta(113, pi-3)", small_divisor<double>(113, kPi3), 0.021, 0.002);
  r.within("Delta(226, pi-3)", small_divisor<double>(226, kPi3), 0.085, 0.005);
  r.within("Delta(339, pi-3)", small_divisor<double>(339, kPi3), 0.193, 0.01);
  auto golden = delta_scan<double>(0.5 * (std::sqrt(5.0) - 1), 1000000);
  r.within("min Delta(k, golden), k=2..1e6", golden.min, 2.655, 0.01);
  auto scan = delta_scan<double>(kPi3, 10000000);
  r.equal("argmin Delta(k, pi-3), k=2..1e7", scan.argmin, 113);
  r.runtime(sw.seconds(), 120);
  return r.ok();
}

bool criterion7() {
  Report r(7);
  Stopwatch sw;
  for (std::size_t n : {100000ul, 10000000ul}) {
    auto phi = observer_lift(kPi3, 0.25, n + 1);
    const auto g = conjugacy_samples(phi, kPi3);
    auto s = fourier_coefficients<double>(g, kPi3, 240, WeightKind::exponential(1));
    auto m = [&](int k) { return std::abs(s.coefficient(k)); };
    const std::string tag = n == 100000 ? "N=1e5" : "N=1e7";
    if (n == 100000) {
      for (int p : {113, 226}) {
        const double nb = std::max(m(p - 5), m(p + 5));
        r.above("|a_" + std::to_string(p) + "| / max(|a_k+-5|) at " + tag, m(p) / nb, 10);
      }
    } else {
      double env = 0;
      for (int k = 55; k <= 65; ++k) env = std::max(env, m(k));
      for (int p : {113, 226})
        r.below("|a_" + std::to_string(p) + "| vs k=60 envelope at " + tag, m(p), env);
    }
  }
  r.runtime(sw.seconds(), 180);
  return r.ok();
}

bool criterion8() {
  Report r(8);
  Stopwatch sw;
  int total = 0, held = 0;
  double worst_ratio = 0;
  for (int m : {1, 2}) {
    const double sup = derivative_sup_norm<double>(WeightKind::exponential(1), m);
    for (std::size_t n : {100ul, 1000ul, 10000ul})
      for (long long k = 1; k <= 50; ++k) {
        auto b = psi_bound_check<double>(n, k, kSilver, m, WeightKind::exponential(1), sup);
        ++total;
        held += b.satisfied ? 1 : 0;
        worst_ratio = std::max(worst_ratio, b.lhs / b.rhs);
      }
  }
  r.equal("psi bound satisfied (m=1,2; k=1..50; N=1e2,1e3,1e4)", held, total);
  r.below("max |psi| / bound", worst_ratio, 1);
  r.runtime(sw.seconds(), 10);
  return r.ok();
}

bool criterion9() {
  Report r(9);
  Stopwatch sw;
  const std::pair<double, double> vdp[] = {
      {5, 0.29206126329199589}, {15, 0.37553441113144011}, {25, 0.56235370092685057}};
  for (auto [f, ref] : vdp) {
    auto pts = vdp_stroboscopic<double>(f, {1, 0}, 20000);
    auto ang = angular_coordinate<double>(flatten<double>(pts), 0.0, 0.0);
    auto seq = build_lift<double>(ang, 1, LiftBranch::Auto);
    const double rho = rotation_vector(seq, WeightKind::exponential(1)).rho[0];
    r.below("van der Pol F=" + std::to_string(static_cast<int>(f)) + " |rho - reference|",
            rotation_number_distance(rho, ref), 1e-8);
  }
  const double mu = 0.1, q1 = -0.15;
  const double p2 = r3bp_momentum_for_energy(q1, -2.63, mu);
  auto run = r3bp_section_orbit<double>({q1, 0, 0, p2}, mu, 2e-4, 20000);
  auto ang = angular_coordinate<double>(flatten<double>(run.points), -0.2, 0.0);
  auto seq = build_lift<double>(ang, 1, LiftBranch::Auto);
  const double rho = rotation_vector(seq, WeightKind::exponential(1)).rho[0];
  r.below("three-body section |rho - 0.0639617287574531|", rotation_number_distance(rho, 0.0639617287574531), 1e-8);
  r.below("three-body Hamiltonian drift", run.max_energy_drift, 1e-10);
  const auto g = conjugacy_samples(seq, rho);
  auto s = fourier_coefficients<double>(g, rho, 200, WeightKind::exponential(1));
  double tail = 0;
  for (int k = 76; k <= 200; ++k) tail = std::max(tail, std::abs(s.coefficient(k)));
  r.below("three-body max |a_k|, k=76..200", tail, 1e-13);
  r.runtime(sw.seconds(), 3600);
  return r.ok();
}

bool criterion10() {
  Report r(10);
  Stopwatch sw;
  {
    double worst_sum = 0;
    bool symmetric = true;
    for (auto kind : {WeightKind::equal(), WeightKind::quadratic(), WeightKind::sin_squared(),
                      WeightKind::exponential(1), WeightKind::exponential(2)})
      for (std::size_t n : {100ul, 1001ul, 100000ul}) {
        auto w = normalized_weights<double>(kind, n);
        // the sum itself is taken in quad so only the weights' own rounding is measured
        oracle::Quad sum = 0;
        for (double v : w.values()) sum += v;
        worst_sum = std::max(worst_sum, std::abs(static_cast<double>(sum - 1)));
        if (kind.vanishes_at_ends())
          for (std::size_t i = 1; i < n; ++i) symmetric = symmetric && w[i] == w[n - i];
      }
    r.below("weight normalization |sum - 1|", worst_sum, 1e-13);
    r.check("weight symmetry w_n == w_{N-n}", symmetric, symmetric ? "exact" : "violated");
  }
  {
    const std::size_t n = 20000;
    std::vector<double> f(n), g(n), h(n), fs(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = frac_product<double>(static_cast<std::int64_t>(i), kSilver);
      f[i] = std::exp(std::sin(2 * M_PI * t));
      g[i] = std::cos(6 * M_PI * t) / (2 + std::cos(2 * M_PI * t));
      h[i] = 3 * f[i] - 0.5 * g[i];
      fs[i] = f[i] + 7;
    }
    const auto k = WeightKind::exponential(1);
    r.below("WB linearity |WB(3f - g/2) - (3 WB f - WB g / 2)|",
            std::abs(wb_average<double>(h, k) - (3 * wb_average<double>(f, k) - 0.5 * wb_average<double>(g, k))), 1e-13);
    r.below("WB shift invariance |WB(f + 7) - (WB f + 7)|", std::abs(wb_average<double>(fs, k) - wb_average<double>(f, k) - 7),
            1e-13);
    auto s = fourier_coefficients<double>(f, kSilver, 40, k);
    bool conj = s.coefficient(0).imag() == 0;
    for (int q = 1; q <= 40; ++q) conj = conj && s.coefficient(-q) == std::conj(s.coefficient(q));
    r.check("Fourier conjugate symmetry a_{-k} == conj(a_k)", conj, conj ? "exact" : "violated");
  }
  {
    auto orbit = standard_map_orbit<double>({1.159692208627139, 0.0}, 1.0, 100000);
    double worst = 0;
    for (const auto& p : orbit) {
      auto m = standard_map_jacobian(p, 1.0);
      worst = std::max(worst, std::abs(m[0] * m[3] - m[1] * m[2] - 1));
    }
    r.below("standard map |det DT - 1| along 1e5 iterates", worst, 1e-14);
  }
  {
    auto osc = [](Extended, const State<Extended, 2>& y) { return State<Extended, 2>{y[1], -y[0]}; };
    std::vector<double> hs{0.4, 0.2, 0.1, 0.05}, errs;
    for (double h : hs) {
      auto tr = integrate<Extended, 2>(osc, {Extended(1), Extended(0)}, Extended(0), Extended(h), Extended(4));
      const auto& y = tr.states.back();
      errs.push_back(static_cast<double>(abs(y[0] - cos(Extended(4))) + abs(y[1] + sin(Extended(4)))));
    }
    r.within("DOP853 convergence order (extended, harmonic oscillator)", slope(hs, errs), 8, 0.5);
  }
  {
    using namespace wbirkhoff::cli;
    bool same = true;
    std::string first_diff = "none";
    const std::pair<const char*, const char*> runs[] = {
        {"rotnum", "observer-weights"}, {"fourier", "observer-near-rational"}, {"lyap", "standard-map"},
        {"diag", "small-divisors"}};
    for (auto [cmd, preset] : runs) {
      Config cfg = Config::parse(find_preset(preset)->text, preset);
      cfg.set("n", "20000");
      cfg.set("n_sweep", "1000, 20000");
      if (std::string(cmd) == "diag") cfg.set("diag.k_max", "100000");
      auto e1 = make_experiment(cfg);
      auto e2 = e1;
      e2.exec.threads = 3;
      auto a = run_command(cmd, e1), b = run_command(cmd, e1), c = run_command(cmd, e2);
      for (std::size_t i = 0; i < a.files.size(); ++i)
        if (a.files[i].content != b.files[i].content || a.files[i].content != c.files[i].content) {
          same = false;
          first_diff = std::string(cmd) + "/" + a.files[i].name;
        }
    }
    r.check("byte-identical reruns (rotnum, fourier, lyap, diag; 1 vs 3 threads)", same, "first difference: " + first_diff);
  }
  r.runtime(sw.seconds(), 120);
  return r.ok();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wbirkhoff acceptance gates"};
  std::vector<int> which;
  app.add_option("-c,--criterion", which, "criterion number(s), 1-10")->required()->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::map<int, std::function<bool()>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}};
  bool all = true;
  for (int c : which) {
    try {
      all = criteria.at(c)() && all;
    } catch (const std::exception& e) {
      std::printf("[FAIL] %d error: %s\n", c, e.what());
      all = false;
    }
  }
  return all ? 0 : 1;
}
