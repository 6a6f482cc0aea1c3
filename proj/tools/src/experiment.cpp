#include "wbirkhoff_cli/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <wbirkhoff/wbirkhoff.hpp>

#include "json.hpp"

namespace wbirkhoff::cli {

namespace {

using nlohmann::ordered_json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "system", "tier", "n", "n_sweep", "weights", "series_weight", "lift", "threads",
      "rho", "theta0", "alpha", "beta", "center", "start", "map.alpha", "map.epsilon",
      "mu", "q1", "energy", "p2", "h", "forcing", "transient", "steps_per_period",
      "k_max", "truncations", "component", "reference", "reference_orientation", "v0",
      "diag.k_min", "diag.k_max", "diag.threshold", "diag.psi_n", "diag.psi_k_max",
      "diag.bound_m", "diag.bound_n", "diag.bound_k_max", "diag.k_star"};
  return keys;
}

const std::set<std::string>& known_systems() {
  static const std::set<std::string> s = {"rigid", "perturbed", "observer", "standard",
                                          "torus", "r3bp", "vdp", "none"};
  return s;
}

std::size_t as_count(long long v, const std::string& key, long long min) {
  if (v < min) throw ContractError("'" + key + "' must be >= " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

std::vector<std::size_t> count_list(const Config& cfg, const std::string& key, long long min,
                                    const std::string& fallback = "") {
  std::vector<std::size_t> out;
  for (long long v : cfg.get_int_list(key, fallback)) out.push_back(as_count(v, key, min));
  return out;
}

void require_increasing(const std::vector<std::size_t>& v, const std::string& key) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) throw ContractError("'" + key + "' must be strictly increasing");
}

template <class Real>
ordered_json num(const Real& x) {
  if constexpr (std::is_same_v<Real, double>) {
    if (std::isfinite(x)) return x;
    return format_real(x);
  } else {
    return format_real(x);
  }
}

template <class Real>
ordered_json num_array(std::span<const Real> xs) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(num(x));
  return a;
}

ordered_json warnings_json(const WarningSink& w) {
  ordered_json a = ordered_json::array();
  for (const auto& x : w) a.push_back({{"code", x.code}, {"message", x.message}});
  return a;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

template <class Real>
std::vector<Real> values(const std::vector<std::string>& texts, const std::vector<std::string>& fallback,
                         std::size_t size, const std::string& key) {
  const auto& src = texts.empty() ? fallback : texts;
  if (size != 0 && src.size() != size)
    throw ContractError("'" + key + "' needs " + std::to_string(size) + " value(s)");
  std::vector<Real> out;
  for (const auto& t : src) out.push_back(parse_value<Real>(t));
  return out;
}

// ---- orbit generation ----

template <class Real>
struct SystemOrbit {
  std::vector<std::string> columns;
  std::vector<Real> rows;  // row-major, columns.size() per state
  std::size_t angle_dim = 1;
  std::vector<Real> angles;
  std::vector<Vec2<Real>> points;  // map states, when the system is a 2-D map
  JacobianFn<Real> jacobian;       // empty unless the map has a derivative
  AngleSequence<Real> exact;       // rigid rotation: lift known exactly
  bool has_exact = false;
};

template <class Real>
std::vector<Real> rotation_angles(const std::vector<Real>& rho, const std::vector<Real>& theta0, std::size_t n) {
  std::vector<Real> th(n);
  for (std::size_t i = 0; i < n; ++i)
    th[i] = unit_mod(theta0[0] + frac_product(static_cast<std::int64_t>(i), rho[0]));
  return th;
}

template <class Real>
SystemOrbit<Real> make_orbit(const ExperimentConfig& c, std::size_t n, WarningSink* warnings) {
  SystemOrbit<Real> o;
  if (c.system == "rigid") {
    const auto rho = values<Real>(c.rho, {}, 0, "rho");
    if (rho.empty() || rho.size() > 2) throw ContractError("rigid rotation needs 1 or 2 rho components");
    const auto th0 = values<Real>(c.theta0, std::vector<std::string>(rho.size(), "0"), rho.size(), "theta0");
    o.exact = rigid_rotation_orbit<Real>(rho, th0, n);
    o.has_exact = true;
    o.angle_dim = rho.size();
    o.angles.assign(o.exact.angles().begin(), o.exact.angles().end());
    o.rows = o.angles;
    for (std::size_t i = 0; i < rho.size(); ++i) o.columns.push_back("theta" + std::to_string(i + 1));
  } else if (c.system == "perturbed" || c.system == "observer") {
    const auto rho = values<Real>(c.rho, {}, 1, "rho");
    const auto th0 = values<Real>(c.theta0, {"0"}, 1, "theta0");
    const auto th = rotation_angles(rho, th0, n);
    if (c.system == "perturbed") {
      const Real a = parse_value<Real>(c.alpha), b = parse_value<Real>(c.beta);
      o.columns = {"theta", "phi"};
      o.angles.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        o.angles[i] = perturbed_observation(th[i], a, b);
        o.rows.push_back(th[i]);
        o.rows.push_back(o.angles[i]);
      }
    } else {
      using std::cos;
      using std::sin;
      const auto ctr = values<Real>(c.center, {"0.5", "0"}, 2, "center");
      o.columns = {"x", "y"};
      for (std::size_t i = 0; i < n; ++i) {
        o.rows.push_back(cos(two_pi_v<Real>() * th[i]));
        o.rows.push_back(sin(two_pi_v<Real>() * th[i]));
      }
      o.angles = angular_coordinate<Real>(o.rows, ctr[0], ctr[1]);
    }
  } else if (c.system == "standard") {
    const auto x0 = values<Real>(c.start, {"1.159692208627139", "0"}, 2, "start");
    const auto ctr = values<Real>(c.center, {"pi", "0"}, 2, "center");
    const Real alpha = parse_value<Real>(c.map_alpha);
    o.points = standard_map_orbit<Real>({x0[0], x0[1]}, alpha, n);
    o.jacobian = [alpha](const Vec2<Real>& p) { return standard_map_jacobian(p, alpha); };
    o.columns = {"x", "y"};
    o.rows = flatten<Real>(o.points);
    o.angles = torus_angular_coordinate<Real>(o.points, {ctr[0], ctr[1]}, two_pi_v<Real>());
  } else if (c.system == "torus") {
    auto params = TorusMapParams<Real>::reference();
    if (!c.map_epsilon.empty()) params.epsilon = parse_value<Real>(c.map_epsilon);
    const auto x0 = values<Real>(c.start, {"0", "0"}, 2, "start");
    o.points = torus_map_orbit<Real>({x0[0], x0[1]}, params, n);
    o.jacobian = [params](const Vec2<Real>& p) { return torus_map_jacobian(p, params); };
    o.columns = {"x", "y"};
    o.rows = flatten<Real>(o.points);
    o.angles = o.rows;
    o.angle_dim = 2;
  } else if (c.system == "r3bp") {
    const Real mu = parse_value<Real>(c.mu), q1 = parse_value<Real>(c.q1);
    const Real p2 = c.p2.empty() ? r3bp_momentum_for_energy(q1, parse_value<Real>(c.energy), mu)
                                 : parse_value<Real>(c.p2);
    const auto ctr = values<Real>(c.center, {"-0.2", "0"}, 2, "center");
    auto run = r3bp_section_orbit<Real>({q1, Real(0), Real(0), p2}, mu, parse_value<Real>(c.h), n, warnings);
    if (run.points.size() < n)
      throw ComputationError("section produced " + std::to_string(run.points.size()) + " of " +
                             std::to_string(n) + " requested returns");
    if (run.max_energy_drift > Real(1e-10))
      emit(warnings, "energy-drift",
           "Hamiltonian drift " + format_real(run.max_energy_drift, 3) + " exceeds 1e-10; reduce h");
    o.points = std::move(run.points);
    o.columns = {"q1", "p1"};
    o.rows = flatten<Real>(o.points);
    o.angles = angular_coordinate<Real>(o.rows, ctr[0], ctr[1]);
  } else if (c.system == "vdp") {
    const auto x0 = values<Real>(c.start, {"1", "0"}, 2, "start");
    const auto ctr = values<Real>(c.center, {"0", "0"}, 2, "center");
    VdpOptions<Real> opts;
    opts.transient = c.transient;
    opts.steps_per_period = c.steps_per_period;
    o.points = vdp_stroboscopic<Real>(parse_value<Real>(c.forcing), {x0[0], x0[1]}, n, opts);
    o.columns = {"x", "dxdt"};
    o.rows = flatten<Real>(o.points);
    o.angles = angular_coordinate<Real>(o.rows, ctr[0], ctr[1]);
  } else {
    throw ContractError("system '" + c.system + "' has no orbit");
  }
  return o;
}

template <class Real>
AngleSequence<Real> lift_of(const SystemOrbit<Real>& o, LiftBranch branch, WarningSink* warnings) {
  if (o.has_exact) return o.exact;
  return build_lift<Real>(o.angles, o.angle_dim, branch, warnings);
}

// First m points of a lifted sequence.
template <class Real>
AngleSequence<Real> prefix(const AngleSequence<Real>& s, std::size_t m) {
  if (m == s.size()) return s;
  const std::size_t d = s.dim();
  auto a = s.angles().subspan(0, m * d);
  auto w = s.windings().subspan(0, m * d);
  auto inc = s.increments().subspan(0, (m - 1) * d);
  return AngleSequence<Real>::from_parts(d, {a.begin(), a.end()}, {w.begin(), w.end()}, {inc.begin(), inc.end()},
                                         s.branch());
}

std::vector<std::size_t> sweep_of(const ExperimentConfig& c) {
  return c.n_sweep.empty() ? std::vector<std::size_t>{c.n} : c.n_sweep;
}

template <class Real>
ordered_json header(const ExperimentConfig& c, std::string_view command) {
  return ordered_json{{"command", command},
                      {"system", c.system},
                      {"tier", std::string(tier_name(c.tier))}};
}

// ---- commands ----

template <class Real>
void cmd_orbit(const ExperimentConfig& c, CommandResult& out) {
  const auto o = make_orbit<Real>(c, c.n, &out.warnings);
  std::ostringstream csv;
  write_orbit_csv<Real>(csv, o.columns, o.rows, o.columns.size());
  out.files.push_back({"orbit.csv", csv.str()});
}

template <class Real>
void cmd_rotnum(const ExperimentConfig& c, CommandResult& out) {
  const auto sweep = sweep_of(c);
  const auto o = make_orbit<Real>(c, sweep.back() + 1, &out.warnings);
  const auto seq = lift_of(o, c.lift, &out.warnings);
  const std::size_t d = o.angle_dim;
  const auto ref = values<Real>(c.reference, {}, c.reference.empty() ? 0 : d, "reference");

  ordered_json j = header<Real>(c, "rotnum");
  j["dimension"] = d;
  j["lift"] = std::string(lift_branch_name(seq.branch()));
  j["reference"] = ref.empty() ? ordered_json(nullptr) : num_array<Real>(ref);
  j["orientation"] = c.either_orientation ? "either" : "fixed";
  ordered_json results = ordered_json::array();
  for (const auto& kind : c.weights) {
    ordered_json runs = ordered_json::array();
    std::ostringstream dat;
    dat << "# N";
    for (std::size_t i = 0; i < d; ++i) dat << " rho" << i + 1;
    if (!ref.empty())
      for (std::size_t i = 0; i < d; ++i) dat << " error" << i + 1;
    dat << '\n';
    for (std::size_t n : sweep) {
      const auto est = rotation_vector(prefix(seq, n + 1), kind);
      ordered_json run{{"N", n}, {"rho", num_array<Real>(est.rho)}};
      dat << n;
      for (const auto& r : est.rho) dat << ' ' << format_real(r);
      if (!ref.empty()) {
        std::vector<Real> err(d);
        for (std::size_t i = 0; i < d; ++i)
          err[i] = c.either_orientation ? rotation_number_distance(est.rho[i], ref[i]) : circle_distance(est.rho[i], ref[i]);
        run["error"] = num_array<Real>(err);
        for (const auto& e : err) dat << ' ' << format_real(e);
      }
      dat << '\n';
      runs.push_back(std::move(run));
    }
    results.push_back({{"weight", kind.name()}, {"runs", std::move(runs)}});
    out.files.push_back({"rotnum_" + kind.name() + ".dat", dat.str()});
  }
  j["results"] = std::move(results);
  j["warnings"] = warnings_json(out.warnings);
  out.files.insert(out.files.begin(), {"rotnum.json", dump(j)});
}

template <class Real>
ordered_json decay_json(const DecayFit<Real>& f) {
  ordered_json j{{"alpha", num(f.alpha)}, {"beta", num(f.beta)}, {"points", f.n_used}};
  if (f.has_verdict) j["analytic"] = f.analytic;
  return j;
}

template <class Real>
void cmd_fourier(const ExperimentConfig& c, CommandResult& out) {
  const auto o = make_orbit<Real>(c, c.n, &out.warnings);
  const auto seq = lift_of(o, c.lift, &out.warnings);
  const WeightKind kind = c.series_weight;
  const auto est = rotation_vector(seq, kind);
  if (c.component >= o.angle_dim) throw ContractError("'component' exceeds the angle dimension");

  ordered_json j = header<Real>(c, "fourier");
  j["N"] = c.n;
  j["weight"] = kind.name();
  j["rho"] = num_array<Real>(est.rho);
  j["k_max"] = c.k_max;
  const Real floor = TierTraits<Real>::noise_floor();

  if (o.angle_dim == 1) {
    const auto g = conjugacy_samples(seq, est.rho[0], 0, &out.warnings);
    const auto series = fourier_coefficients<Real>(g, est.rho[0], c.k_max, kind, c.exec);
    std::vector<int> ks = c.truncations;
    if (ks.empty()) ks.push_back(c.k_max);
    const auto errs = reconstruction_errors<Real>(g, series, ks, kind);

    std::ostringstream csv, coeff, recon;
    write_series_csv(csv, series);
    coeff << "# k |a_k|\n";
    for (int k = 0; k <= series.max_index(); ++k) coeff << k << ' ' << format_real(modulus(series.coefficient(k))) << '\n';
    recon << "# K delta1 delta2\n";
    ordered_json rj = ordered_json::array();
    for (const auto& e : errs) {
      recon << e.max_k << ' ' << format_real(e.delta1) << ' ' << format_real(e.delta2) << '\n';
      rj.push_back({{"K", e.max_k}, {"delta1", num(e.delta1)}, {"delta2", num(e.delta2)}});
    }
    j["reconstruction"] = std::move(rj);
    try {
      j["decay"] = decay_json(decay_fit(series, floor));
    } catch (const ComputationError& e) {
      j["decay"] = nullptr;
      emit(&out.warnings, "decay-fit", e.what());
    }
    out.files.push_back({"series.csv", csv.str()});
    out.files.push_back({"coefficients.dat", coeff.str()});
    out.files.push_back({"reconstruction.dat", recon.str()});
  } else {
    const auto g = conjugacy_samples(seq, est.rho[c.component], c.component, &out.warnings);
    const auto series = fourier_coefficients_2d<Real>(g, {est.rho[0], est.rho[1]}, c.k_max, c.k_max, kind, c.exec);
    std::ostringstream csv, coeff;
    write_series_csv(csv, series);
    coeff << "# j k |a_jk|\n";
    for (int jj = 0; jj <= series.max_j; ++jj)
      for (int k = -series.max_k; k <= series.max_k; ++k)
        coeff << jj << ' ' << k << ' ' << format_real(modulus(series.coefficient(jj, k))) << '\n';
    j["component"] = c.component;
    ordered_json rays = ordered_json::array();
    for (auto [dj, dk] : {std::pair{1, 0}, {0, 1}, {1, 1}, {1, -1}}) {
      ordered_json r{{"ray", {dj, dk}}};
      try {
        r["decay"] = decay_json(decay_fit_ray(series, dj, dk, floor));
      } catch (const ComputationError& e) {
        r["decay"] = nullptr;
        r["reason"] = e.what();
      }
      rays.push_back(std::move(r));
    }
    j["decay_rays"] = std::move(rays);
    out.files.push_back({"series.csv", csv.str()});
    out.files.push_back({"coefficients.dat", coeff.str()});
  }
  j["warnings"] = warnings_json(out.warnings);
  out.files.insert(out.files.begin(), {"fourier.json", dump(j)});
}

template <class Real>
void cmd_lyap(const ExperimentConfig& c, CommandResult& out) {
  const auto sweep = sweep_of(c);
  const auto o = make_orbit<Real>(c, sweep.back(), &out.warnings);
  if (!o.jacobian) throw ContractError("system '" + c.system + "' has no map Jacobian (use standard or torus)");
  const auto v0 = values<Real>(c.v0, {}, 2, "v0");

  ordered_json j = header<Real>(c, "lyap");
  j["v0"] = num_array<Real>(v0);
  ordered_json results = ordered_json::array();
  for (const auto& kind : c.weights) {
    ordered_json runs = ordered_json::array();
    std::ostringstream dat;
    dat << "# N lambda1 lambda2 sum\n";
    for (std::size_t n : sweep) {
      LyapunovAccumulator<Real> acc(kind, n, {v0[0], v0[1]});
      for (std::size_t i = 0; i < n; ++i) acc.observe(o.jacobian(o.points[i]));
      const auto p = acc.pair();
      runs.push_back({{"N", n}, {"lambda1", num(p.lambda1)}, {"lambda2", num(p.lambda2)}, {"sum", num(p.sum())}});
      dat << n << ' ' << format_real(p.lambda1) << ' ' << format_real(p.lambda2) << ' ' << format_real(p.sum())
          << '\n';
    }
    results.push_back({{"weight", kind.name()}, {"runs", std::move(runs)}});
    out.files.push_back({"lyap_" + kind.name() + ".dat", dat.str()});
  }
  j["results"] = std::move(results);
  j["warnings"] = warnings_json(out.warnings);
  out.files.insert(out.files.begin(), {"lyap.json", dump(j)});
}

template <class Real>
void cmd_diag(const ExperimentConfig& c, CommandResult& out) {
  DiagnosticsReport<Real> report;
  const WeightKind kind = c.series_weight;
  SystemOrbit<Real> o;
  AngleSequence<Real> seq;
  const bool has_orbit = c.system != "none";
  Real rho{};
  if (has_orbit) {
    o = make_orbit<Real>(c, c.n, &report.warnings);
    if (o.angle_dim != 1) throw ContractError("diag works on one-dimensional rotation numbers");
    seq = lift_of(o, c.lift, &report.warnings);
  }
  if (!c.rho.empty()) {
    rho = values<Real>(c.rho, {}, 1, "rho")[0];
  } else if (has_orbit) {
    rho = rotation_vector(seq, kind).rho[0];
  } else {
    throw ContractError("diag needs 'rho' when system = none");
  }

  for (std::size_t n : c.diag_psi_n) {
    const auto w = normalized_weights<Real>(kind, n);
    std::ostringstream dat;
    dat << "# k |psi|\n";
    for (long long k = 0; k <= c.diag_psi_k_max; ++k) {
      const auto v = psi(w, k, rho);
      report.psi.push_back({n, k, rho, kind, v});
      dat << k << ' ' << format_real(modulus(v)) << '\n';
    }
    out.files.push_back({"psi_N" + std::to_string(n) + ".dat", dat.str()});
  }
  if (c.diag_k_max > 0)
    report.scans.push_back(delta_scan<Real>(rho, c.diag_k_max, &report.warnings, parse_value<Real>(c.diag_threshold),
                                            c.diag_k_min, c.exec));
  if (!c.diag_bound_n.empty()) {
    for (int m : c.diag_bound_m)
      for (std::size_t n : c.diag_bound_n) {
        const Real sup = derivative_sup_norm<Real>(kind, m);
        for (long long k = 1; k <= c.diag_bound_k_max; ++k)
          report.bounds.push_back(psi_bound_check<Real>(n, k, rho, m, kind, sup));
      }
  }
  long long k_star = c.diag_k_star;
  if (k_star == 0 && !report.scans.empty()) k_star = report.scans.front().argmin;
  if (has_orbit && k_star > 0) {
    const auto g = conjugacy_samples(seq, rho, 0, &report.warnings);
    const auto base = fourier_coefficients<Real>(g, rho, c.k_max, kind, c.exec);
    std::vector<Complex<Real>> multiples;
    for (long long m = 1; m * k_star - k_star / 2 <= c.k_max; ++m) multiples.push_back(psi(c.n, m * k_star, rho, kind));
    if (!multiples.empty()) {
      report.sawtooth = predict_sawtooth<Real>(base, k_star, multiples);
      report.sawtooth_k_star = k_star;
      std::ostringstream dat;
      dat << "# k |predicted error|\n";
      for (const auto& p : report.sawtooth) dat << p.k << ' ' << format_real(modulus(p.error)) << '\n';
      out.files.push_back({"sawtooth.dat", dat.str()});
    }
  }
  out.warnings = report.warnings;
  out.files.insert(out.files.begin(), {"diagnostics.json", diagnostics_to_json(report)});
}

template <class Real>
CommandResult run_typed(std::string_view command, const ExperimentConfig& c) {
  CommandResult out;
  if (command == "orbit") {
    if (c.system == "none") throw ContractError("orbit needs a system");
    cmd_orbit<Real>(c, out);
  } else if (command == "rotnum") {
    cmd_rotnum<Real>(c, out);
  } else if (command == "fourier") {
    cmd_fourier<Real>(c, out);
  } else if (command == "lyap") {
    cmd_lyap<Real>(c, out);
  } else if (command == "diag") {
    cmd_diag<Real>(c, out);
  } else {
    throw ContractError("unknown command '" + std::string(command) + "'");
  }
  return out;
}

}  // namespace

template <class Real>
Real parse_value(std::string_view t) {
  using std::sqrt;
  if (t == "pi") return pi_v<Real>();
  if (t == "pi-3") return pi_v<Real>() - Real(3);
  if (t == "sqrt2-1") return sqrt(Real(2)) - Real(1);
  if (t == "golden") return (sqrt(Real(5)) - Real(1)) / Real(2);
  const Real v = real_from_string<Real>(t);
  if (!is_finite(v)) throw ContractError("not a finite number: '" + std::string(t) + "'");
  return v;
}

template double parse_value<double>(std::string_view);
template Extended parse_value<Extended>(std::string_view);

ExperimentConfig make_experiment(const Config& cfg) {
  for (const auto& [k, v] : cfg.entries())
    if (!known_keys().count(k)) throw ContractError("unknown config key '" + k + "'");
  ExperimentConfig e;
  e.system = cfg.get("system");
  if (e.system.empty()) throw ContractError("config must set 'system'");
  if (!known_systems().count(e.system)) throw ContractError("unknown system '" + e.system + "'");
  e.tier = parse_tier(cfg.get("tier", "standard"));
  e.n = as_count(cfg.get_int("n", 10000), "n", 2);
  e.n_sweep = count_list(cfg, "n_sweep", 2);
  require_increasing(e.n_sweep, "n_sweep");
  for (const auto& w : cfg.get_list("weights", "exp1")) e.weights.push_back(WeightKind::parse(w));
  if (e.weights.empty()) throw ContractError("'weights' must name at least one weight");
  e.series_weight = WeightKind::parse(cfg.get("series_weight", "exp1"));
  e.lift = parse_lift_branch(cfg.get("lift", "auto"));
  e.exec.threads = as_count(cfg.get_int("threads", 1), "threads", 1);

  e.rho = cfg.get_list("rho");
  e.theta0 = cfg.get_list("theta0");
  e.alpha = cfg.get("alpha", e.alpha);
  e.beta = cfg.get("beta", e.beta);
  e.center = cfg.get_list("center");
  e.start = cfg.get_list("start");
  e.map_alpha = cfg.get("map.alpha", e.map_alpha);
  e.map_epsilon = cfg.get("map.epsilon", e.map_epsilon);
  e.mu = cfg.get("mu", e.mu);
  e.q1 = cfg.get("q1", e.q1);
  e.energy = cfg.get("energy", e.energy);
  e.p2 = cfg.get("p2", e.p2);
  e.h = cfg.get("h", e.h);
  e.forcing = cfg.get("forcing", e.forcing);
  e.transient = as_count(cfg.get_int("transient", 500), "transient", 0);
  e.steps_per_period = as_count(cfg.get_int("steps_per_period", 2000), "steps_per_period", 1);

  e.k_max = static_cast<int>(as_count(cfg.get_int("k_max", 60), "k_max", 0));
  for (auto k : count_list(cfg, "truncations", 0)) e.truncations.push_back(static_cast<int>(k));
  for (std::size_t i = 0; i < e.truncations.size(); ++i) {
    if (e.truncations[i] > e.k_max) throw ContractError("'truncations' entries must not exceed k_max");
    if (i && e.truncations[i] <= e.truncations[i - 1]) throw ContractError("'truncations' must be strictly increasing");
  }
  e.component = as_count(cfg.get_int("component", 0), "component", 0);
  e.reference = cfg.get_list("reference");
  const auto orient = cfg.get("reference_orientation", "fixed");
  if (orient != "fixed" && orient != "either") throw ContractError("'reference_orientation' is fixed or either");
  e.either_orientation = orient == "either";
  if (cfg.has("v0")) e.v0 = cfg.get_list("v0");

  e.diag_k_min = cfg.get_int("diag.k_min", 2);
  e.diag_k_max = cfg.get_int("diag.k_max", 0);
  e.diag_threshold = cfg.get("diag.threshold", e.diag_threshold);
  e.diag_psi_n = count_list(cfg, "diag.psi_n", 2);
  e.diag_psi_k_max = static_cast<long long>(as_count(cfg.get_int("diag.psi_k_max", 250), "diag.psi_k_max", 0));
  e.diag_bound_m.clear();
  for (auto m : count_list(cfg, "diag.bound_m", 1, "1, 2")) e.diag_bound_m.push_back(static_cast<int>(m));
  e.diag_bound_n = count_list(cfg, "diag.bound_n", 2);
  e.diag_bound_k_max = static_cast<long long>(as_count(cfg.get_int("diag.bound_k_max", 50), "diag.bound_k_max", 1));
  e.diag_k_star = static_cast<long long>(as_count(cfg.get_int("diag.k_star", 0), "diag.k_star", 0));

  // Surface unparsable numbers now rather than mid-run.
  auto check = [](const std::vector<std::string>& texts, const char* key) {
    for (const auto& t : texts) {
      try {
        (void)parse_value<double>(t);
      } catch (const ContractError&) {
        throw ContractError(std::string("'") + key + "': not a number: '" + t + "'");
      }
    }
  };
  check(e.rho, "rho");
  check(e.theta0, "theta0");
  check(e.center, "center");
  check(e.start, "start");
  check(e.reference, "reference");
  check(e.v0, "v0");
  check({e.alpha, e.beta, e.map_alpha, e.mu, e.q1, e.energy, e.h, e.forcing, e.diag_threshold}, "parameter");
  if (!e.map_epsilon.empty()) check({e.map_epsilon}, "map.epsilon");
  if (!e.p2.empty()) check({e.p2}, "p2");
  return e;
}

CommandResult run_command(std::string_view command, const ExperimentConfig& cfg) {
  if (cfg.tier == PrecisionTier::Extended) return run_typed<Extended>(command, cfg);
  return run_typed<double>(command, cfg);
}

}  // namespace wbirkhoff::cli
