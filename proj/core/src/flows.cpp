#include "wbirkhoff/flows.hpp"

#include <cmath>

namespace wbirkhoff {

template <class Real>
const Dop853Tableau<Real>& dop853_tableau() {
  static const Dop853Tableau<Real> tab = [] {
    auto R = [](const char* s) { return real_from_string<Real>(s); };
    Dop853Tableau<Real> t;
    t.c = {R("0"),
           R("0.526001519587677318785587544488E-01"),
           R("0.789002279381515978178381316732E-01"),
           R("0.118350341907227396726757197510E+00"),
           R("0.281649658092772603273242802490E+00"),
           R("0.333333333333333333333333333333E+00"),
           R("0.25E+00"),
           R("0.307692307692307692307692307692E+00"),
           R("0.651282051282051282051282051282E+00"),
           R("0.6E+00"),
           R("0.857142857142857142857142857142E+00"),
           R("1")};
    auto& a = t.a;
    a[1][0] = R("5.26001519587677318785587544488E-2");
    a[2][0] = R("1.97250569845378994544595329183E-2");
    a[2][1] = R("5.91751709536136983633785987549E-2");
    a[3][0] = R("2.95875854768068491816892993775E-2");
    a[3][2] = R("8.87627564304205475450678981324E-2");
    a[4][0] = R("2.41365134159266685502369798665E-1");
    a[4][2] = R("-8.84549479328286085344864962717E-1");
    a[4][3] = R("9.24834003261792003115737966543E-1");
    a[5][0] = R("3.7037037037037037037037037037E-2");
    a[5][3] = R("1.70828608729473871279604482173E-1");
    a[5][4] = R("1.25467687566822425016691814123E-1");
    a[6][0] = R("3.7109375E-2");
    a[6][3] = R("1.70252211019544039314978060272E-1");
    a[6][4] = R("6.02165389804559606850219397283E-2");
    a[6][5] = R("-1.7578125E-2");
    a[7][0] = R("3.70920001185047927108779319836E-2");
    a[7][3] = R("1.70383925712239993810214054705E-1");
    a[7][4] = R("1.07262030446373284651809199168E-1");
    a[7][5] = R("-1.53194377486244017527936158236E-2");
    a[7][6] = R("8.27378916381402288758473766002E-3");
    a[8][0] = R("6.24110958716075717114429577812E-1");
    a[8][3] = R("-3.36089262944694129406857109825E0");
    a[8][4] = R("-8.68219346841726006818189891453E-1");
    a[8][5] = R("2.75920996994467083049415600797E1");
    a[8][6] = R("2.01540675504778934086186788979E1");
    a[8][7] = R("-4.34898841810699588477366255144E1");
    a[9][0] = R("4.77662536438264365890433908527E-1");
    a[9][3] = R("-2.48811461997166764192642586468E0");
    a[9][4] = R("-5.90290826836842996371446475743E-1");
    a[9][5] = R("2.12300514481811942347288949897E1");
    a[9][6] = R("1.52792336328824235832596922938E1");
    a[9][7] = R("-3.32882109689848629194453265587E1");
    a[9][8] = R("-2.03312017085086261358222928593E-2");
    a[10][0] = R("-9.3714243008598732571704021658E-1");
    a[10][3] = R("5.18637242884406370830023853209E0");
    a[10][4] = R("1.09143734899672957818500254654E0");
    a[10][5] = R("-8.14978701074692612513997267357E0");
    a[10][6] = R("-1.85200656599969598641566180701E1");
    a[10][7] = R("2.27394870993505042818970056734E1");
    a[10][8] = R("2.49360555267965238987089396762E0");
    a[10][9] = R("-3.0467644718982195003823669022E0");
    a[11][0] = R("2.27331014751653820792359768449E0");
    a[11][3] = R("-1.05344954667372501984066689879E1");
    a[11][4] = R("-2.00087205822486249909675718444E0");
    a[11][5] = R("-1.79589318631187989172765950534E1");
    a[11][6] = R("2.79488845294199600508499808837E1");
    a[11][7] = R("-2.85899827713502369474065508674E0");
    a[11][8] = R("-8.87285693353062954433549289258E0");
    a[11][9] = R("1.23605671757943030647266201528E1");
    a[11][10] = R("6.43392746015763530355970484046E-1");
    t.b = {R("5.42937341165687622380535766363E-2"),
           R("0"),
           R("0"),
           R("0"),
           R("0"),
           R("4.45031289275240888144113950566E0"),
           R("1.89151789931450038304281599044E0"),
           R("-5.8012039600105847814672114227E0"),
           R("3.1116436695781989440891606237E-1"),
           R("-1.52160949662516078556178806805E-1"),
           R("2.01365400804030348374776537501E-1"),
           R("4.47106157277725905176885569043E-2")};
    return t;
  }();
  return tab;
}

namespace {

template <class Real>
void distances(const State<Real, 4>& s, Real mu, Real& d_moon, Real& d_planet) {
  using std::hypot;
  d_moon = hypot(s[0] - Real(1) + mu, s[1]);
  d_planet = hypot(s[0] + mu, s[1]);
  if (!(d_moon > Real(kCollisionDistance)) || !(d_planet > Real(kCollisionDistance)))
    throw ContractError("R3BP state too close to a primary (collision)");
}

}  // namespace

template <class Real>
State<Real, 4> r3bp_field(const State<Real, 4>& s, Real mu) {
  Real dm, dp;
  distances(s, mu, dm, dp);
  const Real dm3 = dm * dm * dm, dp3 = dp * dp * dp;
  const Real q1 = s[0], q2 = s[1], p1 = s[2], p2 = s[3];
  return {p1 + q2, p2 - q1, p2 - mu * (q1 - Real(1) + mu) / dm3 - (Real(1) - mu) * (q1 + mu) / dp3,
          -p1 - mu * q2 / dm3 - (Real(1) - mu) * q2 / dp3};
}

template <class Real>
Real r3bp_hamiltonian(const State<Real, 4>& s, Real mu) {
  Real dm, dp;
  distances(s, mu, dm, dp);
  const Real q1 = s[0], q2 = s[1], p1 = s[2], p2 = s[3];
  return (p1 * p1 + p2 * p2) / Real(2) + (p1 * q2 - p2 * q1) + (-(Real(1) - mu) / dp - mu / dm);
}

template <class Real>
Real r3bp_momentum_for_energy(Real q1, Real energy, Real mu) {
  using std::sqrt;
  // H = p2^2/2 - q1 p2 + V(q1) on q2 = p1 = 0
  const Real v = r3bp_hamiltonian<Real>({q1, Real(0), Real(0), Real(0)}, mu);
  const Real disc = q1 * q1 - Real(2) * (v - energy);
  if (disc < Real(0)) throw ContractError("no real momentum reaches the requested energy at this position");
  Real p2 = q1 + sqrt(disc);
  // polish against rounding in the closed form
  for (int it = 0; it < 3; ++it) {
    const Real g = r3bp_hamiltonian<Real>({q1, Real(0), Real(0), p2}, mu) - energy;
    const Real dg = p2 - q1;
    if (dg == Real(0)) break;
    p2 -= g / dg;
  }
  return p2;
}

template <class Real>
R3bpSectionRun<Real> r3bp_section_orbit(const State<Real, 4>& start, Real mu, Real h, std::size_t returns,
                                        WarningSink* warnings) {
  using std::abs;
  R3bpSectionRun<Real> run;
  run.initial_energy = r3bp_hamiltonian(start, mu);
  Real drift(0);
  const Real h0 = run.initial_energy;
  auto watch = [&](Real, const State<Real, 4>& y) {
    const Real d = abs(r3bp_hamiltonian(y, mu) - h0);
    if (d > drift) drift = d;
  };
  // generous time budget: the section is crossed about once per unit time
  const Real t_max = Real(static_cast<long long>(returns + 10)) * Real(1000);
  auto res = integrate_to_section<Real, 4>(R3bpField<Real>{mu}, start, Real(0), h, 1, returns, t_max, watch, warnings);
  run.points.reserve(res.crossings.size());
  for (const auto& x : res.crossings) {
    run.points.push_back({x.state[0], x.state[2]});
    run.times.push_back(x.time);
  }
  run.max_energy_drift = drift;
  run.tangential = res.tangential;
  run.steps = res.steps;
  return run;
}

template <class Real>
State<Real, 2> vdp_field(Real t, const State<Real, 2>& s, Real forcing) {
  using std::sin;
  static const Real damping = real_from_string<Real>("0.2");
  static const Real omega = real_from_string<Real>("0.83");
  const Real x = s[0], v = s[1];
  return {v, damping * (Real(1) - x * x) * v - Real(20) * x * x * x + forcing * sin(omega * t)};
}

template <class Real>
std::vector<Vec2<Real>> vdp_stroboscopic(Real forcing, Vec2<Real> start, std::size_t n_samples,
                                         const VdpOptions<Real>& opts) {
  if (!(forcing >= Real(0))) throw ContractError("forcing amplitude must be >= 0");
  if (opts.steps_per_period < 1) throw ContractError("steps_per_period must be >= 1");
  const Real period = two_pi_v<Real>() / real_from_string<Real>("0.83");
  const Real h = period / Real(static_cast<long long>(opts.steps_per_period));
  auto f = [forcing](Real t, const State<Real, 2>& s) { return vdp_field(t, s, forcing); };
  State<Real, 2> y = {start[0], start[1]};
  std::vector<Vec2<Real>> out;
  out.reserve(n_samples);
  const std::size_t total = opts.transient + n_samples;
  for (std::size_t k = 0; k < total; ++k) {
    if (k >= opts.transient) out.push_back({y[0], y[1]});
    if (k + 1 == total) break;
    const Real base = Real(static_cast<long long>(k)) * period;
    for (std::size_t i = 0; i < opts.steps_per_period; ++i) {
      const Real t = base + Real(static_cast<long long>(i)) * h;
      y = rk_step<Real, 2>(f, t, y, h);
    }
    if (std::abs(static_cast<double>(y[0])) > 1e6)
      throw ComputationError("van der Pol trajectory diverged");
  }
  return out;
}

#define WBIRKHOFF_INSTANTIATE(Real)                                                                     \
  template const Dop853Tableau<Real>& dop853_tableau<Real>();                                           \
  template State<Real, 4> r3bp_field<Real>(const State<Real, 4>&, Real);                               \
  template Real r3bp_hamiltonian<Real>(const State<Real, 4>&, Real);                                    \
  template Real r3bp_momentum_for_energy<Real>(Real, Real, Real);                                       \
  template R3bpSectionRun<Real> r3bp_section_orbit<Real>(const State<Real, 4>&, Real, Real, std::size_t, \
                                                         WarningSink*);                                 \
  template State<Real, 2> vdp_field<Real>(Real, const State<Real, 2>&, Real);                           \
  template std::vector<Vec2<Real>> vdp_stroboscopic<Real>(Real, Vec2<Real>, std::size_t, const VdpOptions<Real>&);

WBIRKHOFF_INSTANTIATE(double)
WBIRKHOFF_INSTANTIATE(Extended)

}  // namespace wbirkhoff
