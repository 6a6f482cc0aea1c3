#include "wbirkhoff_cli/presets.hpp"

namespace wbirkhoff::cli {

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = {
      {"perturbed-rotation", "rigid rotation by sqrt(2)-1 seen through a nonlinear observation", R"(
system = perturbed
rho = sqrt2-1
alpha = 0.1
beta = 0.2
n = 50000
n_sweep = 100, 300, 1000, 3000, 10000, 30000, 100000
weights = exp1
reference = sqrt2-1
k_max = 20
truncations = 5, 10, 15, 20
)"},
      {"observer-weights", "off-center observer of a rotation, compared across the four weights", R"(
system = observer
rho = sqrt2-1
center = 0.5, 0
n = 100000
n_sweep = 1000, 3000, 10000, 30000, 100000
weights = equal, quad, sin2, exp1
reference = sqrt2-1
k_max = 60
truncations = 10, 20, 30, 40, 50, 60
)"},
      {"observer-near-rational", "off-center observer with rho = pi - 3 (small divisor at k = 113)", R"(
system = observer
rho = pi-3
theta0 = 0.25
center = 0.5, 0
n = 100000
n_sweep = 100000, 1000000, 10000000
weights = exp1
reference = pi-3
k_max = 250
truncations = 10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 120, 140, 160, 180, 200, 220, 250
diag.k_max = 10000000
diag.psi_n = 10000, 100000
diag.psi_k_max = 250
)"},
      {"standard-map", "invariant circle of the standard map around (pi, 0)", R"(
system = standard
map.alpha = 1
start = 1.159692208627139, 0
center = pi, 0
n = 1000000
n_sweep = 1000, 10000, 100000, 1000000
weights = equal, quad, sin2, exp1
reference = 0.12055272197375513300298164369839
reference_orientation = either
k_max = 400
truncations = 50, 100, 150, 200, 250, 300, 350, 400
)"},
      {"torus-map", "two-frequency quasiperiodic map of the 2-torus", R"(
system = torus
start = 0, 0
n = 1000000
n_sweep = 1000, 10000, 100000, 1000000
weights = sin2, exp1
reference = 0.718053759982066107095244936117, 0.885304666596099792113366824157
k_max = 30
component = 0
)"},
      {"three-body", "Poincare section of a restricted three-body orbit (q2 = 0, dq2/dt > 0)", R"(
system = r3bp
mu = 0.1
q1 = -0.15
energy = -2.63
h = 2e-4
center = -0.2, 0
n = 20000
weights = exp1
reference = 0.063961728757453097164077724400302
k_max = 200
)"},
      {"van-der-pol-5", "stroboscopic map of the forced van der Pol oscillator, F = 5", R"(
system = vdp
forcing = 5
start = 1, 0
center = 0, 0
n = 20000
weights = exp1
reference = 0.29206126329199589285577578718959
k_max = 100
)"},
      {"van-der-pol-15", "stroboscopic map of the forced van der Pol oscillator, F = 15", R"(
system = vdp
forcing = 15
start = 1, 0
center = 0, 0
n = 20000
weights = exp1
reference = 0.37553441113144010884908928083318
k_max = 100
)"},
      {"van-der-pol-25", "stroboscopic map of the forced van der Pol oscillator, F = 25", R"(
system = vdp
forcing = 25
start = 1, 0
center = 0, 0
n = 20000
weights = exp1
reference = 0.56235370092685056634419221336154
k_max = 100
)"},
      {"small-divisors", "small-divisor scan and psi table for rho = pi - 3", R"(
system = none
rho = pi-3
weights = exp1
diag.k_max = 10000000
diag.psi_n = 10000, 100000
diag.psi_k_max = 250
diag.bound_n = 100, 1000, 10000
diag.bound_m = 1, 2
diag.bound_k_max = 50
)"},
      {"golden-divisors", "small-divisor scan and psi bounds for the golden mean", R"(
system = none
rho = golden
weights = exp1
diag.k_max = 1000000
diag.psi_n = 10000, 100000
diag.psi_k_max = 250
diag.bound_n = 100, 1000, 10000
diag.bound_m = 1, 2
diag.bound_k_max = 50
)"},
  };
  return all;
}

std::optional<Preset> find_preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  return std::nullopt;
}

}  // namespace wbirkhoff::cli
