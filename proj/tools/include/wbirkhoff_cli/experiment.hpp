#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <wbirkhoff/errors.hpp>
#include <wbirkhoff/execution.hpp>
#include <wbirkhoff/precision.hpp>
#include <wbirkhoff/rotation.hpp>
#include <wbirkhoff/weights.hpp>

#include "wbirkhoff_cli/config.hpp"

namespace wbirkhoff::cli {

// Numbers stay as text until the tier is known, so extended runs keep every
// digit given in the config. Named constants: pi, pi-3, sqrt2-1, golden.
struct ExperimentConfig {
  std::string system;  // rigid perturbed observer standard torus r3bp vdp none
  PrecisionTier tier = PrecisionTier::Standard;
  std::size_t n = 10000;
  std::vector<std::size_t> n_sweep;  // strictly increasing; defaults to {n}
  std::vector<WeightKind> weights;   // rotnum and lyap sweeps
  WeightKind series_weight;          // fourier and diag
  LiftBranch lift = LiftBranch::Auto;
  ExecutionOptions exec;

  std::vector<std::string> rho;
  std::vector<std::string> theta0;
  std::string alpha = "0.1", beta = "0.2";  // perturbed observation
  std::vector<std::string> center;
  std::vector<std::string> start;
  std::string map_alpha = "1";  // standard map
  std::string map_epsilon;      // torus map; empty keeps the reference value
  std::string mu = "0.1", q1 = "-0.15", energy = "-2.63", p2, h = "2e-4";
  std::string forcing = "5";
  std::size_t transient = 500, steps_per_period = 2000;

  int k_max = 60;
  std::vector<int> truncations;
  std::size_t component = 0;
  std::vector<std::string> reference;
  bool either_orientation = false;
  std::vector<std::string> v0 = {"1", "0"};

  long long diag_k_min = 2, diag_k_max = 0;
  std::string diag_threshold = "0.1";
  std::vector<std::size_t> diag_psi_n;
  long long diag_psi_k_max = 250;
  std::vector<int> diag_bound_m = {1, 2};
  std::vector<std::size_t> diag_bound_n;
  long long diag_bound_k_max = 50;
  long long diag_k_star = 0;  // 0: use the scan's argmin

  std::size_t max_n() const { return n_sweep.empty() ? n : n_sweep.back(); }
};

// Validates keys and values; ContractError on anything malformed.
ExperimentConfig make_experiment(const Config& cfg);

struct OutputFile {
  std::string name;
  std::string content;
};

struct CommandResult {
  std::vector<OutputFile> files;
  WarningSink warnings;
};

inline constexpr std::string_view kCommands[] = {"orbit", "rotnum", "fourier", "lyap", "diag"};

CommandResult run_command(std::string_view command, const ExperimentConfig& cfg);

// Parses a number or named constant at the given tier.
template <class Real>
Real parse_value(std::string_view text);

}  // namespace wbirkhoff::cli
