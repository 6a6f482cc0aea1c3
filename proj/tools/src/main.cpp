#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wbirkhoff_cli/experiment.hpp"
#include "wbirkhoff_cli/presets.hpp"

namespace fs = std::filesystem;
using namespace wbirkhoff;
using namespace wbirkhoff::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;

struct Options {
  std::string config_path;
  std::string preset;
  std::vector<std::string> sets;
  std::string out_dir;
};

Config assemble(const Options& opt) {
  Config cfg;
  if (!opt.preset.empty()) {
    const auto p = find_preset(opt.preset);
    if (!p) throw ContractError("unknown preset '" + opt.preset + "' (see --list-presets)");
    cfg = Config::parse(p->text, "preset " + opt.preset);
  }
  if (!opt.config_path.empty()) cfg.merge(Config::load(opt.config_path));
  if (const char* env = std::getenv("WBIRKHOFF_THREADS"); env && *env && !cfg.has("threads"))
    cfg.set("threads", env);
  for (const auto& s : opt.sets) cfg.set(s);
  return cfg;
}

void write_files(const std::string& dir, const CommandResult& res) {
  fs::create_directories(dir);
  for (const auto& f : res.files) {
    const fs::path path = fs::path(dir) / f.name;
    std::ofstream out(path, std::ios::binary);
    out << f.content;
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  }
}

std::string describe(std::string_view command) {
  if (command == "orbit") return "Write the orbit or section points as CSV";
  if (command == "rotnum") return "Rotation number or vector over the N sweep, per weight";
  if (command == "fourier") return "Fourier series of the conjugacy and its reconstruction errors";
  if (command == "lyap") return "Weighted Lyapunov exponents of a 2-D map";
  return "Small-divisor scan and psi bound checks";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Birkhoff averages for quasiperiodic orbits"};
  app.require_subcommand(0, 1);
  bool list = false;
  app.add_flag("--list-presets", list, "Print the built-in experiment presets");

  Options opt;
  std::string command;
  for (std::string_view name : kCommands) {
    auto* sub = app.add_subcommand(std::string(name), describe(name));
    sub->add_option("--config", opt.config_path, "key = value configuration file")->check(CLI::ExistingFile);
    sub->add_option("--preset", opt.preset, "Start from a built-in preset");
    sub->add_option("--set", opt.sets, "Override one setting, key=value")->take_all();
    sub->add_option("--out", opt.out_dir, "Output directory")->required();
    sub->callback([&command, name] { command = std::string(name); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (list) {
    for (const auto& p : presets()) std::cout << p.name << "  " << p.summary << '\n';
    return kExitOk;
  }
  if (command.empty()) {
    std::cerr << app.help();
    return kExitUsage;
  }
  if (opt.config_path.empty() && opt.preset.empty()) {
    std::cerr << "error: " << command << " needs --config or --preset\n";
    return kExitUsage;
  }

  try {
    const auto exp = make_experiment(assemble(opt));
    const auto res = run_command(command, exp);
    for (const auto& w : res.warnings) std::cerr << "warning[" << w.code << "]: " << w.message << '\n';
    write_files(opt.out_dir, res);
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}
