// floquet-qubit <command> [--config FILE] [--key value ...] [--out PATH] [--format csv|json]

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fqubit/config.hpp"
#include "fqubit/errors.hpp"

namespace {

const std::map<std::string, std::string> kHelp{
    {"epsilon0", "qubit bias (default N * carrier)"},
    {"delta_gap", "tunneling amplitude Delta"},
    {"amplitude", "drive amplitude A"},
    {"carrier", "carrier frequency w0 (default 1)"},
    {"modulation", "modulation frequency delta (default carrier/1000)"},
    {"order", "resonance order N (default 1)"},
    {"tol", "ODE relative tolerance (default 1e-9)"},
    {"workers", "OpenMP threads, 0 = runtime default"},
    {"format", "csv | json (default csv)"},
    {"out", "output path (default stdout)"},
    {"ratio_min", "sweep/zeros: lower A/w0"},
    {"ratio_max", "sweep/zeros: upper A/w0"},
    {"ratio_steps", "sweep: grid points"},
    {"zero_tol", "zeros: bisection tolerance in A/w0"},
    {"t_end", "dynamics/oracle: end time (default 5 pi/delta)"},
    {"samples", "dynamics/oracle: output samples"},
    {"method", "dynamics: analytic | reduced | full"},
    {"axis", "z | x drive axis of the full integrator"},
    {"max_m", "periodicity: largest period multiple"},
    {"periodicity_tol", "periodicity: residual threshold"},
    {"weight_threshold", "spectrum: drop lines below this weight"},
    {"index_cutoff", "spectrum: |m|,|n| cutoff, -1 = automatic"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Floquet quasienergies and population dynamics of a qubit under an amplitude-modulated drive"};
  app.option_defaults()->always_capture_default(false);

  std::string command;
  std::string config_path;
  app.add_option("command", command, "sweep | dynamics | zeros | periodicity | spectrum | oracle")->required();
  app.add_option("--config", config_path, "key = value file")->check(CLI::ExistingFile);

  std::map<std::string, std::string> flags;
  for (const auto& key : fqubit::config_keys()) {
    if (key == "command") continue;
    const auto help = kHelp.find(key);
    app.add_option_function<std::string>(
        "--" + key, [&flags, key](const std::string& v) { flags[key] = v; },
        help == kHelp.end() ? std::string() : help->second);
  }

  CLI11_PARSE(app, argc, argv);

  std::string source;
  if (!config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    source = text.str();
  }
  flags["command"] = command;

  fqubit::RunConfig config;
  try {
    config = fqubit::parse_config(source, flags);
  } catch (const fqubit::ConfigError& e) {
    std::cerr << "error: config key '" << e.key() << "': " << e.what() << '\n';
    return 2;
  }
  return fqubit::run(config);
}
