#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqubit/model.hpp"

namespace fqubit {

enum class Command { sweep, dynamics, zeros, periodicity, spectrum, oracle };
enum class OutputFormat { csv, json };
enum class DynamicsMethod { analytic, reduced, full };

struct RunConfig {
  Command command = Command::sweep;
  SystemParams params;
  OutputFormat format = OutputFormat::csv;
  std::string out;  ///< empty: standard output
  double tol = 1e-9;
  int workers = 0;  ///< 0: all available

  // sweep, zeros
  double ratio_min = 0.0;
  double ratio_max = 11.0;
  int ratio_steps = 551;
  double zero_tol = 1e-4;

  // dynamics, oracle
  double t_end = 0.0;  ///< 0: five modulation periods
  int samples = 1001;
  DynamicsMethod method = DynamicsMethod::reduced;
  Axis axis = Axis::z;

  // periodicity
  int max_m = 20;
  double periodicity_tol = 1e-3;

  // spectrum
  double weight_threshold = 1e-8;
  int index_cutoff = -1;  ///< -1: ceil(A/w0) + 20
};

/// Every key parse_config accepts, in a stable order.
const std::vector<std::string>& config_keys();

/// Flat `key = value` text, one pair per line, '#' starts a comment. Entries
/// in `overrides` replace file values. Errors throw ConfigError naming the key.
RunConfig parse_config(std::string_view source, const std::map<std::string, std::string>& overrides = {});

std::string_view command_name(Command c);
std::optional<Command> parse_command(std::string_view name);

/// Runs the command and writes its artifact to `out`.
void run(const RunConfig& config, std::ostream& out);

/// Writes to config.out, or standard output when it is empty. Returns the exit
/// status; module errors go to standard error.
int run(const RunConfig& config);

}  // namespace fqubit
