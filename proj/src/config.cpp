#include "fqubit/config.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"

#include "fqubit/analysis.hpp"
#include "fqubit/dynamics.hpp"
#include "fqubit/errors.hpp"
#include "fqubit/floquet.hpp"

namespace fqubit {
namespace {

using Values = std::map<std::string, std::string>;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_known(const std::string& key) {
  const auto& keys = config_keys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

double to_real(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) throw ConfigError(key, "not a finite number: '" + text + "'");
  return v;
}

int to_int(const std::string& key, const std::string& text) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(key, "not an integer: '" + text + "'");
  return v;
}

class Reader {
 public:
  explicit Reader(const Values& v) : values_(v) {}

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  double real(const std::string& key, double fallback) const {
    return has(key) ? to_real(key, values_.at(key)) : fallback;
  }
  int integer(const std::string& key, int fallback) const {
    return has(key) ? to_int(key, values_.at(key)) : fallback;
  }
  const std::string* text(const std::string& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
  }

 private:
  const Values& values_;
};

void require(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw ConfigError(key, what);
}

bool needs_gap(Command c) { return c != Command::zeros; }
bool needs_amplitude(Command c) { return c != Command::zeros && c != Command::sweep; }

// ---------------------------------------------------------------------------

double round12(double v) { return std::stod(fmt::format("{:.12g}", v)); }

std::string real12(double v) { return fmt::format("{:.12g}", v); }

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out[k] = a + (b - a) * k / (count - 1);
  out.back() = b;
  return out;
}

double time_end(const RunConfig& c) {
  return c.t_end > 0.0 ? c.t_end : 5.0 * std::numbers::pi / c.params.modulation;
}

// Rows of reals; integral columns print without a fraction.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<bool> integral;  // per column
  std::string footer;          // CSV trailing comment line
  nlohmann::ordered_json footer_json;  // JSON trailing object
};

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << (t.integral[i] ? fmt::format("{}", static_cast<long long>(row[i])) : real12(row[i]));
    }
    out << '\n';
  }
  if (!t.footer.empty()) out << "# " << t.footer << '\n';
}

void write_json(const Table& t, std::ostream& out) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (t.integral[i]) {
        obj[t.header[i]] = static_cast<long long>(row[i]);
      } else {
        obj[t.header[i]] = round12(row[i]);
      }
    }
    array.push_back(std::move(obj));
  }
  if (!t.footer_json.is_null()) array.push_back(t.footer_json);
  out << array.dump(2) << '\n';
}

// JSON rows carry the dimensionless time delta t / pi next to t.
void add_scaled_time(Table& t, double modulation) {
  t.header.insert(t.header.begin() + 1, "t_scaled");
  t.integral.insert(t.integral.begin() + 1, false);
  for (auto& row : t.rows) row.insert(row.begin() + 1, modulation * row[0] / std::numbers::pi);
}

Table sweep_table(const RunConfig& c) {
  const auto ratios = linspace(c.ratio_min, c.ratio_max, c.ratio_steps);
  const auto energies = quasienergy_sweep(c.params, ratios, Exec::parallel);
  Table t{{"ratio", "quasienergy_N"}, {}, {false, false}, {}, {}};
  for (std::size_t i = 0; i < ratios.size(); ++i) t.rows.push_back({ratios[i], energies[i]});
  return t;
}

Table dynamics_table(const RunConfig& c) {
  const auto times = uniform_times(time_end(c), static_cast<std::size_t>(c.samples));
  IntegrationOptions options;
  options.tol = c.tol;
  PopulationTrace trace;
  switch (c.method) {
    case DynamicsMethod::analytic: trace = analytic_populations(c.params, times); break;
    case DynamicsMethod::reduced: trace = integrate_reduced(c.params, times, options); break;
    case DynamicsMethod::full: trace = integrate_full(c.params, c.axis, times, options); break;
  }
  Table t{{"t", "p1", "p2"}, {}, {false, false, false}, {}, {}};
  for (std::size_t i = 0; i < trace.size(); ++i) t.rows.push_back({trace.times[i], trace.p1[i], trace.p2[i]});
  return t;
}

Table zeros_table(const RunConfig& c) {
  Table t{{"ratio"}, {}, {false}, {}, {}};
  for (double r : quasienergy_zeros(c.params, c.ratio_min, c.ratio_max, c.zero_tol)) t.rows.push_back({r});
  return t;
}

Table periodicity_table(const RunConfig& c) {
  const double e = std::fabs(quasienergy(c.params));
  Table t{{"m", "n", "residual", "is_periodic"}, {}, {true, true, false, true}, {}, {}};
  for (int m = 1; m <= c.max_m; ++m) {
    const int n = std::max(1, static_cast<int>(std::lround(m * e / c.params.modulation)));
    const PeriodicityResult r = periodicity_residual(c.params, m, n, c.periodicity_tol);
    t.rows.push_back({double(r.m), double(r.n), r.residual, r.is_periodic ? 1.0 : 0.0});
  }
  return t;
}

Table spectrum_table(const RunConfig& c) {
  Table t{{"m", "n", "frequency", "weight"}, {}, {true, true, false, false}, {}, {}};
  for (const SpectralLine& l : spectral_lines(c.params, c.weight_threshold, c.index_cutoff)) {
    t.rows.push_back({double(l.m), double(l.n), l.frequency, l.weight});
  }
  return t;
}

Table oracle_table(const RunConfig& c) {
  const auto times = uniform_times(time_end(c), static_cast<std::size_t>(c.samples));
  IntegrationOptions options;
  options.tol = c.tol;
  const PopulationTrace analytic = analytic_populations(c.params, times);
  const PopulationTrace full = integrate_full(c.params, c.axis, times, options);
  Table t{{"t", "p1_analytic", "p1_full", "abs_err"}, {}, {false, false, false, false}, {}, {}};
  double worst = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double err = std::fabs(analytic.p1[i] - full.p1[i]);
    worst = std::max(worst, err);
    t.rows.push_back({times[i], analytic.p1[i], full.p1[i], err});
  }
  t.footer = "max_abs_err=" + real12(worst);
  t.footer_json = {{"max_abs_err", round12(worst)}};
  return t;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "command",   "epsilon0",   "delta_gap",  "amplitude",   "carrier",      "modulation",
      "order",     "tol",        "workers",    "format",      "out",          "ratio_min",
      "ratio_max", "ratio_steps", "zero_tol",  "t_end",       "samples",      "method",
      "axis",      "max_m",      "periodicity_tol", "weight_threshold", "index_cutoff"};
  return keys;
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::sweep: return "sweep";
    case Command::dynamics: return "dynamics";
    case Command::zeros: return "zeros";
    case Command::periodicity: return "periodicity";
    case Command::spectrum: return "spectrum";
    case Command::oracle: return "oracle";
  }
  return "";
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::sweep, Command::dynamics, Command::zeros, Command::periodicity, Command::spectrum,
                    Command::oracle}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

RunConfig parse_config(std::string_view source, const std::map<std::string, std::string>& overrides) {
  Values values;
  std::size_t line_no = 0;
  while (!source.empty()) {
    const auto nl = source.find('\n');
    std::string_view line = source.substr(0, nl);
    source = nl == std::string_view::npos ? std::string_view{} : source.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(line), fmt::format("line {}: expected 'key = value'", line_no));
    }
    const std::string key(trim(line.substr(0, eq)));
    if (!is_known(key)) throw ConfigError(key, "unknown key");
    values[key] = std::string(trim(line.substr(eq + 1)));
  }
  for (const auto& [key, value] : overrides) {
    if (!is_known(key)) throw ConfigError(key, "unknown key");
    values[key] = std::string(trim(value));
  }

  const Reader in(values);
  RunConfig c;
  if (const auto* name = in.text("command")) {
    const auto cmd = parse_command(*name);
    require(cmd.has_value(), "command", "unknown command '" + *name + "'");
    c.command = *cmd;
  } else {
    throw ConfigError("command", "missing");
  }

  SystemParams& p = c.params;
  p.carrier = in.real("carrier", 1.0);
  require(p.carrier > 0.0, "carrier", "must be positive");
  p.modulation = in.real("modulation", p.carrier / 1000.0);
  require(p.modulation > 0.0 && p.modulation < p.carrier, "modulation", "must satisfy 0 < modulation < carrier");
  p.order = in.integer("order", 1);
  require(p.order >= 1, "order", "must be >= 1");
  p.epsilon0 = in.real("epsilon0", p.order * p.carrier);

  require(!needs_gap(c.command) || in.has("delta_gap"), "delta_gap", "required by this command");
  p.delta_gap = in.real("delta_gap", 0.0);
  require(!in.has("delta_gap") || p.delta_gap > 0.0, "delta_gap", "must be positive");
  require(!needs_amplitude(c.command) || in.has("amplitude"), "amplitude", "required by this command");
  p.amplitude = in.real("amplitude", 0.0);
  require(p.amplitude >= 0.0, "amplitude", "must be >= 0");

  c.tol = in.real("tol", 1e-9);
  require(c.tol > 0.0, "tol", "must be positive");
  c.workers = in.integer("workers", 0);
  require(c.workers >= 0, "workers", "must be >= 0");

  if (const auto* f = in.text("format")) {
    require(*f == "csv" || *f == "json", "format", "must be csv or json");
    c.format = *f == "csv" ? OutputFormat::csv : OutputFormat::json;
  }
  if (const auto* o = in.text("out")) c.out = *o;

  c.ratio_min = in.real("ratio_min", 0.0);
  require(c.ratio_min >= 0.0, "ratio_min", "must be >= 0");
  c.ratio_max = in.real("ratio_max", 11.0);
  require(c.ratio_max > c.ratio_min, "ratio_max", "must exceed ratio_min");
  c.ratio_steps = in.integer("ratio_steps", 551);
  require(c.ratio_steps >= 2, "ratio_steps", "must be >= 2");
  c.zero_tol = in.real("zero_tol", 1e-4);
  require(c.zero_tol > 0.0, "zero_tol", "must be positive");

  c.t_end = in.real("t_end", 0.0);
  require(c.t_end >= 0.0, "t_end", "must be >= 0 (0 selects five modulation periods)");
  c.samples = in.integer("samples", 1001);
  require(c.samples >= 2, "samples", "must be >= 2");
  if (const auto* m = in.text("method")) {
    if (*m == "analytic") c.method = DynamicsMethod::analytic;
    else if (*m == "reduced") c.method = DynamicsMethod::reduced;
    else if (*m == "full") c.method = DynamicsMethod::full;
    else throw ConfigError("method", "must be analytic, reduced or full");
  }
  if (const auto* a = in.text("axis")) {
    require(*a == "z" || *a == "x", "axis", "must be z or x");
    c.axis = *a == "z" ? Axis::z : Axis::x;
  }

  c.max_m = in.integer("max_m", 20);
  require(c.max_m >= 1, "max_m", "must be >= 1");
  c.periodicity_tol = in.real("periodicity_tol", kPeriodicityTolerance);
  require(c.periodicity_tol > 0.0, "periodicity_tol", "must be positive");
  c.weight_threshold = in.real("weight_threshold", kDefaultWeightThreshold);
  require(c.weight_threshold >= 0.0, "weight_threshold", "must be >= 0");
  c.index_cutoff = in.integer("index_cutoff", -1);
  require(c.index_cutoff >= -1, "index_cutoff", "must be >= 0, or -1 for the default");
  return c;
}

void run(const RunConfig& config, std::ostream& out) {
  if (config.workers > 0) omp_set_num_threads(config.workers);
  Table table;
  switch (config.command) {
    case Command::sweep: table = sweep_table(config); break;
    case Command::dynamics: table = dynamics_table(config); break;
    case Command::zeros: table = zeros_table(config); break;
    case Command::periodicity: table = periodicity_table(config); break;
    case Command::spectrum: table = spectrum_table(config); break;
    case Command::oracle: table = oracle_table(config); break;
  }
  if (config.format == OutputFormat::csv) {
    write_csv(table, out);
  } else {
    if (config.command == Command::dynamics || config.command == Command::oracle) {
      add_scaled_time(table, config.params.modulation);
    }
    write_json(table, out);
  }
}

int run(const RunConfig& config) {
  try {
    if (config.command == Command::dynamics || config.command == Command::oracle) {
      for (const auto& w : validate_regime(config.params).warnings) std::cerr << "warning: " << w << '\n';
    }
    std::ostringstream buffer;
    run(config, buffer);
    if (config.out.empty()) {
      std::cout << buffer.str();
      return std::cout.good() ? 0 : 1;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open '" << config.out << "' for writing\n";
      return 1;
    }
    file << buffer.str();
    return file.good() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace fqubit
