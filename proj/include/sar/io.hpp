#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "sar/bifurcation.hpp"
#include "sar/equilibria.hpp"
#include "sar/errors.hpp"
#include "sar/ode.hpp"
#include "sar/parameters.hpp"
#include "sar/stochastic.hpp"

namespace sar::io {

enum class Command { thresholds, equilibria, simulate_ode, simulate_stoch, bifurcation };
enum class Format { csv, json };

inline std::string_view to_string(Command c) {
  switch (c) {
    case Command::thresholds: return "thresholds";
    case Command::equilibria: return "equilibria";
    case Command::simulate_ode: return "simulate-ode";
    case Command::simulate_stoch: return "simulate-stoch";
    case Command::bifurcation: return "bifurcation";
  }
  return "?";
}

inline std::optional<Command> parse_command(std::string_view s) {
  for (auto c : {Command::thresholds, Command::equilibria, Command::simulate_ode, Command::simulate_stoch,
                 Command::bifurcation})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  return std::nullopt;
}

struct InitialShares {
  double a0 = 0.01;
  double s_tilde0 = 0.0;
};

struct OdeSettings {
  IntegratorConfig integrator;
  InitialShares initial;
};

struct StochSettings {
  StochasticConfig config;
  std::int64_t population = population_size(Population::low);
  InitialShares initial;
};

struct RunSpec {
  Command command = Command::thresholds;
  ModelParameters parameters;
  OdeSettings ode;
  StochSettings stochastic;
  SweepConfig sweep;
  std::string out_path;  // empty: standard output
  Format format = Format::json;
};

inline Format default_format(Command c) {
  return c == Command::thresholds || c == Command::equilibria ? Format::json : Format::csv;
}

// --- presets ----------------------------------------------------------------

struct Preset {
  RawParameters parameters;
  double a0 = 0.01;
};

/// Parameter sets of the published figures (base rates mu = 0.00015,
/// beta = 0.009, gamma = 0.0027).
inline const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> table = [] {
    auto base = [](double kappa, double phi, double nu) { return RawParameters{0.00015, 0.009, 0.0027, phi, kappa, nu}; };
    std::map<std::string, Preset> m;
    m["fig1"] = {base(0.19, 0.005, 0.0), 0.01};  // kappa is swept; 0.19 gives R0 = 0.6
    m["fig2"] = {base(0.3111, 0.0044, 0.8), 0.01};
    m["fig3a"] = {base(0.3111, 0.0044, 0.8), 0.01};
    m["fig3b"] = {base(0.3111, 0.004, 0.8), 0.01};
    m["fig4"] = {base(0.2, 0.0044, 0.8), 0.15};
    m["fig5"] = {base(0.3111, 0.0044, 0.8), 0.01};
    m["fig6"] = {base(0.3243, 0.0042, 0.8), 0.01};
    m["fig7"] = {base(0.3333, 0.0044, 0.8), 0.01};
    return m;
  }();
  return table;
}

// --- config parsing ---------------------------------------------------------

/// Command-line values; each one present overrides the config file.
struct Overrides {
  std::optional<std::string> command;
  std::optional<std::string> reproduce;
  std::optional<double> mu, beta, gamma, phi, kappa, nu;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<double> a0, dt, t_end;
  std::optional<std::string> population;
  std::optional<int> n_runs, record_every, n_points;
  std::optional<double> kappa_min, kappa_max;
};

namespace detail {

using nlohmann::json;

/// 1-based line of the key at `path` ("a.b.c"), found by locating each
/// segment's quoted name after the previous one. 0 when not found.
inline int line_of(std::string_view text, const std::string& path) {
  std::size_t pos = 0;
  std::size_t start = 0;
  bool found = false;
  while (start <= path.size()) {
    const auto dot = path.find('.', start);
    const std::string seg = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    const auto at = text.find('"' + seg + '"', pos);
    if (at == std::string_view::npos) return 0;
    pos = at;
    found = true;
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (!found) return 0;
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

class Reader {
public:
  explicit Reader(std::string text) : text_(std::move(text)) {}

  [[noreturn]] void fail(ConfigFailure f, const std::string& path, const std::string& detail) const {
    throw ConfigError(f, {path}, line_of(text_, path), detail);
  }

  void check_keys(const json& obj, const std::string& prefix, const std::set<std::string>& allowed) const {
    for (auto it = obj.begin(); it != obj.end(); ++it)
      if (!allowed.count(it.key())) fail(ConfigFailure::UnknownKey, join(prefix, it.key()), "unknown key");
  }

  const json* object(const json& parent, const std::string& prefix, const std::string& key) const {
    if (!parent.contains(key)) return nullptr;
    const auto& v = parent.at(key);
    if (!v.is_object()) fail(ConfigFailure::TypeMismatch, join(prefix, key), "expected an object");
    return &v;
  }

  std::optional<double> number(const json& obj, const std::string& prefix, const std::string& key) const {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_number()) fail(ConfigFailure::TypeMismatch, join(prefix, key), "expected a number, got " + std::string(v.type_name()));
    return v.get<double>();
  }

  std::optional<std::int64_t> integer(const json& obj, const std::string& prefix, const std::string& key) const {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) fail(ConfigFailure::TypeMismatch, join(prefix, key), "expected an integer, got " + std::string(v.type_name()));
    return v.get<std::int64_t>();
  }

  std::optional<std::uint64_t> unsigned_integer(const json& obj, const std::string& prefix, const std::string& key) const {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_number_unsigned()) fail(ConfigFailure::TypeMismatch, join(prefix, key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  std::optional<std::string> string(const json& obj, const std::string& prefix, const std::string& key) const {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_string()) fail(ConfigFailure::TypeMismatch, join(prefix, key), "expected a string, got " + std::string(v.type_name()));
    return v.get<std::string>();
  }

  static std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
  }

private:
  std::string text_;
};

inline std::int64_t population_from(const std::string& s, const std::string& path, const Reader& r) {
  if (auto p = parse_population(s)) return population_size(*p);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  r.fail(ConfigFailure::BadValue, path, "population must be low, medium, high or a positive integer");
}

}  // namespace detail

/// Builds a validated RunSpec from config text (JSON; empty text is an empty
/// object), an optional preset and command-line overrides, in that order of
/// increasing precedence.
inline RunSpec parse_config_text(const std::string& text, const Overrides& flags = {}) {
  using detail::json;
  detail::Reader rd(text);

  json root = json::object();
  if (text.find_first_not_of(" \t\r\n") != std::string::npos) {
    try {
      root = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError(ConfigFailure::Malformed, {}, 0, e.what());
    }
  }
  if (!root.is_object()) throw ConfigError(ConfigFailure::TypeMismatch, {"<root>"}, 1, "config must be a JSON object");
  rd.check_keys(root, "", {"command", "reproduce", "parameters", "ode", "stochastic", "bifurcation", "output"});

  // Preset first, file values over it, flags over both.
  std::optional<std::string> preset_name = rd.string(root, "", "reproduce");
  if (flags.reproduce) preset_name = flags.reproduce;
  std::optional<Preset> preset;
  if (preset_name) {
    const auto it = presets().find(*preset_name);
    if (it == presets().end()) throw ConfigError(ConfigFailure::BadValue, {"reproduce"}, detail::line_of(text, "reproduce"), "unknown preset '" + *preset_name + "'");
    preset = it->second;
  }

  std::optional<std::string> command_name = rd.string(root, "", "command");
  if (flags.command) command_name = flags.command;

  RunSpec spec;
  std::vector<std::string> missing;
  if (!command_name) {
    missing.push_back("command");
  } else if (auto c = parse_command(*command_name)) {
    spec.command = *c;
  } else {
    throw ConfigError(ConfigFailure::BadValue, {"command"}, detail::line_of(text, "command"), "unknown command '" + *command_name + "'");
  }

  // Model parameters.
  const json* params = rd.object(root, "", "parameters");
  if (params) rd.check_keys(*params, "parameters", {"mu", "beta", "gamma", "phi", "kappa", "nu"});
  std::optional<double> values[6];
  const char* names[6] = {"mu", "beta", "gamma", "phi", "kappa", "nu"};
  const std::optional<double>* overrides[6] = {&flags.mu, &flags.beta, &flags.gamma, &flags.phi, &flags.kappa, &flags.nu};
  if (preset) {
    const auto& p = preset->parameters;
    const double pv[6] = {p.mu, p.beta, p.gamma, p.phi, p.kappa, p.nu};
    for (int i = 0; i < 6; ++i) values[i] = pv[i];
  }
  for (int i = 0; i < 6; ++i) {
    if (params)
      if (auto v = rd.number(*params, "parameters", names[i])) values[i] = v;
    if (*overrides[i]) values[i] = *overrides[i];
    if (!values[i]) missing.push_back(std::string("parameters.") + names[i]);
  }
  if (!missing.empty()) throw ConfigError(ConfigFailure::MissingField, missing, 0, "required keys are missing");

  try {
    spec.parameters = ModelParameters::validated({*values[0], *values[1], *values[2], *values[3], *values[4], *values[5]});
  } catch (const ParameterError& e) {
    const auto& v = e.violations().front();
    throw ConfigError(ConfigFailure::BadValue, {"parameters." + v.field}, detail::line_of(text, "parameters." + v.field), e.what());
  }

  const double preset_a0 = preset ? preset->a0 : 0.01;
  spec.ode.initial.a0 = preset_a0;
  spec.stochastic.initial.a0 = preset_a0;

  auto section_check = [&](const char* name, Command owner) {
    if (root.contains(name) && spec.command != owner)
      throw ConfigError(ConfigFailure::BadValue, {name}, detail::line_of(text, name),
                        std::string("section does not apply to command '") + std::string(to_string(spec.command)) + "'");
  };

  // ODE settings.
  section_check("ode", Command::simulate_ode);
  if (const json* o = rd.object(root, "", "ode")) {
    rd.check_keys(*o, "ode", {"dt", "t_end", "record_every", "a0", "s_tilde0"});
    if (auto v = rd.number(*o, "ode", "dt")) spec.ode.integrator.dt = *v;
    if (auto v = rd.number(*o, "ode", "t_end")) spec.ode.integrator.t_end = *v;
    if (auto v = rd.integer(*o, "ode", "record_every")) spec.ode.integrator.record_every = static_cast<int>(*v);
    if (auto v = rd.number(*o, "ode", "a0")) spec.ode.initial.a0 = *v;
    if (auto v = rd.number(*o, "ode", "s_tilde0")) spec.ode.initial.s_tilde0 = *v;
  }

  // Stochastic settings.
  section_check("stochastic", Command::simulate_stoch);
  if (const json* s = rd.object(root, "", "stochastic")) {
    rd.check_keys(*s, "stochastic",
                  {"dt", "t_end", "record_every", "population", "a0", "s_tilde0", "recruitment", "seed", "n_runs"});
    auto& c = spec.stochastic.config;
    if (auto v = rd.number(*s, "stochastic", "dt")) c.dt = *v;
    if (auto v = rd.number(*s, "stochastic", "t_end")) c.t_end = *v;
    if (auto v = rd.integer(*s, "stochastic", "record_every")) c.record_every = static_cast<int>(*v);
    if (auto v = rd.integer(*s, "stochastic", "n_runs")) c.n_runs = static_cast<int>(*v);
    if (auto v = rd.unsigned_integer(*s, "stochastic", "seed")) c.seed = *v;
    if (auto v = rd.number(*s, "stochastic", "a0")) spec.stochastic.initial.a0 = *v;
    if (auto v = rd.number(*s, "stochastic", "s_tilde0")) spec.stochastic.initial.s_tilde0 = *v;
    if (s->contains("recruitment") && !s->at("recruitment").is_null())
      c.recruitment = rd.number(*s, "stochastic", "recruitment");
    if (s->contains("population")) {
      const auto& v = s->at("population");
      if (v.is_number_integer() && v.get<std::int64_t>() > 0)
        spec.stochastic.population = v.get<std::int64_t>();
      else if (v.is_string())
        spec.stochastic.population = detail::population_from(v.get<std::string>(), "stochastic.population", rd);
      else
        rd.fail(ConfigFailure::TypeMismatch, "stochastic.population", "expected low|medium|high or a positive integer");
    }
  }

  // Sweep settings.
  section_check("bifurcation", Command::bifurcation);
  if (const json* b = rd.object(root, "", "bifurcation")) {
    rd.check_keys(*b, "bifurcation", {"kappa_min", "kappa_max", "n_points"});
    if (auto v = rd.number(*b, "bifurcation", "kappa_min")) spec.sweep.kappa_min = *v;
    if (auto v = rd.number(*b, "bifurcation", "kappa_max")) spec.sweep.kappa_max = *v;
    if (auto v = rd.integer(*b, "bifurcation", "n_points")) spec.sweep.n_points = static_cast<int>(*v);
  }

  // Output.
  std::optional<std::string> format_name;
  if (const json* o = rd.object(root, "", "output")) {
    rd.check_keys(*o, "output", {"path", "format"});
    if (auto v = rd.string(*o, "output", "path")) spec.out_path = *v;
    format_name = rd.string(*o, "output", "format");
  }

  // Flags.
  if (flags.seed) spec.stochastic.config.seed = *flags.seed;
  if (flags.out) spec.out_path = *flags.out;
  if (flags.format) format_name = flags.format;
  if (flags.a0) spec.ode.initial.a0 = spec.stochastic.initial.a0 = *flags.a0;
  if (flags.dt) spec.ode.integrator.dt = spec.stochastic.config.dt = *flags.dt;
  if (flags.t_end) spec.ode.integrator.t_end = spec.stochastic.config.t_end = *flags.t_end;
  if (flags.record_every) spec.ode.integrator.record_every = spec.stochastic.config.record_every = *flags.record_every;
  if (flags.n_runs) spec.stochastic.config.n_runs = *flags.n_runs;
  if (flags.population) spec.stochastic.population = detail::population_from(*flags.population, "population", rd);
  if (flags.kappa_min) spec.sweep.kappa_min = *flags.kappa_min;
  if (flags.kappa_max) spec.sweep.kappa_max = *flags.kappa_max;
  if (flags.n_points) spec.sweep.n_points = *flags.n_points;

  spec.format = default_format(spec.command);
  if (format_name) {
    const auto f = parse_format(*format_name);
    if (!f) throw ConfigError(ConfigFailure::BadValue, {"output.format"}, detail::line_of(text, "output.format"), "format must be csv or json");
    spec.format = *f;
  }

  // Range checks on the settings the command will use.
  auto bad = [&](const std::string& key, const std::string& why) {
    throw ConfigError(ConfigFailure::BadValue, {key}, detail::line_of(text, key), why);
  };
  const auto& ic = spec.ode.integrator;
  if (!(ic.dt > 0.0)) bad("ode.dt", "must be > 0");
  if (!(ic.t_end > 0.0)) bad("ode.t_end", "must be > 0");
  if (ic.record_every < 1) bad("ode.record_every", "must be >= 1");
  const auto& sc = spec.stochastic.config;
  if (!(sc.dt > 0.0)) bad("stochastic.dt", "must be > 0");
  if (!(sc.t_end > 0.0)) bad("stochastic.t_end", "must be > 0");
  if (sc.record_every < 1) bad("stochastic.record_every", "must be >= 1");
  if (sc.n_runs < 1) bad("stochastic.n_runs", "must be >= 1");
  if (sc.recruitment && !(*sc.recruitment >= 0.0)) bad("stochastic.recruitment", "must be >= 0");
  for (const auto* init : {&spec.ode.initial, &spec.stochastic.initial})
    if (!(init->a0 >= 0.0 && init->s_tilde0 >= 0.0 && init->a0 + init->s_tilde0 <= 1.0))
      bad(init == &spec.ode.initial ? "ode.a0" : "stochastic.a0", "need a0, s_tilde0 >= 0 and a0 + s_tilde0 <= 1");
  const auto& sw = spec.sweep;
  if (!(sw.kappa_min >= 0.0 && sw.kappa_min < sw.kappa_max && sw.kappa_max <= 1.0))
    bad("bifurcation.kappa_min", "need 0 <= kappa_min < kappa_max <= 1");
  if (sw.n_points < 2) bad("bifurcation.n_points", "must be >= 2");

  if (!spec.out_path.empty()) {
    const auto parent = std::filesystem::path(spec.out_path).parent_path();
    std::error_code ec;
    if (!parent.empty() && !std::filesystem::exists(parent, ec)) {
      std::filesystem::create_directories(parent, ec);
      if (ec) throw IoError(parent.string(), "cannot create output directory: " + ec.message());
    }
  }
  return spec;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline RunSpec parse_config(const std::optional<std::filesystem::path>& path, const Overrides& flags = {}) {
  return parse_config_text(path ? read_file(*path) : std::string{}, flags);
}

// --- preflight --------------------------------------------------------------

struct Preflight {
  BasicThresholds thresholds;
  bool relapse_dominates = false;
};

inline Preflight preflight(const RunSpec& spec) {
  return {basic_thresholds(spec.parameters), spec.parameters.relapse_dominates()};
}

// --- tables and emission ----------------------------------------------------

using Cell = std::variant<std::nullptr_t, double, std::int64_t, std::string>;

/// Flat record set. `single` tables serialize to one JSON object rather than
/// an array.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool single = false;
};

/// Decimal with 12 significant digits; non-finite values become null/empty.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? format_number(*d) : "";
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return "";
}

inline std::string json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? format_number(*d) : "null";
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) return nlohmann::json(*s).dump();
  return "null";
}

inline std::string render(const Table& t, Format f) {
  std::string out;
  if (f == Format::csv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
    out += '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
      out += '\n';
    }
    return out;
  }
  auto object = [&](const std::vector<Cell>& row, const char* indent) {
    std::string o = "{";
    for (std::size_t i = 0; i < row.size(); ++i) {
      o += (i ? ",\n" : "\n") + std::string(indent) + "  ";
      o += nlohmann::json(t.columns[i]).dump() + ": " + json_cell(row[i]);
    }
    o += "\n" + std::string(indent) + "}";
    return o;
  };
  if (t.single && t.rows.size() == 1) return object(t.rows.front(), "") + "\n";
  out = "[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) out += (r ? ",\n  " : "\n  ") + object(t.rows[r], "  ");
  out += t.rows.empty() ? "]\n" : "\n]\n";
  return out;
}

/// Writes `t` to spec.out_path (or `os` when the path is empty).
inline void emit(const Table& t, const RunSpec& spec, std::ostream& os = std::cout) {
  const std::string text = render(t, spec.format);
  if (spec.out_path.empty()) {
    os << text;
    return;
  }
  std::ofstream out(spec.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(spec.out_path, "cannot open for writing");
  out << text;
  out.flush();
  if (!out) throw IoError(spec.out_path, "write failed");
}

// --- tables for each result type --------------------------------------------

inline Cell optional_cell(const std::optional<double>& v) { return v ? Cell(*v) : Cell(nullptr); }

inline Table thresholds_table(const ThresholdSet& t) {
  Cell region = nullptr;
  const int r = static_cast<int>(t.region);
  if (r >= 1 && r <= 4) region = std::int64_t{r};
  return {{"r0", "r_phi", "r_mu", "r_c", "r0_star", "region"},
          {{t.basic.r0, t.basic.r_phi, t.basic.r_mu, optional_cell(t.r_c), optional_cell(t.r0_star), region}},
          true};
}

inline Table equilibria_table(const EquilibriumSet& set) {
  Table t{{"kind", "a_root", "s", "a", "s_tilde", "stability", "lambda1_re", "lambda1_im", "lambda2_re",
           "lambda2_im", "lambda3_re", "lambda3_im", "degenerate"},
          {},
          false};
  auto add = [&](const Equilibrium& e) {
    std::vector<Cell> row{std::string(e.kind == EquilibriumKind::endemic ? "endemic" : "addiction-free"), e.a_root,
                          e.state.s(), e.state.a(), e.state.s_tilde(), std::string(to_string(e.stability.verdict))};
    for (const auto& l : e.stability.eigenvalues) {
      row.emplace_back(l.real());
      row.emplace_back(l.imag());
    }
    row.emplace_back(std::string(e.degenerate ? "true" : "false"));
    t.rows.push_back(std::move(row));
  };
  add(set.addiction_free);
  for (const auto& e : set.endemic) add(e);
  return t;
}

inline Table trajectory_table(const Trajectory& tr) {
  Table t{{"t", "s", "a", "s_tilde"}, {}, false};
  t.rows.reserve(tr.times.size());
  for (std::size_t i = 0; i < tr.times.size(); ++i)
    t.rows.push_back({tr.times[i], tr.states[i].s(), tr.states[i].a(), tr.states[i].s_tilde()});
  return t;
}

inline Table ensemble_table(const EnsembleSummary& e) {
  Table t{{"t", "mean_a_frac", "p05", "p95"}, {}, false};
  t.rows.reserve(e.times.size());
  for (std::size_t i = 0; i < e.times.size(); ++i) t.rows.push_back({e.times[i], e.mean_fraction[i], e.p05[i], e.p95[i]});
  return t;
}

inline Table bifurcation_table(const BifurcationDiagram& d) {
  Table t{{"kappa", "r0", "a_root", "stability", "region"}, {}, false};
  t.rows.reserve(d.points.size());
  for (const auto& p : d.points)
    t.rows.push_back({p.kappa, p.r0, p.a_root, std::string(to_string(p.stability)), to_string(p.region)});
  return t;
}

/// Runs the analysis named by spec.command.
inline Table execute(const RunSpec& spec) {
  const auto& p = spec.parameters;
  switch (spec.command) {
    case Command::thresholds:
      return thresholds_table(compute_thresholds(p));
    case Command::equilibria:
      return equilibria_table(solve_endemic_equilibria(p));
    case Command::simulate_ode: {
      const auto& init = spec.ode.initial;
      return trajectory_table(integrate(p, ScaledState::from_addicted(init.a0, init.s_tilde0), spec.ode.integrator));
    }
    case Command::simulate_stoch: {
      const auto& s = spec.stochastic;
      const auto x0 = initial_counts(s.population, s.initial.a0, s.initial.s_tilde0);
      return ensemble_table(ensemble(p, x0, s.config));
    }
    case Command::bifurcation:
      return bifurcation_table(sweep(p, spec.sweep));
  }
  throw Error("unhandled command");
}

}  // namespace sar::io
