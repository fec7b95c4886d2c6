// coboson: sweeps, figure presets and the property check from the command line.
//
// Exit codes: 0 success, 1 property failure, 2 usage or I/O error,
// 3 numerical non-convergence.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coboson/check.hpp"
#include "coboson/coboson.hpp"

namespace {

using json = nlohmann::json;

enum Exit { kOk = 0, kPropertyFailure = 1, kUsage = 2, kNonConvergence = 3 };

struct Settings {
  std::string kind = "bifermion";
  unsigned long n = 100;
  std::vector<std::string> x;
  std::vector<std::string> t;
  std::string estimator = "paper-approx";
  std::string out = "-";
  std::string format = "csv";
  unsigned jobs = 1;
  std::string config;
  std::string preset;
  double density = 1.8e20;
  double mass_u = 1.00782503223;
  double trap_size = 9.6e-8;
  double perturb_zeta3 = 0.0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

// Each entry is a single value or an inclusive range a:b:steps.
std::vector<double> expand_values(const std::vector<std::string>& specs, const char* flag) {
  std::vector<double> out;
  for (const auto& spec : specs) {
    const auto c1 = spec.find(':');
    if (c1 == std::string::npos) {
      out.push_back(parse_real(spec));
      continue;
    }
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos || spec.find(':', c2 + 1) != std::string::npos)
      throw UsageError(std::string(flag) + " range must be a:b:steps, got '" + spec + "'");
    const double a = parse_real(spec.substr(0, c1));
    const double b = parse_real(spec.substr(c1 + 1, c2 - c1 - 1));
    const double steps = parse_real(spec.substr(c2 + 1));
    if (steps < 1.0 || steps != std::floor(steps))
      throw UsageError(std::string(flag) + " range needs a positive integer step count");
    const int m = static_cast<int>(steps);
    for (int i = 0; i < m; ++i) out.push_back(m == 1 ? a : a + (b - a) * i / (m - 1));
  }
  if (out.empty()) throw UsageError(std::string(flag) + " needs at least one value");
  return out;
}

std::vector<std::string> json_values(const json& v) {
  std::vector<std::string> out;
  auto one = [&](const json& e) {
    if (e.is_number()) {
      std::ostringstream os;
      os << std::setprecision(17) << e.get<double>();
      out.push_back(os.str());
    } else {
      out.push_back(e.get<std::string>());
    }
  };
  if (v.is_array()) {
    for (const auto& e : v) one(e);
  } else {
    one(v);
  }
  return out;
}

// Fills every setting that was not given on the command line.
void apply_config(const CLI::App& app, Settings& s) {
  std::ifstream in(s.config);
  if (!in) throw UsageError("cannot open config file " + s.config);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw UsageError("config file " + s.config + ": " + e.what());
  }
  if (!cfg.is_object()) throw UsageError("config file " + s.config + " must hold a JSON object");
  auto unset = [&](const char* flag) { return app.get_option(flag)->count() == 0; };
  try {
    for (const auto& [key, val] : cfg.items()) {
      if (key == "kind") {
        if (unset("--kind")) s.kind = val.get<std::string>();
      } else if (key == "n") {
        if (unset("--n")) s.n = val.get<unsigned long>();
      } else if (key == "x") {
        if (unset("--x")) s.x = json_values(val);
      } else if (key == "t") {
        if (unset("--t")) s.t = json_values(val);
      } else if (key == "estimator") {
        if (unset("--estimator")) s.estimator = val.get<std::string>();
      } else if (key == "out") {
        if (unset("--out")) s.out = val.get<std::string>();
      } else if (key == "format") {
        if (unset("--format")) s.format = val.get<std::string>();
      } else if (key == "jobs") {
        if (unset("--jobs")) s.jobs = val.get<unsigned>();
      } else if (key == "density") {
        if (unset("--density")) s.density = val.get<double>();
      } else if (key == "mass_u") {
        if (unset("--mass-u")) s.mass_u = val.get<double>();
      } else if (key == "trap_size") {
        if (unset("--trap-size")) s.trap_size = val.get<double>();
      } else {
        throw UsageError("config file " + s.config + ": unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw UsageError("config file " + s.config + ": " + e.what());
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json to_json(const coboson::CurveSet& cs) {
  json meta = json::object();
  for (const auto& [k, v] : cs.metadata) meta[k] = v;
  meta["timestamp"] = utc_timestamp();
  json rows = json::array();
  for (const auto& r : cs.rows) {
    json row;
    row["series"] = r.series;
    row["x"] = r.x ? json(*r.x) : json(nullptr);
    row["kind"] = r.kind ? json(std::string(coboson::to_string(*r.kind))) : json(nullptr);
    row["N"] = r.n ? json(*r.n) : json(nullptr);
    row["estimator"] = r.estimator;
    row["abscissa"] = r.abscissa;
    row["value"] = r.value;
    row["raw_value"] = r.raw_value;
    row["flags"] = r.flags;
    rows.push_back(std::move(row));
  }
  return {{"metadata", meta}, {"rows", rows}};
}

void emit(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + path);
  f << text;
  if (!f) throw UsageError("failed writing output file " + path);
}

void emit_curves(coboson::CurveSet cs, const Settings& s, const std::string& command_line) {
  cs.set_meta("version", coboson::kVersion);
  cs.set_meta("command_line", command_line);
  cs.set_meta("series_rel_tol", "1e-17");
  cs.set_meta("alpha_rel_tol", "1e-8");
  cs.set_meta("shell_tail_tol", "1e-10*N");
  if (s.format == "json")
    emit(to_json(cs).dump(2) + "\n", s.out);
  else
    emit(coboson::to_csv(cs), s.out);
}

int run_check(const Settings& s, const std::string& command_line) {
  coboson::CheckOptions opt;
  opt.zeta3_perturbation = s.perturb_zeta3;
  opt.jobs = s.jobs;
  const auto results = coboson::run_check(opt);
  int failures = 0;
  std::ostringstream text;
  json report = json::array();
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    char line[512];
    std::snprintf(line, sizeof line, "%s [%d] %s: deviation %.3g, tolerance %.3g", r.pass ? "PASS" : "FAIL",
                  r.suite, r.name.c_str(), r.deviation, r.tolerance);
    text << line;
    if (!r.detail.empty()) text << " (" << r.detail << ")";
    text << '\n';
    report.push_back({{"suite", r.suite},
                      {"name", r.name},
                      {"tolerance", r.tolerance},
                      {"deviation", r.deviation},
                      {"pass", r.pass},
                      {"detail", r.detail}});
  }
  text << (failures ? "check: " + std::to_string(failures) + " of " + std::to_string(results.size()) +
                          " properties failed\n"
                    : "check: all " + std::to_string(results.size()) + " properties passed\n");
  if (s.format == "json") {
    json doc = {{"metadata",
                 {{"version", coboson::kVersion},
                  {"command_line", command_line},
                  {"timestamp", utc_timestamp()}}},
                {"results", report}};
    emit(doc.dump(2) + "\n", s.out);
    std::cerr << text.str();
  } else {
    emit(text.str(), s.out);
  }
  return failures ? kPropertyFailure : kOk;
}

int run_hydrogen(const Settings& s, const std::string& command_line) {
  namespace u = coboson::units;
  const u::GasSample gas(s.density, s.mass_u * u::constants::atomic_mass_unit, s.trap_size);
  const double tc = u::critical_temperature(gas);
  const double t0 = u::pseudo_critical_temperature(tc);
  const auto p = u::proton_purity(gas);
  coboson::CurveSet cs;
  auto row = [](const char* name, double v, std::vector<std::string> flags = {}) {
    return coboson::CurveRow{name, std::nullopt, std::nullopt, std::nullopt, "", 0.0, v, v,
                             std::move(flags)};
  };
  cs.rows.push_back(row("critical_temperature_K", tc));
  cs.rows.push_back(row("pseudo_critical_temperature_K", t0));
  std::vector<std::string> pflags;
  if (p.validity_warning) pflags.emplace_back(coboson::flag::validity_warning);
  cs.rows.push_back(row("proton_purity", p.purity, pflags));
  cs.rows.push_back(row("maximally_entangled", p.maximally_entangled ? 1.0 : 0.0));
  cs.set_meta("command", "hydrogen");
  emit_curves(std::move(cs), s, command_line);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composite-boson condensate fractions: sweeps, figure presets and checks"};
  app.fallthrough();
  app.require_subcommand(1);
  Settings s;

  app.add_option("--kind", s.kind, "Constituent statistics: bifermion or biboson")
      ->check(CLI::IsMember({"bifermion", "biboson", "fermion", "boson"}));
  app.add_option("--n", s.n, "Coboson number N (for chi: largest rung n)")
      ->check(CLI::PositiveNumber);
  app.add_option("--x", s.x, "Entanglement x; repeatable, or a range a:b:steps")->allow_extra_args(false);
  app.add_option("--t", s.t, "Temperature (two-level: T; trap, analytic: T/T0); repeatable or a:b:steps")
      ->allow_extra_args(false);
  app.add_option("--estimator", s.estimator, "Trap estimator")
      ->check(CLI::IsMember({"paper-approx", "full-solve"}));
  app.add_option("--out", s.out, "Output file, '-' for stdout");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", s.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--config", s.config, "JSON file with default settings; flags take precedence");
  app.add_option("--density", s.density, "hydrogen: number density in m^-3");
  app.add_option("--mass-u", s.mass_u, "hydrogen: particle mass in atomic mass units");
  app.add_option("--trap-size", s.trap_size, "hydrogen: trap size b in m");
  app.add_option("--perturb-zeta3", s.perturb_zeta3)->group("");

  auto* chi = app.add_subcommand("chi", "chi_{n+1}/chi_n for n = 0..N at each x");
  auto* two = app.add_subcommand("two-level", "Two-level condensate fraction against T");
  auto* trap = app.add_subcommand("trap", "Harmonic-trap condensate fraction against T/T0");
  auto* analytic =
      app.add_subcommand("analytic", "Thermodynamic-limit fraction with delta = 1 - x against T/T0");
  auto* hydrogen = app.add_subcommand("hydrogen", "Critical temperatures and proton purity");
  auto* figure = app.add_subcommand("figure", "Regenerate a figure preset");
  figure->add_option("preset", s.preset, "Preset name")
      ->required()
      ->check(CLI::IsMember(coboson::figure_presets()));
  auto* check = app.add_subcommand("check", "Run the property suites; exit 1 on any failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::string command_line;
  for (int i = 0; i < argc; ++i) command_line += (i ? " " : "") + std::string(argv[i]);

  try {
    if (!s.config.empty()) apply_config(app, s);
    const coboson::Kind kind = coboson::parse_kind(s.kind);
    const coboson::Estimator est = coboson::parse_estimator(s.estimator);
    if (s.format != "csv" && s.format != "json") throw UsageError("unknown format " + s.format);

    if (*check) return run_check(s, command_line);
    if (*hydrogen) return run_hydrogen(s, command_line);
    if (*figure) {
      emit_curves(coboson::run_figure(s.preset, s.jobs), s, command_line);
      return kOk;
    }
    if (*chi) {
      emit_curves(coboson::sweep_chi(kind, s.n, expand_values(s.x, "--x")), s, command_line);
      return kOk;
    }
    if (*two) {
      emit_curves(coboson::sweep_two_level(kind, s.n, expand_values(s.x, "--x"),
                                           expand_values(s.t, "--t"), s.jobs),
                  s, command_line);
      return kOk;
    }
    if (*trap) {
      emit_curves(coboson::sweep_trap(kind, s.n, expand_values(s.x, "--x"),
                                      expand_values(s.t, "--t"), est, s.jobs),
                  s, command_line);
      return kOk;
    }
    if (*analytic) {
      emit_curves(coboson::sweep_analytic(expand_values(s.x, "--x"), expand_values(s.t, "--t")), s,
                  command_line);
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "coboson: " << e.what() << '\n';
    return kUsage;
  } catch (const coboson::domain_error& e) {
    std::cerr << "coboson: " << e.what() << '\n';
    return kUsage;
  } catch (const coboson::non_convergence& e) {
    std::cerr << "coboson: non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const coboson::degenerate_denominator& e) {
    std::cerr << "coboson: non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  }
  return kUsage;
}
