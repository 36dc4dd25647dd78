// Copyright 2026 The dment Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include "dment/dynamics.hpp"
#include "dment/error.hpp"
#include "dment/measures.hpp"
#include "dment/scan.hpp"
#include "dment/states.hpp"
#include "dment/sweep_io.hpp"
#include "repro.hpp"
#include "version.hpp"

namespace dment::cli {

namespace {

namespace fs = std::filesystem;

/// Bad user input; reported with exit status 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Output could not be written; exit status 3.
struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string family = "w";
  std::string w;
  std::string g;
  std::string env = "1,0,0,0";
  std::optional<double> theta;
  std::optional<double> dz;
  std::optional<double> t;
  std::string theta_range;
  std::string w1_range;
  std::optional<double> w2;
  std::string w2_range;
  std::string g0_range;
  bool normalize = false;
  std::string convention = "doubled";
  std::string coupling = "ab";
  std::string measures;
  double esd_tolerance = kDefaultEsdTolerance;
  double cross_tolerance = kDefaultCrossTolerance;
  std::vector<std::string> esd;
  bool crossings = false;
  std::string out;
  std::string sidecar;
  std::string format = "csv";
  std::uint64_t seed = 42;
  unsigned jobs = 0;
};

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> values;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const auto cell = rest.substr(0, comma);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
      throw ValidationError(std::string(flag) + ": '" + text + "' is not a list of numbers");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (values.size() != expected) {
    throw ValidationError(std::string(flag) + ": expected " + std::to_string(expected) +
                          " comma-separated values, got " + std::to_string(values.size()));
  }
  return values;
}

Axis parse_range(const std::string& text, const char* flag) {
  std::string normalized = text;
  for (auto& ch : normalized) {
    if (ch == ':') ch = ',';
  }
  const auto v = parse_list(normalized, 3, flag);
  const Axis axis{v[0], v[1], v[2]};
  try {
    (void)axis.values();
  } catch (const Error& e) {
    throw ValidationError(std::string(flag) + ": " + e.what());
  }
  return axis;
}

template <class F>
auto validated(const char* flag, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw ValidationError(std::string(flag) + ": " + e.what());
  }
}

Normalize normalize_flag(const RunConfig& c) { return c.normalize ? Normalize::yes : Normalize::no; }

PureState environment(const RunConfig& c) {
  const auto v = parse_list(c.env, 4, "--env");
  return validated("--env", [&] {
    return env_qubit({v[0], v[1]}, {v[2], v[3]}, normalize_flag(c));
  });
}

StateFamily family(const RunConfig& c) {
  return validated("--family", [&] { return parse_state_family(c.family); });
}

NegativityConvention convention(const RunConfig& c) {
  return validated("--negativity-convention", [&] { return parse_negativity_convention(c.convention); });
}

CouplingSites coupling(const RunConfig& c) {
  return validated("--coupling", [&] { return parse_coupling_sites(c.coupling); });
}

MeasureSet measures(const RunConfig& c) {
  if (c.measures.empty() || c.measures == "all") return MeasureSet::all();
  MeasureSet set;
  std::stringstream ss(c.measures);
  std::string name;
  while (std::getline(ss, name, ',')) {
    set.insert(validated("--measures", [&] { return parse_measure(name); }));
  }
  return set;
}

void check_tolerances(const RunConfig& c) {
  if (!(c.esd_tolerance > 0.0)) throw ValidationError("--esd-tolerance: must be positive");
  if (!(c.cross_tolerance > 0.0)) throw ValidationError("--cross-tolerance: must be positive");
  if (c.format != "csv" && c.format != "json") throw ValidationError("--format: must be csv or json");
}

double single_theta(const RunConfig& c) {
  if (c.theta && (c.dz || c.t)) throw ValidationError("--theta: give either --theta or --dz/--t, not both");
  if (c.dz || c.t) {
    if (!c.dz || !c.t) throw ValidationError("--dz/--t: both are required together");
    if (*c.dz < 0.0) throw ValidationError("--dz: must be non-negative");
    if (*c.t < 0.0) throw ValidationError("--t: must be non-negative");
    return DMCoupling{*c.dz, *c.t}.theta();
  }
  const double theta = c.theta.value_or(0.0);
  if (!std::isfinite(theta)) throw ValidationError("--theta: must be finite");
  return theta;
}

PureState system_state(const RunConfig& c) {
  if (family(c) == StateFamily::w) {
    if (c.w.empty()) throw ValidationError("--w: required for --family w");
    const auto w = parse_list(c.w, 3, "--w");
    return validated("--w", [&] { return w_state(w[0], w[1], w[2], normalize_flag(c)); });
  }
  if (c.g.empty()) throw ValidationError("--g: required for --family ghz");
  const auto g = parse_list(c.g, 2, "--g");
  return validated("--g", [&] { return ghz_state(g[0], g[1], normalize_flag(c)); });
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot write '" + path.string() + "'");
  return file;
}

void write_text(const fs::path& path, const std::string& text) {
  auto file = open_output(path);
  file << text;
  file.close();
  if (!file) throw OutputError("failed writing '" + path.string() + "'");
}

std::string render(const SweepResult& result, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << sweep_to_json(result) << '\n';
  } else {
    write_sweep_csv(os, result);
  }
  return os.str();
}

int cmd_measure(const RunConfig& c, std::ostream& out) {
  check_tolerances(c);
  const auto system = system_state(c);
  const auto env = environment(c);
  const double theta = single_theta(c);
  const auto wanted = measures(c);
  const auto report = measure_point(system, env, theta, wanted, convention(c), coupling(c));

  if (c.format == "json") {
    out << report_to_json(report, wanted) << '\n';
    return kExitOk;
  }
  SweepResult result;
  result.family = family(c);
  result.measures = wanted;
  result.convention = convention(c);
  SweepRow row{theta, std::nullopt, std::nullopt, std::nullopt, report};
  if (result.family == StateFamily::w) {
    row.w1 = std::real(system.amplitudes[0b010]);
    row.w2 = std::real(system.amplitudes[0b100]);
  } else {
    row.g0 = std::real(system.amplitudes[0b000]);
  }
  result.rows.push_back(row);
  write_sweep_csv(out, result);
  return kExitOk;
}

SweepGrid sweep_grid(const RunConfig& c) {
  SweepGrid grid;
  grid.family = family(c);
  grid.convention = convention(c);
  grid.sites = coupling(c);
  grid.measures = measures(c);
  grid.jobs = c.jobs;
  const auto env = environment(c);
  grid.c0 = env.amplitudes[0];
  grid.c1 = env.amplitudes[1];

  if (!c.theta_range.empty()) {
    if (c.theta || c.dz || c.t) throw ValidationError("--theta-range: conflicts with --theta/--dz/--t");
    grid.theta = parse_range(c.theta_range, "--theta-range");
  } else {
    grid.theta = Axis::single(single_theta(c));
  }

  if (grid.family == StateFamily::w) {
    if (!c.w1_range.empty()) {
      grid.w1 = parse_range(c.w1_range, "--w1-range");
    } else if (!c.w.empty()) {
      grid.w1 = Axis::single(system_state(c).amplitudes[0b010].real());
    } else {
      throw ValidationError("--w1-range: required for a W sweep (or give --w)");
    }
    if (!c.w2_range.empty()) {
      if (c.w2) throw ValidationError("--w2-range: conflicts with --w2");
      grid.w2 = parse_range(c.w2_range, "--w2-range");
    } else if (c.w2) {
      grid.w2 = Axis::single(*c.w2);
    } else if (!c.w.empty()) {
      grid.w2 = Axis::single(system_state(c).amplitudes[0b100].real());
    } else {
      throw ValidationError("--w2: required for a W sweep (or give --w2-range / --w)");
    }
  } else {
    if (!c.g0_range.empty()) {
      grid.g0 = parse_range(c.g0_range, "--g0-range");
    } else if (!c.g.empty()) {
      grid.g0 = Axis::single(system_state(c).amplitudes[0b000].real());
    } else {
      throw ValidationError("--g: required for a GHZ sweep (or give --g0-range)");
    }
  }
  return grid;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  check_tolerances(c);
  const auto grid = sweep_grid(c);
  const auto result = validated("grid", [&] { return run_sweep(grid); });

  Sidecar sidecar;
  for (const auto& name : c.esd) {
    auto found = validated("--esd", [&] { return detect_esd(result, name, c.esd_tolerance); });
    sidecar.esd.insert(sidecar.esd.end(), found.begin(), found.end());
  }
  if (c.crossings) {
    if (grid.family != StateFamily::w || !grid.theta.is_single() || !grid.w2.is_single()) {
      throw ValidationError("--crossings: needs a W sweep with a single --theta and --w2");
    }
    CrossingOptions options;
    options.cross_tolerance = c.cross_tolerance;
    options.min_common_value = c.cross_tolerance;
    options.c0 = grid.c0;
    options.c1 = grid.c1;
    options.convention = grid.convention;
    options.sites = grid.sites;
    options.jobs = grid.jobs;
    sidecar.crossings = find_crossings(grid.theta.start, grid.w2.start, options);
  }
  const bool want_sidecar = !c.esd.empty() || c.crossings;

  const auto text = render(result, c.format);
  if (c.out.empty() || c.out == "-") {
    out << text;
    if (want_sidecar) {
      if (c.sidecar.empty()) {
        out << sidecar_to_json(sidecar) << '\n';
      } else {
        write_text(c.sidecar, sidecar_to_json(sidecar) + "\n");
      }
    }
    return kExitOk;
  }
  write_text(c.out, text);
  if (want_sidecar) {
    const fs::path path = c.sidecar.empty() ? fs::path(c.out + ".sidecar.json") : fs::path(c.sidecar);
    write_text(path, sidecar_to_json(sidecar) + "\n");
  }
  return kExitOk;
}

int cmd_repro(const std::vector<std::string>& targets, const std::string& out_dir, const RunConfig& c,
              std::ostream& out) {
  std::vector<std::string> selected;
  for (const auto& t : targets) {
    if (t == "all") {
      selected = repro_targets();
      break;
    }
    if (std::find(repro_targets().begin(), repro_targets().end(), t) == repro_targets().end()) {
      throw ValidationError("repro: unknown target '" + t + "'");
    }
    selected.push_back(t);
  }
  if (selected.empty()) throw ValidationError("repro: no target given");

  ReproSettings settings;
  settings.convention = convention(c);
  settings.sites = coupling(c);
  settings.jobs = c.jobs;
  settings.seed = c.seed;
  settings.cross_tolerance = c.cross_tolerance;

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) throw OutputError("cannot create directory '" + out_dir + "'");

  nlohmann::ordered_json manifest;
  manifest["schema"] = 1;
  manifest["tool"] = "dment";
  manifest["version"] = std::string(kVersion);
  manifest["negativity_convention"] = std::string(to_string(settings.convention));
  manifest["coupling"] = std::string(to_string(settings.sites));
  manifest["seed"] = settings.seed;
  manifest["targets"] = nlohmann::ordered_json::array();
  for (const auto& target : selected) {
    const auto data = run_repro_target(target, settings);
    const fs::path file = fs::path(out_dir) / (target + ".csv");
    write_text(file, data.csv);
    manifest["targets"].push_back({{"name", target},
                                   {"file", file.filename().string()},
                                   {"rows", data.rows},
                                   {"parameters", nlohmann::ordered_json::parse(data.parameters_json)}});
    out << "wrote " << file.string() << " (" << data.rows << " rows)\n";
  }
  write_text(fs::path(out_dir) / "MANIFEST.json", manifest.dump(2) + "\n");
  return kExitOk;
}

void add_common(CLI::App& app, RunConfig& c) {
  app.add_option("--family", c.family, "State family: w | ghz")->check(CLI::IsMember({"w", "ghz"}));
  app.add_option("--w", c.w, "W amplitudes w0,w1,w2");
  app.add_option("--g", c.g, "GHZ amplitudes g0,g1");
  app.add_option("--env", c.env, "Environment amplitudes c0re,c0im,c1re,c1im");
  app.add_option("--theta", c.theta, "Dt value");
  app.add_option("--dz", c.dz, "DM strength (with --t)");
  app.add_option("--t", c.t, "Time (with --dz)");
  app.add_flag("--normalize", c.normalize, "Rescale amplitudes to unit norm");
  app.add_option("--negativity-convention", c.convention, "doubled | raw")
      ->check(CLI::IsMember({"doubled", "raw"}));
  app.add_option("--coupling", c.coupling, "Qubit pair carrying the DM term: ab | cd")
      ->check(CLI::IsMember({"ab", "cd"}));
  app.add_option("--measures", c.measures, "Comma-separated measure names (default all)");
  app.add_option("--esd-tolerance", c.esd_tolerance, "Threshold below which a measure counts as dead");
  app.add_option("--cross-tolerance", c.cross_tolerance, "Agreement needed for a crossing");
  app.add_option("--format", c.format, "csv | json");
  app.add_option("--seed", c.seed, "Seed recorded in outputs (default 42)");
  app.add_option("--jobs", c.jobs, "Worker threads (default: DMENT_JOBS or all cores)");
}

}  // namespace

const std::vector<std::string>& repro_targets() { return repro_target_names(); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* jobs_env) {
  CLI::App app{"dment: tripartite entanglement under DM coupling"};
  app.require_subcommand(1, 1);

  RunConfig config;
  if (jobs_env != nullptr && *jobs_env != '\0') {
    try {
      config.jobs = static_cast<unsigned>(std::stoul(jobs_env));
    } catch (const std::exception&) {
      err << "error: DMENT_JOBS='" << jobs_env << "' is not a number\n";
      return kExitValidation;
    }
  }

  auto* measure = app.add_subcommand("measure", "Evolve one state and print its entanglement report");
  add_common(*measure, config);

  auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid and write CSV/JSON");
  add_common(*sweep, config);
  sweep->add_option("--theta-range", config.theta_range, "start:stop:step");
  sweep->add_option("--w1-range", config.w1_range, "start:stop:step");
  sweep->add_option("--w2", config.w2, "Fixed w2");
  sweep->add_option("--w2-range", config.w2_range, "start:stop:step");
  sweep->add_option("--g0-range", config.g0_range, "start:stop:step (GHZ)");
  sweep->add_option("--esd", config.esd, "Detect sudden-death intervals of this measure (repeatable)");
  sweep->add_flag("--crossings", config.crossings, "Locate equal-negativity crossings over w1");
  sweep->add_option("--out", config.out, "Output path (default stdout)");
  sweep->add_option("--sidecar", config.sidecar, "JSON sidecar path (default <out>.sidecar.json)");

  std::vector<std::string> targets;
  std::string out_dir = "repro";
  auto* repro = app.add_subcommand("repro", "Regenerate the reference tables and figure datasets");
  repro->add_option("target", targets, "Target name or 'all'")->required();
  repro->add_option("--out-dir,--out", out_dir, "Output directory");
  add_common(*repro, config);

  auto* version = app.add_subcommand("version", "Print the version");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help requests surface here too.
    if (e.get_exit_code() == 0) {
      for (auto* sub : app.get_subcommands()) out << sub->help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (version->parsed()) {
      out << "dment " << kVersion << '\n';
      return kExitOk;
    }
    if (measure->parsed()) return cmd_measure(config, out);
    if (sweep->parsed()) return cmd_sweep(config, out);
    if (repro->parsed()) return cmd_repro(targets, out_dir, config, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnwritable;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace dment::cli
