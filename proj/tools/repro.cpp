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

#include "repro.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "dment/error.hpp"
#include "dment/sweep_io.hpp"

namespace dment::cli {

namespace {

using nlohmann::ordered_json;

struct ThetaW2 {
  double theta;
  double w2;
};

// Well-formed rows of the crossing table.
constexpr ThetaW2 kCrossingRows[] = {{6.5, 0.4}, {7.2, 0.5}, {9.1, 0.7}};

constexpr double kBipartiteStep = 0.01;

MeasureSet bipartite_measures() { return {Measure::n_ab, Measure::n_ac, Measure::n_bc}; }

SweepGrid base_grid(const ReproSettings& s) {
  SweepGrid grid;
  grid.convention = s.convention;
  grid.sites = s.sites;
  grid.jobs = s.jobs;
  return grid;
}

ordered_json axis_json(const Axis& a) { return {{"start", a.start}, {"stop", a.stop}, {"step", a.step}}; }

ReproData from_sweeps(const std::vector<SweepResult>& parts, ordered_json params) {
  SweepResult merged;
  merged.family = parts.front().family;
  merged.measures = parts.front().measures;
  merged.convention = parts.front().convention;
  for (const auto& p : parts) {
    merged.rows.insert(merged.rows.end(), p.rows.begin(), p.rows.end());
    merged.skipped += p.skipped;
  }
  std::ostringstream os;
  write_sweep_csv(os, merged);
  return {os.str(), merged.rows.size(), params.dump()};
}

ReproData table_symmetric_w(const ReproSettings& s) {
  auto grid = base_grid(s);
  const double w = 1.0 / std::sqrt(3.0);
  grid.theta = {0.0, 0.8, 0.1};
  grid.w1 = Axis::single(w);
  grid.w2 = Axis::single(w);
  ordered_json params{{"family", "w"}, {"w", {w, w, w}}, {"theta", axis_json(grid.theta)}, {"env", "|0>"}};
  return from_sweeps({run_sweep(grid)}, std::move(params));
}

ReproData fig2_threepi(const ReproSettings& s) {
  auto grid = base_grid(s);
  grid.measures = {Measure::pi_a, Measure::pi_b, Measure::pi_c, Measure::three_pi};
  grid.w1 = {0.0, 1.0, 0.05};
  grid.w2 = {0.0, 1.0, 0.05};
  std::vector<SweepResult> parts;
  ordered_json thetas = ordered_json::array();
  for (const double theta : {0.0, 0.2, 0.5, 0.7}) {
    grid.theta = Axis::single(theta);
    parts.push_back(run_sweep(grid));
    thetas.push_back(theta);
  }
  ordered_json params{{"family", "w"},
                      {"theta", thetas},
                      {"w1", axis_json(grid.w1)},
                      {"w2", axis_json(grid.w2)},
                      {"env", "|0>"}};
  return from_sweeps(parts, std::move(params));
}

ReproData bipartite_panels(const std::vector<ThetaW2>& panels, const ReproSettings& s) {
  auto grid = base_grid(s);
  grid.measures = bipartite_measures();
  grid.w1 = {0.0, 1.0, kBipartiteStep};
  std::vector<SweepResult> parts;
  ordered_json list = ordered_json::array();
  for (const auto& p : panels) {
    grid.theta = Axis::single(p.theta);
    grid.w2 = Axis::single(p.w2);
    parts.push_back(run_sweep(grid));
    list.push_back({{"theta", p.theta}, {"w2", p.w2}});
  }
  ordered_json params{{"family", "w"}, {"panels", list}, {"w1", axis_json(grid.w1)}, {"env", "|0>"}};
  return from_sweeps(parts, std::move(params));
}

ReproData fig4_bipartite(const ReproSettings& s) {
  std::vector<ThetaW2> panels;
  for (const double theta : {0.1, 0.3, 0.5, 0.7}) {
    for (const double w2 : {0.2, 0.4}) panels.push_back({theta, w2});
  }
  return bipartite_panels(panels, s);
}

ReproData fig5_bipartite(const ReproSettings& s) {
  return bipartite_panels({{0.6, 0.8}, {0.8, 0.1}, {0.9, 0.1}, {0.8, 0.5}}, s);
}

ReproData fig6_crossing(const ReproSettings& s) {
  return bipartite_panels({std::begin(kCrossingRows), std::end(kCrossingRows)}, s);
}

ReproData table_crossings(const ReproSettings& s) {
  CrossingOptions options;
  options.cross_tolerance = s.cross_tolerance;
  options.convention = s.convention;
  options.sites = s.sites;
  options.jobs = s.jobs;

  std::vector<ThetaW2> points(std::begin(kCrossingRows), std::end(kCrossingRows));
  // The malformed row: scan theta near 2.9 at both plausible w2 values.
  for (const double w2 : {0.4, 0.8}) {
    for (int k = 0; k <= 8; ++k) points.push_back({2.5 + 0.1 * k, w2});
  }

  std::ostringstream os;
  os << "theta,w2,w1,n_ab,n_ac,n_bc,common_value,spread,within_tolerance\n";
  for (const auto& p : points) {
    const auto c = closest_approach(p.theta, p.w2, options);
    os << format_double(c.theta) << ',' << format_double(c.w2) << ',' << format_double(c.w1) << ','
       << format_double(c.n_ab) << ',' << format_double(c.n_ac) << ',' << format_double(c.n_bc) << ','
       << format_double(c.common_value) << ',' << format_double(c.spread) << ','
       << (c.spread < options.cross_tolerance ? "true" : "false") << '\n';
  }
  ordered_json rows = ordered_json::array();
  for (const auto& r : kCrossingRows) rows.push_back({{"theta", r.theta}, {"w2", r.w2}});
  ordered_json params{{"family", "w"},
                      {"rows", rows},
                      {"theta_scan", {{"start", 2.5}, {"stop", 3.3}, {"step", 0.1}, {"w2", {0.4, 0.8}}}},
                      {"w1_step", options.w1_step},
                      {"cross_tolerance", options.cross_tolerance},
                      {"env", "|0>"}};
  return {os.str(), points.size(), params.dump()};
}

}  // namespace

const std::vector<std::string>& repro_target_names() {
  static const std::vector<std::string> names{"table-symmetric-w", "table-crossings", "fig2-threepi",
                                              "fig4-bipartite",    "fig5-bipartite",  "fig6-crossing"};
  return names;
}

ReproData run_repro_target(const std::string& name, const ReproSettings& settings) {
  if (name == "table-symmetric-w") return table_symmetric_w(settings);
  if (name == "table-crossings") return table_crossings(settings);
  if (name == "fig2-threepi") return fig2_threepi(settings);
  if (name == "fig4-bipartite") return fig4_bipartite(settings);
  if (name == "fig5-bipartite") return fig5_bipartite(settings);
  if (name == "fig6-crossing") return fig6_crossing(settings);
  throw Error(ErrorCode::invalid_argument, "unknown repro target '" + name + "'");
}

}  // namespace dment::cli
