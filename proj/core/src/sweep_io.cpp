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

#include "dment/sweep_io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "dment/error.hpp"

namespace dment {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kParamColumns = 4;  // theta, w1, w2, g0

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::optional<double> parse_cell(std::string_view cell, std::size_t line_no) {
  if (cell.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw Error(ErrorCode::invalid_argument,
                "line " + std::to_string(line_no) + ": bad number '" + std::string(cell) + "'");
  }
  return v;
}

void set_measure(EntanglementReport& r, Measure m, double v) {
  switch (m) {
    case Measure::n_ab: r.n_ab = v; return;
    case Measure::n_ac: r.n_ac = v; return;
    case Measure::n_bc: r.n_bc = v; return;
    case Measure::n_a_bc: r.n_a_bc = v; return;
    case Measure::n_b_ac: r.n_b_ac = v; return;
    case Measure::n_c_ab: r.n_c_ab = v; return;
    case Measure::pi_a: r.pi_a = v; return;
    case Measure::pi_b: r.pi_b = v; return;
    case Measure::pi_c: r.pi_c = v; return;
    case Measure::three_pi: r.three_pi = v; return;
    case Measure::three_tangle: r.three_tangle = v; return;
    case Measure::concurrence_ab: r.concurrence_ab = v; return;
    case Measure::concurrence_ac: r.concurrence_ac = v; return;
    case Measure::concurrence_bc: r.concurrence_bc = v; return;
  }
}

ordered_json report_json(const EntanglementReport& report, const MeasureSet& measures) {
  ordered_json j = ordered_json::object();
  for (const auto m : all_measures()) {
    if (!measures.contains(m)) continue;
    if (const auto v = value_of(report, m)) j[std::string(to_string(m))] = *v;
  }
  return j;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw Error(ErrorCode::invalid_argument, "unprintable double");
  return std::string(buf.data(), ptr);
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << kSweepCsvHeader << '\n';
  auto cell = [&](const std::optional<double>& v) {
    if (v) out << format_double(*v);
  };
  for (const auto& row : result.rows) {
    out << format_double(row.theta) << ',';
    cell(row.w1);
    out << ',';
    cell(row.w2);
    out << ',';
    cell(row.g0);
    for (const auto m : all_measures()) {
      out << ',';
      if (result.measures.contains(m)) cell(value_of(row.report, m));
    }
    out << '\n';
  }
}

SweepResult read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::invalid_argument, "empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSweepCsvHeader) throw Error(ErrorCode::invalid_argument, "unexpected CSV header");

  SweepResult result;
  std::array<bool, kMeasureCount> seen{};
  bool any_g0 = false;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != kParamColumns + kMeasureCount) {
      throw Error(ErrorCode::invalid_argument, "line " + std::to_string(line_no) + ": expected " +
                                                   std::to_string(kParamColumns + kMeasureCount) +
                                                   " cells, got " + std::to_string(cells.size()));
    }
    SweepRow row;
    const auto theta = parse_cell(cells[0], line_no);
    if (!theta) throw Error(ErrorCode::invalid_argument, "line " + std::to_string(line_no) + ": theta missing");
    row.theta = *theta;
    row.w1 = parse_cell(cells[1], line_no);
    row.w2 = parse_cell(cells[2], line_no);
    row.g0 = parse_cell(cells[3], line_no);
    any_g0 = any_g0 || row.g0.has_value();
    for (std::size_t k = 0; k < kMeasureCount; ++k) {
      if (const auto v = parse_cell(cells[kParamColumns + k], line_no)) {
        set_measure(row.report, all_measures()[k], *v);
        seen[k] = true;
      }
    }
    result.rows.push_back(std::move(row));
  }
  result.family = any_g0 ? StateFamily::ghz : StateFamily::w;
  result.measures = MeasureSet{};
  for (std::size_t k = 0; k < kMeasureCount; ++k) {
    if (seen[k]) result.measures.insert(all_measures()[k]);
  }
  return result;
}

std::string sweep_to_json(const SweepResult& result) {
  ordered_json j;
  j["schema"] = 1;
  j["family"] = std::string(to_string(result.family));
  j["convention"] = std::string(to_string(result.convention));
  j["skipped"] = result.skipped;
  j["rows"] = ordered_json::array();
  for (const auto& row : result.rows) {
    ordered_json r;
    r["theta"] = row.theta;
    if (row.w1) r["w1"] = *row.w1;
    if (row.w2) r["w2"] = *row.w2;
    if (row.g0) r["g0"] = *row.g0;
    r["measures"] = report_json(row.report, result.measures);
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2);
}

std::string report_to_json(const EntanglementReport& report, const MeasureSet& measures) {
  ordered_json j;
  j["schema"] = 1;
  j["report"] = report_json(report, measures);
  return j.dump(2);
}

std::string sidecar_to_json(const Sidecar& sidecar) {
  ordered_json j;
  j["schema"] = 1;
  j["esd_intervals"] = ordered_json::array();
  for (const auto& e : sidecar.esd) {
    ordered_json ctx = ordered_json::object();
    for (const auto& [name, value] : e.context) ctx[name] = value;
    j["esd_intervals"].push_back({{"measure", e.measure},
                                  {"parameter", e.parameter},
                                  {"lo", e.lo},
                                  {"hi", e.hi},
                                  {"boundary", e.boundary},
                                  {"context", std::move(ctx)}});
  }
  j["crossings"] = ordered_json::array();
  for (const auto& c : sidecar.crossings) {
    j["crossings"].push_back({{"theta", c.theta},
                              {"w1", c.w1},
                              {"w2", c.w2},
                              {"n_ab", c.n_ab},
                              {"n_ac", c.n_ac},
                              {"n_bc", c.n_bc},
                              {"common_value", c.common_value},
                              {"spread", c.spread}});
  }
  return j.dump(2);
}

}  // namespace dment
