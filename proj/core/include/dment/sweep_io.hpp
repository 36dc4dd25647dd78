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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dment/scan.hpp"

namespace dment {

/// Exact sweep CSV header, in column order.
inline constexpr std::string_view kSweepCsvHeader =
    "theta,w1,w2,g0,n_ab,n_ac,n_bc,n_a_bc,n_b_ac,n_c_ab,pi_a,pi_b,pi_c,three_pi,three_tangle,"
    "concurrence_ab,concurrence_ac,concurrence_bc";

/// Shortest decimal that parses back to the same double; locale independent.
std::string format_double(double v);

/// Header plus one line per row. Unused family fields and measures that were
/// not requested (or not available) are empty cells.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// Parses what write_sweep_csv produced. A column that is empty in every row
/// is treated as not requested. Throws invalid_argument on malformed input.
SweepResult read_sweep_csv(std::istream& in);

/// {"schema": 1, "family": ..., "convention": ..., "skipped": n, "rows": [...]}
std::string sweep_to_json(const SweepResult& result);

/// One report as a JSON object (schema 1); absent optionals are omitted.
std::string report_to_json(const EntanglementReport& report, const MeasureSet& measures);

struct Sidecar {
  std::vector<EsdInterval> esd;
  std::vector<CrossingPoint> crossings;
};

/// {"schema": 1, "esd_intervals": [...], "crossings": [...]}
std::string sidecar_to_json(const Sidecar& sidecar);

}  // namespace dment
