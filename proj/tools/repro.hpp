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

#include <cstdint>
#include <string>
#include <vector>

#include "dment/dynamics.hpp"
#include "dment/measures.hpp"
#include "dment/scan.hpp"

namespace dment::cli {

struct ReproSettings {
  NegativityConvention convention = NegativityConvention::doubled;
  CouplingSites sites = CouplingSites::ab;
  unsigned jobs = 0;
  std::uint64_t seed = 42;
  double cross_tolerance = kDefaultCrossTolerance;
};

struct ReproData {
  std::string csv;
  std::size_t rows = 0;
  /// JSON object with the grid behind the CSV, copied into MANIFEST.json.
  std::string parameters_json;
};

const std::vector<std::string>& repro_target_names();

/// Throws invalid_argument for an unknown name.
ReproData run_repro_target(const std::string& name, const ReproSettings& settings);

}  // namespace dment::cli
