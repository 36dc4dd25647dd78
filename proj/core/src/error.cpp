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

#include "dment/error.hpp"

namespace dment {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::normalization_violation: return "NormalizationViolation";
    case ErrorCode::label_collision: return "LabelCollision";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::unknown_label: return "UnknownLabel";
    case ErrorCode::unknown_measure: return "UnknownMeasure";
    case ErrorCode::empty_grid: return "EmptyGrid";
    case ErrorCode::no_period_found: return "NoPeriodFound";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace dment
