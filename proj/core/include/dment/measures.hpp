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

#include <optional>
#include <span>
#include <string_view>

#include "dment/states.hpp"

namespace dment {

/// `doubled`: N = ||rho^T||_1 - 1 = 2 * sum |negative eigenvalues|.
/// `raw`: sum |negative eigenvalues|.
///
/// Only the doubled form gives three_pi = 1 for the balanced GHZ state and
/// 4(sqrt 5 - 1)/9 for the symmetric W state, so it is the default.
enum class NegativityConvention { doubled, raw };

std::string_view to_string(NegativityConvention c);
NegativityConvention parse_negativity_convention(std::string_view text);

double negativity_from_spectrum(std::span<const double> eigenvalues,
                                NegativityConvention convention = NegativityConvention::doubled);

/// Negativity of the bipartition `subsystem` | rest.
double negativity(const DensityMatrix& rho, QubitLabel subsystem,
                  NegativityConvention convention = NegativityConvention::doubled);

/// pi_X = N_{X|rest}^2 - N_{XY}^2 - N_{XZ}^2 for a three-qubit state. Can be
/// negative for mixed states.
double residual_pi(const DensityMatrix& rho, QubitLabel nodal,
                   NegativityConvention convention = NegativityConvention::doubled);

/// Average of the three residual entanglements.
double three_pi(const DensityMatrix& rho,
                NegativityConvention convention = NegativityConvention::doubled);

/// Closed-form three-pi of w0|001> + w1|010> + w2|100> (doubled convention).
/// Throws normalization_violation when w0^2 + w1^2 + w2^2 != 1 within 1e-9.
double three_pi_w_closed_form(double w0, double w1, double w2);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

/// Three-tangle 4|d1 - 2 d2 + 4 d3| of a pure three-qubit state.
double three_tangle(const PureState& psi);

struct EntanglementReport {
  double n_ab = 0.0;
  double n_ac = 0.0;
  double n_bc = 0.0;
  double n_a_bc = 0.0;
  double n_b_ac = 0.0;
  double n_c_ab = 0.0;
  double pi_a = 0.0;
  double pi_b = 0.0;
  double pi_c = 0.0;
  double three_pi = 0.0;
  std::optional<double> three_tangle;
  std::optional<double> concurrence_ab;
  std::optional<double> concurrence_ac;
  std::optional<double> concurrence_bc;
};

struct ReportOptions {
  NegativityConvention convention = NegativityConvention::doubled;
  bool include_concurrence = true;
  bool include_tangle = true;
};

/// Fills every field from the operations above. Qubits are taken in register
/// order, so "a", "b", "c" refer to rho.labels()[0..2]. The tangle needs a
/// pure state: it comes from `psi_if_pure` when given, otherwise from rho
/// when rho is rank one, and stays empty for mixed input.
EntanglementReport full_report(const DensityMatrix& rho, const ReportOptions& options = {},
                               const std::optional<PureState>& psi_if_pure = std::nullopt);

}  // namespace dment
