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
#include <string>
#include <vector>

#include "dment/linalg.hpp"

namespace dment {

/// Single-character qubit name ('A', 'B', 'C', 'D').
using QubitLabel = char;

/// Register labels in significance order: labels[0] is the most significant
/// bit of a basis index.
using Labels = std::vector<QubitLabel>;

std::string to_string(const Labels& labels);

struct PureState {
  Labels labels;
  std::vector<Complex> amplitudes;

  std::size_t num_qubits() const noexcept { return labels.size(); }
};

inline constexpr double kConstructionTolerance = 1e-9;
inline constexpr double kStateTolerance = 1e-12;
inline constexpr double kPositivityFloor = -1e-10;

enum class Normalize { no, yes };

/// w0|001> + w1|010> + w2|100> over (A, B, C).
///
/// Without Normalize::yes the squared norm must be 1 within 1e-9; decimals
/// such as 0.577 for 1/sqrt(3) are rejected rather than silently rescaled.
PureState w_state(double w0, double w1, double w2, Normalize normalize = Normalize::no);

/// g0|000> + g1|111> over (A, B, C).
PureState ghz_state(double g0, double g1, Normalize normalize = Normalize::no);

/// c0|0> + c1|1> on the environment qubit D.
PureState env_qubit(Complex c0, Complex c1, Normalize normalize = Normalize::no);

class DensityMatrix {
 public:
  enum class Check { full, structure };

  /// Validates dimension against labels, then (for Check::full) Hermiticity,
  /// unit trace and positivity. Throws dimension_mismatch,
  /// label_collision or invalid_argument.
  DensityMatrix(ComplexMatrix matrix, Labels labels, Check check = Check::full);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Labels& labels() const noexcept { return labels_; }
  std::size_t num_qubits() const noexcept { return labels_.size(); }
  std::size_t dim() const noexcept { return matrix_.dim(); }

  /// Register position of `label`; throws unknown_label.
  std::size_t position(QubitLabel label) const;

 private:
  ComplexMatrix matrix_;
  Labels labels_;
};

struct DensityDiagnostics {
  double hermiticity_error;
  double trace_error;
  double min_eigenvalue;

  bool ok() const {
    return hermiticity_error <= kStateTolerance && trace_error <= kStateTolerance &&
           min_eigenvalue >= kPositivityFloor;
  }
};

DensityDiagnostics diagnose(const ComplexMatrix& rho);

DensityMatrix to_density(const PureState& s);

/// rho_s (x) rho_e with labels concatenated; throws label_collision.
DensityMatrix compose(const DensityMatrix& s, const DensityMatrix& e);

double purity(const DensityMatrix& rho);

/// Recovers |psi> from a rank-one density matrix (purity within `tolerance`
/// of 1). The global phase makes the largest amplitude real and positive.
std::optional<PureState> as_pure_state(const DensityMatrix& rho, double tolerance = 1e-10);

}  // namespace dment
