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

#include <span>
#include <string_view>

#include "dment/linalg.hpp"
#include "dment/states.hpp"

namespace dment {

/// Which pair of register qubits carries the DM term.
///
/// `ab` couples A and B of the (A, B, C, D) register and reproduces the
/// symmetric-W reference table; the environment qubit then only contributes
/// through its norm. `cd` couples C to the environment qubit D.
enum class CouplingSites { ab, cd };

std::string_view to_string(CouplingSites sites);
CouplingSites parse_coupling_sites(std::string_view text);

struct DMCoupling {
  double dz = 1.0;
  double t = 0.0;
  CouplingSites sites = CouplingSites::ab;

  /// Dimensionless sweep parameter Dt.
  double theta() const noexcept { return dz * t; }

  static DMCoupling from_theta(double theta, CouplingSites sites = CouplingSites::ab) {
    return {1.0, theta, sites};
  }
};

/// D_z (sigma^x (x) sigma^y - sigma^y (x) sigma^x) on two qubits.
/// Nonzero entries: (1,2) = 2i dz, (2,1) = -2i dz.
ComplexMatrix dm_hamiltonian(double dz);

/// I_A (x) I_B (x) h_cd on the (A, B, C, D) register.
ComplexMatrix embed_on_cd(const ComplexMatrix& h_cd);

/// Lifts a two-qubit operator onto positions (first, second) of an
/// n-qubit register. `first` takes the high bit of h's index.
ComplexMatrix embed_two_qubit(const ComplexMatrix& h, std::size_t first, std::size_t second,
                              std::size_t num_qubits);

/// Full 16x16 DM Hamiltonian on the (A, B, C, D) register.
ComplexMatrix register_hamiltonian(double dz, CouplingSites sites);

/// Diagonalizes the register Hamiltonian once so that U(t) for many t costs
/// one reconstruction each.
class Propagator {
 public:
  explicit Propagator(double dz = 1.0, CouplingSites sites = CouplingSites::ab);

  ComplexMatrix unitary(double t) const;
  DensityMatrix evolve(const DensityMatrix& rho0, double t) const;

 private:
  EigenDecomposition eig_;
};

/// rho(t) = U rho0 U^dagger with U = exp(-i H t) on the (A, B, C, D)
/// register. Throws dimension_mismatch unless rho0 has four qubits.
DensityMatrix evolve(const DensityMatrix& rho0, const DMCoupling& coupling);

/// Reduced density matrix over `keep`, in the order given.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const QubitLabel> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<QubitLabel> keep);

/// Transposes the indices belonging to `subsystem`.
ComplexMatrix partial_transpose(const DensityMatrix& rho, QubitLabel subsystem);

/// Reorders the register so that qubit `order[k]` lands at position k.
DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const QubitLabel> order);

/// Composes system (x) environment, evolves, and traces out the environment.
DensityMatrix reduced_system_state(const PureState& system, const PureState& environment,
                                   const DMCoupling& coupling);

}  // namespace dment
