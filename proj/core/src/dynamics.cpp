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

#include "dment/dynamics.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "dment/error.hpp"

namespace dment {

namespace {

constexpr std::size_t kRegisterQubits = 4;

std::size_t bit(std::size_t index, std::size_t position, std::size_t num_qubits) {
  return (index >> (num_qubits - 1 - position)) & 1U;
}

}  // namespace

std::string_view to_string(CouplingSites sites) {
  return sites == CouplingSites::ab ? "ab" : "cd";
}

CouplingSites parse_coupling_sites(std::string_view text) {
  if (text == "ab") return CouplingSites::ab;
  if (text == "cd") return CouplingSites::cd;
  throw Error(ErrorCode::invalid_argument, "coupling must be 'ab' or 'cd', got '" + std::string(text) + "'");
}

ComplexMatrix dm_hamiltonian(double dz) {
  const auto x = pauli_x();
  const auto y = pauli_y();
  return Complex(dz) * (kron(x, y) - kron(y, x));
}

ComplexMatrix embed_two_qubit(const ComplexMatrix& h, std::size_t first, std::size_t second,
                              std::size_t num_qubits) {
  if (h.dim() != 4) {
    throw Error(ErrorCode::dimension_mismatch, "two-qubit operator must be 4x4");
  }
  if (first == second || first >= num_qubits || second >= num_qubits) {
    throw Error(ErrorCode::invalid_argument, "invalid qubit positions for embedding");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  const std::size_t mask = (std::size_t{1} << (num_qubits - 1 - first)) |
                           (std::size_t{1} << (num_qubits - 1 - second));
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t hi = 2 * bit(i, first, num_qubits) + bit(i, second, num_qubits);
    for (std::size_t j = 0; j < dim; ++j) {
      if ((i & ~mask) != (j & ~mask)) continue;
      const std::size_t hj = 2 * bit(j, first, num_qubits) + bit(j, second, num_qubits);
      out(i, j) = h(hi, hj);
    }
  }
  return out;
}

ComplexMatrix embed_on_cd(const ComplexMatrix& h_cd) {
  if (h_cd.dim() != 4) {
    throw Error(ErrorCode::dimension_mismatch, "embed_on_cd expects a 4x4 operator");
  }
  return kron(ComplexMatrix::identity(4), h_cd);
}

ComplexMatrix register_hamiltonian(double dz, CouplingSites sites) {
  const auto h = dm_hamiltonian(dz);
  return sites == CouplingSites::cd ? embed_on_cd(h) : embed_two_qubit(h, 0, 1, kRegisterQubits);
}

Propagator::Propagator(double dz, CouplingSites sites)
    : eig_(eig_hermitian(register_hamiltonian(dz, sites))) {}

ComplexMatrix Propagator::unitary(double t) const {
  const std::size_t n = eig_.eigenvectors.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, -eig_.eigenvalues[k] * t);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig_.eigenvectors(i, k) * phase;
      if (vik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig_.eigenvectors(j, k));
    }
  }
  return out;
}

DensityMatrix Propagator::evolve(const DensityMatrix& rho0, double t) const {
  if (rho0.num_qubits() != kRegisterQubits) {
    throw Error(ErrorCode::dimension_mismatch,
                "evolve expects the 4-qubit (A,B,C,D) register, got '" + to_string(rho0.labels()) + "'");
  }
  const auto u = unitary(t);
  return DensityMatrix(u * rho0.matrix() * dagger(u), rho0.labels(), DensityMatrix::Check::structure);
}

DensityMatrix evolve(const DensityMatrix& rho0, const DMCoupling& coupling) {
  if (rho0.num_qubits() != kRegisterQubits) {
    throw Error(ErrorCode::dimension_mismatch,
                "evolve expects the 4-qubit (A,B,C,D) register, got '" + to_string(rho0.labels()) + "'");
  }
  const auto u = matexp_hermitian(register_hamiltonian(coupling.dz, coupling.sites), coupling.t);
  return DensityMatrix(u * rho0.matrix() * dagger(u), rho0.labels(), DensityMatrix::Check::structure);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const QubitLabel> keep) {
  if (keep.empty()) {
    throw Error(ErrorCode::invalid_argument, "partial_trace needs at least one qubit to keep");
  }
  const std::size_t n = rho.num_qubits();
  std::vector<std::size_t> kept;
  kept.reserve(keep.size());
  for (const auto l : keep) kept.push_back(rho.position(l));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (kept[i] == kept[j]) throw Error(ErrorCode::label_collision, "qubit kept twice");
    }
  }
  std::vector<std::size_t> traced;
  for (std::size_t p = 0; p < n; ++p) {
    if (std::find(kept.begin(), kept.end(), p) == kept.end()) traced.push_back(p);
  }

  const std::size_t k = kept.size();
  const std::size_t out_dim = std::size_t{1} << k;
  const std::size_t env_dim = std::size_t{1} << traced.size();

  // Full-register index from (kept bits, traced bits).
  auto full_index = [&](std::size_t kept_idx, std::size_t env_idx) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((kept_idx >> (k - 1 - i)) & 1U) idx |= std::size_t{1} << (n - 1 - kept[i]);
    }
    for (std::size_t i = 0; i < traced.size(); ++i) {
      if ((env_idx >> (traced.size() - 1 - i)) & 1U) idx |= std::size_t{1} << (n - 1 - traced[i]);
    }
    return idx;
  };

  ComplexMatrix out(out_dim);
  for (std::size_t r = 0; r < out_dim; ++r) {
    for (std::size_t c = 0; c < out_dim; ++c) {
      Complex sum = 0.0;
      for (std::size_t e = 0; e < env_dim; ++e) sum += rho.matrix()(full_index(r, e), full_index(c, e));
      out(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(out), Labels(keep.begin(), keep.end()), DensityMatrix::Check::structure);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<QubitLabel> keep) {
  return partial_trace(rho, std::span<const QubitLabel>(keep.begin(), keep.size()));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, QubitLabel subsystem) {
  const std::size_t n = rho.num_qubits();
  const std::size_t mask = std::size_t{1} << (n - 1 - rho.position(subsystem));
  const std::size_t dim = rho.dim();
  ComplexMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      // Swap the subsystem bit between row and column index.
      const std::size_t r2 = (r & ~mask) | (c & mask);
      const std::size_t c2 = (c & ~mask) | (r & mask);
      out(r2, c2) = rho.matrix()(r, c);
    }
  }
  return out;
}

DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const QubitLabel> order) {
  if (order.size() != rho.num_qubits()) {
    throw Error(ErrorCode::dimension_mismatch, "permutation must list every qubit once");
  }
  return partial_trace(rho, order);
}

DensityMatrix reduced_system_state(const PureState& system, const PureState& environment,
                                   const DMCoupling& coupling) {
  const auto rho = evolve(compose(to_density(system), to_density(environment)), coupling);
  return partial_trace(rho, std::span<const QubitLabel>(system.labels));
}

}  // namespace dment
