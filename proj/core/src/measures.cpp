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

#include "dment/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "dment/dynamics.hpp"
#include "dment/error.hpp"

namespace dment {

namespace {

void require_qubits(const DensityMatrix& rho, std::size_t n, const char* what) {
  if (rho.num_qubits() != n) {
    throw Error(ErrorCode::dimension_mismatch, std::string(what) + " expects a " + std::to_string(n) +
                                                   "-qubit state, got '" + to_string(rho.labels()) + "'");
  }
}

struct Negativities {
  double n_ab, n_ac, n_bc, n_a_bc, n_b_ac, n_c_ab;
};

Negativities all_negativities(const DensityMatrix& rho, NegativityConvention convention) {
  require_qubits(rho, 3, "three-qubit measure");
  const auto& l = rho.labels();
  auto pair = [&](QubitLabel x, QubitLabel y) {
    return negativity(partial_trace(rho, {x, y}), x, convention);
  };
  return {pair(l[0], l[1]),
          pair(l[0], l[2]),
          pair(l[1], l[2]),
          negativity(rho, l[0], convention),
          negativity(rho, l[1], convention),
          negativity(rho, l[2], convention)};
}

// Principal square root of a positive semidefinite matrix; eigenvalues in
// [-1e-10, 0) from roundoff are floored to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const auto eig = eig_hermitian(m);
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = std::sqrt(std::max(0.0, eig.eigenvalues[k]));
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.eigenvectors(i, k) * s;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.eigenvectors(j, k));
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(NegativityConvention c) {
  return c == NegativityConvention::doubled ? "doubled" : "raw";
}

NegativityConvention parse_negativity_convention(std::string_view text) {
  if (text == "doubled") return NegativityConvention::doubled;
  if (text == "raw") return NegativityConvention::raw;
  throw Error(ErrorCode::invalid_argument,
              "negativity convention must be 'doubled' or 'raw', got '" + std::string(text) + "'");
}

double negativity_from_spectrum(std::span<const double> eigenvalues, NegativityConvention convention) {
  double sum = 0.0;
  for (const double ev : eigenvalues) sum += std::max(0.0, -ev);
  return convention == NegativityConvention::doubled ? 2.0 * sum : sum;
}

double negativity(const DensityMatrix& rho, QubitLabel subsystem, NegativityConvention convention) {
  const auto spectrum = eigvals_hermitian(partial_transpose(rho, subsystem));
  return negativity_from_spectrum(spectrum, convention);
}

double residual_pi(const DensityMatrix& rho, QubitLabel nodal, NegativityConvention convention) {
  require_qubits(rho, 3, "residual_pi");
  const std::size_t pos = rho.position(nodal);
  std::array<QubitLabel, 2> others{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != pos) others[k++] = rho.labels()[i];
  }
  const double whole = negativity(rho, nodal, convention);
  const double first = negativity(partial_trace(rho, {nodal, others[0]}), nodal, convention);
  const double second = negativity(partial_trace(rho, {nodal, others[1]}), nodal, convention);
  return whole * whole - first * first - second * second;
}

double three_pi(const DensityMatrix& rho, NegativityConvention convention) {
  const auto r = full_report(rho, {convention, false, false});
  return r.three_pi;
}

double three_pi_w_closed_form(double w0, double w1, double w2) {
  const double norm2 = w0 * w0 + w1 * w1 + w2 * w2;
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kConstructionTolerance) {
    throw Error(ErrorCode::normalization_violation,
                "three_pi_w_closed_form: squared norm " + std::to_string(norm2));
  }
  const double a = w0 * w0;
  const double b = w1 * w1;
  const double c = w2 * w2;
  return 4.0 / 3.0 *
         (c * std::sqrt(c * c + 4.0 * b * a) + b * std::sqrt(b * b + 4.0 * c * a) +
          a * std::sqrt(a * a + 4.0 * c * b) - c * c - b * b - a * a);
}

double concurrence(const DensityMatrix& rho) {
  require_qubits(rho, 2, "concurrence");
  const auto yy = kron(pauli_y(), pauli_y());
  const auto flipped = yy * conj(rho.matrix()) * yy;
  // sqrt(rho) rho~ sqrt(rho) is Hermitian and shares its spectrum with rho rho~.
  const auto root = psd_sqrt(rho.matrix());
  auto r = root * flipped * root;
  // Remove roundoff asymmetry before the Hermitian solve.
  r = Complex(0.5) * (r + dagger(r));
  auto spectrum = eigvals_hermitian(r);
  std::array<double, 4> lambda{};
  for (std::size_t i = 0; i < 4; ++i) lambda[i] = std::sqrt(std::max(0.0, spectrum[i]));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double three_tangle(const PureState& psi) {
  if (psi.num_qubits() != 3 || psi.amplitudes.size() != 8) {
    throw Error(ErrorCode::dimension_mismatch, "three_tangle expects a pure three-qubit state");
  }
  const auto& x = psi.amplitudes;
  const Complex x000 = x[0], x001 = x[1], x010 = x[2], x011 = x[3];
  const Complex x100 = x[4], x101 = x[5], x110 = x[6], x111 = x[7];

  const Complex d1 = x000 * x000 * x111 * x111 + x001 * x001 * x110 * x110 +
                     x010 * x010 * x101 * x101 + x100 * x100 * x011 * x011;
  const Complex d2 = x000 * x111 * x011 * x100 + x000 * x111 * x101 * x010 +
                     x000 * x111 * x110 * x001 + x011 * x100 * x101 * x010 +
                     x011 * x100 * x110 * x001 + x101 * x010 * x110 * x001;
  const Complex d3 = x000 * x110 * x101 * x011 + x111 * x001 * x010 * x100;
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

EntanglementReport full_report(const DensityMatrix& rho, const ReportOptions& options,
                               const std::optional<PureState>& psi_if_pure) {
  const auto n = all_negativities(rho, options.convention);
  EntanglementReport r;
  r.n_ab = n.n_ab;
  r.n_ac = n.n_ac;
  r.n_bc = n.n_bc;
  r.n_a_bc = n.n_a_bc;
  r.n_b_ac = n.n_b_ac;
  r.n_c_ab = n.n_c_ab;
  r.pi_a = r.n_a_bc * r.n_a_bc - r.n_ab * r.n_ab - r.n_ac * r.n_ac;
  r.pi_b = r.n_b_ac * r.n_b_ac - r.n_ab * r.n_ab - r.n_bc * r.n_bc;
  r.pi_c = r.n_c_ab * r.n_c_ab - r.n_ac * r.n_ac - r.n_bc * r.n_bc;
  r.three_pi = (r.pi_a + r.pi_b + r.pi_c) / 3.0;

  if (options.include_concurrence) {
    const auto& l = rho.labels();
    r.concurrence_ab = concurrence(partial_trace(rho, {l[0], l[1]}));
    r.concurrence_ac = concurrence(partial_trace(rho, {l[0], l[2]}));
    r.concurrence_bc = concurrence(partial_trace(rho, {l[1], l[2]}));
  }
  if (options.include_tangle) {
    if (psi_if_pure) {
      r.three_tangle = three_tangle(*psi_if_pure);
    } else if (const auto psi = as_pure_state(rho)) {
      r.three_tangle = three_tangle(*psi);
    }
  }
  return r;
}

}  // namespace dment
