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

#include "dment/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dment/error.hpp"

namespace dment {

namespace {

void check_finite(std::span<const Complex> amps, const char* what) {
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(ErrorCode::invalid_argument, std::string(what) + ": non-finite amplitude");
    }
  }
}

void normalize_or_check(std::vector<Complex>& amps, Normalize normalize, const char* what) {
  check_finite(amps, what);
  double norm2 = 0.0;
  for (const auto& a : amps) norm2 += std::norm(a);
  if (normalize == Normalize::yes) {
    if (norm2 == 0.0) {
      throw Error(ErrorCode::normalization_violation, std::string(what) + ": zero vector");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
    return;
  }
  if (std::abs(norm2 - 1.0) > kConstructionTolerance) {
    throw Error(ErrorCode::normalization_violation,
                std::string(what) + ": squared norm " + std::to_string(norm2) +
                    " differs from 1 (pass Normalize::yes / --normalize to rescale)");
  }
}

void check_labels(const Labels& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) {
        throw Error(ErrorCode::label_collision, std::string("duplicate qubit label ") + labels[i]);
      }
    }
  }
}

}  // namespace

std::string to_string(const Labels& labels) { return std::string(labels.begin(), labels.end()); }

PureState w_state(double w0, double w1, double w2, Normalize normalize) {
  std::vector<Complex> amps(8);
  amps[0b001] = w0;
  amps[0b010] = w1;
  amps[0b100] = w2;
  normalize_or_check(amps, normalize, "w_state");
  return {{'A', 'B', 'C'}, std::move(amps)};
}

PureState ghz_state(double g0, double g1, Normalize normalize) {
  std::vector<Complex> amps(8);
  amps[0b000] = g0;
  amps[0b111] = g1;
  normalize_or_check(amps, normalize, "ghz_state");
  return {{'A', 'B', 'C'}, std::move(amps)};
}

PureState env_qubit(Complex c0, Complex c1, Normalize normalize) {
  std::vector<Complex> amps{c0, c1};
  normalize_or_check(amps, normalize, "env_qubit");
  return {{'D'}, std::move(amps)};
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Labels labels, Check check)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() > 16 || matrix_.dim() != (std::size_t{1} << labels_.size())) {
    throw Error(ErrorCode::dimension_mismatch,
                "density matrix of dim " + std::to_string(matrix_.dim()) + " with labels '" +
                    to_string(labels_) + "'");
  }
  check_labels(labels_);
  if (check == Check::structure) return;
  if (!matrix_.is_finite()) {
    throw Error(ErrorCode::invalid_argument, "density matrix has non-finite entries");
  }
  const auto d = diagnose(matrix_);
  if (!d.ok()) {
    throw Error(ErrorCode::invalid_argument,
                "not a density matrix: hermiticity error " + std::to_string(d.hermiticity_error) +
                    ", trace error " + std::to_string(d.trace_error) + ", min eigenvalue " +
                    std::to_string(d.min_eigenvalue));
  }
}

std::size_t DensityMatrix::position(QubitLabel label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw Error(ErrorCode::unknown_label,
                std::string("qubit ") + label + " not in register '" + to_string(labels_) + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

DensityDiagnostics diagnose(const ComplexMatrix& rho) {
  DensityDiagnostics d{};
  d.hermiticity_error = hermiticity_error(rho);
  d.trace_error = std::abs(rho.trace() - 1.0);
  if (d.hermiticity_error > kHermitianTolerance) {
    d.min_eigenvalue = -std::numeric_limits<double>::infinity();
    return d;
  }
  d.min_eigenvalue = eigvals_hermitian(rho).front();
  return d;
}

DensityMatrix to_density(const PureState& s) {
  if (s.amplitudes.size() != (std::size_t{1} << s.num_qubits())) {
    throw Error(ErrorCode::dimension_mismatch, "pure state amplitude count");
  }
  return DensityMatrix(ComplexMatrix::outer(s.amplitudes), s.labels, DensityMatrix::Check::structure);
}

DensityMatrix compose(const DensityMatrix& s, const DensityMatrix& e) {
  Labels labels = s.labels();
  for (const auto l : e.labels()) {
    if (std::find(labels.begin(), labels.end(), l) != labels.end()) {
      throw Error(ErrorCode::label_collision, std::string("qubit ") + l + " on both sides");
    }
    labels.push_back(l);
  }
  return DensityMatrix(kron(s.matrix(), e.matrix()), std::move(labels),
                       DensityMatrix::Check::structure);
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  double s = 0.0;
  for (const auto& z : rho.matrix().data()) s += std::norm(z);
  return s;
}

std::optional<PureState> as_pure_state(const DensityMatrix& rho, double tolerance) {
  if (std::abs(purity(rho) - 1.0) > tolerance) return std::nullopt;
  const auto eig = eig_hermitian(rho.matrix());
  const std::size_t n = rho.dim();
  const std::size_t top = n - 1;
  std::vector<Complex> amps(n);
  std::size_t largest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    amps[i] = eig.eigenvectors(i, top);
    if (std::abs(amps[i]) > std::abs(amps[largest])) largest = i;
  }
  const Complex phase = std::abs(amps[largest]) > 0.0 ? std::conj(amps[largest]) / std::abs(amps[largest])
                                                     : Complex(1.0);
  for (auto& a : amps) a *= phase;
  return PureState{rho.labels(), std::move(amps)};
}

}  // namespace dment
