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

#include "dment/linalg.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "dment/error.hpp"
#include "test_support.hpp"

namespace dment {
namespace {

using testing::make_rng;
using testing::random_density;

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = testing::random_complex(rng).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = testing::random_complex(rng);
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

ComplexMatrix reconstruct(const EigenDecomposition& e) {
  return e.eigenvectors * ComplexMatrix::diagonal(e.eigenvalues) * dagger(e.eigenvectors);
}

TEST(Linalg, KronOfPaulis) {
  const auto zx = kron(pauli_z(), pauli_x());
  const ComplexMatrix expected{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}};
  EXPECT_EQ(zx, expected);
}

TEST(Linalg, KronDimensionsMultiply) {
  EXPECT_EQ(kron(ComplexMatrix::identity(4), pauli_y()).dim(), 8u);
}

TEST(Linalg, NonSquareInitializerThrows) {
  try {
    ComplexMatrix bad{{1, 2}, {3}};
    FAIL() << "expected dimension_mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::dimension_mismatch);
  }
}

TEST(Linalg, MismatchedAdditionThrows) {
  EXPECT_THROW(ComplexMatrix(2) + ComplexMatrix(4), Error);
}

TEST(Linalg, DaggerAndConj) {
  const ComplexMatrix a{{{1, 2}, {3, 4}}, {{5, 6}, {7, 8}}};
  const auto d = dagger(a);
  EXPECT_EQ(d(0, 1), Complex(5, -6));
  EXPECT_EQ(d(1, 0), Complex(3, -4));
  EXPECT_EQ(conj(a)(0, 0), Complex(1, -2));
  EXPECT_DOUBLE_EQ(hermiticity_error(a + d), 0.0);
}

TEST(Linalg, PauliAlgebra) {
  const Complex i(0, 1);
  EXPECT_LT(max_abs_diff(pauli_x() * pauli_y(), i * pauli_z()), 1e-15);
  EXPECT_LT(max_abs_diff(pauli_y() * pauli_y(), ComplexMatrix::identity(2)), 1e-15);
}

TEST(Linalg, EigenOfPauliX) {
  const auto e = eig_hermitian(pauli_x());
  ASSERT_EQ(e.eigenvalues.size(), 2u);
  EXPECT_NEAR(e.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], 1.0, 1e-14);
  EXPECT_LT(max_abs_diff(reconstruct(e), pauli_x()), 1e-14);
}

TEST(Linalg, DiagonalInputIsReturnedSorted) {
  const double d[] = {3.0, -1.0, 2.0, 0.5};
  const auto vals = eigvals_hermitian(ComplexMatrix::diagonal(d));
  EXPECT_EQ(vals, (std::vector<double>{-1.0, 0.5, 2.0, 3.0}));
}

TEST(Linalg, ZeroMatrix) {
  const auto e = eig_hermitian(ComplexMatrix(4));
  for (const double v : e.eigenvalues) EXPECT_EQ(v, 0.0);
  EXPECT_LT(max_abs_diff(e.eigenvectors, ComplexMatrix::identity(4)), 1e-15);
}

TEST(Linalg, DegenerateSpectrum) {
  // Projector onto a 2-dimensional subspace of C^4.
  auto rng = make_rng(1);
  const auto u = testing::random_unit_vector(rng, 4);
  auto v = testing::random_unit_vector(rng, 4);
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(u[i]) * v[i];
  double norm2 = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    v[i] -= overlap * u[i];
    norm2 += std::norm(v[i]);
  }
  for (auto& x : v) x /= std::sqrt(norm2);
  const auto p = ComplexMatrix::outer(u) + ComplexMatrix::outer(v);
  const auto e = eig_hermitian(p);
  EXPECT_NEAR(e.eigenvalues[0], 0.0, 1e-13);
  EXPECT_NEAR(e.eigenvalues[1], 0.0, 1e-13);
  EXPECT_NEAR(e.eigenvalues[2], 1.0, 1e-13);
  EXPECT_NEAR(e.eigenvalues[3], 1.0, 1e-13);
  EXPECT_LT(max_abs_diff(reconstruct(e), p), 1e-12);
}

TEST(Linalg, NonHermitianInputThrows) {
  const ComplexMatrix a{{1, 2}, {0, 1}};
  try {
    (void)eig_hermitian(a);
    FAIL() << "expected not_hermitian";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_hermitian);
  }
}

TEST(Linalg, SmallAsymmetryBelowToleranceIsAccepted) {
  ComplexMatrix a = pauli_z();
  a(0, 1) = Complex(1e-12, 0);
  EXPECT_NO_THROW((void)eig_hermitian(a));
}

TEST(Linalg, DeterministicOutput) {
  auto rng = make_rng(2);
  const auto h = random_hermitian(rng, 16);
  const auto a = eig_hermitian(h);
  const auto b = eig_hermitian(h);
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.eigenvectors, b.eigenvectors);
}

TEST(Linalg, RandomHermitianReconstructionAndOrthonormality) {
  auto rng = make_rng(3);
  for (const std::size_t n : {2u, 4u, 8u, 16u}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto h = random_hermitian(rng, n);
      const auto e = eig_hermitian(h);
      EXPECT_TRUE(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
      EXPECT_LT(max_abs_diff(reconstruct(e), h), 1e-10) << "n=" << n;
      EXPECT_LT(max_abs_diff(dagger(e.eigenvectors) * e.eigenvectors, ComplexMatrix::identity(n)), 1e-12);
      const auto vals = eigvals_hermitian(h);
      for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(vals[k], e.eigenvalues[k], 1e-12);
    }
  }
}

TEST(Linalg, EigenvaluesMatchCharacteristicPolynomialOracle) {
  auto rng = make_rng(4);
  for (int rep = 0; rep < 50; ++rep) {
    const auto rho = random_density(rng, 4);
    const auto ours = eigvals_hermitian(rho);
    const auto oracle = testing::charpoly_eigenvalues(rho);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(ours[k], oracle[k], 1e-10);
  }
}

TEST(Linalg, MatexpMatchesTaylorOracle) {
  auto rng = make_rng(5);
  for (const std::size_t n : {2u, 4u, 16u}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto h = random_hermitian(rng, n);
      const double t = 0.7 * (rep + 1);
      auto minus_iht = h;
      minus_iht *= Complex(0, -t);
      EXPECT_LT(max_abs_diff(matexp_hermitian(h, t), testing::taylor_expm(minus_iht)), 1e-10);
    }
  }
}

TEST(Linalg, MatexpIsUnitary) {
  auto rng = make_rng(6);
  const auto h = random_hermitian(rng, 16);
  const auto u = matexp_hermitian(h, 3.3);
  EXPECT_LT(max_abs_diff(dagger(u) * u, ComplexMatrix::identity(16)), 1e-12);
}

TEST(Linalg, MatexpOfZeroIsIdentity) {
  EXPECT_LT(max_abs_diff(matexp_hermitian(ComplexMatrix(4), 5.0), ComplexMatrix::identity(4)), 1e-15);
}

TEST(Linalg, MatexpPauliRotation) {
  // exp(-i t X) = cos t I - i sin t X
  const double t = 0.37;
  auto expected = ComplexMatrix::identity(2);
  expected *= std::cos(t);
  auto x = pauli_x();
  x *= Complex(0, -std::sin(t));
  expected += x;
  EXPECT_LT(max_abs_diff(matexp_hermitian(pauli_x(), t), expected), 1e-15);
}

}  // namespace
}  // namespace dment
