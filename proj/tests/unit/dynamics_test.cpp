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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "dment/error.hpp"
#include "test_support.hpp"

namespace dment {
namespace {

using std::numbers::pi;

ComplexMatrix z_on(std::size_t position, std::size_t num_qubits) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t k = 0; k < num_qubits; ++k) {
    out = kron(out, k == position ? pauli_z() : ComplexMatrix::identity(2));
  }
  return out;
}

DensityMatrix initial(const PureState& system, const PureState& env) {
  return compose(to_density(system), to_density(env));
}

// Under A-B coupling the DM term rotates the (|010>, |100>) amplitudes by 2 theta
// and leaves |001> alone.
PureState rotated_w(double w0, double w1, double w2, double theta) {
  const double c = std::cos(2 * theta);
  const double s = std::sin(2 * theta);
  return w_state(w0, c * w1 + s * w2, -s * w1 + c * w2, Normalize::yes);
}

TEST(Dynamics, HamiltonianEntries) {
  const auto h = dm_hamiltonian(0.5);
  EXPECT_EQ(h(1, 2), Complex(0, 1.0));
  EXPECT_EQ(h(2, 1), Complex(0, -1.0));
  double others = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!((i == 1 && j == 2) || (i == 2 && j == 1))) others += std::abs(h(i, j));
  EXPECT_EQ(others, 0.0);
}

TEST(Dynamics, HamiltonianFromPaulis) {
  const double dz = 1.3;
  auto expected = kron(pauli_x(), pauli_y()) - kron(pauli_y(), pauli_x());
  expected *= dz;
  EXPECT_LT(max_abs_diff(dm_hamiltonian(dz), expected), 1e-15);
}

TEST(Dynamics, EmbedOnCd) {
  const auto h = dm_hamiltonian(1.0);
  EXPECT_EQ(embed_on_cd(h), kron(ComplexMatrix::identity(4), h));
  EXPECT_EQ(embed_two_qubit(h, 2, 3, 4), embed_on_cd(h));
  EXPECT_EQ(register_hamiltonian(1.0, CouplingSites::cd), embed_on_cd(h));
}

TEST(Dynamics, EmbedOnAb) {
  const auto h = dm_hamiltonian(0.7);
  EXPECT_EQ(embed_two_qubit(h, 0, 1, 4), kron(h, ComplexMatrix::identity(4)));
  EXPECT_EQ(register_hamiltonian(0.7, CouplingSites::ab), kron(h, ComplexMatrix::identity(4)));
}

TEST(Dynamics, EmbedReversedPairTransposesAntisymmetricTerm) {
  // Swapping the roles of the two qubits flips the sign of the DM term.
  const auto h = dm_hamiltonian(1.0);
  EXPECT_LT(max_abs_diff(embed_two_qubit(h, 1, 0, 2), -1.0 * h), 1e-15);
}

TEST(Dynamics, EmbedErrors) {
  EXPECT_THROW((void)embed_on_cd(ComplexMatrix::identity(2)), Error);
  EXPECT_THROW((void)embed_two_qubit(dm_hamiltonian(1), 1, 1, 4), Error);
  EXPECT_THROW((void)embed_two_qubit(dm_hamiltonian(1), 0, 4, 4), Error);
}

TEST(Dynamics, ParseCouplingSites) {
  EXPECT_EQ(parse_coupling_sites("ab"), CouplingSites::ab);
  EXPECT_EQ(parse_coupling_sites("cd"), CouplingSites::cd);
  EXPECT_THROW((void)parse_coupling_sites("bc"), Error);
  EXPECT_EQ(to_string(CouplingSites::cd), "cd");
}

TEST(Dynamics, ThetaIsProduct) {
  EXPECT_DOUBLE_EQ((DMCoupling{2.0, 0.25}).theta(), 0.5);
  EXPECT_DOUBLE_EQ(DMCoupling::from_theta(0.3).theta(), 0.3);
}

TEST(Dynamics, EvolveAtZeroIsIdentity) {
  auto rng = testing::make_rng(20);
  const auto rho0 = initial(testing::random_pure_state(rng, {'A', 'B', 'C'}), env_qubit(1.0, 0.0));
  for (const auto sites : {CouplingSites::ab, CouplingSites::cd}) {
    const auto rho = evolve(rho0, DMCoupling::from_theta(0.0, sites));
    EXPECT_LT(max_abs_diff(rho.matrix(), rho0.matrix()), 1e-15);
  }
}

TEST(Dynamics, EvolveMatchesTaylorOracle) {
  auto rng = testing::make_rng(21);
  for (const auto sites : {CouplingSites::ab, CouplingSites::cd}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto psi = testing::random_pure_state(rng, {'A', 'B', 'C', 'D'});
      const auto rho0 = to_density(psi);
      const double dz = 0.5 + rep;
      const double t = 0.3 * (rep + 1);
      const auto h = kron(kron(pauli_x(), pauli_y()) - kron(pauli_y(), pauli_x()), ComplexMatrix::identity(4));
      auto generator = sites == CouplingSites::ab
                           ? h
                           : kron(ComplexMatrix::identity(4),
                                  kron(pauli_x(), pauli_y()) - kron(pauli_y(), pauli_x()));
      generator *= Complex(0, -dz * t);
      const auto u = testing::taylor_expm(generator);
      const auto expected = u * rho0.matrix() * dagger(u);
      const auto rho = evolve(rho0, DMCoupling{dz, t, sites});
      EXPECT_LT(max_abs_diff(rho.matrix(), expected), 1e-10);
    }
  }
}

TEST(Dynamics, PropagatorAgreesWithEvolve) {
  auto rng = testing::make_rng(22);
  const auto rho0 = to_density(testing::random_pure_state(rng, {'A', 'B', 'C', 'D'}));
  const Propagator prop(1.7, CouplingSites::cd);
  for (const double t : {0.0, 0.4, 3.1, 12.0}) {
    const auto a = prop.evolve(rho0, t);
    const auto b = evolve(rho0, DMCoupling{1.7, t, CouplingSites::cd});
    EXPECT_LT(max_abs_diff(a.matrix(), b.matrix()), 1e-12);
    const auto u = prop.unitary(t);
    EXPECT_LT(max_abs_diff(dagger(u) * u, ComplexMatrix::identity(16)), 1e-12);
  }
}

TEST(Dynamics, EvolveNeedsFourQubits) {
  try {
    (void)evolve(to_density(w_state(1, 0, 0)), DMCoupling{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::dimension_mismatch);
  }
}

TEST(Dynamics, EvolvedStatesStayPhysical) {
  auto rng = testing::make_rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const auto psi = testing::random_pure_state(rng, {'A', 'B', 'C', 'D'});
    const auto rho = evolve(to_density(psi), DMCoupling::from_theta(0.5 * rep));
    const auto d = diagnose(rho.matrix());
    EXPECT_LT(d.hermiticity_error, 1e-10);
    EXPECT_LT(d.trace_error, 1e-10);
    EXPECT_GT(d.min_eigenvalue, -1e-10);
    EXPECT_NEAR(purity(rho), 1.0, 1e-12);
  }
}

TEST(Dynamics, WReducedStateMatchesAnalyticRotation) {
  auto rng = testing::make_rng(24);
  for (int rep = 0; rep < 20; ++rep) {
    const auto w = testing::random_w(rng);
    const double theta = 0.37 * rep;
    const auto rho = reduced_system_state(w_state(w[0], w[1], w[2]), env_qubit(1.0, 0.0),
                                          DMCoupling::from_theta(theta));
    const auto expected = to_density(rotated_w(w[0], w[1], w[2], theta));
    EXPECT_LT(max_abs_diff(rho.matrix(), expected.matrix()), 1e-12);
  }
}

TEST(Dynamics, GhzIsInvariantUnderAbCoupling) {
  const auto ghz = ghz_state(0.6, 0.8);
  const auto rho = reduced_system_state(ghz, env_qubit(Complex(0.6, 0.0), Complex(0.0, 0.8)),
                                        DMCoupling::from_theta(2.3));
  EXPECT_LT(max_abs_diff(rho.matrix(), to_density(ghz).matrix()), 1e-12);
}

TEST(Dynamics, TruePeriodIsPi) {
  auto rng = testing::make_rng(25);
  for (int rep = 0; rep < 10; ++rep) {
    const auto w = testing::random_w(rng);
    const double theta = 0.9 * rep + 0.1;
    const auto env = env_qubit(1.0, 0.0);
    const auto a = reduced_system_state(w_state(w[0], w[1], w[2]), env, DMCoupling::from_theta(theta));
    const auto b = reduced_system_state(w_state(w[0], w[1], w[2]), env, DMCoupling::from_theta(theta + pi));
    EXPECT_LT(max_abs_diff(a.matrix(), b.matrix()), 1e-10);
  }
}

TEST(Dynamics, HalfPiShiftIsPhaseFlipOnC) {
  // U(pi/2) = -Z (x) Z on the coupled pair, which on a W state acts like Z_C.
  auto rng = testing::make_rng(26);
  const auto zc = z_on(2, 3);
  for (int rep = 0; rep < 10; ++rep) {
    const auto w = testing::random_w(rng);
    const double theta = 0.7 * rep;
    const auto env = env_qubit(1.0, 0.0);
    const auto a = reduced_system_state(w_state(w[0], w[1], w[2]), env, DMCoupling::from_theta(theta));
    const auto b = reduced_system_state(w_state(w[0], w[1], w[2]), env, DMCoupling::from_theta(theta + pi / 2));
    EXPECT_LT(max_abs_diff(b.matrix(), zc * a.matrix() * zc), 1e-10);
  }
}

TEST(Dynamics, PartialTraceOfProduct) {
  const auto a = to_density(w_state(0.6, 0.8, 0.0));
  const auto d = to_density(env_qubit(Complex(0, 0.6), 0.8));
  const auto ad = compose(a, d);
  EXPECT_LT(max_abs_diff(partial_trace(ad, {'A', 'B', 'C'}).matrix(), a.matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(partial_trace(ad, {'D'}).matrix(), d.matrix()), 1e-15);
}

TEST(Dynamics, PartialTraceOrderFollowsKeep) {
  // |001> on (A,B,C): keeping (C, A) gives |10>.
  const auto rho = to_density(w_state(1, 0, 0));
  const auto ca = partial_trace(rho, {'C', 'A'});
  EXPECT_EQ(ca.labels(), (Labels{'C', 'A'}));
  EXPECT_NEAR(ca.matrix()(2, 2).real(), 1.0, 1e-15);
}

TEST(Dynamics, PartialTraceOfGhzPairIsClassical) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto ab = partial_trace(to_density(ghz_state(r, r)), {'A', 'B'});
  const double d[] = {0.5, 0, 0, 0.5};
  EXPECT_LT(max_abs_diff(ab.matrix(), ComplexMatrix::diagonal(d)), 1e-15);
}

TEST(Dynamics, PartialTraceErrors) {
  const auto rho = to_density(w_state(1, 0, 0));
  EXPECT_THROW((void)partial_trace(rho, {'D'}), Error);
  EXPECT_THROW((void)partial_trace(rho, {'A', 'A'}), Error);
  EXPECT_THROW((void)partial_trace(rho, std::span<const QubitLabel>{}), Error);
}

TEST(Dynamics, PartialTransposeIsInvolution) {
  auto rng = testing::make_rng(27);
  const DensityMatrix rho(testing::random_density(rng, 8), {'A', 'B', 'C'});
  for (const char q : {'A', 'B', 'C'}) {
    const DensityMatrix once(partial_transpose(rho, q), rho.labels(), DensityMatrix::Check::structure);
    EXPECT_LT(max_abs_diff(partial_transpose(once, q), rho.matrix()), 1e-15);
  }
}

TEST(Dynamics, PartialTransposeAgainstIndexOracle) {
  auto rng = testing::make_rng(28);
  const DensityMatrix rho(testing::random_density(rng, 4), {'A', 'B'});
  EXPECT_LT(max_abs_diff(partial_transpose(rho, 'A'), testing::partial_transpose_first(rho.matrix())), 1e-15);
}

TEST(Dynamics, PartialTransposeOfAllQubitsIsTranspose) {
  auto rng = testing::make_rng(29);
  const DensityMatrix rho(testing::random_density(rng, 4), {'A', 'B'});
  const DensityMatrix a(partial_transpose(rho, 'A'), rho.labels(), DensityMatrix::Check::structure);
  EXPECT_LT(max_abs_diff(partial_transpose(a, 'B'), conj(rho.matrix())), 1e-15);
}

TEST(Dynamics, PermuteQubits) {
  const auto rho = to_density(w_state(1, 0, 0));  // |001>
  const QubitLabel order[] = {'C', 'B', 'A'};
  const auto p = permute_qubits(rho, order);
  EXPECT_EQ(p.labels(), (Labels{'C', 'B', 'A'}));
  EXPECT_NEAR(p.matrix()(4, 4).real(), 1.0, 1e-15);
  const QubitLabel bad[] = {'A', 'B'};
  EXPECT_THROW((void)permute_qubits(rho, bad), Error);
}

}  // namespace
}  // namespace dment
