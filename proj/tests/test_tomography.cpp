// Copyright 2026 The qtetra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qtetra/reference_data.hpp"
#include "qtetra/tomography.hpp"

namespace qtetra {
namespace {

StateVector random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(16);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  return StateVector(4, v).normalized();
}

DensityMatrix random_mixed(std::mt19937_64& rng) {
  CMatrix m = CMatrix::Zero(16, 16);
  for (int k = 0; k < 3; ++k) {
    const StateVector s = random_state(rng);
    m += (k + 1.0) / 6.0 * s.amplitudes() * s.amplitudes().adjoint();
  }
  return DensityMatrix(m);
}

TEST(Tomography, ThermalState) {
  NMRParams p;
  p.epsilon = 0.0;
  EXPECT_LT((thermal_state(p).entries() - CMatrix::Identity(16, 16) / 16.0).norm(), 1e-15);
  p.epsilon = 1e-5;
  const DensityMatrix t = thermal_state(p);
  // Sum of sigma_z eigenvalues on |0000> is +4, on |1111> is -4.
  const double e = p.epsilon;
  EXPECT_NEAR(t.entries()(0, 0).real(), ((1 - e) / 16 + 4 * e) / (1 - e), 1e-15);
  EXPECT_NEAR(t.entries()(15, 15).real(), ((1 - e) / 16 - 4 * e) / (1 - e), 1e-15);
  EXPECT_NEAR(t.entries().trace().real(), 1.0, 1e-14);
  p.epsilon = 0.02;
  EXPECT_THROW(thermal_state(p), std::invalid_argument);
  p.epsilon = kMaxThermalEpsilon;
  EXPECT_NO_THROW(thermal_state(p));
}

TEST(Tomography, PseudoPureState) {
  EXPECT_NEAR(pseudo_pure_state(1.0).purity(), 1.0, 1e-14);
  EXPECT_NEAR(pseudo_pure_state(1.0).entries()(0, 0).real(), 1.0, 1e-15);
  EXPECT_LT((pseudo_pure_state(0.0).entries() - CMatrix::Identity(16, 16) / 16.0).norm(), 1e-15);
  EXPECT_THROW(pseudo_pure_state(-0.1), std::invalid_argument);
  EXPECT_THROW(pseudo_pure_state(1.01), std::invalid_argument);

  std::mt19937_64 rng(3);
  const StateVector psi = random_state(rng);
  const CMatrix u = preparation_unitary(psi);
  EXPECT_LT((u * u.adjoint() - CMatrix::Identity(16, 16)).norm(), 1e-13);
  const double eps = 0.3;
  const CMatrix rotated = u * pseudo_pure_state(eps).entries() * u.adjoint();
  const CMatrix expected = (1 - eps) / 16 * CMatrix::Identity(16, 16) + eps * psi.amplitudes() * psi.amplitudes().adjoint();
  EXPECT_LT((rotated - expected).norm(), 1e-13);
}

TEST(Tomography, Hamiltonian) {
  NMRParams p;
  EXPECT_LT(internal_hamiltonian(p).entries().norm(), 1e-15);
  p.nu[0] = 1.0;
  EXPECT_LT(max_abs_diff(internal_hamiltonian(p).entries(), (kPi * pauli_embedded(Axis::z, 1, 4)).entries()), 1e-14);
  p.jcoup[0][1] = 1.0;  // asymmetric
  EXPECT_THROW(p.validate(), std::invalid_argument);

  const NMRParams mol = NMRParams::placeholder();
  const DenseOperator h = internal_hamiltonian(mol);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_LT(commutator(h, pauli_embedded(Axis::z, k, 4)).entries().norm(), 1e-10);
  }
}

TEST(Tomography, ChemicalShiftPrecession) {
  NMRParams p;
  p.nu[0] = 3.0;
  const CMatrix m = (CMatrix::Identity(16, 16) + pauli_embedded(Axis::x, 1, 4).entries()) / 16.0;
  const DensityMatrix rho(m);
  const double t = 0.04;
  const DensityMatrix out = evolve(rho, internal_hamiltonian(p), t);
  const double angle = 2 * kPi * p.nu[0] * t;
  EXPECT_NEAR(out.expectation(pauli_embedded(Axis::x, 1, 4)), std::cos(angle), 1e-12);
  EXPECT_NEAR(std::abs(out.expectation(pauli_embedded(Axis::y, 1, 4))), std::abs(std::sin(angle)), 1e-12);
  // Populations stay put.
  std::mt19937_64 rng(9);
  const DensityMatrix r = random_mixed(rng);
  const DensityMatrix e = evolve(r, internal_hamiltonian(NMRParams::placeholder()), 0.013);
  EXPECT_LT((r.entries().diagonal() - e.entries().diagonal()).norm(), 1e-13);
}

TEST(Tomography, PauliIndexing) {
  EXPECT_EQ(pauli_label(0), "IIII");
  EXPECT_EQ(pauli_label(3 * 64), "ZIII");
  EXPECT_EQ(pauli_label(1 * 64 + 2 * 16 + 3 * 4 + 0), "XYZI");
  EXPECT_LT(max_abs_diff(pauli_string(3 * 64).entries(), pauli_embedded(Axis::z, 1, 4).entries()), 1e-15);
  EXPECT_THROW(pauli_string(256), std::out_of_range);
}

TEST(Tomography, PauliExpectations) {
  const auto mixed = pauli_expectations(DensityMatrix::maximally_mixed());
  EXPECT_NEAR(mixed[0], 1.0, 1e-15);
  for (std::size_t i = 1; i < 256; ++i) EXPECT_NEAR(mixed[i], 0.0, 1e-15);
  const auto zero = pauli_expectations(DensityMatrix::pure(StateVector::from_bits("0000")));
  EXPECT_NEAR(zero[3 * 64], 1.0, 1e-15);
  EXPECT_NEAR(zero[1 * 64], 0.0, 1e-15);
}

TEST(Tomography, RoundTripIsExact) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 5; ++i) {
    const DensityMatrix r = random_mixed(rng);
    EXPECT_LT(max_abs_diff(from_pauli_expectations(pauli_expectations(r)), r.entries()), 1e-12);
  }
}

TEST(Tomography, Purification) {
  std::mt19937_64 rng(5);
  const StateVector psi = random_state(rng);
  const StateVector back = ml_purify(DensityMatrix::pure(psi));
  EXPECT_NEAR(std::abs(psi.inner(back)), 1.0, 1e-10);
  // Phase convention: largest component real positive.
  Eigen::Index k;
  back.amplitudes().cwiseAbs().maxCoeff(&k);
  EXPECT_NEAR(back[k].imag(), 0.0, 1e-14);
  EXPECT_GT(back[k].real(), 0.0);

  const CMatrix dep = 0.9 * psi.amplitudes() * psi.amplitudes().adjoint() + 0.1 * CMatrix::Identity(16, 16) / 16.0;
  const StateVector d = ml_purify(DensityMatrix(dep));
  EXPECT_LT((d.amplitudes() - back.amplitudes()).norm(), 1e-10);
  EXPECT_THROW(ml_purify(DensityMatrix::maximally_mixed()), DegenerateEigenvalue);
}

TEST(Tomography, FidelityProperties) {
  std::mt19937_64 rng(23);
  const DensityMatrix a = random_mixed(rng), b = random_mixed(rng);
  EXPECT_NEAR(fidelity(a, a), 1.0, 1e-12);
  EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-14);
  EXPECT_NEAR(fidelity(DensityMatrix::pure(StateVector::from_bits("0000")),
                       DensityMatrix::pure(StateVector::from_bits("0001"))),
              0.0, 1e-15);
  const CMatrix u = preparation_unitary(random_state(rng));
  const DensityMatrix ua(u * a.entries() * u.adjoint()), ub(u * b.entries() * u.adjoint());
  EXPECT_NEAR(fidelity(ua, ub), fidelity(a, b), 1e-12);
}

TEST(Tomography, DensityMatrixValidation) {
  CMatrix m = CMatrix::Identity(16, 16) / 16.0;
  m(0, 0) += 0.1;
  EXPECT_THROW(DensityMatrix{m}, std::invalid_argument);  // trace
  CMatrix neg = CMatrix::Zero(16, 16);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix{neg}, std::invalid_argument);  // not positive
}

TEST(Tomography, NoiseIsTracePreservingAndOptional) {
  std::mt19937_64 rng(1), rng2(1);
  const DensityMatrix r = random_mixed(rng);
  std::mt19937_64 g(4);
  EXPECT_LT(max_abs_diff(apply_noise(r, NoiseSpec::none(), g).entries(), r.entries()), 1e-15);
  NoiseSpec n = NoiseSpec::calibrated_default();
  std::mt19937_64 g1(4), g2(4);
  const DensityMatrix x = apply_noise(r, n, g1), y = apply_noise(r, n, g2);
  EXPECT_EQ(max_abs_diff(x.entries(), y.entries()), 0.0);
  EXPECT_NEAR(x.entries().trace().real(), 1.0, 1e-13);
  n.depolarizing_p = 1.5;
  EXPECT_THROW(n.validate(), std::invalid_argument);
}

TEST(Tomography, NoiselessExperimentIsExact) {
  std::vector<ExperimentTarget> targets;
  for (const NamedState& s : named_states()) targets.push_back({std::string(s.name), s.point()});
  const ExperimentReport rep = simulate_experiment(targets, NoiseSpec::none());
  ASSERT_EQ(rep.targets.size(), 10u);
  for (const TargetReport& t : rep.targets) {
    EXPECT_NEAR(t.fidelity, 1.0, 1e-10) << t.label;
    EXPECT_NEAR(t.fluctuation_measured, t.fluctuation_theory, 1e-9) << t.label;
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(t.dihedral_measured[i], t.dihedral_theory[i], 1e-9);
    EXPECT_LT(std::abs(t.amplitude_measured.value - t.amplitude_theory.value), 1e-10) << t.label;
    EXPECT_LT(t.purified_leakage, 1e-10);
  }
}

}  // namespace
}  // namespace qtetra
