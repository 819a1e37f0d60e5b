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

// Four-qubit NMR rehearsal: thermal and pseudo-pure states, the weak-coupling
// internal Hamiltonian, Pauli tomography, purification and fidelity.

#ifndef QTETRA_TOMOGRAPHY_HPP_
#define QTETRA_TOMOGRAPHY_HPP_

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtetra/amplitude.hpp"
#include "qtetra/spin_algebra.hpp"
#include "qtetra/table1.hpp"
#include "qtetra/tetrahedron.hpp"

namespace qtetra {

/// 16x16 Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  /// Checks Hermiticity and trace to 1e-12 and eigenvalues >= -1e-10.
  explicit DensityMatrix(CMatrix entries);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed();

  const CMatrix& entries() const { return entries_; }
  double purity() const;
  /// trace(rho * op), real part.
  double expectation(const DenseOperator& op) const;

 private:
  CMatrix entries_;
};

struct NMRParams {
  std::array<double, 4> nu{};                       // chemical shifts, Hz
  std::array<std::array<double, 4>, 4> jcoup{};     // symmetric, zero diagonal, Hz
  double epsilon = 1e-5;                            // polarization

  /// Placeholder values in the range typical of a 13C four-spin molecule;
  /// replace with measured parameters for a specific sample.
  static NMRParams placeholder();
  void validate() const;
};

struct NoiseSpec {
  double depolarizing_p = 0.0;
  double rotation_angle_sd = 0.0;  // radians, per-qubit z-rotation
  std::uint64_t seed = 0;

  static NoiseSpec none() { return {}; }
  /// Calibrated so the ten named states stay above 0.95 fidelity.
  static NoiseSpec calibrated_default();
  void validate() const;
};

class DegenerateEigenvalue : public std::runtime_error {
 public:
  DegenerateEigenvalue(const std::string& what, double gap)
      : std::runtime_error(what), gap_(gap) {}
  double gap() const { return gap_; }

 private:
  double gap_;
};

/// Largest epsilon keeping the thermal state positive: (1-e)/16 - 4e >= 0.
inline constexpr double kMaxThermalEpsilon = 1.0 / 65.0;

/// ((1-e)/16) I + e (sz1 + sz2 + sz3 + sz4), divided by its trace (1 - e).
DensityMatrix thermal_state(const NMRParams& params);

/// ((1-e)/16) I + e |0000><0000|, for e in [0, 1].
DensityMatrix pseudo_pure_state(double epsilon);

/// sum_j pi nu_j sz_j + sum_{j<k} (pi/2) J_jk sz_j sz_k.
DenseOperator internal_hamiltonian(const NMRParams& params);

/// exp(-i H t) rho exp(i H t) for a diagonal H.
DensityMatrix evolve(const DensityMatrix& rho, const DenseOperator& hamiltonian, double t);

/// Pauli string with digits p_k in {0=I, 1=X, 2=Y, 3=Z}; index = sum p_k 4^(4-k).
DenseOperator pauli_string(int index);
std::string pauli_label(int index);

/// trace(rho P) for all 256 Pauli strings.
std::array<double, 256> pauli_expectations(const DensityMatrix& rho);

/// (1/16) sum_P <P> P.
CMatrix from_pauli_expectations(const std::array<double, 256>& expectations);

/// Unit eigenvector of the largest eigenvalue, largest-magnitude component
/// made real positive. Throws DegenerateEigenvalue when the top gap < 1e-10.
StateVector ml_purify(const DensityMatrix& rho);

/// trace(ab) / sqrt(trace(a^2) trace(b^2)).
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// Householder unitary with U|0000> proportional to psi.
CMatrix preparation_unitary(const StateVector& psi);

/// Per-qubit z-rotations then depolarizing, drawing angles from rng.
DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseSpec& noise, std::mt19937_64& rng);

struct ExperimentTarget {
  std::string label;
  BlochPoint point;
};

struct TargetReport {
  std::string label;
  double theta = 0.0;
  double phi = 0.0;
  double fidelity = 0.0;
  std::array<double, 3> dihedral_measured{};  // cos12, cos13, cos14 (interior)
  std::array<double, 3> dihedral_theory{};
  double fluctuation_measured = 0.0;
  double fluctuation_theory = 0.0;            // closed form
  std::array<Complex, 2> purified_coefficients{};  // over (|0_L>, |1_L>)
  double purified_leakage = 0.0;              // weight outside the invariant subspace
  AmplitudeResult amplitude_measured;
  AmplitudeResult amplitude_theory;
};

struct ExperimentReport {
  NoiseSpec noise;
  double epsilon = 0.0;
  std::string convention;
  std::vector<TargetReport> targets;
};

/// Prepare -> noise -> tomography -> purify -> score for every target, then
/// recompute the amplitudes with i5 = purified state and i1..i4 the regular
/// state of `convention`.
ExperimentReport simulate_experiment(const std::vector<ExperimentTarget>& targets,
                                     const NoiseSpec& noise, const NMRParams& params = {},
                                     const PairingConvention& convention = frozen_table1_convention());

}  // namespace qtetra

#endif  // QTETRA_TOMOGRAPHY_HPP_
