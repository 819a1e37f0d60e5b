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

#include "qtetra/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qtetra/reference_data.hpp"

namespace qtetra {

namespace {

constexpr int kQubits = 4;
constexpr Eigen::Index kDim = 16;

DenseOperator build_pauli_string(int index) {
  CMatrix m = CMatrix::Identity(kDim, kDim);
  for (int k = 1; k <= kQubits; ++k) {
    const int digit = (index >> (2 * (kQubits - k))) & 3;
    if (digit == 0) continue;
    const Axis axis = digit == 1 ? Axis::x : digit == 2 ? Axis::y : Axis::z;
    m = m * pauli_embedded(axis, k, kQubits).entries();
  }
  return DenseOperator(kQubits, std::move(m), true);
}

CMatrix conjugate(const CMatrix& rho, const CMatrix& u) { return u * rho * u.adjoint(); }

// Symmetrize away round-off before handing a matrix to DensityMatrix.
CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != kDim || entries_.cols() != kDim) {
    throw std::invalid_argument("DensityMatrix: expected a 16x16 matrix");
  }
  if (max_abs_diff(entries_, entries_.adjoint()) >= 1e-12) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (std::abs(entries_.trace() - Complex(1.0, 0.0)) >= 1e-12) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(entries_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  if (psi.n_qubits() != kQubits) throw std::invalid_argument("DensityMatrix::pure: expected 4 qubits");
  const CVector v = psi.normalized().amplitudes();
  return DensityMatrix(hermitian_part(v * v.adjoint()));
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(CMatrix::Identity(kDim, kDim) / 16.0);
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

double DensityMatrix::expectation(const DenseOperator& op) const {
  if (op.n_qubits() != kQubits) throw std::invalid_argument("expectation: expected 4 qubits");
  return (entries_ * op.entries()).trace().real();
}

NMRParams NMRParams::placeholder() {
  NMRParams p;
  p.nu = {-1200.0, -400.0, 300.0, 1100.0};
  const double upper[6] = {70.0, 1.5, 7.0, 70.0, 1.5, 40.0};  // J12 J13 J14 J23 J24 J34
  int n = 0;
  for (int j = 0; j < 4; ++j) {
    for (int k = j + 1; k < 4; ++k) {
      p.jcoup[j][k] = p.jcoup[k][j] = upper[n++];
    }
  }
  p.epsilon = 1e-5;
  return p;
}

void NMRParams::validate() const {
  for (int j = 0; j < 4; ++j) {
    if (jcoup[j][j] != 0.0) throw std::invalid_argument("NMRParams: J coupling diagonal must be zero");
    for (int k = 0; k < 4; ++k) {
      if (jcoup[j][k] != jcoup[k][j]) throw std::invalid_argument("NMRParams: J coupling must be symmetric");
    }
  }
}

NoiseSpec NoiseSpec::calibrated_default() {
  NoiseSpec n;
  n.depolarizing_p = 0.02;
  n.rotation_angle_sd = 0.05;
  n.seed = 20190425;
  return n;
}

void NoiseSpec::validate() const {
  if (!(depolarizing_p >= 0.0 && depolarizing_p <= 1.0)) {
    throw std::invalid_argument("NoiseSpec: depolarizing_p must lie in [0, 1]");
  }
  if (!(rotation_angle_sd >= 0.0)) {
    throw std::invalid_argument("NoiseSpec: rotation_angle_sd must be non-negative");
  }
}

DensityMatrix thermal_state(const NMRParams& params) {
  const double e = params.epsilon;
  if (!(e >= 0.0 && e <= kMaxThermalEpsilon)) {
    throw std::invalid_argument("thermal_state: epsilon must lie in [0, 1/65] for positivity");
  }
  CMatrix m = (1.0 - e) / 16.0 * CMatrix::Identity(kDim, kDim);
  for (int k = 1; k <= kQubits; ++k) m += e * pauli_embedded(Axis::z, k, kQubits).entries();
  // The printed form has trace 1 - e; the sigma_z sum is traceless.
  return DensityMatrix(m / (1.0 - e));
}

DensityMatrix pseudo_pure_state(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("pseudo_pure_state: epsilon must lie in [0, 1]");
  }
  CMatrix m = (1.0 - epsilon) / 16.0 * CMatrix::Identity(kDim, kDim);
  m(0, 0) += epsilon;
  return DensityMatrix(std::move(m));
}

DenseOperator internal_hamiltonian(const NMRParams& params) {
  params.validate();
  CMatrix h = CMatrix::Zero(kDim, kDim);
  std::array<CMatrix, 4> z;
  for (int j = 0; j < kQubits; ++j) z[j] = pauli_embedded(Axis::z, j + 1, kQubits).entries();
  for (int j = 0; j < kQubits; ++j) {
    h += kPi * params.nu[j] * z[j];
    for (int k = j + 1; k < kQubits; ++k) h += kPi / 2.0 * params.jcoup[j][k] * z[j] * z[k];
  }
  return DenseOperator(kQubits, std::move(h), true);
}

DensityMatrix evolve(const DensityMatrix& rho, const DenseOperator& hamiltonian, double t) {
  const CMatrix& h = hamiltonian.entries();
  if (h.rows() != kDim || !h.isDiagonal(0.0)) {
    throw std::invalid_argument("evolve: expected a diagonal 4-qubit Hamiltonian");
  }
  CMatrix u = CMatrix::Zero(kDim, kDim);
  for (Eigen::Index i = 0; i < kDim; ++i) u(i, i) = std::polar(1.0, -h(i, i).real() * t);
  return DensityMatrix(hermitian_part(conjugate(rho.entries(), u)));
}

DenseOperator pauli_string(int index) {
  if (index < 0 || index >= 256) throw std::out_of_range("pauli_string: index not in [0, 256)");
  static const std::vector<DenseOperator> table = [] {
    std::vector<DenseOperator> t;
    t.reserve(256);
    for (int i = 0; i < 256; ++i) t.push_back(build_pauli_string(i));
    return t;
  }();
  return table[static_cast<std::size_t>(index)];
}

std::string pauli_label(int index) {
  if (index < 0 || index >= 256) throw std::out_of_range("pauli_label: index not in [0, 256)");
  std::string out;
  for (int k = 1; k <= kQubits; ++k) out += "IXYZ"[(index >> (2 * (kQubits - k))) & 3];
  return out;
}

std::array<double, 256> pauli_expectations(const DensityMatrix& rho) {
  std::array<double, 256> out{};
  for (int i = 0; i < 256; ++i) out[static_cast<std::size_t>(i)] = rho.expectation(pauli_string(i));
  return out;
}

CMatrix from_pauli_expectations(const std::array<double, 256>& expectations) {
  CMatrix m = CMatrix::Zero(kDim, kDim);
  for (int i = 0; i < 256; ++i) {
    m += expectations[static_cast<std::size_t>(i)] * pauli_string(i).entries();
  }
  return m / 16.0;
}

StateVector ml_purify(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho.entries());
  const auto& values = eig.eigenvalues();
  const double gap = values[kDim - 1] - values[kDim - 2];
  if (gap < 1e-10) {
    std::ostringstream msg;
    msg << "ml_purify: largest eigenvalue is degenerate (gap " << gap << ")";
    throw DegenerateEigenvalue(msg.str(), gap);
  }
  CVector v = eig.eigenvectors().col(kDim - 1);
  Eigen::Index largest = 0;
  v.cwiseAbs().maxCoeff(&largest);
  v *= std::conj(v[largest]) / std::abs(v[largest]);
  v[largest] = std::abs(v[largest]);
  return StateVector(kQubits, v.normalized());
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  const double pa = a.purity();
  const double pb = b.purity();
  if (!(pa > 0.0) || !(pb > 0.0)) throw std::domain_error("fidelity: zero purity");
  return (a.entries() * b.entries()).trace().real() / std::sqrt(pa * pb);
}

CMatrix preparation_unitary(const StateVector& psi) {
  if (psi.n_qubits() != kQubits) throw std::invalid_argument("preparation_unitary: expected 4 qubits");
  const CVector v = psi.normalized().amplitudes();
  const Complex omega = std::abs(v[0]) > 0.0 ? v[0] / std::abs(v[0]) : Complex(1.0, 0.0);
  const CVector target = std::conj(omega) * v;  // target[0] is real and non-negative
  CVector w = -target;
  w[0] += 1.0;
  const double wn = w.squaredNorm();
  CMatrix u = CMatrix::Identity(kDim, kDim);
  if (wn > 1e-30) u -= 2.0 / wn * (w * w.adjoint());
  return omega * u;
}

DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseSpec& noise, std::mt19937_64& rng) {
  noise.validate();
  CMatrix m = rho.entries();
  if (noise.rotation_angle_sd > 0.0) {
    std::normal_distribution<double> angle(0.0, noise.rotation_angle_sd);
    std::array<double, 4> alpha{};
    for (double& a : alpha) a = angle(rng);
    CMatrix u = CMatrix::Zero(kDim, kDim);
    for (Eigen::Index i = 0; i < kDim; ++i) {
      double total = 0.0;
      for (int k = 0; k < kQubits; ++k) {
        const double z = ((i >> (kQubits - 1 - k)) & 1) ? -1.0 : 1.0;
        total += alpha[static_cast<std::size_t>(k)] * z;
      }
      u(i, i) = std::polar(1.0, -total / 2.0);
    }
    m = conjugate(m, u);
  }
  m = (1.0 - noise.depolarizing_p) * m +
      noise.depolarizing_p / 16.0 * CMatrix::Identity(kDim, kDim);
  return DensityMatrix(hermitian_part(m));
}

ExperimentReport simulate_experiment(const std::vector<ExperimentTarget>& targets,
                                     const NoiseSpec& noise, const NMRParams& params,
                                     const PairingConvention& convention) {
  noise.validate();
  if (!(params.epsilon > 0.0)) {
    throw std::invalid_argument("simulate_experiment: epsilon must be positive to carry signal");
  }
  const auto regular_state = find_state(convention.regular_state);
  if (!regular_state) throw std::invalid_argument("unknown regular state");
  const StateVector regular = bloch_state(regular_state->point()).embedded;
  const SpinNetworkGraph graph = convention.graph();
  const auto [zero, one] = logical_basis();

  std::array<DenseOperator, 3> dihedrals = {dihedral_operator(DihedralPair(1, 2)),
                                            dihedral_operator(DihedralPair(1, 3)),
                                            dihedral_operator(DihedralPair(1, 4))};
  std::array<DenseOperator, 3> squares = {dihedrals[0] * dihedrals[0],
                                          dihedrals[1] * dihedrals[1],
                                          dihedrals[2] * dihedrals[2]};

  ExperimentReport report;
  report.noise = noise;
  report.epsilon = params.epsilon;
  report.convention = convention.describe();
  std::mt19937_64 rng(noise.seed);
  const DensityMatrix reference = pseudo_pure_state(params.epsilon);

  for (const ExperimentTarget& target : targets) {
    const StateVector ideal = bloch_state(target.point).embedded;
    const CMatrix u = preparation_unitary(ideal);
    const DensityMatrix prepared(hermitian_part(conjugate(reference.entries(), u)));
    const DensityMatrix noisy = apply_noise(prepared, noise, rng);

    // Only the deviation from I/16 is observable; rescale it by 1/epsilon.
    std::array<double, 256> signal = pauli_expectations(noisy);
    for (std::size_t i = 1; i < signal.size(); ++i) signal[i] /= params.epsilon;
    signal[0] = 1.0;
    const DensityMatrix measured(hermitian_part(from_pauli_expectations(signal)));

    TargetReport out;
    out.label = target.label;
    out.theta = target.point.theta();
    out.phi = target.point.phi();
    out.fidelity = fidelity(measured, DensityMatrix::pure(ideal));
    for (std::size_t i = 0; i < 3; ++i) {
      const double mean = measured.expectation(dihedrals[i]);
      out.dihedral_measured[i] = mean;
      out.dihedral_theory[i] = dihedral_closed_form(target.point, DihedralPair(1, static_cast<int>(i) + 2));
      out.fluctuation_measured += measured.expectation(squares[i]) - mean * mean;
    }
    out.fluctuation_theory = fluctuation(target.point);

    StateVector purified = ml_purify(measured);
    const Complex overlap = ideal.inner(purified);
    if (std::abs(overlap) > 0.0) purified = (std::conj(overlap) / std::abs(overlap)) * purified;
    out.purified_coefficients = {zero.inner(purified), one.inner(purified)};
    out.purified_leakage = std::max(
        0.0, 1.0 - std::norm(out.purified_coefficients[0]) - std::norm(out.purified_coefficients[1]));
    out.amplitude_measured =
        vertex_amplitude(NodeStates{regular, regular, regular, regular, purified}, graph);
    out.amplitude_theory =
        vertex_amplitude(NodeStates{regular, regular, regular, regular, ideal}, graph);
    report.targets.push_back(std::move(out));
  }
  return report;
}

}  // namespace qtetra
