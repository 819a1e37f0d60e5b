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

#include "qtetra/spin_algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qtetra {

namespace {

constexpr double kHermitianTol = 1e-12;

void check_qubits(int n, int max_qubits, const char* what) {
  if (n < 1 || n > max_qubits) {
    throw std::invalid_argument(std::string(what) + ": qubit count " + std::to_string(n) +
                                " outside [1, " + std::to_string(max_qubits) + "]");
  }
}

void check_same_shape(const DenseOperator& a, const DenseOperator& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("operator qubit counts differ");
  }
}

double factorial(int n) {
  static const std::array<double, 171> table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
    return t;
  }();
  if (n < 0 || n >= static_cast<int>(table.size())) {
    throw std::out_of_range("factorial argument out of range");
  }
  return table[static_cast<std::size_t>(n)];
}

// Every argument below is a sum of twice-values that is even by construction.
int half_of(int twice) { return twice / 2; }

}  // namespace

StateVector::StateVector(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubits(n_qubits, kMaxStateQubits, "StateVector");
  if (amplitudes_.size() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("StateVector: amplitude count is not 2^n");
  }
}

StateVector StateVector::from_bits(std::string_view bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("from_bits: expected only 0/1");
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return basis(static_cast<int>(bits.size()), index);
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  check_qubits(n_qubits, kMaxStateQubits, "StateVector::basis");
  CVector v = CVector::Zero(Eigen::Index{1} << n_qubits);
  if (index >= static_cast<std::uint64_t>(v.size())) {
    throw std::out_of_range("StateVector::basis: index out of range");
  }
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(n_qubits, std::move(v));
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  return StateVector(n_qubits_, amplitudes_ / n);
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("inner: qubit counts differ");
  return amplitudes_.dot(other.amplitudes_);
}

StateVector StateVector::operator+(const StateVector& other) const {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("qubit counts differ");
  return StateVector(n_qubits_, amplitudes_ + other.amplitudes_);
}

StateVector StateVector::operator-(const StateVector& other) const {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("qubit counts differ");
  return StateVector(n_qubits_, amplitudes_ - other.amplitudes_);
}

StateVector operator*(Complex c, const StateVector& v) {
  return StateVector(v.n_qubits_, c * v.amplitudes_);
}

DenseOperator::DenseOperator(int n_qubits, CMatrix entries, bool hermitian)
    : n_qubits_(n_qubits), entries_(std::move(entries)), hermitian_(hermitian) {
  check_qubits(n_qubits, kMaxDenseQubits, "DenseOperator");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  if (entries_.rows() != d || entries_.cols() != d) {
    throw std::invalid_argument("DenseOperator: matrix is not 2^n x 2^n");
  }
  if (hermitian_ && max_abs_diff(entries_, entries_.adjoint()) >= kHermitianTol) {
    throw std::invalid_argument("DenseOperator: flagged hermitian but M != M^dagger");
  }
}

DenseOperator DenseOperator::identity(int n_qubits) {
  check_qubits(n_qubits, kMaxDenseQubits, "DenseOperator::identity");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return DenseOperator(n_qubits, CMatrix::Identity(d, d), true);
}

DenseOperator DenseOperator::zero(int n_qubits) {
  check_qubits(n_qubits, kMaxDenseQubits, "DenseOperator::zero");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return DenseOperator(n_qubits, CMatrix::Zero(d, d), true);
}

StateVector DenseOperator::apply(const StateVector& v) const {
  if (v.n_qubits() != n_qubits_) throw std::invalid_argument("apply: qubit counts differ");
  return StateVector(n_qubits_, entries_ * v.amplitudes());
}

Complex DenseOperator::expectation(const StateVector& v) const {
  if (v.n_qubits() != n_qubits_) throw std::invalid_argument("expectation: qubit counts differ");
  return v.amplitudes().dot(entries_ * v.amplitudes());
}

DenseOperator DenseOperator::adjoint() const {
  return DenseOperator(n_qubits_, entries_.adjoint(), hermitian_);
}

DenseOperator DenseOperator::operator+(const DenseOperator& o) const {
  check_same_shape(*this, o);
  return DenseOperator(n_qubits_, entries_ + o.entries_, hermitian_ && o.hermitian_);
}

DenseOperator DenseOperator::operator-(const DenseOperator& o) const {
  check_same_shape(*this, o);
  return DenseOperator(n_qubits_, entries_ - o.entries_, hermitian_ && o.hermitian_);
}

DenseOperator DenseOperator::operator*(const DenseOperator& o) const {
  check_same_shape(*this, o);
  return DenseOperator(n_qubits_, entries_ * o.entries_);
}

DenseOperator operator*(Complex c, const DenseOperator& m) {
  return DenseOperator(m.n_qubits_, c * m.entries_, m.hermitian_ && c.imag() == 0.0);
}

DenseOperator operator*(double c, const DenseOperator& m) {
  return DenseOperator(m.n_qubits_, c * m.entries_, m.hermitian_);
}

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) {
  return a * b - b * a;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

DenseOperator pauli_embedded(Axis axis, int k, int n) {
  check_qubits(n, kMaxDenseQubits, "pauli_embedded");
  if (k < 1 || k > n) {
    throw std::out_of_range("pauli_embedded: qubit " + std::to_string(k) + " not in [1, " +
                            std::to_string(n) + "]");
  }
  const Eigen::Index d = Eigen::Index{1} << n;
  const Eigen::Index mask = Eigen::Index{1} << (n - k);
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const bool one = (i & mask) != 0;
    switch (axis) {
      case Axis::x:
        m(i ^ mask, i) = 1.0;
        break;
      case Axis::y:
        // sigma_y|0> = i|1>, sigma_y|1> = -i|0>
        m(i ^ mask, i) = one ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
        break;
      case Axis::z:
        m(i, i) = one ? -1.0 : 1.0;
        break;
    }
  }
  return DenseOperator(n, std::move(m), true);
}

DenseOperator angular_momentum(Axis axis, int k, int n) {
  return 0.5 * pauli_embedded(axis, k, n);
}

DenseOperator total_angular_momentum(Axis axis, int n) {
  DenseOperator sum = DenseOperator::zero(n);
  for (int k = 1; k <= n; ++k) sum = sum + angular_momentum(axis, k, n);
  return sum;
}

DenseOperator total_casimir(int n) {
  DenseOperator sum = DenseOperator::zero(n);
  for (Axis a : {Axis::x, Axis::y, Axis::z}) {
    const DenseOperator j = total_angular_momentum(a, n);
    sum = sum + j * j;
  }
  return DenseOperator(n, sum.entries(), true);
}

double closure_defect(const StateVector& state) {
  if (state.n_qubits() != 4) {
    throw std::invalid_argument("closure_defect: expected a 4-qubit state, got " +
                                std::to_string(state.n_qubits()));
  }
  double total = 0.0;
  for (Axis a : {Axis::x, Axis::y, Axis::z}) {
    total += total_angular_momentum(a, 4).apply(state).amplitudes().squaredNorm();
  }
  return std::sqrt(total);
}

bool satisfies_triangle(HalfInt j1, HalfInt j2, HalfInt J) {
  if (j1.twice < 0 || j2.twice < 0 || J.twice < 0) return false;
  if ((j1.twice + j2.twice + J.twice) % 2 != 0) return false;
  return std::abs(j1.twice - j2.twice) <= J.twice && J.twice <= j1.twice + j2.twice;
}

double cg_coefficient(const CouplingLabel& label, HalfInt m1, HalfInt m2) {
  const int j1 = label.j1.twice;
  const int j2 = label.j2.twice;
  const int J = label.J.twice;
  const int M = label.M.twice;
  if (!satisfies_triangle(label.j1, label.j2, label.J)) {
    throw std::invalid_argument("cg_coefficient: triangle condition violated for (" +
                                std::to_string(label.j1.value()) + ", " +
                                std::to_string(label.j2.value()) + "; J=" +
                                std::to_string(label.J.value()) + ")");
  }
  auto in_range = [](int j, int m) { return std::abs(m) <= j && (j + m) % 2 == 0; };
  if (!in_range(j1, m1.twice) || !in_range(j2, m2.twice) || !in_range(J, M)) {
    throw std::invalid_argument("cg_coefficient: magnetic number out of range");
  }
  if (m1.twice + m2.twice != M) return 0.0;

  // Racah's closed form; all factorial arguments are integers here.
  const double prefactor = std::sqrt(
      (J + 1) * factorial(half_of(J + j1 - j2)) * factorial(half_of(J - j1 + j2)) *
      factorial(half_of(j1 + j2 - J)) / factorial(half_of(j1 + j2 + J) + 1));
  const double norms = std::sqrt(
      factorial(half_of(J + M)) * factorial(half_of(J - M)) * factorial(half_of(j1 - m1.twice)) *
      factorial(half_of(j1 + m1.twice)) * factorial(half_of(j2 - m2.twice)) *
      factorial(half_of(j2 + m2.twice)));

  const int k_min = std::max({0, half_of(j2 - J - m1.twice), half_of(j1 - J + m2.twice)});
  const int k_max = std::min({half_of(j1 + j2 - J), half_of(j1 - m1.twice), half_of(j2 + m2.twice)});
  double sum = 0.0;
  for (int k = k_min; k <= k_max; ++k) {
    const double denom = factorial(k) * factorial(half_of(j1 + j2 - J) - k) *
                         factorial(half_of(j1 - m1.twice) - k) *
                         factorial(half_of(j2 + m2.twice) - k) *
                         factorial(half_of(J - j2 + m1.twice) + k) *
                         factorial(half_of(J - j1 - m2.twice) + k);
    sum += ((k % 2 == 0) ? 1.0 : -1.0) / denom;
  }
  return prefactor * norms * sum;
}

DenseOperator invariant_projector(int n) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument("invariant_projector: qubit count must be in [1, 8]");
  }
  // J^2 eigenvalues are J(J+1); the smallest nonzero one is 3/4.
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(total_casimir(n).entries());
  const CMatrix& vectors = eig.eigenvectors();
  const Eigen::Index d = vectors.rows();
  CMatrix p = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (eig.eigenvalues()[i] < 0.25) p += vectors.col(i) * vectors.col(i).adjoint();
  }
  // Exact symmetrization keeps the hermitian flag check well inside tolerance.
  CMatrix sym = 0.5 * (p + p.adjoint());
  return DenseOperator(n, std::move(sym), true);
}

int projector_rank(const DenseOperator& projector) {
  return static_cast<int>(std::lround(projector.entries().trace().real()));
}

}  // namespace qtetra
