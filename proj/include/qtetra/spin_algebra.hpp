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

#ifndef QTETRA_SPIN_ALGEBRA_HPP_
#define QTETRA_SPIN_ALGEBRA_HPP_

#include <complex>
#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

namespace qtetra {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Largest qubit count for which a dense operator is ever built.
inline constexpr int kMaxDenseQubits = 10;
/// Largest qubit count for a state vector (the 20-qubit vertex product state).
inline constexpr int kMaxStateQubits = 20;

/// Amplitudes over the 2^n computational basis states of n qubits.
///
/// Basis index bits are read with qubit 1 as the most significant bit, so
/// |q1 q2 ... qn> sits at index q1*2^(n-1) + ... + qn.
class StateVector {
 public:
  StateVector(int n_qubits, CVector amplitudes);

  /// |bits> for a string such as "0110" (qubit 1 first).
  static StateVector from_bits(std::string_view bits);
  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

  double norm() const { return amplitudes_.norm(); }
  StateVector normalized() const;
  /// <this|other>
  Complex inner(const StateVector& other) const;

  StateVector operator+(const StateVector& other) const;
  StateVector operator-(const StateVector& other) const;
  friend StateVector operator*(Complex c, const StateVector& v);

 private:
  int n_qubits_;
  CVector amplitudes_;
};

/// Dense 2^n x 2^n operator. When the hermitian flag is set the entries are
/// checked on construction (max |M - M^dagger| < 1e-12).
class DenseOperator {
 public:
  DenseOperator(int n_qubits, CMatrix entries, bool hermitian = false);

  static DenseOperator identity(int n_qubits);
  static DenseOperator zero(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const CMatrix& entries() const { return entries_; }
  bool hermitian() const { return hermitian_; }

  StateVector apply(const StateVector& v) const;
  /// <v|M|v>
  Complex expectation(const StateVector& v) const;
  DenseOperator adjoint() const;

  DenseOperator operator+(const DenseOperator& o) const;
  DenseOperator operator-(const DenseOperator& o) const;
  DenseOperator operator*(const DenseOperator& o) const;
  friend DenseOperator operator*(Complex c, const DenseOperator& m);
  friend DenseOperator operator*(double c, const DenseOperator& m);

 private:
  int n_qubits_;
  CMatrix entries_;
  bool hermitian_;
};

/// [a, b] = ab - ba.
DenseOperator commutator(const DenseOperator& a, const DenseOperator& b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

enum class Axis { x, y, z };

/// Pauli matrix on qubit k (1-based) of n, identity elsewhere.
DenseOperator pauli_embedded(Axis axis, int k, int n);

/// J_axis^(k) = sigma_axis^(k) / 2, with hbar = 1.
DenseOperator angular_momentum(Axis axis, int k, int n);

/// sum_k J_axis^(k) over all n qubits.
DenseOperator total_angular_momentum(Axis axis, int n);

/// Total J^2 = sum_a (sum_k J_a^(k))^2.
DenseOperator total_casimir(int n);

/// sqrt(sum_a ||(J_a^(1)+...+J_a^(4))|psi>||^2); zero iff psi is SU(2) invariant.
double closure_defect(const StateVector& state);

/// A half-integer stored as twice its value, so 1/2 is {1} and 1 is {2}.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt half(int numerator) { return HalfInt{numerator}; }
  static constexpr HalfInt integer(int value) { return HalfInt{2 * value}; }
  constexpr double value() const { return twice / 2.0; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

/// (j1, j2; J, M) coupling label.
struct CouplingLabel {
  HalfInt j1;
  HalfInt j2;
  HalfInt J;
  HalfInt M;
};

/// True when |j1 - j2| <= J <= j1 + j2 and j1 + j2 + J is an integer.
bool satisfies_triangle(HalfInt j1, HalfInt j2, HalfInt J);

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley
/// convention. Throws std::invalid_argument when the triangle condition fails
/// or a magnetic number lies outside its range; returns 0 when m1 + m2 != M.
double cg_coefficient(const CouplingLabel& label, HalfInt m1, HalfInt m2);

/// Orthogonal projector onto the total-J = 0 subspace of n qubits (1 <= n <= 8).
DenseOperator invariant_projector(int n);

/// Rank of an orthogonal projector (its rounded trace).
int projector_rank(const DenseOperator& projector);

}  // namespace qtetra

#endif  // QTETRA_SPIN_ALGEBRA_HPP_
