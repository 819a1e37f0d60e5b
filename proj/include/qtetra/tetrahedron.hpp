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

// Quantum tetrahedra: the two-dimensional space of 4-qubit invariant tensors,
// presented as a Bloch sphere, and the geometric operators acting on it.
//
// Areas are in units of 8*pi*l_P^2 throughout.

#ifndef QTETRA_TETRAHEDRON_HPP_
#define QTETRA_TETRAHEDRON_HPP_

#include <array>
#include <utility>
#include <vector>

#include "qtetra/spin_algebra.hpp"

namespace qtetra {

inline constexpr double kPi = 3.14159265358979323846;

/// A point on the logical Bloch sphere: theta in [0, pi], phi in [0, 2*pi).
class BlochPoint {
 public:
  BlochPoint(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  /// (cos(theta/2), e^{i phi} sin(theta/2)) over (|0_L>, |1_L>).
  std::array<Complex, 2> coefficients() const;

 private:
  double theta_;
  double phi_;
};

/// A point on the Bloch sphere together with its 16-amplitude embedding.
struct InvariantTensor {
  BlochPoint point;
  StateVector embedded;
};

/// cos(dihedral) as the interior angle of the tetrahedron, or as the angle
/// between outward face normals. The two are supplementary.
enum class DihedralConvention { interior, normals };

/// Unordered pair of distinct face labels in {1, 2, 3, 4}.
class DihedralPair {
 public:
  DihedralPair(int k, int m);
  int k() const { return k_; }
  int m() const { return m_; }

 private:
  int k_;
  int m_;
};

/// |0_L> = (|01>-|10>)(|01>-|10>)/2 and
/// |1_L> = [|1100> + |0011> - (|01>+|10>)(|01>+|10>)/2] / sqrt(3).
std::pair<StateVector, StateVector> logical_basis();

/// cos(theta/2)|0_L> + e^{i phi} sin(theta/2)|1_L>, no extra global phase.
InvariantTensor bloch_state(const BlochPoint& point);

/// Eigenvalue of the face-area operator, sqrt(j(j+1)). Only j = 1/2 is supported.
double area_eigenvalue(HalfInt spin);

/// sqrt(E^(k) . E^(k)) on four qubits, built by diagonalizing J^(k).J^(k).
DenseOperator area_operator(int face);

/// (4/3) J^(k).J^(m) for the normals convention, its negative for interior.
DenseOperator dihedral_operator(const DihedralPair& pair,
                                DihedralConvention convention = DihedralConvention::interior);

/// 2x2 block <a|M|b> over the logical basis, ordered (|1_L>, |0_L>) so that
/// the dihedral operators read in their familiar matrix form.
Eigen::Matrix2cd logical_block(const DenseOperator& op);

/// <psi|cos(theta_km)|psi> for psi = bloch_state(point), evaluated with the
/// 16-dimensional operator.
double dihedral_expectation(const BlochPoint& point, const DihedralPair& pair,
                            DihedralConvention convention = DihedralConvention::interior);

/// Closed-form interior expectation for any pair. The (1,3) form carries
/// cos(phi): the expectation of a Hermitian operator is real.
double dihedral_closed_form(const BlochPoint& point, const DihedralPair& pair);

/// <M^2> - <M>^2 for the dihedral operator on an arbitrary 4-qubit state.
double dihedral_variance(const StateVector& state, const DihedralPair& pair,
                         DihedralConvention convention = DihedralConvention::interior);

/// Total fluctuation 2/3 + (8/3) cos^2(theta/2) sin^2(theta/2) (1 - cos^2 phi).
double fluctuation(const BlochPoint& point);

/// Delta_12 + Delta_13 + Delta_14 from operator variances.
double fluctuation_from_operators(const BlochPoint& point);

/// Points whose three independent interior dihedral expectations all equal 1/3.
std::vector<BlochPoint> regular_points();

}  // namespace qtetra

#endif  // QTETRA_TETRAHEDRON_HPP_
