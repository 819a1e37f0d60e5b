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

#include "qtetra/tetrahedron.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qtetra {

namespace {

DenseOperator dot_product(int k, int m) {
  DenseOperator sum = DenseOperator::zero(4);
  for (Axis a : {Axis::x, Axis::y, Axis::z}) {
    sum = sum + angular_momentum(a, k, 4) * angular_momentum(a, m, 4);
  }
  return DenseOperator(4, sum.entries(), true);
}

void check_face(int face) {
  if (face < 1 || face > 4) {
    throw std::out_of_range("face label " + std::to_string(face) + " not in [1, 4]");
  }
}

// Sorts the pair and maps it to the independent dihedral it equals in
// expectation: (3,4) -> (1,2), (2,4) -> (1,3), (2,3) -> (1,4).
int independent_partner(const DihedralPair& pair) {
  const int lo = std::min(pair.k(), pair.m());
  const int hi = std::max(pair.k(), pair.m());
  if ((lo == 1 && hi == 2) || (lo == 3 && hi == 4)) return 2;
  if ((lo == 1 && hi == 3) || (lo == 2 && hi == 4)) return 3;
  return 4;
}

}  // namespace

BlochPoint::BlochPoint(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::invalid_argument("BlochPoint: theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
    throw std::invalid_argument("BlochPoint: phi must lie in [0, 2*pi)");
  }
}

std::array<Complex, 2> BlochPoint::coefficients() const {
  return {Complex(std::cos(theta_ / 2.0), 0.0), std::polar(std::sin(theta_ / 2.0), phi_)};
}

DihedralPair::DihedralPair(int k, int m) : k_(k), m_(m) {
  check_face(k);
  check_face(m);
  if (k == m) throw std::invalid_argument("DihedralPair: faces must differ");
}

std::pair<StateVector, StateVector> logical_basis() {
  auto ket = [](const char* bits) { return StateVector::from_bits(bits); };
  const StateVector zero = 0.5 * (ket("0101") - ket("0110") - ket("1001") + ket("1010"));
  const StateVector one =
      (1.0 / std::sqrt(3.0)) *
      (ket("1100") + ket("0011") -
       0.5 * (ket("0101") + ket("0110") + ket("1001") + ket("1010")));
  return {zero, one};
}

InvariantTensor bloch_state(const BlochPoint& point) {
  const auto [zero, one] = logical_basis();
  const auto c = point.coefficients();
  return InvariantTensor{point, c[0] * zero + c[1] * one};
}

double area_eigenvalue(HalfInt spin) {
  if (spin != HalfInt::half(1)) {
    throw std::invalid_argument("area_eigenvalue: only spin 1/2 is supported");
  }
  const double j = spin.value();
  return std::sqrt(j * (j + 1.0));
}

DenseOperator area_operator(int face) {
  check_face(face);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(dot_product(face, face).entries());
  const Eigen::VectorXd roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  CMatrix m = eig.eigenvectors() * roots.asDiagonal() * eig.eigenvectors().adjoint();
  CMatrix sym = 0.5 * (m + m.adjoint());
  return DenseOperator(4, std::move(sym), true);
}

DenseOperator dihedral_operator(const DihedralPair& pair, DihedralConvention convention) {
  const double sign = convention == DihedralConvention::normals ? 1.0 : -1.0;
  return (sign * 4.0 / 3.0) * dot_product(pair.k(), pair.m());
}

Eigen::Matrix2cd logical_block(const DenseOperator& op) {
  if (op.n_qubits() != 4) throw std::invalid_argument("logical_block: expected 4 qubits");
  const auto [zero, one] = logical_basis();
  const std::array<const StateVector*, 2> basis = {&one, &zero};
  Eigen::Matrix2cd block;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      block(r, c) = basis[r]->inner(op.apply(*basis[c]));
    }
  }
  return block;
}

double dihedral_expectation(const BlochPoint& point, const DihedralPair& pair,
                            DihedralConvention convention) {
  return dihedral_operator(pair, convention).expectation(bloch_state(point).embedded).real();
}

double dihedral_closed_form(const BlochPoint& point, const DihedralPair& pair) {
  const double c = std::cos(point.theta() / 2.0);
  const double s = std::sin(point.theta() / 2.0);
  const double cross = 2.0 * std::sqrt(3.0) / 3.0 * c * s * std::cos(point.phi());
  switch (independent_partner(pair)) {
    case 2:
      return c * c - s * s / 3.0;
    case 3:
      return 2.0 / 3.0 * s * s + cross;
    default:
      return 2.0 / 3.0 * s * s - cross;
  }
}

double dihedral_variance(const StateVector& state, const DihedralPair& pair,
                         DihedralConvention convention) {
  const DenseOperator m = dihedral_operator(pair, convention);
  const double mean = m.expectation(state).real();
  const double second = (m * m).expectation(state).real();
  return second - mean * mean;
}

double fluctuation(const BlochPoint& point) {
  const double c = std::cos(point.theta() / 2.0);
  const double s = std::sin(point.theta() / 2.0);
  const double cp = std::cos(point.phi());
  return 2.0 / 3.0 + 8.0 / 3.0 * c * c * s * s * (1.0 - cp * cp);
}

double fluctuation_from_operators(const BlochPoint& point) {
  const StateVector psi = bloch_state(point).embedded;
  double total = 0.0;
  for (int m : {2, 3, 4}) total += dihedral_variance(psi, DihedralPair(1, m));
  return total;
}

std::vector<BlochPoint> regular_points() {
  // <cos12> = cos^2(t/2) - sin^2(t/2)/3 = 1/3 gives cos^2(t/2) = 1/2.
  const double theta = 2.0 * std::acos(std::sqrt(0.5));
  // With cos^2 = sin^2 = 1/2, <cos13> = 1/3 + (sqrt(3)/3) cos(phi) = 1/3
  // forces cos(phi) = 0; <cos14> then follows from the sum rule.
  const double first = std::acos(0.0);
  return {BlochPoint(theta, first), BlochPoint(theta, 2.0 * kPi - first)};
}

}  // namespace qtetra
