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

// Euclidean tetrahedra: closure of area vectors and reconstruction of the
// shape from four face areas plus two dihedral cosines.
//
// Faces are labelled ABC = 1, ACD = 2, ABD = 3, BCD = 4. Dihedral (1,2) is
// along edge AC and (1,3) along edge AB.

#ifndef QTETRA_CLASSICAL_GEOMETRY_HPP_
#define QTETRA_CLASSICAL_GEOMETRY_HPP_

#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qtetra/tetrahedron.hpp"

namespace qtetra {

using Vec3 = Eigen::Vector3d;
using VertexSet = std::array<Vec3, 4>;  // A, B, C, D

/// Outward area vectors E^(1..4); |E^(k)| is the area of face k.
struct AreaVectorSet {
  std::array<Vec3, 4> E;
};

/// A = 0, B = (a, 0, 0), C = (b, c, 0), D = (d, e, f).
struct TetrahedronVertices {
  double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  VertexSet points() const;
  /// Six times the signed volume, a*c*f.
  double six_volume() const { return a * c * f; }
};

class InfeasibleGeometry : public std::runtime_error {
 public:
  InfeasibleGeometry(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

/// ||E1 + E2 + E3 + E4||.
double closure_defect_classical(const AreaVectorSet& areas);

/// Half cross products, each oriented away from the opposite vertex.
/// Throws std::invalid_argument for coplanar vertices.
AreaVectorSet areas_from_vertices(const VertexSet& v);
AreaVectorSet areas_from_vertices(const TetrahedronVertices& t);

/// (cos12, cos13) of a vertex set in the requested convention.
std::array<double, 2> dihedral_cosines(const VertexSet& v, DihedralConvention convention);

/// The six edge lengths, ascending.
std::array<double, 6> sorted_edge_lengths(const VertexSet& v);

/// Rigid motion (and reflection) into the gauge with a, c, f > 0.
TetrahedronVertices to_gauge(const VertexSet& v);

struct ReconstructOptions {
  int restarts = 32;
  int max_iterations = 200;
  double convergence_tol = 1e-12;
  double acceptance_tol = 1e-8;
  /// a*c*f / mean_area^{3/2} below this counts as a flat (degenerate) solution.
  double min_volume_ratio = 1e-6;
};

struct Reconstruction {
  TetrahedronVertices vertices;
  double residual = 0.0;
  /// Every distinct congruence class that met the acceptance tolerance,
  /// the returned `vertices` first.
  std::vector<TetrahedronVertices> solutions;
};

/// Solves the six area/dihedral constraints for {a, ..., f} with damped least
/// squares and random restarts drawn from `rng`.
/// Throws InfeasibleGeometry carrying the best residual when nothing converges.
Reconstruction reconstruct(const std::array<double, 4>& areas, double cos12, double cos13,
                           DihedralConvention convention, std::mt19937_64& rng,
                           const ReconstructOptions& options = {});

/// Equal areas sqrt(3/4) and the interior expectations of the Bloch point.
Reconstruction expectations_to_geometry(const BlochPoint& point, std::mt19937_64& rng,
                                        const ReconstructOptions& options = {});

}  // namespace qtetra

#endif  // QTETRA_CLASSICAL_GEOMETRY_HPP_
