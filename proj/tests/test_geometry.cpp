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

#include "qtetra/classical_geometry.hpp"

namespace qtetra {
namespace {

// Interior angle at edge PQ between faces PQR and PQS, from the components of
// R and S perpendicular to the edge.
double edge_cosine(const Vec3& p, const Vec3& q, const Vec3& r, const Vec3& s) {
  const Vec3 e = (q - p).normalized();
  const Vec3 u = (r - p) - (r - p).dot(e) * e;
  const Vec3 w = (s - p) - (s - p).dot(e) * e;
  return u.dot(w) / (u.norm() * w.norm());
}

VertexSet random_tetrahedron(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    VertexSet v;
    for (Vec3& p : v) p = Vec3(g(rng), g(rng), g(rng));
    const double vol = std::abs((v[1] - v[0]).cross(v[2] - v[0]).dot(v[3] - v[0]));
    const auto edges = sorted_edge_lengths(v);
    // Skip slivers: keep the problem well conditioned.
    if (vol > 0.15 * std::pow(edges[5], 3) / 6.0 * 0.5) return v;
  }
}

VertexSet unit_regular() {
  return {Vec3(1, 1, 1), Vec3(1, -1, -1), Vec3(-1, 1, -1), Vec3(-1, -1, 1)};
}

TEST(Geometry, ClosureOfVertexBuiltAreas) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) EXPECT_LT(closure_defect_classical(areas_from_vertices(random_tetrahedron(rng))), 1e-12);
  AreaVectorSet same{{Vec3(1, 0, 0), Vec3(1, 0, 0), Vec3(1, 0, 0), Vec3(1, 0, 0)}};
  EXPECT_DOUBLE_EQ(closure_defect_classical(same), 4.0);
}

TEST(Geometry, RegularAreaVectors) {
  const AreaVectorSet e = areas_from_vertices(unit_regular());
  const double a2 = e.E[0].squaredNorm();
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(e.E[k].squaredNorm(), a2, 1e-12);
    for (int m = k + 1; m < 4; ++m) EXPECT_NEAR(e.E[k].dot(e.E[m]), -a2 / 3, 1e-12);
  }
}

TEST(Geometry, CornerTetrahedronFaceBCD) {
  const VertexSet v = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
  EXPECT_NEAR(areas_from_vertices(v).E[3].norm(), std::sqrt(3.0) / 2, 1e-15);
  // Outward: away from A.
  EXPECT_GT(areas_from_vertices(v).E[3].dot(Vec3(1, 1, 1)), 0.0);
}

TEST(Geometry, CoplanarRejected) {
  const VertexSet v = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(1, 1, 0)};
  EXPECT_THROW(areas_from_vertices(v), std::invalid_argument);
}

TEST(Geometry, DihedralCosinesMatchEdgeOracle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const VertexSet v = random_tetrahedron(rng);
    const auto c = dihedral_cosines(v, DihedralConvention::interior);
    // Faces 1 = ABC and 2 = ACD share AC; faces 1 and 3 = ABD share AB.
    EXPECT_NEAR(c[0], edge_cosine(v[0], v[2], v[1], v[3]), 1e-12);
    EXPECT_NEAR(c[1], edge_cosine(v[0], v[1], v[2], v[3]), 1e-12);
    const auto n = dihedral_cosines(v, DihedralConvention::normals);
    EXPECT_NEAR(n[0], -c[0], 1e-12);
    EXPECT_NEAR(n[1], -c[1], 1e-12);
  }
}

TEST(Geometry, GaugePreservesShape) {
  std::mt19937_64 rng(8);
  const VertexSet v = random_tetrahedron(rng);
  const TetrahedronVertices g = to_gauge(v);
  EXPECT_GT(g.a, 0.0);
  EXPECT_GT(g.c, 0.0);
  EXPECT_GT(g.f, 0.0);
  const auto e0 = sorted_edge_lengths(v), e1 = sorted_edge_lengths(g.points());
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(e0[i], e1[i], 1e-12);
}

TEST(Geometry, RoundTripHundredRandom) {
  std::mt19937_64 rng(2024), solver(99);
  for (int trial = 0; trial < 100; ++trial) {
    const VertexSet v = random_tetrahedron(rng);
    const AreaVectorSet e = areas_from_vertices(v);
    const auto c = dihedral_cosines(v, DihedralConvention::interior);
    const Reconstruction r = reconstruct({e.E[0].norm(), e.E[1].norm(), e.E[2].norm(), e.E[3].norm()}, c[0], c[1],
                                         DihedralConvention::interior, solver);
    const auto want = sorted_edge_lengths(v), got = sorted_edge_lengths(r.vertices.points());
    for (int i = 0; i < 6; ++i) EXPECT_NEAR(got[i], want[i], 1e-8) << "trial " << trial;
    EXPECT_EQ(r.solutions.size(), 1u) << "trial " << trial;
  }
}

TEST(Geometry, RegularInputsGiveEquilateral) {
  std::mt19937_64 rng(1);
  const Reconstruction r = reconstruct({1, 1, 1, 1}, 1.0 / 3, 1.0 / 3, DihedralConvention::interior, rng);
  const auto e = sorted_edge_lengths(r.vertices.points());
  // Unit face area: edge^2 sqrt(3)/4 = 1.
  const double edge = std::sqrt(4.0 / std::sqrt(3.0));
  for (double x : e) EXPECT_NEAR(x, edge, 1e-8);
}

TEST(Geometry, NormalsConventionInput) {
  std::mt19937_64 rng(1);
  const Reconstruction r = reconstruct({1, 1, 1, 1}, -1.0 / 3, -1.0 / 3, DihedralConvention::normals, rng);
  const auto e = sorted_edge_lengths(r.vertices.points());
  EXPECT_NEAR(e[0], e[5], 1e-8);
}

TEST(Geometry, OversizedFaceIsInfeasible) {
  std::mt19937_64 rng(1);
  try {
    reconstruct({1, 1, 1, 10}, 0.3, 0.3, DihedralConvention::interior, rng);
    FAIL() << "expected InfeasibleGeometry";
  } catch (const InfeasibleGeometry& e) {
    EXPECT_GT(e.best_residual(), 1e-8);
  }
}

TEST(Geometry, InvalidArguments) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(reconstruct({1, 1, 0, 1}, 0.3, 0.3, DihedralConvention::interior, rng), std::invalid_argument);
  EXPECT_THROW(reconstruct({1, 1, 1, 1}, 1.5, 0.3, DihedralConvention::interior, rng), std::invalid_argument);
}

TEST(Geometry, BlochPointGeometry) {
  std::mt19937_64 rng(4);
  const Reconstruction reg = expectations_to_geometry(BlochPoint(kPi / 2, 3 * kPi / 2), rng);
  const auto e = sorted_edge_lengths(reg.vertices.points());
  EXPECT_NEAR(e[0], e[5], 1e-8);

  // cos12 = 1 folds faces 1 and 2 together.
  EXPECT_THROW(expectations_to_geometry(BlochPoint(0.0, 0.0), rng), InfeasibleGeometry);

  const BlochPoint p(4 * kPi / 5, 0.0);
  const Reconstruction r = expectations_to_geometry(p, rng);
  const AreaVectorSet areas = areas_from_vertices(r.vertices);
  for (const Vec3& a : areas.E) EXPECT_NEAR(a.norm(), std::sqrt(0.75), 1e-8);
  const auto c = dihedral_cosines(r.vertices.points(), DihedralConvention::interior);
  EXPECT_NEAR(c[0], dihedral_expectation(p, DihedralPair(1, 2)), 1e-8);
  EXPECT_NEAR(c[1], dihedral_expectation(p, DihedralPair(1, 3)), 1e-8);
}

TEST(Geometry, EachInputMovesTheShape) {
  std::mt19937_64 rng(21), solver(3);
  const VertexSet v = random_tetrahedron(rng);
  const AreaVectorSet e = areas_from_vertices(v);
  const auto c = dihedral_cosines(v, DihedralConvention::interior);
  std::array<double, 6> base = {e.E[0].norm(), e.E[1].norm(), e.E[2].norm(), e.E[3].norm(), c[0], c[1]};
  const auto original = sorted_edge_lengths(v);
  for (int i = 0; i < 6; ++i) {
    auto in = base;
    in[static_cast<std::size_t>(i)] += 1e-4;
    const Reconstruction r =
        reconstruct({in[0], in[1], in[2], in[3]}, in[4], in[5], DihedralConvention::interior, solver);
    const auto moved = sorted_edge_lengths(r.vertices.points());
    double diff = 0.0;
    for (int k = 0; k < 6; ++k) diff = std::max(diff, std::abs(moved[k] - original[k]));
    EXPECT_GT(diff, 1e-7) << "input " << i;
  }
}

}  // namespace
}  // namespace qtetra
