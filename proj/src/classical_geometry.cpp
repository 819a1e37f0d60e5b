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

#include "qtetra/classical_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qtetra {

namespace {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// (face vertex indices, opposite vertex index) in face-label order.
constexpr std::array<std::array<int, 4>, 4> kFaces = {{
    {0, 1, 2, 3},  // ABC
    {0, 2, 3, 1},  // ACD
    {0, 1, 3, 2},  // ABD
    {1, 2, 3, 0},  // BCD
}};

AreaVectorSet oriented_areas(const VertexSet& v) {
  AreaVectorSet out;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& f = kFaces[k];
    const Vec3& p = v[f[0]];
    Vec3 n = 0.5 * (v[f[1]] - p).cross(v[f[2]] - p);
    if (n.dot(v[f[3]] - p) > 0.0) n = -n;
    out.E[k] = n;
  }
  return out;
}

double max_edge(const VertexSet& v) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) m = std::max(m, (v[i] - v[j]).norm());
  return m;
}

std::array<double, 2> cosines_of(const AreaVectorSet& areas, DihedralConvention convention) {
  const double sign = convention == DihedralConvention::interior ? -1.0 : 1.0;
  const auto& E = areas.E;
  return {sign * E[0].dot(E[1]) / (E[0].norm() * E[1].norm()),
          sign * E[0].dot(E[2]) / (E[0].norm() * E[2].norm())};
}

TetrahedronVertices from_vec(const Vec6& x) {
  return TetrahedronVertices{x[0], x[1], x[2], x[3], x[4], x[5]};
}

// Reflections y -> -y, z -> -z and x -> -x leave every area and dihedral
// unchanged; use them to land in the a, c, f > 0 gauge.
TetrahedronVertices fix_orientation(TetrahedronVertices t) {
  if (t.a < 0) {
    t.a = -t.a;
    t.b = -t.b;
    t.d = -t.d;
  }
  if (t.c < 0) {
    t.c = -t.c;
    t.e = -t.e;
  }
  if (t.f < 0) t.f = -t.f;
  return t;
}

class ShapeProblem {
 public:
  ShapeProblem(const std::array<double, 4>& areas, double cos12, double cos13,
               DihedralConvention convention)
      : areas_(areas), cos12_(cos12), cos13_(cos13), convention_(convention) {}

  Vec6 residual(const Vec6& x) const {
    const AreaVectorSet E = oriented_areas(from_vec(x).points());
    Vec6 r;
    for (int k = 0; k < 4; ++k) r[k] = E.E[k].norm() / areas_[k] - 1.0;
    const auto cos = cosines_of(E, convention_);
    r[4] = cos[0] - cos12_;
    r[5] = cos[1] - cos13_;
    for (int i = 0; i < 6; ++i) {
      if (!std::isfinite(r[i])) r[i] = 1e6;
    }
    return r;
  }

  Mat6 jacobian(const Vec6& x, double h) const {
    Mat6 J;
    for (int i = 0; i < 6; ++i) {
      Vec6 up = x, down = x;
      up[i] += h;
      down[i] -= h;
      J.col(i) = (residual(up) - residual(down)) / (2.0 * h);
    }
    return J;
  }

 private:
  std::array<double, 4> areas_;
  double cos12_;
  double cos13_;
  DihedralConvention convention_;
};

struct Attempt {
  Vec6 x;
  double residual;
};

Attempt levenberg_marquardt(const ShapeProblem& problem, Vec6 x, double scale,
                            const ReconstructOptions& options) {
  Vec6 r = problem.residual(x);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  const double h = 1e-7 * scale;
  for (int it = 0; it < options.max_iterations; ++it) {
    if (std::sqrt(cost) < options.convergence_tol) break;
    const Mat6 J = problem.jacobian(x, h);
    const Mat6 A = J.transpose() * J;
    const Vec6 g = J.transpose() * r;
    bool accepted = false;
    Vec6 step = Vec6::Zero();
    for (int tries = 0; tries < 20 && !accepted; ++tries) {
      Mat6 damped = A;
      damped.diagonal() += lambda * A.diagonal() + Vec6::Constant(1e-14 * lambda);
      step = damped.colPivHouseholderQr().solve(-g);
      const Vec6 trial = x + step;
      const Vec6 trial_r = problem.residual(trial);
      const double trial_cost = trial_r.squaredNorm();
      if (trial_cost < cost) {
        x = trial;
        r = trial_r;
        cost = trial_cost;
        lambda = std::max(lambda / 3.0, 1e-15);
        accepted = true;
      } else {
        lambda *= 4.0;
      }
    }
    if (!accepted || step.norm() < 1e-16 * (1.0 + x.norm())) break;
  }
  return {x, std::sqrt(cost)};
}

bool same_shape(const TetrahedronVertices& p, const TetrahedronVertices& q) {
  const auto a = sorted_edge_lengths(p.points());
  const auto b = sorted_edge_lengths(q.points());
  for (int i = 0; i < 6; ++i) {
    if (std::abs(a[i] - b[i]) > 1e-6 * std::max(1.0, b[5])) return false;
  }
  return true;
}

}  // namespace

VertexSet TetrahedronVertices::points() const {
  return {Vec3(0, 0, 0), Vec3(a, 0, 0), Vec3(b, c, 0), Vec3(d, e, f)};
}

double closure_defect_classical(const AreaVectorSet& areas) {
  return (areas.E[0] + areas.E[1] + areas.E[2] + areas.E[3]).norm();
}

AreaVectorSet areas_from_vertices(const VertexSet& v) {
  const double six_volume = std::abs((v[1] - v[0]).dot((v[2] - v[0]).cross(v[3] - v[0])));
  const double scale = max_edge(v);
  if (!(scale > 0.0) || six_volume <= 1e-12 * scale * scale * scale) {
    throw std::invalid_argument("areas_from_vertices: vertices are coplanar");
  }
  return oriented_areas(v);
}

AreaVectorSet areas_from_vertices(const TetrahedronVertices& t) {
  return areas_from_vertices(t.points());
}

std::array<double, 2> dihedral_cosines(const VertexSet& v, DihedralConvention convention) {
  return cosines_of(areas_from_vertices(v), convention);
}

std::array<double, 6> sorted_edge_lengths(const VertexSet& v) {
  std::array<double, 6> out{};
  std::size_t n = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) out[n++] = (v[i] - v[j]).norm();
  std::sort(out.begin(), out.end());
  return out;
}

TetrahedronVertices to_gauge(const VertexSet& v) {
  const Vec3 ab = v[1] - v[0];
  const Vec3 ac = v[2] - v[0];
  const Vec3 ad = v[3] - v[0];
  const Vec3 ex = ab.normalized();
  const Vec3 ey = (ac - ac.dot(ex) * ex).normalized();
  const Vec3 ez = ex.cross(ey);
  TetrahedronVertices t{ab.norm(), ac.dot(ex), ac.dot(ey), ad.dot(ex), ad.dot(ey), ad.dot(ez)};
  return fix_orientation(t);
}

Reconstruction reconstruct(const std::array<double, 4>& areas, double cos12, double cos13,
                           DihedralConvention convention, std::mt19937_64& rng,
                           const ReconstructOptions& options) {
  for (double a : areas) {
    if (!(a > 0.0)) throw std::invalid_argument("reconstruct: areas must be positive");
  }
  if (!(std::abs(cos12) <= 1.0) || !(std::abs(cos13) <= 1.0)) {
    throw std::invalid_argument("reconstruct: dihedral cosines must lie in [-1, 1]");
  }

  const double mean_area = (areas[0] + areas[1] + areas[2] + areas[3]) / 4.0;
  const double edge = std::sqrt(4.0 * mean_area / std::sqrt(3.0));
  Vec6 regular;
  regular << edge, edge / 2, edge * std::sqrt(3.0) / 2, edge / 2, edge * std::sqrt(3.0) / 6,
      edge * std::sqrt(2.0 / 3.0);

  const ShapeProblem problem(areas, cos12, cos13, convention);
  std::normal_distribution<double> jitter(0.0, 0.7);
  double best_residual = std::numeric_limits<double>::infinity();
  bool saw_flat = false;
  std::vector<std::pair<double, TetrahedronVertices>> found;

  for (int restart = 0; restart < options.restarts; ++restart) {
    Vec6 seed = regular;
    if (restart > 0) {
      for (int i = 0; i < 6; ++i) seed[i] += edge * jitter(rng);
      seed[0] = std::abs(seed[0]);
      seed[2] = std::abs(seed[2]);
      seed[5] = std::abs(seed[5]);
    }
    const Attempt attempt = levenberg_marquardt(problem, seed, edge, options);
    best_residual = std::min(best_residual, attempt.residual);
    if (!(attempt.residual < options.acceptance_tol)) continue;
    const TetrahedronVertices t = fix_orientation(from_vec(attempt.x));
    if (t.six_volume() < options.min_volume_ratio * std::pow(mean_area, 1.5)) {
      saw_flat = true;
      continue;
    }
    auto same = std::find_if(found.begin(), found.end(),
                             [&](const auto& s) { return same_shape(s.second, t); });
    if (same == found.end()) {
      found.emplace_back(attempt.residual, t);
    } else if (attempt.residual < same->first) {
      *same = {attempt.residual, t};
    }
  }

  if (found.empty()) {
    std::ostringstream msg;
    msg << (saw_flat ? "degenerate geometry: only flat solutions found"
                     : "infeasible geometry: no solution")
        << " (best residual " << best_residual << ")";
    throw InfeasibleGeometry(msg.str(), best_residual);
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  Reconstruction out;
  out.vertices = found.front().second;
  out.residual = found.front().first;
  for (const auto& s : found) out.solutions.push_back(s.second);
  return out;
}

Reconstruction expectations_to_geometry(const BlochPoint& point, std::mt19937_64& rng,
                                        const ReconstructOptions& options) {
  const double area = area_eigenvalue(HalfInt::half(1));
  const double cos12 = dihedral_expectation(point, DihedralPair(1, 2));
  const double cos13 = dihedral_expectation(point, DihedralPair(1, 3));
  return reconstruct({area, area, area, area}, std::clamp(cos12, -1.0, 1.0),
                     std::clamp(cos13, -1.0, 1.0), DihedralConvention::interior, rng, options);
}

}  // namespace qtetra
