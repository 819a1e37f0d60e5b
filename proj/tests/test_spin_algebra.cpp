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

#include <Eigen/Eigenvalues>

#include "qtetra/spin_algebra.hpp"

namespace qtetra {
namespace {

// Spin-j ladder matrices in the |j, m> basis, m = j, j-1, ..., -j.
struct SpinMatrices {
  Eigen::MatrixXd jz, jp;
};

SpinMatrices spin_matrices(int twice_j) {
  const int d = twice_j + 1;
  SpinMatrices s{Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d)};
  const double j = twice_j / 2.0;
  for (int i = 0; i < d; ++i) {
    const double m = j - i;
    s.jz(i, i) = m;
    if (i > 0) s.jp(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  return s;
}

// Oracle: highest weight |J,J> from diagonalizing J^2 in the M = J block,
// sign fixed by <j1 j1; j2 J-j1|J J> > 0, then lowered with J-.
double cg_oracle(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
  const SpinMatrices a = spin_matrices(tj1), b = spin_matrices(tj2);
  const int d1 = tj1 + 1, d2 = tj2 + 1;
  const Eigen::MatrixXd i1 = Eigen::MatrixXd::Identity(d1, d1), i2 = Eigen::MatrixXd::Identity(d2, d2);
  auto kron = [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    Eigen::MatrixXd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (int r = 0; r < x.rows(); ++r)
      for (int c = 0; c < x.cols(); ++c) out.block(r * y.rows(), c * y.cols(), y.rows(), y.cols()) = x(r, c) * y;
    return out;
  };
  const Eigen::MatrixXd jz = kron(a.jz, i2) + kron(i1, b.jz);
  const Eigen::MatrixXd jp = kron(a.jp, i2) + kron(i1, b.jp);
  const Eigen::MatrixXd jm = jp.transpose();
  const Eigen::MatrixXd j2 = jm * jp + jz * jz + jz;
  const double J = tJ / 2.0;
  // Restrict J^2 to the M = J block.
  std::vector<int> idx;
  for (int k = 0; k < jz.rows(); ++k)
    if (std::abs(jz(k, k) - J) < 1e-9) idx.push_back(k);
  Eigen::MatrixXd block(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) block(r, c) = j2(idx[r], idx[c]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block);
  Eigen::VectorXd top = Eigen::VectorXd::Zero(jz.rows());
  for (int e = 0; e < es.eigenvalues().size(); ++e) {
    if (std::abs(es.eigenvalues()[e] - J * (J + 1)) < 1e-8) {
      for (std::size_t r = 0; r < idx.size(); ++r) top[idx[r]] = es.eigenvectors()(r, e);
    }
  }
  // m1 = j1 is row 0 of the first factor.
  const int anchor = (tj2 - (tJ - tj1)) / 2;  // row of m1 = j1
  if (top[anchor] < 0) top = -top;
  Eigen::VectorXd v = top;
  for (int m2 = tJ; m2 > tM; m2 -= 2) v = (jm * v).normalized();
  const int row = (tj1 - tm1) / 2 * d2 + (tj2 - tm2) / 2;
  return v[row];
}

TEST(SpinAlgebra, CommutationRelations) {
  for (int n : {1, 2, 4}) {
    for (int k = 1; k <= n; ++k) {
      const auto x = angular_momentum(Axis::x, k, n), y = angular_momentum(Axis::y, k, n),
                 z = angular_momentum(Axis::z, k, n);
      EXPECT_LT(max_abs_diff(commutator(x, y).entries(), (Complex(0, 1) * z).entries()), 1e-12);
      EXPECT_LT(max_abs_diff(commutator(y, z).entries(), (Complex(0, 1) * x).entries()), 1e-12);
      EXPECT_LT(max_abs_diff(commutator(z, x).entries(), (Complex(0, 1) * y).entries()), 1e-12);
    }
  }
  // Different qubits commute.
  EXPECT_LT(commutator(angular_momentum(Axis::x, 1, 3), angular_momentum(Axis::y, 2, 3)).entries().norm(), 1e-14);
}

TEST(SpinAlgebra, PauliSquaresToIdentity) {
  for (Axis a : {Axis::x, Axis::y, Axis::z}) {
    const auto p = pauli_embedded(a, 2, 3);
    EXPECT_LT(max_abs_diff((p * p).entries(), DenseOperator::identity(3).entries()), 1e-14);
  }
  EXPECT_THROW(pauli_embedded(Axis::x, 0, 3), std::out_of_range);
  EXPECT_THROW(pauli_embedded(Axis::x, 4, 3), std::out_of_range);
}

TEST(SpinAlgebra, BitOrderingQubitOneIsMostSignificant) {
  const StateVector s = StateVector::from_bits("1000");
  EXPECT_EQ(s[8], Complex(1.0, 0.0));
  const auto z1 = pauli_embedded(Axis::z, 1, 4);
  EXPECT_NEAR(z1.expectation(s).real(), -1.0, 1e-15);
}

TEST(SpinAlgebra, SingleQubitCasimir) {
  const auto c = total_casimir(1);
  EXPECT_LT(max_abs_diff(c.entries(), (0.75 * DenseOperator::identity(1)).entries()), 1e-14);
}

TEST(SpinAlgebra, CgKnownValues) {
  const HalfInt h = HalfInt::half(1), mh = HalfInt::half(-1), zero{}, one = HalfInt::integer(1);
  EXPECT_NEAR(cg_coefficient({h, h, zero, zero}, h, mh), 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(cg_coefficient({h, h, zero, zero}, mh, h), -1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(cg_coefficient({h, h, one, zero}, h, mh), 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(cg_coefficient({h, h, one, one}, h, h), 1.0, 1e-14);
  EXPECT_EQ(cg_coefficient({h, h, one, one}, h, mh), 0.0);
  EXPECT_THROW(cg_coefficient({h, h, HalfInt::integer(2), zero}, h, mh), std::invalid_argument);
  EXPECT_THROW(cg_coefficient({h, h, one, zero}, HalfInt::half(3), mh), std::invalid_argument);
}

TEST(SpinAlgebra, CgMatchesDiagonalizationOracle) {
  for (int tj1 = 0; tj1 <= 4; ++tj1) {
    for (int tj2 = 0; tj2 <= 3; ++tj2) {
      for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2) {
        for (int tM = -tJ; tM <= tJ; tM += 2) {
          for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
            const int tm2 = tM - tm1;
            if (std::abs(tm2) > tj2) continue;
            const double got = cg_coefficient({HalfInt{tj1}, HalfInt{tj2}, HalfInt{tJ}, HalfInt{tM}},
                                              HalfInt{tm1}, HalfInt{tm2});
            EXPECT_NEAR(got, cg_oracle(tj1, tm1, tj2, tm2, tJ, tM), 1e-12)
                << tj1 << ' ' << tm1 << ' ' << tj2 << ' ' << tm2 << ' ' << tJ << ' ' << tM;
          }
        }
      }
    }
  }
}

TEST(SpinAlgebra, CgOrthogonality) {
  for (int tj1 = 1; tj1 <= 3; ++tj1) {
    for (int tj2 = 1; tj2 <= 3; ++tj2) {
      for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2) {
        for (int tK = std::abs(tj1 - tj2); tK <= tj1 + tj2; tK += 2) {
          for (int tM = -std::min(tJ, tK); tM <= std::min(tJ, tK); tM += 2) {
            double sum = 0.0;
            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
              const int tm2 = tM - tm1;
              if (std::abs(tm2) > tj2) continue;
              sum += cg_coefficient({HalfInt{tj1}, HalfInt{tj2}, HalfInt{tJ}, HalfInt{tM}}, HalfInt{tm1},
                                    HalfInt{tm2}) *
                     cg_coefficient({HalfInt{tj1}, HalfInt{tj2}, HalfInt{tK}, HalfInt{tM}}, HalfInt{tm1},
                                    HalfInt{tm2});
            }
            EXPECT_NEAR(sum, tJ == tK ? 1.0 : 0.0, 1e-12);
          }
        }
      }
    }
  }
}

TEST(SpinAlgebra, TriangleCondition) {
  EXPECT_TRUE(satisfies_triangle(HalfInt::half(1), HalfInt::half(1), HalfInt::integer(0)));
  EXPECT_FALSE(satisfies_triangle(HalfInt::half(1), HalfInt::half(1), HalfInt::half(1)));
  EXPECT_FALSE(satisfies_triangle(HalfInt::half(1), HalfInt::half(1), HalfInt::integer(2)));
}

TEST(SpinAlgebra, InvariantProjectorRanks) {
  EXPECT_EQ(projector_rank(invariant_projector(2)), 1);
  EXPECT_EQ(projector_rank(invariant_projector(3)), 0);
  EXPECT_EQ(projector_rank(invariant_projector(4)), 2);
  EXPECT_EQ(projector_rank(invariant_projector(6)), 5);
  const auto p = invariant_projector(4);
  EXPECT_LT(max_abs_diff((p * p).entries(), p.entries()), 1e-12);
}

TEST(SpinAlgebra, ClosureDefectOfSinglet) {
  const StateVector four = Complex(0.5) * (StateVector::from_bits("0101") - StateVector::from_bits("0110") -
                                            StateVector::from_bits("1001") + StateVector::from_bits("1010"));
  EXPECT_LT(closure_defect(four), 1e-14);
  EXPECT_GT(closure_defect(StateVector::from_bits("0000")), 1.0);
}

TEST(SpinAlgebra, RejectsMalformedInputs) {
  EXPECT_THROW(StateVector(2, CVector::Zero(3)), std::invalid_argument);
  EXPECT_THROW(StateVector::from_bits("01x"), std::invalid_argument);
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(DenseOperator(1, m, true), std::invalid_argument);
}

}  // namespace
}  // namespace qtetra
