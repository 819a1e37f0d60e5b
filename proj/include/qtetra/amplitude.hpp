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

// Vertex amplitude of five 4-qubit node states glued pairwise by singlets
// over the complete graph K5.
//
// Nodes are numbered 0..4 and slots 0..3; slot s of a node is its qubit s+1.

#ifndef QTETRA_AMPLITUDE_HPP_
#define QTETRA_AMPLITUDE_HPP_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "qtetra/spin_algebra.hpp"
#include "qtetra/tetrahedron.hpp"

namespace qtetra {

inline constexpr int kNodes = 5;
inline constexpr int kSlots = 4;
inline constexpr int kLinks = 10;

struct Endpoint {
  int node = 0;
  int slot = 0;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// The singlet's first tensor factor attaches to `first`.
struct Link {
  Endpoint first;
  Endpoint second;
};

class SpinNetworkGraph {
 public:
  /// Throws std::invalid_argument unless every (node, slot) is used exactly
  /// once and the links cover each unordered node pair exactly once.
  explicit SpinNetworkGraph(std::vector<Link> links);

  const std::vector<Link>& links() const { return links_; }

 private:
  std::vector<Link> links_;
};

using NodeStates = std::array<StateVector, kNodes>;

struct AmplitudeResult {
  Complex value;
  double magnitude = 0.0;
  /// arg(value) in (-pi, pi].
  double phase = 0.0;

  static AmplitudeResult from(Complex value);
};

/// (|01> - |10>)/sqrt(2).
StateVector singlet();

/// Links (n, m), n < m, in lexicographic order; node n gives its slots 0..3 to
/// its partners in increasing order; the lower node holds the first factor.
SpinNetworkGraph canonical_k5();

/// Reassigns node's slots: an endpoint at slot s moves to slot perm[s].
SpinNetworkGraph permute_slots(const SpinNetworkGraph& graph, int node,
                               const std::array<int, 4>& perm);

/// Swaps which endpoint carries the singlet's first factor on one link.
SpinNetworkGraph reverse_link(const SpinNetworkGraph& graph, std::size_t link);

/// Node n becomes sigma[n]. With `lower_first`, links are re-oriented so the
/// lower-numbered node holds the first factor; returns the number flipped.
SpinNetworkGraph relabel_nodes(const SpinNetworkGraph& graph, const std::array<int, 5>& sigma,
                               bool lower_first, int* flipped = nullptr);

/// The state psi' with qubit s of psi' equal to qubit perm[s] of psi, so that
/// A(permute_slots(g, n, perm), ..., psi, ...) == A(g, ..., psi', ...).
StateVector permute_qubits(const StateVector& psi, const std::array<int, 4>& perm);

/// Contracts link by link, materializing each node on first touch. Links are
/// visited by (higher node, lower node) so at most ten qubits are ever open.
AmplitudeResult vertex_amplitude(const NodeStates& states, const SpinNetworkGraph& graph);
AmplitudeResult vertex_amplitude(const std::array<InvariantTensor, 5>& tensors,
                                 const SpinNetworkGraph& graph);

/// Reference path: the full 2^20 product state dotted with the 2^20 product
/// of link singlets.
AmplitudeResult vertex_amplitude_bruteforce(const NodeStates& states,
                                            const SpinNetworkGraph& graph);

/// A(b1..b5) for b in {0_L, 1_L}^5; index = b1*16 + b2*8 + ... + b5.
using BasisTable = std::array<Complex, 32>;
BasisTable basis_amplitude_table(const SpinNetworkGraph& graph);

/// Multilinear contraction of the table with each node's (c0, c1).
Complex amplitude_from_table(const BasisTable& table,
                             const std::array<std::array<Complex, 2>, 5>& coefficients);

struct SweepGrid {
  std::vector<double> thetas;
  std::vector<double> phis;
  /// Row-major: cells[i * phis.size() + j] is (thetas[i], phis[j]).
  std::vector<AmplitudeResult> cells;
};

/// i1..i4 fixed, i5 = bloch_state(theta, phi) for every grid cell. Cells are
/// independent and may be evaluated on `threads` workers (0 = hardware).
SweepGrid amplitude_sweep(const std::array<InvariantTensor, 4>& fixed,
                          std::span<const double> thetas, std::span<const double> phis,
                          const SpinNetworkGraph& graph, unsigned threads = 0);

/// CSV with header theta,phi,re,im,abs,phase and 17 significant digits.
void write_sweep_csv(std::ostream& out, const SweepGrid& grid);

}  // namespace qtetra

#endif  // QTETRA_AMPLITUDE_HPP_
