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

#include "qtetra/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

namespace qtetra {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// <eps| coefficient for first-factor bit x and second-factor bit y.
double singlet_coefficient(unsigned x, unsigned y) {
  if (x == 0 && y == 1) return kInvSqrt2;
  if (x == 1 && y == 0) return -kInvSqrt2;
  return 0.0;
}

void check_endpoint(const Endpoint& e) {
  if (e.node < 0 || e.node >= kNodes || e.slot < 0 || e.slot >= kSlots) {
    throw std::invalid_argument("endpoint (" + std::to_string(e.node) + ", " +
                                std::to_string(e.slot) + ") out of range");
  }
}

void check_states(const NodeStates& states) {
  for (const auto& s : states) {
    if (s.n_qubits() != 4) throw std::invalid_argument("node states must have 4 qubits");
  }
}

// Tensor over the still-open (node, slot) legs; leg 0 is the most significant.
class OpenTensor {
 public:
  OpenTensor() : data_{Complex(1.0, 0.0)} {}

  bool has_node(int node) const {
    return std::any_of(legs_.begin(), legs_.end(),
                       [node](const Endpoint& e) { return e.node == node; });
  }

  void attach(int node, const StateVector& psi) {
    std::vector<Complex> next(data_.size() * 16);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      for (std::size_t j = 0; j < 16; ++j) {
        next[i * 16 + j] = data_[i] * psi[static_cast<Eigen::Index>(j)];
      }
    }
    data_ = std::move(next);
    for (int s = 0; s < kSlots; ++s) legs_.push_back({node, s});
  }

  void contract(const Endpoint& first, const Endpoint& second) {
    const std::size_t p1 = position(first);
    const std::size_t p2 = position(second);
    const std::size_t n = legs_.size();
    const std::size_t shift1 = n - 1 - p1;
    const std::size_t shift2 = n - 1 - p2;
    const std::size_t lo = std::min(shift1, shift2);
    const std::size_t hi = std::max(shift1, shift2);

    std::vector<Complex> next(data_.size() / 4);
    for (std::size_t j = 0; j < next.size(); ++j) {
      // Spread j over n bits with zeros at positions lo and hi.
      std::size_t base = j;
      base = ((base >> lo) << (lo + 1)) | (base & ((std::size_t{1} << lo) - 1));
      base = ((base >> hi) << (hi + 1)) | (base & ((std::size_t{1} << hi) - 1));
      Complex acc = 0.0;
      for (unsigned x = 0; x < 2; ++x) {
        for (unsigned y = 0; y < 2; ++y) {
          const double eps = singlet_coefficient(x, y);
          if (eps == 0.0) continue;
          acc += eps * data_[base | (std::size_t{x} << shift1) | (std::size_t{y} << shift2)];
        }
      }
      next[j] = acc;
    }
    data_ = std::move(next);
    legs_.erase(legs_.begin() + static_cast<std::ptrdiff_t>(std::max(p1, p2)));
    legs_.erase(legs_.begin() + static_cast<std::ptrdiff_t>(std::min(p1, p2)));
  }

  std::size_t open_legs() const { return legs_.size(); }
  Complex scalar() const { return data_.at(0); }

 private:
  std::size_t position(const Endpoint& e) const {
    auto it = std::find(legs_.begin(), legs_.end(), e);
    if (it == legs_.end()) throw std::logic_error("contracting a leg that is not open");
    return static_cast<std::size_t>(it - legs_.begin());
  }

  std::vector<Endpoint> legs_;
  std::vector<Complex> data_;
};

std::vector<Link> contraction_order(const SpinNetworkGraph& graph) {
  std::vector<Link> order = graph.links();
  auto key = [](const Link& l) {
    return std::pair{std::max(l.first.node, l.second.node), std::min(l.first.node, l.second.node)};
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](const Link& a, const Link& b) { return key(a) < key(b); });
  return order;
}

}  // namespace

SpinNetworkGraph::SpinNetworkGraph(std::vector<Link> links) : links_(std::move(links)) {
  if (links_.size() != kLinks) {
    throw std::invalid_argument("spin network graph needs exactly 10 links, got " +
                                std::to_string(links_.size()));
  }
  std::array<std::array<int, kSlots>, kNodes> slot_use{};
  std::array<std::array<int, kNodes>, kNodes> pair_use{};
  for (const Link& l : links_) {
    check_endpoint(l.first);
    check_endpoint(l.second);
    if (l.first.node == l.second.node) {
      throw std::invalid_argument("link joins node " + std::to_string(l.first.node) +
                                  " to itself");
    }
    ++slot_use[l.first.node][l.first.slot];
    ++slot_use[l.second.node][l.second.slot];
    const int lo = std::min(l.first.node, l.second.node);
    const int hi = std::max(l.first.node, l.second.node);
    ++pair_use[lo][hi];
  }
  for (int n = 0; n < kNodes; ++n) {
    for (int s = 0; s < kSlots; ++s) {
      if (slot_use[n][s] != 1) {
        throw std::invalid_argument("slot (" + std::to_string(n) + ", " + std::to_string(s) +
                                    ") used " + std::to_string(slot_use[n][s]) + " times");
      }
    }
    for (int m = n + 1; m < kNodes; ++m) {
      if (pair_use[n][m] != 1) {
        throw std::invalid_argument("node pair (" + std::to_string(n) + ", " +
                                    std::to_string(m) + ") is not linked exactly once");
      }
    }
  }
}

AmplitudeResult AmplitudeResult::from(Complex value) {
  double phase = std::arg(value);
  if (phase <= -kPi) phase = kPi;
  return AmplitudeResult{value, std::abs(value), phase};
}

StateVector singlet() {
  return kInvSqrt2 * (StateVector::from_bits("01") - StateVector::from_bits("10"));
}

SpinNetworkGraph canonical_k5() {
  std::vector<Link> links;
  for (int n = 0; n < kNodes; ++n) {
    for (int m = n + 1; m < kNodes; ++m) {
      // Partners of n in increasing order skip n itself.
      const int slot_at_n = m - 1;
      const int slot_at_m = n;
      links.push_back({{n, slot_at_n}, {m, slot_at_m}});
    }
  }
  return SpinNetworkGraph(std::move(links));
}

SpinNetworkGraph permute_slots(const SpinNetworkGraph& graph, int node,
                               const std::array<int, 4>& perm) {
  std::array<int, 4> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{0, 1, 2, 3}) {
    throw std::invalid_argument("permute_slots: not a permutation of 0..3");
  }
  std::vector<Link> links = graph.links();
  for (Link& l : links) {
    for (Endpoint* e : {&l.first, &l.second}) {
      if (e->node == node) e->slot = perm[static_cast<std::size_t>(e->slot)];
    }
  }
  return SpinNetworkGraph(std::move(links));
}

SpinNetworkGraph reverse_link(const SpinNetworkGraph& graph, std::size_t link) {
  std::vector<Link> links = graph.links();
  std::swap(links.at(link).first, links.at(link).second);
  return SpinNetworkGraph(std::move(links));
}

SpinNetworkGraph relabel_nodes(const SpinNetworkGraph& graph, const std::array<int, 5>& sigma,
                               bool lower_first, int* flipped) {
  int flips = 0;
  std::vector<Link> links = graph.links();
  for (Link& l : links) {
    l.first.node = sigma.at(static_cast<std::size_t>(l.first.node));
    l.second.node = sigma.at(static_cast<std::size_t>(l.second.node));
    if (lower_first && l.first.node > l.second.node) {
      std::swap(l.first, l.second);
      ++flips;
    }
  }
  if (flipped != nullptr) *flipped = flips;
  return SpinNetworkGraph(std::move(links));
}

StateVector permute_qubits(const StateVector& psi, const std::array<int, 4>& perm) {
  if (psi.n_qubits() != 4) throw std::invalid_argument("permute_qubits: expected 4 qubits");
  CVector out(16);
  for (unsigned x = 0; x < 16; ++x) {
    unsigned y = 0;
    for (int s = 0; s < 4; ++s) {
      const unsigned bit = (x >> (3 - s)) & 1u;
      y |= bit << (3 - perm[static_cast<std::size_t>(s)]);
    }
    out[x] = psi[y];
  }
  return StateVector(4, std::move(out));
}

AmplitudeResult vertex_amplitude(const NodeStates& states, const SpinNetworkGraph& graph) {
  check_states(states);
  OpenTensor tensor;
  for (const Link& link : contraction_order(graph)) {
    for (int node : {link.first.node, link.second.node}) {
      if (!tensor.has_node(node)) tensor.attach(node, states[static_cast<std::size_t>(node)]);
    }
    tensor.contract(link.first, link.second);
  }
  if (tensor.open_legs() != 0) throw std::logic_error("vertex_amplitude: legs left open");
  return AmplitudeResult::from(tensor.scalar());
}

AmplitudeResult vertex_amplitude(const std::array<InvariantTensor, 5>& tensors,
                                 const SpinNetworkGraph& graph) {
  return vertex_amplitude(NodeStates{tensors[0].embedded, tensors[1].embedded,
                                     tensors[2].embedded, tensors[3].embedded,
                                     tensors[4].embedded},
                          graph);
}

AmplitudeResult vertex_amplitude_bruteforce(const NodeStates& states,
                                            const SpinNetworkGraph& graph) {
  check_states(states);
  constexpr int kQubits = kNodes * kSlots;
  constexpr std::size_t kDim = std::size_t{1} << kQubits;

  std::vector<Complex> product(1, Complex(1.0, 0.0));
  for (const StateVector& psi : states) {
    std::vector<Complex> next(product.size() * 16);
    for (std::size_t i = 0; i < product.size(); ++i) {
      for (std::size_t j = 0; j < 16; ++j) {
        next[i * 16 + j] = product[i] * psi[static_cast<Eigen::Index>(j)];
      }
    }
    product = std::move(next);
  }

  std::vector<double> links(kDim);
  auto bit = [](std::size_t idx, const Endpoint& e) {
    return static_cast<unsigned>((idx >> (kQubits - 1 - (kSlots * e.node + e.slot))) & 1u);
  };
  for (std::size_t idx = 0; idx < kDim; ++idx) {
    double v = 1.0;
    for (const Link& l : graph.links()) {
      v *= singlet_coefficient(bit(idx, l.first), bit(idx, l.second));
      if (v == 0.0) break;
    }
    links[idx] = v;
  }

  Complex sum = 0.0;
  for (std::size_t idx = 0; idx < kDim; ++idx) sum += links[idx] * product[idx];
  return AmplitudeResult::from(sum);
}

BasisTable basis_amplitude_table(const SpinNetworkGraph& graph) {
  const auto [zero, one] = logical_basis();
  BasisTable table{};
  for (unsigned b = 0; b < 32; ++b) {
    NodeStates states{zero, zero, zero, zero, zero};
    for (int n = 0; n < kNodes; ++n) {
      if ((b >> (kNodes - 1 - n)) & 1u) states[static_cast<std::size_t>(n)] = one;
    }
    table[b] = vertex_amplitude(states, graph).value;
  }
  return table;
}

Complex amplitude_from_table(const BasisTable& table,
                             const std::array<std::array<Complex, 2>, 5>& coefficients) {
  Complex sum = 0.0;
  for (unsigned b = 0; b < 32; ++b) {
    Complex term = table[b];
    for (int n = 0; n < kNodes; ++n) {
      term *= coefficients[static_cast<std::size_t>(n)][(b >> (kNodes - 1 - n)) & 1u];
    }
    sum += term;
  }
  return sum;
}

SweepGrid amplitude_sweep(const std::array<InvariantTensor, 4>& fixed,
                          std::span<const double> thetas, std::span<const double> phis,
                          const SpinNetworkGraph& graph, unsigned threads) {
  if (thetas.empty() || phis.empty()) throw std::invalid_argument("amplitude_sweep: empty grid");
  SweepGrid grid{{thetas.begin(), thetas.end()}, {phis.begin(), phis.end()}, {}};
  const std::size_t cols = phis.size();
  const std::size_t cells = thetas.size() * cols;
  // Validate every point before any worker starts.
  std::vector<BlochPoint> points;
  points.reserve(cells);
  for (double t : thetas)
    for (double p : phis) points.emplace_back(t, p);

  grid.cells.resize(cells);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      grid.cells[i] = vertex_amplitude(
          NodeStates{fixed[0].embedded, fixed[1].embedded, fixed[2].embedded,
                     fixed[3].embedded, bloch_state(points[i]).embedded},
          graph);
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cells));
  if (workers <= 1) {
    work(0, cells);
    return grid;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (cells + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(cells, begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  pool.clear();
  return grid;
}

void write_sweep_csv(std::ostream& out, const SweepGrid& grid) {
  out << "theta,phi,re,im,abs,phase\n";
  char buf[256];
  const std::size_t cols = grid.phis.size();
  for (std::size_t i = 0; i < grid.cells.size(); ++i) {
    const AmplitudeResult& r = grid.cells[i];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  grid.thetas[i / cols], grid.phis[i % cols], r.value.real(), r.value.imag(),
                  r.magnitude, r.phase);
    out << buf;
  }
}

}  // namespace qtetra
