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

#include "qtetra/table1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qtetra/reference_data.hpp"

namespace qtetra {

namespace {

constexpr std::array<std::array<int, 4>, 6> kSlotPerms = {{
    {0, 1, 2, 3},
    {0, 1, 3, 2},
    {0, 2, 1, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
    {0, 3, 2, 1},
}};

using Coeffs = std::array<Complex, 2>;

BlochPoint regular_point(std::string_view name) {
  const auto s = find_state(name);
  if (!s) throw std::invalid_argument("unknown state " + std::string(name));
  return s->point();
}

// Action of permute_qubits(., perm) on (c0, c1) over the logical basis.
Eigen::Matrix2cd logical_permutation(const std::array<int, 4>& perm) {
  const auto [zero, one] = logical_basis();
  const std::array<const StateVector*, 2> basis = {&zero, &one};
  Eigen::Matrix2cd r;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) r(a, b) = basis[a]->inner(permute_qubits(*basis[b], perm));
  }
  return r;
}

Coeffs act(const Eigen::Matrix2cd& r, const Coeffs& c) {
  return {r(0, 0) * c[0] + r(0, 1) * c[1], r(1, 0) * c[0] + r(1, 1) * c[1]};
}

std::array<Complex, 10> reference_theory() {
  std::array<Complex, 10> out{};
  const auto& table = published_amplitudes();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = table[i].theory;
  return out;
}

double residual_of(const std::array<Complex, 10>& computed, const std::array<Complex, 10>& ref) {
  const Complex c = fit_global_scale(computed, ref);
  double sum = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) sum += std::norm(c * computed[i] - ref[i]);
  return std::sqrt(sum);
}

}  // namespace

SpinNetworkGraph PairingConvention::graph() const {
  SpinNetworkGraph g = canonical_k5();
  for (int n = 0; n < kNodes; ++n) g = permute_slots(g, n, slot_perms[static_cast<std::size_t>(n)]);
  return g;
}

std::string PairingConvention::describe() const {
  std::ostringstream out;
  out << "regular=" << regular_state << " slots=";
  for (int n = 0; n < kNodes; ++n) {
    if (n) out << '|';
    for (int s : slot_perms[static_cast<std::size_t>(n)]) out << s;
  }
  return out.str();
}

PairingConvention frozen_table1_convention() {
  PairingConvention c;
  c.regular_state = "C0";
  c.slot_perms[3] = {0, 1, 3, 2};
  return c;
}

Complex fit_global_scale(std::span<const Complex> computed, std::span<const Complex> reference,
                         std::span<const bool> include) {
  if (computed.size() != reference.size() || (!include.empty() && include.size() != computed.size())) {
    throw std::invalid_argument("fit_global_scale: size mismatch");
  }
  Complex num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    if (!include.empty() && !include[i]) continue;
    num += std::conj(computed[i]) * reference[i];
    den += std::norm(computed[i]);
  }
  if (den == 0.0) throw std::domain_error("fit_global_scale: computed values are all zero");
  return num / den;
}

Table1Fit evaluate_table1(const PairingConvention& convention,
                          std::span<const std::string_view> excluded) {
  const SpinNetworkGraph graph = convention.graph();
  const StateVector regular = bloch_state(regular_point(convention.regular_state)).embedded;
  const auto& states = named_states();
  const auto ref = reference_theory();

  Table1Fit fit;
  fit.convention = convention;
  for (std::size_t i = 0; i < states.size(); ++i) {
    fit.computed[i] = vertex_amplitude(NodeStates{regular, regular, regular, regular,
                                                  bloch_state(states[i].point()).embedded},
                                       graph)
                          .value;
    fit.in_fit[i] = std::find(excluded.begin(), excluded.end(), states[i].name) == excluded.end();
  }
  fit.scale = fit_global_scale(fit.computed, ref, fit.in_fit);
  double sum = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    fit.fitted[i] = fit.scale * fit.computed[i];
    fit.relative_error[i] = ref[i] == Complex(0.0, 0.0)
                                ? std::abs(fit.fitted[i]) / std::abs(fit.scale)
                                : std::abs(fit.fitted[i] - ref[i]) / std::abs(ref[i]);
    if (fit.in_fit[i]) sum += std::norm(fit.fitted[i] - ref[i]);
  }
  fit.residual_norm = std::sqrt(sum);
  return fit;
}

PairingConvention search_table1_convention() {
  const BasisTable table = basis_amplitude_table(canonical_k5());
  const auto ref = reference_theory();
  std::array<Eigen::Matrix2cd, 6> perm_ops;
  for (std::size_t p = 0; p < kSlotPerms.size(); ++p) perm_ops[p] = logical_permutation(kSlotPerms[p]);
  std::array<Coeffs, 10> targets;
  for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = named_states()[i].point().coefficients();

  PairingConvention best;
  double best_residual = std::numeric_limits<double>::infinity();
  int best_permuted = kNodes + 1;
  for (std::string_view regular : {std::string_view("C0"), std::string_view("C1")}) {
    const Coeffs reg = regular_point(regular).coefficients();
    std::array<std::size_t, 5> choice{};
    for (std::size_t code = 0; code < 6 * 6 * 6 * 6 * 6; ++code) {
      std::size_t rest = code;
      for (int n = kNodes - 1; n >= 0; --n) {
        choice[static_cast<std::size_t>(n)] = rest % 6;
        rest /= 6;
      }
      std::array<Complex, 10> computed{};
      for (std::size_t i = 0; i < computed.size(); ++i) {
        std::array<Coeffs, 5> c;
        for (std::size_t n = 0; n < 4; ++n) c[n] = act(perm_ops[choice[n]], reg);
        c[4] = act(perm_ops[choice[4]], targets[i]);
        computed[i] = amplitude_from_table(table, c);
      }
      double norm = 0.0;
      for (const Complex& v : computed) norm += std::norm(v);
      if (norm < 1e-24) continue;
      const double r = residual_of(computed, ref);
      const int permuted =
          static_cast<int>(std::count_if(choice.begin(), choice.end(), [](std::size_t x) { return x != 0; }));
      const bool better = r < best_residual * (1.0 - 1e-9);
      const bool tie = !better && r <= best_residual * (1.0 + 1e-9) && permuted < best_permuted;
      if (better || tie) {
        best_residual = r;
        best_permuted = permuted;
        best.regular_state = regular;
        for (std::size_t n = 0; n < 5; ++n) best.slot_perms[n] = kSlotPerms[choice[n]];
      }
    }
  }
  return best;
}

}  // namespace qtetra
