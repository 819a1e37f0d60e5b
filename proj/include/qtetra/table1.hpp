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

// Comparison of computed vertex amplitudes against the published amplitude
// table: i1..i4 fixed to a regular state, i5 running over A0..E1, and one
// complex scale fitted by least squares.

#ifndef QTETRA_TABLE1_HPP_
#define QTETRA_TABLE1_HPP_

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "qtetra/amplitude.hpp"

namespace qtetra {

/// Which regular state sits on nodes 0..3, and the per-node slot permutations
/// applied to canonical_k5().
struct PairingConvention {
  std::string_view regular_state = "C0";
  std::array<std::array<int, 4>, 5> slot_perms = {{{0, 1, 2, 3},
                                                   {0, 1, 2, 3},
                                                   {0, 1, 2, 3},
                                                   {0, 1, 2, 3},
                                                   {0, 1, 2, 3}}};

  SpinNetworkGraph graph() const;
  std::string describe() const;
};

/// The convention selected by search_table1_convention(), frozen.
PairingConvention frozen_table1_convention();

/// Least-squares c minimizing sum |c * computed - reference|^2 over the
/// entries with include[i] true (all entries when include is empty).
Complex fit_global_scale(std::span<const Complex> computed, std::span<const Complex> reference,
                         std::span<const bool> include = {});

struct Table1Fit {
  PairingConvention convention;
  std::array<Complex, 10> computed{};  // raw amplitudes
  Complex scale;
  std::array<Complex, 10> fitted{};    // scale * computed, in table units
  /// |fitted - theory| / |theory|; for a zero theory entry, |fitted| / |scale|.
  std::array<double, 10> relative_error{};
  std::array<bool, 10> in_fit{};
  double residual_norm = 0.0;          // over the fitted entries
};

/// Evaluates the ten amplitudes and fits one scale, leaving out the named
/// columns from the fit (their errors are still reported).
Table1Fit evaluate_table1(const PairingConvention& convention,
                          std::span<const std::string_view> excluded = {});

/// Enumerates regular state in {C0, C1} and, per node, the six slot
/// permutations fixing slot 0. Returns the minimum-residual convention; ties
/// go to the fewest permuted nodes, then enumeration order.
PairingConvention search_table1_convention();

}  // namespace qtetra

#endif  // QTETRA_TABLE1_HPP_
