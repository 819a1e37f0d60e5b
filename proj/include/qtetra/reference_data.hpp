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

// The ten named experimental states A0..E1 and the published numbers that go
// with them.

#ifndef QTETRA_REFERENCE_DATA_HPP_
#define QTETRA_REFERENCE_DATA_HPP_

#include <array>
#include <optional>
#include <string_view>

#include "qtetra/spin_algebra.hpp"
#include "qtetra/tetrahedron.hpp"

namespace qtetra {

struct NamedState {
  std::string_view name;
  double theta;
  double phi;
  double listed_fluctuation;    // as printed in the state table
  double measured_fluctuation;  // experimental column of the same table

  BlochPoint point() const { return BlochPoint(theta, phi); }
};

/// Registry in table column order: A0 B0 C0 D0 E0 A1 B1 C1 D1 E1.
const std::array<NamedState, 10>& named_states();

std::optional<NamedState> find_state(std::string_view name);

/// Published amplitudes in units of 1e-5, same column order as named_states().
struct PublishedAmplitude {
  std::string_view name;
  Complex theory;
  Complex experiment;
};

const std::array<PublishedAmplitude, 10>& published_amplitudes();

}  // namespace qtetra

#endif  // QTETRA_REFERENCE_DATA_HPP_
