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

#include "qtetra/reference_data.hpp"

#include <algorithm>

namespace qtetra {

const std::array<NamedState, 10>& named_states() {
  static const std::array<NamedState, 10> states = {{
      {"A0", 0.0, 0.0, 2.0 / 3.0, 0.684},
      {"B0", kPi / 5, 0.0, 2.0 / 3.0, 0.672},
      {"C0", kPi / 2, 3 * kPi / 2, 2.0 / 3.0, 0.689},
      {"D0", kPi / 2, 0.0, 2.0 / 3.0, 0.637},
      {"E0", 4 * kPi / 5, 0.0, 2.0 / 3.0, 0.698},
      {"A1", kPi, kPi, 2.0 / 3.0, 0.666},
      {"B1", 4 * kPi / 5, kPi, 2.0 / 3.0, 0.703},
      {"C1", kPi / 2, kPi / 2, 2.0 / 3.0, 0.675},
      {"D1", kPi / 2, kPi, 2.0 / 3.0, 0.641},
      {"E1", kPi / 5, kPi, 2.0 / 3.0, 0.707},
  }};
  return states;
}

std::optional<NamedState> find_state(std::string_view name) {
  const auto& all = named_states();
  auto it = std::find_if(all.begin(), all.end(), [&](const NamedState& s) { return s.name == name; });
  if (it == all.end()) return std::nullopt;
  return *it;
}

const std::array<PublishedAmplitude, 10>& published_amplitudes() {
  static const std::array<PublishedAmplitude, 10> table = {{
      {"A0", {-13.5635, -23.4923}, {-12.74, -23.67}},
      {"B0", {-20.1590, -18.1514}, {-19.89, -17.78}},
      {"C0", {0.0, 0.0}, {0.01, 0.05}},
      {"D0", {-26.2024, -7.0210}, {-24.59, -7.98}},
      {"E0", {-26.5339, 5.6400}, {-25.72, 6.63}},
      {"A1", {23.4924, -13.5634}, {-22.16, 13.16}},
      {"B1", {18.1513, -20.1591}, {18.73, -18.10}},
      {"C1", {-27.1270, -46.9848}, {-25.48, -44.14}},
      {"D1", {7.0208, -26.2024}, {4.32, -25.62}},
      {"E1", {-5.6401, -26.5339}, {-3.84, -25.86}},
  }};
  return table;
}

}  // namespace qtetra
