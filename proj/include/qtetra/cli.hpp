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

#ifndef QTETRA_CLI_HPP_
#define QTETRA_CLI_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtetra/tetrahedron.hpp"

namespace qtetra {

enum class Command { tetra, fluct, reconstruct, amplitude, sweep, table1, table2, experiment };
enum class OutputFormat { csv, json };

/// Throws std::invalid_argument on unknown names.
Command parse_command(std::string_view name);
std::string_view command_name(Command c);
OutputFormat parse_format(std::string_view name);
DihedralConvention parse_convention(std::string_view name);

struct RunConfig {
  Command command = Command::table2;
  std::vector<double> thetas;
  std::vector<double> phis;
  std::vector<std::string> states;  // named states, used instead of thetas/phis
  int grid_theta = 19;
  int grid_phi = 36;
  DihedralConvention convention = DihedralConvention::interior;
  std::uint64_t seed = 20190425;
  std::string output_path;  // empty: the `out` stream
  OutputFormat format = OutputFormat::csv;

  // reconstruct: explicit areas and cosines instead of Bloch points.
  std::vector<double> areas;
  std::optional<double> cos12;
  std::optional<double> cos13;

  // experiment
  std::optional<double> depolarizing;
  std::optional<double> rotation_sd;
  double epsilon = 1e-5;
  bool noiseless = false;
  unsigned threads = 0;
};

/// Runs one command. Returns 0 on success; otherwise writes a single
/// "qtetra: ..." line to `err` and returns nonzero.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qtetra

#endif  // QTETRA_CLI_HPP_
