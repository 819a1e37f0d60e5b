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

#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "qtetra/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Quantum tetrahedron toolkit"};
  app.set_config("--config", "", "key=value configuration file");

  qtetra::RunConfig cfg;
  std::string command;
  std::string convention = "interior";
  std::string format = "csv";
  double depolarizing = 0.0;
  double rotation_sd = 0.0;
  double cos12 = 0.0;
  double cos13 = 0.0;

  app.add_option("command", command,
                 "tetra | fluct | reconstruct | amplitude | sweep | table1 | table2 | experiment")
      ->required();
  app.add_option("--theta", cfg.thetas, "polar angle(s) in radians")->allow_extra_args(false);
  app.add_option("--phi", cfg.phis, "azimuth(s) in radians, [0, 2pi)")->allow_extra_args(false);
  app.add_option("--states", cfg.states, "named states (A0..E1, or all)")->delimiter(',');
  app.add_option("--grid-theta", cfg.grid_theta, "sweep theta samples over [0, pi]")->capture_default_str();
  app.add_option("--grid-phi", cfg.grid_phi, "sweep phi samples over [0, 2pi)")->capture_default_str();
  app.add_option("--convention", convention, "interior | normals")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--out", cfg.output_path, "output file (default stdout)");
  app.add_option("--format", format, "csv | json")->capture_default_str();
  app.add_option("--area", cfg.areas, "reconstruct: four face areas")->allow_extra_args(false);
  auto* o12 = app.add_option("--cos12", cos12, "reconstruct: cosine between faces 1 and 2");
  auto* o13 = app.add_option("--cos13", cos13, "reconstruct: cosine between faces 1 and 3");
  auto* op = app.add_option("--depolarizing", depolarizing, "experiment: depolarizing probability");
  auto* os = app.add_option("--rotation-sd", rotation_sd, "experiment: z-rotation sd (radians)");
  app.add_option("--epsilon", cfg.epsilon, "experiment: polarization")->capture_default_str();
  app.add_flag("--noiseless", cfg.noiseless, "experiment: disable noise");
  app.add_option("--threads", cfg.threads, "sweep workers (0 = hardware)");

  try {
    app.parse(argc, argv);
    cfg.command = qtetra::parse_command(command);
    cfg.convention = qtetra::parse_convention(convention);
    cfg.format = qtetra::parse_format(format);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "qtetra: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qtetra: " << e.what() << '\n';
    return 1;
  }
  if (o12->count()) cfg.cos12 = cos12;
  if (o13->count()) cfg.cos13 = cos13;
  if (op->count()) cfg.depolarizing = depolarizing;
  if (os->count()) cfg.rotation_sd = rotation_sd;
  return qtetra::run(cfg, std::cout, std::cerr);
}
