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

#include "qtetra/report.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace qtetra {

namespace {

using nlohmann::ordered_json;

ordered_json amplitude_json(const AmplitudeResult& a) {
  return {{"re", a.value.real()}, {"im", a.value.imag()}, {"abs", a.magnitude}, {"phase", a.phase}};
}

ordered_json dihedral_json(const std::array<double, 3>& c) {
  return {{"cos12", c[0]}, {"cos13", c[1]}, {"cos14", c[2]}};
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string experiment_report_json(const ExperimentReport& report) {
  ordered_json doc;
  doc["noise"] = {{"depolarizing_p", report.noise.depolarizing_p},
                  {"rotation_angle_sd", report.noise.rotation_angle_sd},
                  {"seed", report.noise.seed}};
  doc["epsilon"] = report.epsilon;
  doc["convention"] = report.convention;
  ordered_json targets = ordered_json::array();
  for (const TargetReport& t : report.targets) {
    ordered_json j;
    j["label"] = t.label;
    j["theta"] = t.theta;
    j["phi"] = t.phi;
    j["fidelity"] = t.fidelity;
    j["dihedral_measured"] = dihedral_json(t.dihedral_measured);
    j["dihedral_theory"] = dihedral_json(t.dihedral_theory);
    j["fluctuation_measured"] = t.fluctuation_measured;
    j["fluctuation_theory"] = t.fluctuation_theory;
    j["purified_coefficients"] = ordered_json::array(
        {ordered_json::array({t.purified_coefficients[0].real(), t.purified_coefficients[0].imag()}),
         ordered_json::array({t.purified_coefficients[1].real(), t.purified_coefficients[1].imag()})});
    j["purified_leakage"] = t.purified_leakage;
    j["amplitude_measured"] = amplitude_json(t.amplitude_measured);
    j["amplitude_theory"] = amplitude_json(t.amplitude_theory);
    targets.push_back(std::move(j));
  }
  doc["targets"] = std::move(targets);
  return doc.dump(2) + "\n";
}

void write_experiment_csv(std::ostream& out, const ExperimentReport& report) {
  out << "label,theta,phi,fidelity,cos12,cos13,cos14,cos12_theory,cos13_theory,cos14_theory,"
         "delta,delta_theory,leakage,amp_re,amp_im,amp_theory_re,amp_theory_im\n";
  for (const TargetReport& t : report.targets) {
    out << t.label;
    for (double v : {t.theta, t.phi, t.fidelity, t.dihedral_measured[0], t.dihedral_measured[1],
                     t.dihedral_measured[2], t.dihedral_theory[0], t.dihedral_theory[1],
                     t.dihedral_theory[2], t.fluctuation_measured, t.fluctuation_theory,
                     t.purified_leakage, t.amplitude_measured.value.real(),
                     t.amplitude_measured.value.imag(), t.amplitude_theory.value.real(),
                     t.amplitude_theory.value.imag()}) {
      out << ',' << format_double(v);
    }
    out << '\n';
  }
}

}  // namespace qtetra
