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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qtetra/amplitude.hpp"
#include "qtetra/classical_geometry.hpp"
#include "qtetra/cli.hpp"
#include "qtetra/reference_data.hpp"
#include "qtetra/report.hpp"
#include "qtetra/spin_algebra.hpp"
#include "qtetra/table1.hpp"
#include "qtetra/tetrahedron.hpp"
#include "qtetra/tomography.hpp"

namespace py = pybind11;
using namespace qtetra;

namespace {

HalfInt to_half(double x) {
  const double twice = 2.0 * x;
  if (std::abs(twice - std::round(twice)) > 1e-9) throw std::invalid_argument("not a half-integer");
  return HalfInt{static_cast<int>(std::lround(twice))};
}

py::array_t<Complex> to_numpy(const CVector& v) {
  py::array_t<Complex> out(v.size());
  auto r = out.mutable_unchecked<1>();
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = v[i];
  return out;
}

StateVector from_numpy(py::array_t<Complex, py::array::c_style | py::array::forcecast> a) {
  if (a.ndim() != 1) throw std::invalid_argument("state must be one-dimensional");
  CVector v(a.shape(0));
  for (py::ssize_t i = 0; i < a.shape(0); ++i) v[i] = a.at(i);
  int n = 0;
  while ((Eigen::Index{1} << n) < v.size()) ++n;
  return StateVector(n, v);
}

NodeStates node_states(const std::vector<std::pair<double, double>>& points) {
  if (points.size() != kNodes) throw std::invalid_argument("need exactly 5 (theta, phi) points");
  auto s = [&](std::size_t i) { return bloch_state(BlochPoint(points[i].first, points[i].second)).embedded; };
  return {s(0), s(1), s(2), s(3), s(4)};
}

DihedralConvention conv(const std::string& name) { return parse_convention(name); }

}  // namespace

PYBIND11_MODULE(_qtetra, m) {
  m.doc() = "Quantum tetrahedra: dihedral operators, vertex amplitudes, reconstruction, NMR rehearsal";

  m.def("cg_coefficient",
        [](double j1, double m1, double j2, double m2, double J, double M) {
          return cg_coefficient({to_half(j1), to_half(j2), to_half(J), to_half(M)}, to_half(m1),
                                to_half(m2));
        },
        py::arg("j1"), py::arg("m1"), py::arg("j2"), py::arg("m2"), py::arg("J"), py::arg("M"));
  m.def("invariant_projector_rank", [](int n) { return projector_rank(invariant_projector(n)); });
  m.def("closure_defect", [](py::array_t<Complex> psi) { return closure_defect(from_numpy(psi)); });

  m.def("bloch_state",
        [](double theta, double phi) { return to_numpy(bloch_state(BlochPoint(theta, phi)).embedded.amplitudes()); },
        py::arg("theta"), py::arg("phi"));
  m.def("dihedral_expectation",
        [](double theta, double phi, int k, int mm, const std::string& c) {
          return dihedral_expectation(BlochPoint(theta, phi), DihedralPair(k, mm), conv(c));
        },
        py::arg("theta"), py::arg("phi"), py::arg("k") = 1, py::arg("m") = 2, py::arg("convention") = "interior");
  m.def("dihedral_closed_form",
        [](double theta, double phi, int k, int mm) {
          return dihedral_closed_form(BlochPoint(theta, phi), DihedralPair(k, mm));
        },
        py::arg("theta"), py::arg("phi"), py::arg("k") = 1, py::arg("m") = 2);
  m.def("fluctuation", [](double theta, double phi) { return fluctuation(BlochPoint(theta, phi)); });
  m.def("fluctuation_from_operators",
        [](double theta, double phi) { return fluctuation_from_operators(BlochPoint(theta, phi)); });
  m.def("regular_points", [] {
    std::vector<std::pair<double, double>> out;
    for (const BlochPoint& p : regular_points()) out.emplace_back(p.theta(), p.phi());
    return out;
  });
  m.def("named_states", [] {
    py::list out;
    for (const NamedState& s : named_states()) {
      py::dict d;
      d["name"] = std::string(s.name);
      d["theta"] = s.theta;
      d["phi"] = s.phi;
      d["listed_fluctuation"] = s.listed_fluctuation;
      d["measured_fluctuation"] = s.measured_fluctuation;
      out.append(d);
    }
    return out;
  });

  m.def("vertex_amplitude",
        [](const std::vector<std::pair<double, double>>& points) {
          return vertex_amplitude(node_states(points), frozen_table1_convention().graph()).value;
        },
        py::arg("points"), "Amplitude for five (theta, phi) node states on the default graph.");
  m.def("vertex_amplitude_bruteforce", [](const std::vector<std::pair<double, double>>& points) {
    return vertex_amplitude_bruteforce(node_states(points), frozen_table1_convention().graph()).value;
  });
  m.def("amplitude_sweep",
        [](std::vector<double> thetas, std::vector<double> phis, unsigned threads) {
          const PairingConvention c = frozen_table1_convention();
          const InvariantTensor reg = bloch_state(find_state(c.regular_state)->point());
          const SweepGrid g = amplitude_sweep({reg, reg, reg, reg}, thetas, phis, c.graph(), threads);
          py::array_t<Complex> out({thetas.size(), phis.size()});
          auto r = out.mutable_unchecked<2>();
          for (std::size_t i = 0; i < thetas.size(); ++i) {
            for (std::size_t j = 0; j < phis.size(); ++j) r(i, j) = g.cells[i * phis.size() + j].value;
          }
          return out;
        },
        py::arg("thetas"), py::arg("phis"), py::arg("threads") = 0);
  m.def("table1", [] {
    const Table1Fit f = evaluate_table1(frozen_table1_convention());
    py::dict d;
    d["convention"] = f.convention.describe();
    d["scale"] = f.scale;
    d["computed"] = std::vector<Complex>(f.computed.begin(), f.computed.end());
    d["fitted"] = std::vector<Complex>(f.fitted.begin(), f.fitted.end());
    d["relative_error"] = std::vector<double>(f.relative_error.begin(), f.relative_error.end());
    return d;
  });

  m.def("reconstruct",
        [](std::array<double, 4> areas, double cos12, double cos13, const std::string& c, std::uint64_t seed) {
          std::mt19937_64 rng(seed);
          const Reconstruction r = reconstruct(areas, cos12, cos13, conv(c), rng);
          std::vector<std::array<double, 3>> pts;
          for (const Vec3& v : r.vertices.points()) pts.push_back({v.x(), v.y(), v.z()});
          py::dict d;
          d["vertices"] = pts;
          d["residual"] = r.residual;
          d["solutions"] = r.solutions.size();
          return d;
        },
        py::arg("areas"), py::arg("cos12"), py::arg("cos13"), py::arg("convention") = "interior",
        py::arg("seed") = 20190425);

  m.def("simulate_experiment_json",
        [](const std::vector<std::string>& states, double p, double sd, std::uint64_t seed, double epsilon) {
          std::vector<ExperimentTarget> targets;
          for (const std::string& name : states) {
            const auto s = find_state(name);
            if (!s) throw std::invalid_argument("unknown state " + name);
            targets.push_back({name, s->point()});
          }
          NMRParams params = NMRParams::placeholder();
          params.epsilon = epsilon;
          return experiment_report_json(simulate_experiment(targets, NoiseSpec{p, sd, seed}, params));
        },
        py::arg("states"), py::arg("p") = 0.02, py::arg("sd") = 0.05, py::arg("seed") = 20190425,
        py::arg("epsilon") = 1e-5);

  m.def("run_command",
        [](const std::string& command, std::vector<std::string> states, const std::string& format) {
          RunConfig cfg;
          cfg.command = parse_command(command);
          cfg.states = std::move(states);
          cfg.format = parse_format(format);
          std::ostringstream out, err;
          const int code = run(cfg, out, err);
          if (code != 0) throw std::runtime_error(err.str());
          return out.str();
        },
        py::arg("command"), py::arg("states") = std::vector<std::string>{}, py::arg("format") = "csv");
}
