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

#include "qtetra/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "qtetra/amplitude.hpp"
#include "qtetra/classical_geometry.hpp"
#include "qtetra/reference_data.hpp"
#include "qtetra/report.hpp"
#include "qtetra/table1.hpp"
#include "qtetra/tomography.hpp"

namespace qtetra {

namespace {

using nlohmann::ordered_json;

struct LabeledPoint {
  std::string label;
  BlochPoint point;
};

constexpr std::array<std::pair<std::string_view, Command>, 8> kCommands = {{
    {"tetra", Command::tetra},
    {"fluct", Command::fluct},
    {"reconstruct", Command::reconstruct},
    {"amplitude", Command::amplitude},
    {"sweep", Command::sweep},
    {"table1", Command::table1},
    {"table2", Command::table2},
    {"experiment", Command::experiment},
}};

std::string fmt(double x) { return format_double(x); }

std::vector<LabeledPoint> all_named() {
  std::vector<LabeledPoint> out;
  for (const NamedState& s : named_states()) out.push_back({std::string(s.name), s.point()});
  return out;
}

// Named states win over theta/phi lists. A length-one list broadcasts.
std::vector<LabeledPoint> resolve_points(const RunConfig& c, bool default_to_named) {
  std::vector<LabeledPoint> out;
  if (!c.states.empty()) {
    for (const std::string& name : c.states) {
      if (name == "all") {
        for (auto& p : all_named()) out.push_back(std::move(p));
        continue;
      }
      const auto s = find_state(name);
      if (!s) throw std::invalid_argument("unknown state '" + name + "'");
      out.push_back({name, s->point()});
    }
    return out;
  }
  if (c.thetas.empty() && c.phis.empty()) {
    if (default_to_named) return all_named();
    throw std::invalid_argument("no points given; use --theta/--phi or --states");
  }
  const std::size_t n = std::max(c.thetas.size(), c.phis.size());
  auto pick = [n](const std::vector<double>& v, const char* what, std::size_t i) {
    if (v.size() == 1) return v[0];
    if (v.size() != n) {
      throw std::invalid_argument(std::string("--") + what + " count does not match");
    }
    return v[i];
  };
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = c.thetas.empty() ? 0.0 : pick(c.thetas, "theta", i);
    const double phi = c.phis.empty() ? 0.0 : pick(c.phis, "phi", i);
    out.push_back({"p" + std::to_string(i), BlochPoint(theta, phi)});
  }
  return out;
}

ordered_json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void emit_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

void cmd_tetra(const RunConfig& c, std::ostream& out) {
  const auto points = resolve_points(c, true);
  ordered_json rows = ordered_json::array();
  if (c.format == OutputFormat::csv) out << "label,theta,phi,cos12,cos13,cos14,sum\n";
  for (const auto& p : points) {
    std::array<double, 3> v{};
    for (int m = 2; m <= 4; ++m) v[m - 2] = dihedral_expectation(p.point, DihedralPair(1, m), c.convention);
    const double sum = v[0] + v[1] + v[2];
    if (c.format == OutputFormat::csv) {
      out << p.label << ',' << fmt(p.point.theta()) << ',' << fmt(p.point.phi()) << ',' << fmt(v[0])
          << ',' << fmt(v[1]) << ',' << fmt(v[2]) << ',' << fmt(sum) << '\n';
    } else {
      rows.push_back({{"label", p.label}, {"theta", p.point.theta()}, {"phi", p.point.phi()},
                      {"cos12", v[0]}, {"cos13", v[1]}, {"cos14", v[2]}, {"sum", sum}});
    }
  }
  if (c.format == OutputFormat::json) {
    emit_json(out, {{"convention", c.convention == DihedralConvention::interior ? "interior" : "normals"},
                    {"points", rows}});
  }
}

void cmd_fluct(const RunConfig& c, std::ostream& out) {
  const auto points = resolve_points(c, true);
  ordered_json rows = ordered_json::array();
  if (c.format == OutputFormat::csv) out << "label,theta,phi,delta,delta_operators\n";
  for (const auto& p : points) {
    const double closed = fluctuation(p.point);
    const double ops = fluctuation_from_operators(p.point);
    if (c.format == OutputFormat::csv) {
      out << p.label << ',' << fmt(p.point.theta()) << ',' << fmt(p.point.phi()) << ',' << fmt(closed)
          << ',' << fmt(ops) << '\n';
    } else {
      rows.push_back({{"label", p.label}, {"theta", p.point.theta()}, {"phi", p.point.phi()},
                      {"delta", closed}, {"delta_operators", ops}});
    }
  }
  if (c.format == OutputFormat::json) emit_json(out, {{"points", rows}});
}

struct ReconstructJob {
  std::string label;
  std::array<double, 4> areas;
  double cos12;
  double cos13;
};

void cmd_reconstruct(const RunConfig& c, std::ostream& out) {
  std::vector<ReconstructJob> jobs;
  if (!c.areas.empty() || c.cos12 || c.cos13) {
    if (c.areas.size() != 4 || !c.cos12 || !c.cos13) {
      throw std::invalid_argument("reconstruct needs 4 --area values plus --cos12 and --cos13");
    }
    jobs.push_back({"input", {c.areas[0], c.areas[1], c.areas[2], c.areas[3]}, *c.cos12, *c.cos13});
  } else {
    const double a = std::sqrt(3.0) / 2.0;
    for (const auto& p : resolve_points(c, true)) {
      jobs.push_back({p.label, {a, a, a, a},
                      dihedral_expectation(p.point, DihedralPair(1, 2), c.convention),
                      dihedral_expectation(p.point, DihedralPair(1, 3), c.convention)});
    }
  }
  std::mt19937_64 rng(c.seed);
  static constexpr std::array<const char*, 4> kNames = {"A", "B", "C", "D"};
  ordered_json rows = ordered_json::array();
  if (c.format == OutputFormat::csv) out << "label,status,vertex,x,y,z,residual,solutions\n";
  for (const ReconstructJob& job : jobs) {
    try {
      const Reconstruction r = reconstruct(job.areas, job.cos12, job.cos13, c.convention, rng);
      const VertexSet v = r.vertices.points();
      ordered_json verts;
      for (std::size_t i = 0; i < 4; ++i) {
        if (c.format == OutputFormat::csv) {
          out << job.label << ",ok," << kNames[i] << ',' << fmt(v[i].x()) << ',' << fmt(v[i].y()) << ','
              << fmt(v[i].z()) << ',' << fmt(r.residual) << ',' << r.solutions.size() << '\n';
        }
        verts[kNames[i]] = {v[i].x(), v[i].y(), v[i].z()};
      }
      rows.push_back({{"label", job.label}, {"status", "ok"}, {"vertices", verts},
                      {"residual", r.residual}, {"solutions", r.solutions.size()}});
    } catch (const InfeasibleGeometry& e) {
      if (c.format == OutputFormat::csv) {
        out << job.label << ",infeasible,,,,," << fmt(e.best_residual()) << ",0\n";
      }
      rows.push_back({{"label", job.label}, {"status", "infeasible"}, {"message", e.what()},
                      {"residual", e.best_residual()}, {"solutions", 0}});
    }
  }
  if (c.format == OutputFormat::json) emit_json(out, {{"reconstructions", rows}});
}

void cmd_amplitude(const RunConfig& c, std::ostream& out) {
  const auto points = resolve_points(c, false);
  if (points.size() != kNodes) {
    throw std::invalid_argument("amplitude needs exactly 5 points, got " + std::to_string(points.size()));
  }
  const PairingConvention conv = frozen_table1_convention();
  auto embed = [&](std::size_t i) { return bloch_state(points[i].point).embedded; };
  const NodeStates states = {embed(0), embed(1), embed(2), embed(3), embed(4)};
  const AmplitudeResult a = vertex_amplitude(states, conv.graph());
  if (c.format == OutputFormat::csv) {
    out << "re,im,abs,phase\n"
        << fmt(a.value.real()) << ',' << fmt(a.value.imag()) << ',' << fmt(a.magnitude) << ','
        << fmt(a.phase) << '\n';
  } else {
    ordered_json labels = ordered_json::array();
    for (const auto& p : points) labels.push_back(p.label);
    emit_json(out, {{"nodes", labels}, {"convention", conv.describe()}, {"re", a.value.real()},
                    {"im", a.value.imag()}, {"abs", a.magnitude}, {"phase", a.phase}});
  }
}

void cmd_sweep(const RunConfig& c, std::ostream& out) {
  if (c.grid_theta < 1 || c.grid_phi < 1) throw std::invalid_argument("sweep grids must be non-empty");
  std::vector<double> thetas(static_cast<std::size_t>(c.grid_theta));
  std::vector<double> phis(static_cast<std::size_t>(c.grid_phi));
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    thetas[i] = thetas.size() == 1 ? 0.0 : kPi * static_cast<double>(i) / static_cast<double>(thetas.size() - 1);
  }
  for (std::size_t j = 0; j < phis.size(); ++j) {
    phis[j] = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(phis.size());
  }
  const PairingConvention conv = frozen_table1_convention();
  const InvariantTensor regular = bloch_state(find_state(conv.regular_state)->point());
  const SweepGrid grid =
      amplitude_sweep({regular, regular, regular, regular}, thetas, phis, conv.graph(), c.threads);
  if (c.format == OutputFormat::csv) {
    write_sweep_csv(out, grid);
    return;
  }
  ordered_json cells = ordered_json::array();
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    for (std::size_t j = 0; j < phis.size(); ++j) {
      const AmplitudeResult& a = grid.cells[i * phis.size() + j];
      cells.push_back({{"theta", thetas[i]}, {"phi", phis[j]}, {"re", a.value.real()},
                       {"im", a.value.imag()}, {"abs", a.magnitude}, {"phase", a.phase}});
    }
  }
  emit_json(out, {{"convention", conv.describe()}, {"cells", cells}});
}

void cmd_table1(const RunConfig& c, std::ostream& out) {
  const PairingConvention conv = frozen_table1_convention();
  const Table1Fit all = evaluate_table1(conv);
  const std::array<std::string_view, 1> skip = {"C1"};
  const Table1Fit partial = evaluate_table1(conv, skip);
  const auto& ref = published_amplitudes();
  const std::string note =
      "no single complex scale fits all ten theory rows; the C1 row is inconsistent with the "
      "other nine, so a second fit without C1 is reported alongside the full fit";
  if (c.format == OutputFormat::csv) {
    out << "# convention: " << conv.describe() << '\n'
        << "# scale: " << fmt(all.scale.real()) << ' ' << fmt(all.scale.imag()) << '\n'
        << "# scale_without_C1: " << fmt(partial.scale.real()) << ' ' << fmt(partial.scale.imag()) << '\n'
        << "# note: " << note << '\n'
        << "name,theory_re,theory_im,computed_re,computed_im,fitted_re,fitted_im,relative_error,"
           "fitted_without_C1_re,fitted_without_C1_im,relative_error_without_C1\n";
    for (std::size_t i = 0; i < ref.size(); ++i) {
      out << ref[i].name << ',' << fmt(ref[i].theory.real()) << ',' << fmt(ref[i].theory.imag()) << ','
          << fmt(all.computed[i].real()) << ',' << fmt(all.computed[i].imag()) << ','
          << fmt(all.fitted[i].real()) << ',' << fmt(all.fitted[i].imag()) << ','
          << fmt(all.relative_error[i]) << ',' << fmt(partial.fitted[i].real()) << ','
          << fmt(partial.fitted[i].imag()) << ',' << fmt(partial.relative_error[i]) << '\n';
    }
    return;
  }
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < ref.size(); ++i) {
    rows.push_back({{"name", ref[i].name},
                    {"theory", complex_json(ref[i].theory)},
                    {"experiment", complex_json(ref[i].experiment)},
                    {"computed", complex_json(all.computed[i])},
                    {"fitted", complex_json(all.fitted[i])},
                    {"relative_error", all.relative_error[i]},
                    {"fitted_without_C1", complex_json(partial.fitted[i])},
                    {"relative_error_without_C1", partial.relative_error[i]}});
  }
  emit_json(out, {{"convention", conv.describe()},
                  {"scale", complex_json(all.scale)},
                  {"residual_norm", all.residual_norm},
                  {"scale_without_C1", complex_json(partial.scale)},
                  {"residual_norm_without_C1", partial.residual_norm},
                  {"note", note},
                  {"rows", rows}});
}

void cmd_table2(const RunConfig& c, std::ostream& out) {
  ordered_json rows = ordered_json::array();
  std::vector<std::string> flagged;
  std::ostringstream body;
  for (const NamedState& s : named_states()) {
    const double closed = fluctuation(s.point());
    const double ops = fluctuation_from_operators(s.point());
    const bool differs = std::abs(closed - s.listed_fluctuation) > 1e-9;
    if (differs) flagged.emplace_back(s.name);
    body << s.name << ',' << fmt(s.theta) << ',' << fmt(s.phi) << ',' << fmt(closed) << ',' << fmt(ops)
         << ',' << fmt(s.listed_fluctuation) << ',' << fmt(s.measured_fluctuation) << ','
         << (differs ? "listed_differs" : "") << '\n';
    rows.push_back({{"name", s.name}, {"theta", s.theta}, {"phi", s.phi}, {"delta", closed},
                    {"delta_operators", ops}, {"delta_listed", s.listed_fluctuation},
                    {"delta_measured", s.measured_fluctuation}, {"listed_differs", differs}});
  }
  ordered_json notes = ordered_json::array();
  for (const std::string& name : flagged) {
    const NamedState s = *find_state(name);
    notes.push_back(name + ": listed delta " + fmt(s.listed_fluctuation) + " but closed form gives " +
                    fmt(fluctuation(s.point())));
  }
  if (c.format == OutputFormat::csv) {
    for (const auto& n : notes) out << "# note: " << n.get<std::string>() << '\n';
    out << "name,theta,phi,delta,delta_operators,delta_listed,delta_measured,flag\n" << body.str();
  } else {
    emit_json(out, {{"states", rows}, {"notes", notes}});
  }
}

void cmd_experiment(const RunConfig& c, std::ostream& out) {
  std::vector<ExperimentTarget> targets;
  for (auto& p : resolve_points(c, true)) targets.push_back({p.label, p.point});
  NoiseSpec noise = c.noiseless ? NoiseSpec::none() : NoiseSpec::calibrated_default();
  if (c.depolarizing) noise.depolarizing_p = *c.depolarizing;
  if (c.rotation_sd) noise.rotation_angle_sd = *c.rotation_sd;
  noise.seed = c.seed;
  NMRParams params = NMRParams::placeholder();
  params.epsilon = c.epsilon;
  const ExperimentReport report = simulate_experiment(targets, noise, params);
  if (c.format == OutputFormat::csv) {
    write_experiment_csv(out, report);
  } else {
    out << experiment_report_json(report);
  }
}

}  // namespace

Command parse_command(std::string_view name) {
  for (const auto& [n, c] : kCommands) {
    if (n == name) return c;
  }
  throw std::invalid_argument("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command c) {
  for (const auto& [n, cmd] : kCommands) {
    if (cmd == c) return n;
  }
  return "?";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

DihedralConvention parse_convention(std::string_view name) {
  if (name == "interior") return DihedralConvention::interior;
  if (name == "normals") return DihedralConvention::normals;
  throw std::invalid_argument("unknown convention '" + std::string(name) + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  // Render into memory first so a failed command never leaves a partial file.
  std::ostringstream buffer;
  try {
    switch (config.command) {
      case Command::tetra: cmd_tetra(config, buffer); break;
      case Command::fluct: cmd_fluct(config, buffer); break;
      case Command::reconstruct: cmd_reconstruct(config, buffer); break;
      case Command::amplitude: cmd_amplitude(config, buffer); break;
      case Command::sweep: cmd_sweep(config, buffer); break;
      case Command::table1: cmd_table1(config, buffer); break;
      case Command::table2: cmd_table2(config, buffer); break;
      case Command::experiment: cmd_experiment(config, buffer); break;
    }
  } catch (const std::exception& e) {
    err << "qtetra " << command_name(config.command) << ": " << e.what() << '\n';
    return 2;
  }
  if (config.output_path.empty()) {
    out << buffer.str();
    return 0;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  file << buffer.str();
  file.close();
  if (!file) {
    err << "qtetra " << command_name(config.command) << ": cannot write '" << config.output_path << "'\n";
    return 3;
  }
  return 0;
}

}  // namespace qtetra
