// Copyright 2026 The floquet-ssh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "floquet_ssh/cli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "floquet_ssh/config.hpp"
#include "floquet_ssh/errors.hpp"
#include "floquet_ssh/spectrum_csv.hpp"
#include "floquet_ssh/sweep.hpp"
#include "floquet_ssh/validation.hpp"

#ifndef FLOQUET_SSH_VERSION
#define FLOQUET_SSH_VERSION "unknown"
#endif

namespace fssh {

namespace {

constexpr const char* kUnitsNote =
    "Units: hbar = 1 and the inter-cell hopping w sets the energy scale; the coupling is\n"
    "g = e a E0 / (hbar Omega) and positions are measured in lattice constants.\n"
    "Exit status: 0 ok, 1 usage, 2 invalid input, 3 numeric or I/O failure.";

struct StaticArgs {
  int n_dimers = 20;
  double v = 0.3;
  double w = 1.0;
  double r = 0.0;
  double tol = 1e-3;
  int edge_cells = 2;
};

struct SweepArgs {
  std::string config;
  std::string output;
  bool reproducible = false;
};

struct BoundaryArgs {
  double v = 0.3;
  double w = 1.0;
  double r = 0.0;
  double g_max = 8.0;
};

struct FieldArgs {
  std::string kind = "monochromatic";
  double omega = 10.0;
  double c = 0.0;
  double omega_env = 0.0;
  int samples = 2001;
  std::optional<double> t_min;
  std::optional<double> t_max;
};

int run_static(const StaticArgs& a, std::ostream& out) {
  const ChainGeometry geom{a.n_dimers, a.v, a.w, a.r};
  const StaticEdgeReport report = static_edge_report(geom, a.tol, a.edge_cells);
  fmt::print(out, "# static SSH chain: n_dimers={} v={:.12g} w={:.12g}\n", geom.n_dimers, geom.v, geom.w);
  fmt::print(out, "index,energy\n");
  for (Eigen::Index i = 0; i < report.energies.size(); ++i) fmt::print(out, "{},{:.12g}\n", i, report.energies[i]);
  fmt::print(out, "# zero modes (|E| < {:.3g}): {}\n", a.tol, report.zero_modes.size());
  for (std::size_t k = 0; k < report.zero_modes.size(); ++k) {
    fmt::print(out, "# state {} energy {:.6e} edge weight ({} cells) {:.6f}\n", report.zero_modes[k],
               report.energies[report.zero_modes[k]], a.edge_cells, report.edge_weights[k]);
  }
  return kExitOk;
}

int run_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  LoadedConfig loaded = a.config.empty() ? load_config("") : load_config_file(a.config);
  RunConfig& config = loaded.config;
  if (!a.output.empty()) config.output.path = a.output;
  for (const std::string& note : loaded.provenance) fmt::print(err, "note: {}\n", note);

  const SweepResult result = sweep_g(config.geometry, config.drive, config.grid.values(), config.floquet);
  const CsvWriteOptions options{a.reproducible, &config};
  if (config.output.path == "-") {
    write_spectrum_csv(out, result, options);
  } else {
    write_spectrum_csv(config.output.path, result, options);
  }

  const auto failed = std::count_if(result.points.begin(), result.points.end(), [](const SweepPoint& p) { return !p.ok; });
  fmt::print(err, "sweep: {} grid points, {} failed, {} rows\n", result.points.size(), failed, result.rows.size());
  for (const SweepPoint& p : result.points) {
    if (!p.ok) fmt::print(err, "  g={:.12g}: {}\n", p.g, p.error);
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

int run_boundary(const BoundaryArgs& a, std::ostream& out) {
  const BoundaryResult result = phase_boundary(a.v, a.w, a.r, a.g_max);
  if (result.degenerate) {
    fmt::print(out, "# |v J0(r g)| = |w J0((1-r) g)| holds for every g; no isolated boundary\n");
    return kExitOk;
  }
  fmt::print(out, "# roots of |v J0(r g)| = |w J0((1-r) g)| in (0, {:.12g}]: {}\n", a.g_max, result.roots.size());
  for (double g : result.roots) fmt::print(out, "{:.12f}\n", g);
  return kExitOk;
}

int run_validate(std::ostream& out) {
  const ValidationReport report = run_validation_suite([&out](const CheckResult& c) {
    fmt::print(out, "{} {} (measured {:.3e}, tolerance {:.1e}){}\n", c.passed ? "PASS" : "FAIL", c.name, c.measured,
               c.tolerance, c.detail.empty() ? "" : " " + c.detail);
    out.flush();
  });
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return !c.passed; });
  fmt::print(out, "{} of {} checks passed\n", report.checks.size() - failed, report.checks.size());
  return failed == 0 ? kExitOk : kExitFailure;
}

int run_field(const FieldArgs& a, std::ostream& out) {
  DriveSpec d;
  if (a.kind == "monochromatic") {
    d = DriveSpec::monochromatic(0.0, a.omega);
  } else if (a.kind == "gaussian") {
    d = DriveSpec::gaussian(0.0, a.omega, a.c);
  } else if (a.kind == "beating") {
    d = DriveSpec::beating(0.0, a.omega, a.omega_env);
  } else {
    throw ContractError(fmt::format("field: unknown kind '{}'", a.kind));
  }
  d.validate();
  if (a.samples < 2) throw ContractError("field: --samples must be at least 2");
  double span = 2.0 * 2.0 * std::numbers::pi / a.omega;
  if (d.kind == DriveKind::Gaussian) span = 3.0 * a.c / a.omega;
  if (d.kind == DriveKind::Beating) span = std::numbers::pi / d.omega_minus();
  const double t0 = a.t_min.value_or(-span);
  const double t1 = a.t_max.value_or(span);
  if (!(t1 > t0)) throw ContractError("field: --t-max must exceed --t-min");
  fmt::print(out, "t,E\n");
  for (int k = 0; k < a.samples; ++k) {
    const double t = t0 + (t1 - t0) * k / (a.samples - 1);
    fmt::print(out, "{:.12g},{:.12g}\n", t, field_profile(d, t));
  }
  return kExitOk;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Floquet spectra of a driven SSH chain", "floquet-ssh"};
  app.footer(kUnitsNote);
  app.set_version_flag("--version", FLOQUET_SSH_VERSION);
  app.require_subcommand(1);

  StaticArgs static_args;
  auto* cmd_static = app.add_subcommand("static", "Static spectrum and zero-mode edge report");
  cmd_static->add_option("--n", static_args.n_dimers, "Number of unit cells")->capture_default_str();
  cmd_static->add_option("--v", static_args.v, "Intra-cell hopping")->capture_default_str();
  cmd_static->add_option("--w", static_args.w, "Inter-cell hopping")->capture_default_str();
  cmd_static->add_option("--r", static_args.r, "Dimer separation b/a")->capture_default_str();
  cmd_static->add_option("--tol", static_args.tol, "Zero-mode energy tolerance")->capture_default_str();
  cmd_static->add_option("--edge-cells", static_args.edge_cells, "Cells counted at each end")->capture_default_str();

  SweepArgs sweep_args;
  auto* cmd_sweep = app.add_subcommand("sweep", "Floquet spectrum over a grid of couplings, written as CSV");
  cmd_sweep->add_option("--config", sweep_args.config, "Configuration file (defaults apply when omitted)");
  cmd_sweep->add_option("--output", sweep_args.output, "Output path, '-' for stdout (overrides [output] path)");
  cmd_sweep->add_flag("--reproducible", sweep_args.reproducible, "Omit the timestamp comment");

  BoundaryArgs boundary_args;
  auto* cmd_boundary = app.add_subcommand("boundary", "Couplings where |v J0(r g)| = |w J0((1-r) g)|");
  cmd_boundary->add_option("--v", boundary_args.v, "Intra-cell hopping")->capture_default_str();
  cmd_boundary->add_option("--w", boundary_args.w, "Inter-cell hopping")->capture_default_str();
  cmd_boundary->add_option("--r", boundary_args.r, "Dimer separation b/a")->capture_default_str();
  cmd_boundary->add_option("--gmax", boundary_args.g_max, "Upper end of the scan")->capture_default_str();

  auto* cmd_validate = app.add_subcommand("validate", "Cross-check every module against independent oracles");

  FieldArgs field_args;
  auto* cmd_field = app.add_subcommand("field", "Samples of the field profile E(t)/E0 as t,E");
  cmd_field->add_option("--kind", field_args.kind, "monochromatic, gaussian or beating")
      ->check(CLI::IsMember({"monochromatic", "gaussian", "beating"}))
      ->capture_default_str();
  cmd_field->add_option("--omega", field_args.omega, "Carrier frequency")->capture_default_str();
  cmd_field->add_option("--c", field_args.c, "Pulse width Omega/Gamma (gaussian)");
  cmd_field->add_option("--omega-env", field_args.omega_env, "Envelope frequency (beating)");
  cmd_field->add_option("--samples", field_args.samples, "Number of samples")->capture_default_str();
  cmd_field->add_option("--t-min", field_args.t_min, "Start time");
  cmd_field->add_option("--t-max", field_args.t_max, "End time");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_static->parsed()) return run_static(static_args, out);
    if (cmd_sweep->parsed()) return run_sweep(sweep_args, out, err);
    if (cmd_boundary->parsed()) return run_boundary(boundary_args, out);
    if (cmd_validate->parsed()) return run_validate(out);
    if (cmd_field->parsed()) return run_field(field_args, out);
  } catch (const ConfigError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInvalidInput;
  } catch (const ContractError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInvalidInput;
  } catch (const DomainError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInvalidInput;
  } catch (const UnsupportedConfiguration& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace fssh
