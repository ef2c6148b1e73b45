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

#include "floquet_ssh/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

#include <fmt/format.h>

#include "floquet_ssh/errors.hpp"

#ifndef FLOQUET_SSH_VERSION
#define FLOQUET_SSH_VERSION "unknown"
#endif

namespace fssh {

namespace {

constexpr double kBoundaryScanStep = 1e-3;
constexpr double kBoundaryTolerance = 1e-10;

void check_analytic_supported(const DriveSpec& d) {
  if (d.kind == DriveKind::Gaussian) {
    throw UnsupportedConfiguration("the Gaussian pulse has no closed-form Floquet blocks; use the numeric method");
  }
  if (d.kind == DriveKind::Beating) {
    const double ratio = d.omega_plus() / d.omega_minus();
    if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio) {
      throw UnsupportedConfiguration(fmt::format(
          "beating drive with Omega_+/Omega_- = {:.12g} is incommensurate; use the numeric method", ratio));
    }
  }
}

// Chains shorter than 2 * edge_cells use every cell they have; a single
// cell is all edge.
double state_edge_weight(const FloquetSolution& sol, Eigen::Index state, const ChainGeometry& geom, int edge_cells) {
  if (edge_cells < 1) throw ContractError(fmt::format("edge_cells = {} must be >= 1", edge_cells));
  const int cells = std::min(edge_cells, geom.n_dimers / 2);
  if (cells == 0) return 1.0;
  Eigen::VectorXd prob = sol.site_probabilities(state);
  // Eigenvectors are unit vectors; renormalize away rounding only.
  prob /= prob.sum();
  return edge_weight(std::span<const double>(prob.data(), prob.size()), geom, cells);
}

struct PointOutput {
  std::vector<SweepRow> rows;
  SweepPoint point;
};

PointOutput run_point(const ChainGeometry& geom, const DriveSpec& d, const SweepOptions& options) {
  PointOutput out;
  out.point = {d.g, true, 0, {}};
  const FloquetSolution sol = diagonalize(assemble_for(geom, d, options));
  const std::vector<double> weights = edge_weights(sol, geom, options.edges.edge_cells);
  out.rows.reserve(sol.size());
  for (Eigen::Index i = 0; i < sol.size(); ++i) {
    const double e = options.fold ? fold(sol.quasienergies[i], sol.base_frequency) : sol.quasienergies[i];
    out.rows.push_back({d.g, e, sol.population_scalar(i, options.population), weights[i], static_cast<int>(i)});
  }
  std::stable_sort(out.rows.begin(), out.rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return a.quasienergy < b.quasienergy || (a.quasienergy == b.quasienergy && a.state_index < b.state_index);
  });
  out.point.edge_state_count = static_cast<int>(
      detect_edge_states(sol, geom, options.edges.energy_window, options.edges.weight_threshold,
                         options.edges.edge_cells)
          .size());
  return out;
}

}  // namespace

int default_worker_count() {
  if (const char* env = std::getenv("FLOQUET_SSH_WORKERS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1) return static_cast<int>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

FloquetMatrix assemble_for(const ChainGeometry& geom, const DriveSpec& d, const SweepOptions& options) {
  const double base = options.base_frequency > 0.0 ? options.base_frequency : d.natural_base_frequency();
  if (options.method == AssemblyMethod::Numeric) {
    return assemble_numeric(geom, d, options.m_max, base, options.quadrature, options.window_center);
  }
  check_analytic_supported(d);
  if (base != d.natural_base_frequency()) {
    throw ContractError("the analytic method uses the drive's natural base frequency");
  }
  if (d.kind == DriveKind::Beating) return assemble_beating(geom, d, options.m_max);
  return assemble_monochromatic(geom, d, options.m_max);
}

std::vector<double> edge_weights(const FloquetSolution& sol, const ChainGeometry& geom, int edge_cells) {
  std::vector<double> out(sol.size());
  for (Eigen::Index i = 0; i < sol.size(); ++i) out[i] = state_edge_weight(sol, i, geom, edge_cells);
  return out;
}

std::vector<int> detect_edge_states(const FloquetSolution& sol, const ChainGeometry& geom, double energy_window,
                                    double weight_threshold, int edge_cells) {
  if (!(weight_threshold > 0.0 && weight_threshold < 1.0)) {
    throw ContractError(fmt::format("detect_edge_states: weight_threshold = {} must lie in (0, 1)", weight_threshold));
  }
  if (!(energy_window > 0.0)) throw ContractError("detect_edge_states: energy_window must be positive");
  std::vector<int> out;
  for (int i : sol.central_states()) {
    if (std::abs(fold(sol.quasienergies[i], sol.base_frequency)) >= energy_window) continue;
    if (state_edge_weight(sol, i, geom, edge_cells) > weight_threshold) out.push_back(i);
  }
  return out;
}

SweepResult sweep_g(const ChainGeometry& geom, const DriveSpec& d_template, const std::vector<double>& g_grid,
                    const SweepOptions& options) {
  geom.validate();
  d_template.validate();
  options.quadrature.validate();
  if (g_grid.empty()) throw ContractError("sweep_g: empty g grid");
  for (std::size_t i = 0; i < g_grid.size(); ++i) {
    if (!(g_grid[i] >= 0.0) || !std::isfinite(g_grid[i])) {
      throw ContractError(fmt::format("sweep_g: g = {} violates g >= 0", g_grid[i]));
    }
    if (i > 0 && !(g_grid[i] > g_grid[i - 1])) throw ContractError("sweep_g: g grid must be strictly ascending");
  }
  if (options.method == AssemblyMethod::Analytic) check_analytic_supported(d_template);

  std::vector<PointOutput> outputs(g_grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < g_grid.size(); i = next.fetch_add(1)) {
      const double g = g_grid[i];
      try {
        outputs[i] = run_point(geom, d_template.with_coupling(g), options);
      } catch (const std::exception& e) {
        outputs[i].rows.assign(1, {g, std::nan(""), std::nan(""), std::nan(""), -1});
        outputs[i].point = {g, false, 0, e.what()};
      }
    }
  };
  const int requested = options.workers > 0 ? options.workers : default_worker_count();
  const int workers = std::max(1, std::min<int>(requested, static_cast<int>(g_grid.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  SweepResult result;
  result.metadata = {geom,
                     d_template,
                     options.m_max,
                     options.base_frequency > 0.0 ? options.base_frequency : d_template.natural_base_frequency(),
                     options.method,
                     options.quadrature,
                     FLOQUET_SSH_VERSION};
  for (PointOutput& out : outputs) {
    result.rows.insert(result.rows.end(), out.rows.begin(), out.rows.end());
    result.points.push_back(std::move(out.point));
  }
  return result;
}

BoundaryResult phase_boundary(double v, double w, double r, double g_max) {
  if (!(g_max > 0.0 && g_max <= 100.0)) throw DomainError(fmt::format("phase_boundary: g_max = {} outside (0, 100]", g_max));
  if (!(r >= 0.0 && r < 1.0)) throw DomainError(fmt::format("phase_boundary: r = {} outside [0, 1)", r));
  BoundaryResult result;
  if (std::abs(v) == std::abs(w) && (r == 0.5 || v == 0.0)) {
    result.degenerate = true;
    return result;
  }
  auto f = [&](double g) { return std::abs(v * bessel_j(0, r * g)) - std::abs(w * bessel_j(0, (1.0 - r) * g)); };
  const int intervals = static_cast<int>(std::ceil(g_max / kBoundaryScanStep));
  const double step = g_max / intervals;
  double lo = 0.0;
  double f_lo = f(lo);
  for (int i = 1; i <= intervals; ++i) {
    const double hi = i == intervals ? g_max : i * step;
    const double f_hi = f(hi);
    if (f_hi == 0.0) {
      result.roots.push_back(hi);
    } else if (f_lo != 0.0 && (f_lo < 0.0) != (f_hi < 0.0)) {
      double a = lo;
      double b = hi;
      double fa = f_lo;
      while (b - a > kBoundaryTolerance) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if ((fm < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      result.roots.push_back(0.5 * (a + b));
    }
    lo = hi;
    f_lo = f_hi;
  }
  return result;
}

}  // namespace fssh
