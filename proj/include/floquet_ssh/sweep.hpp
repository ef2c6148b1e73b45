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

#pragma once

#include <string>
#include <vector>

#include "floquet_ssh/drive.hpp"
#include "floquet_ssh/floquet.hpp"
#include "floquet_ssh/lattice.hpp"
#include "floquet_ssh/specfun.hpp"

namespace fssh {

enum class AssemblyMethod { Analytic, Numeric };

struct EdgeDetection {
  double energy_window = 0.05;     // |quasienergy| below this, in units of w
  double weight_threshold = 0.6;   // edge weight above this
  int edge_cells = 2;

  bool operator==(const EdgeDetection&) const = default;
};

struct SweepOptions {
  int m_max = 20;
  AssemblyMethod method = AssemblyMethod::Analytic;
  QuadratureSettings quadrature{};
  double base_frequency = 0.0;  // 0 selects the drive's natural frequency
  double window_center = 0.0;   // numeric path only
  PopulationMeasure population = PopulationMeasure::CentralReplica;
  bool fold = true;
  EdgeDetection edges{};
  int workers = 0;  // 0 selects default_worker_count()
};

struct SweepRow {
  double g;
  double quasienergy;
  double population;
  double edge_weight;
  int state_index;  // -1 marks a failed grid point
};

struct SweepPoint {
  double g;
  bool ok;
  int edge_state_count;
  std::string error;
};

struct SweepMetadata {
  ChainGeometry geometry;
  DriveSpec drive;
  int m_max;
  double base_frequency;
  AssemblyMethod method;
  QuadratureSettings quadrature;
  std::string code_version;
};

struct SweepResult {
  std::vector<SweepRow> rows;      // sorted by (g, quasienergy)
  std::vector<SweepPoint> points;  // one per grid value, in grid order
  SweepMetadata metadata;
};

/// Worker count from FLOQUET_SSH_WORKERS, else the hardware concurrency.
int default_worker_count();

/// Builds the Floquet matrix for one coupling value per drive kind and method.
FloquetMatrix assemble_for(const ChainGeometry& geom, const DriveSpec& d, const SweepOptions& options);

/// Edge weight of every state (replica-summed site probabilities). Chains
/// with fewer than 2 * edge_cells cells count min(edge_cells, N/2) cells.
std::vector<double> edge_weights(const FloquetSolution& sol, const ChainGeometry& geom, int edge_cells = 2);

/// Central-zone states with |quasienergy| < energy_window and edge weight
/// above weight_threshold.
std::vector<int> detect_edge_states(const FloquetSolution& sol, const ChainGeometry& geom,
                                    double energy_window = 0.05, double weight_threshold = 0.6,
                                    int edge_cells = 2);

/// Assembles, diagonalizes and tabulates every state for each g in g_grid.
///
/// Grid points run on a worker pool and are merged in grid order, so the
/// output does not depend on scheduling. A failing point is recorded in
/// `points` with its message and as a single row with state_index = -1.
SweepResult sweep_g(const ChainGeometry& geom, const DriveSpec& d_template, const std::vector<double>& g_grid,
                    const SweepOptions& options = {});

struct BoundaryResult {
  std::vector<double> roots;
  bool degenerate = false;  // |v J0(rg)| == |w J0((1-r)g)| identically
};

/// All g in (0, g_max] with |v J0(r g)| = |w J0((1-r) g)|, bisected to 1e-10.
BoundaryResult phase_boundary(double v, double w, double r, double g_max);

}  // namespace fssh
