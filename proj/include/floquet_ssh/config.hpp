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
#include <string_view>
#include <vector>

#include "floquet_ssh/drive.hpp"
#include "floquet_ssh/lattice.hpp"
#include "floquet_ssh/sweep.hpp"

namespace fssh {

struct SweepGrid {
  double g_min = 0.0;
  double g_max = 8.0;
  int g_steps = 400;  // number of intervals; the grid has g_steps + 1 points

  std::vector<double> values() const;
  bool operator==(const SweepGrid&) const = default;
};

struct OutputSettings {
  std::string path = "spectrum.csv";  // "-" writes to standard output
  std::string format = "csv";

  bool operator==(const OutputSettings&) const = default;
};

/// Everything a `sweep` run needs, as read from a sectioned key-value file:
///
///   [geometry] n_dimers v w r
///   [drive]    kind omega c omega_env phase_offset
///   [sweep]    g_min g_max g_steps energy_window edge_weight_threshold edge_cells
///   [floquet]  replicas method samples rule population fold window_center
///   [output]   path format
struct RunConfig {
  ChainGeometry geometry{};
  DriveSpec drive{};  // drive.g is unused; the coupling comes from the sweep grid
  SweepGrid grid{};
  SweepOptions floquet{};
  OutputSettings output{};

  bool operator==(const RunConfig& other) const;
};

struct LoadedConfig {
  RunConfig config;
  std::vector<std::string> provenance;  // one note per default that was applied
};

/// Parses and validates a configuration document.
///
/// Throws ConfigError naming the line for syntax errors and the offending
/// field for unknown keys, bad values and violated invariants.
LoadedConfig load_config(std::string_view text);
LoadedConfig load_config_file(const std::string& path);

/// Inverse of load_config: every field written explicitly with
/// round-trip precision.
std::string serialize_config(const RunConfig& config);

// Throws ConfigError if any field violates a module precondition.
void validate_config(const RunConfig& config);

std::string_view to_string(AssemblyMethod method);
std::string_view to_string(QuadratureRule rule);
std::string_view to_string(PopulationMeasure measure);

}  // namespace fssh
