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

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "floquet_ssh/drive.hpp"
#include "floquet_ssh/floquet.hpp"
#include "floquet_ssh/lattice.hpp"

namespace fssh {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Cross-checks every module against an independent route to the same
/// quantity: quadrature against Bessel blocks, frame transformation against
/// the potential, Floquet matrix against the RK4 propagator, drive limits,
/// spectral invariants, static edge modes and the phase boundary.
/// `on_check` is called after each check completes.
ValidationReport run_validation_suite(const std::function<void(const CheckResult&)>& on_check = {});

/// max_t max_j |i dP_jj/dt - V_jj(t) P_jj(t)| over `samples` points of one
/// drive period, with a central difference of width 2 * step.
double frame_equivalence_residual(const ChainGeometry& geom, const DriveSpec& d, int samples = 257,
                                  double step = 1e-6);

double max_entry_difference(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Largest difference after sorting both lists; +inf if their sizes differ.
double matched_distance(std::vector<double> a, std::vector<double> b);

/// Symmetric Hausdorff distance between two finite point sets.
double hausdorff_distance(const std::vector<double>& a, const std::vector<double>& b);

/// Eigenstates of the static chain with |E| < energy_tol and their edge
/// weights on `edge_cells` cells.
struct StaticEdgeReport {
  Eigen::VectorXd energies;
  std::vector<int> zero_modes;
  std::vector<double> edge_weights;
};
StaticEdgeReport static_edge_report(const ChainGeometry& geom, double energy_tol = 1e-3, int edge_cells = 2);

}  // namespace fssh
