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

#include <complex>
#include <span>
#include <utility>

#include <Eigen/Dense>

namespace fssh {

enum class Sublattice : int { A = 0, B = 1 };

/// Open SSH chain of n_dimers unit cells.
///
/// Energies are in units of the inter-cell hopping scale (w = 1 by
/// convention); r = b/a is the intra-cell dimer separation in units of the
/// lattice constant.
struct ChainGeometry {
  int n_dimers = 20;
  double v = 0.3;
  double w = 1.0;
  double r = 0.0;

  // Throws ContractError unless N >= 1, v >= 0, w > 0 and 0 <= r < 1.
  void validate() const;
  int dim() const { return 2 * n_dimers; }

  bool operator==(const ChainGeometry&) const = default;
};

// Cell-major, sublattice-minor basis. `cell` is zero based.
constexpr int site_index(int cell, Sublattice s) { return 2 * cell + static_cast<int>(s); }

/// Normalized single-particle amplitudes on the 2N sites of a chain.
class StateVector {
 public:
  // Takes the amplitudes as given; throws ContractError unless the norm is
  // 1 to within 1e-10.
  explicit StateVector(Eigen::VectorXcd amplitudes);
  // Rescales to unit norm; throws ContractError for a zero vector.
  static StateVector normalized(Eigen::VectorXcd amplitudes);

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(int cell, Sublattice s) const { return amplitudes_[site_index(cell, s)]; }
  Eigen::Index size() const { return amplitudes_.size(); }

 private:
  Eigen::VectorXcd amplitudes_;
};

Eigen::MatrixXd build_static_hamiltonian(const ChainGeometry& geom);

// SSH matrix with explicit hoppings; does not validate signs so that
// renormalized (possibly negative) hoppings can be used.
Eigen::MatrixXd build_ssh_matrix(int n_dimers, double intra, double inter);

/// Probability on the first and last n_edge_cells unit cells.
double edge_weight(const StateVector& state, const ChainGeometry& geom, int n_edge_cells);

/// Same metric from a site probability distribution (length 2N, sum 1).
double edge_weight(std::span<const double> site_probability, const ChainGeometry& geom, int n_edge_cells);

/// Bulk dispersion (-E, +E) with E^2 = v^2 + w^2 + 2 v w cos q.
std::pair<double, double> bulk_bands(double v_eff, double w_eff, double q);

}  // namespace fssh
