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

#include "floquet_ssh/lattice.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "floquet_ssh/errors.hpp"

namespace fssh {

namespace {

constexpr double kNormTolerance = 1e-10;

void check_edge_cells(const ChainGeometry& geom, int n_edge_cells) {
  geom.validate();
  if (n_edge_cells < 1 || 2 * n_edge_cells > geom.n_dimers) {
    throw ContractError(fmt::format("edge_weight: n_edge_cells = {} must lie in [1, N/2] for N = {}",
                                    n_edge_cells, geom.n_dimers));
  }
}

}  // namespace

void ChainGeometry::validate() const {
  if (n_dimers < 1) throw ContractError(fmt::format("geometry: N = {} violates N >= 1", n_dimers));
  if (!(v >= 0.0) || !std::isfinite(v)) throw ContractError(fmt::format("geometry: v = {} violates v >= 0", v));
  if (!(w > 0.0) || !std::isfinite(w)) throw ContractError(fmt::format("geometry: w = {} violates w > 0", w));
  if (!(r >= 0.0 && r < 1.0)) throw ContractError(fmt::format("geometry: r = {} violates 0 <= r < 1", r));
}

StateVector::StateVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw ContractError(fmt::format("StateVector: squared norm {} is not 1", norm2));
  }
}

StateVector StateVector::normalized(Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw ContractError("StateVector: cannot normalize a zero vector");
  amplitudes /= norm;
  return StateVector(std::move(amplitudes));
}

Eigen::MatrixXd build_ssh_matrix(int n_dimers, double intra, double inter) {
  const int dim = 2 * n_dimers;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int cell = 0; cell < n_dimers; ++cell) {
    const int a = site_index(cell, Sublattice::A);
    const int b = site_index(cell, Sublattice::B);
    h(a, b) = h(b, a) = intra;
    if (cell + 1 < n_dimers) {
      const int next_a = site_index(cell + 1, Sublattice::A);
      h(next_a, b) = h(b, next_a) = inter;
    }
  }
  return h;
}

Eigen::MatrixXd build_static_hamiltonian(const ChainGeometry& geom) {
  geom.validate();
  return build_ssh_matrix(geom.n_dimers, geom.v, geom.w);
}

double edge_weight(std::span<const double> site_probability, const ChainGeometry& geom, int n_edge_cells) {
  check_edge_cells(geom, n_edge_cells);
  if (site_probability.size() != static_cast<std::size_t>(geom.dim())) {
    throw ContractError("edge_weight: probability vector does not match the chain size");
  }
  double total = 0.0;
  for (double p : site_probability) total += p;
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw ContractError(fmt::format("edge_weight: probabilities sum to {}, expected 1", total));
  }
  const int edge_sites = 2 * n_edge_cells;
  double weight = 0.0;
  for (int i = 0; i < edge_sites; ++i) {
    weight += site_probability[i] + site_probability[geom.dim() - 1 - i];
  }
  return std::clamp(weight, 0.0, 1.0);
}

double edge_weight(const StateVector& state, const ChainGeometry& geom, int n_edge_cells) {
  if (state.size() != geom.dim()) throw ContractError("edge_weight: state does not match the chain size");
  const Eigen::VectorXd prob = state.amplitudes().cwiseAbs2();
  return edge_weight(std::span<const double>(prob.data(), prob.size()), geom, n_edge_cells);
}

std::pair<double, double> bulk_bands(double v_eff, double w_eff, double q) {
  const double e2 = v_eff * v_eff + w_eff * w_eff + 2.0 * v_eff * w_eff * std::cos(q);
  const double e = std::sqrt(std::max(e2, 0.0));
  return {-e, e};
}

}  // namespace fssh
