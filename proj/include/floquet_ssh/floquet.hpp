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

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "floquet_ssh/drive.hpp"
#include "floquet_ssh/lattice.hpp"
#include "floquet_ssh/specfun.hpp"

namespace fssh {

/// Signed permutation S with S e_j = sign[j] e_{image[j]} and S^2 = 1.
///
/// An assembler attaches one when the drive has a known unitary symmetry;
/// diagonalize() verifies that it commutes with the matrix and, if so,
/// solves the two S = +1 and S = -1 sectors separately.
struct ReplicaSymmetry {
  std::vector<int> image;
  std::vector<double> sign;
};

/// Truncated Floquet-Fourier Hamiltonian on replicas m = -M..M.
///
/// Row/column index is (m + M) * block_dim + site. Block (m, m') holds the
/// harmonic n = m' - m of the transformed Hamiltonian, plus -m Omega_base on
/// the diagonal blocks.
struct FloquetMatrix {
  int m_max = 0;
  double base_frequency = 0.0;
  int block_dim = 0;
  Eigen::MatrixXcd matrix;
  std::optional<ReplicaSymmetry> symmetry;

  int replicas() const { return 2 * m_max + 1; }
  Eigen::Index dim() const { return matrix.rows(); }
  Eigen::Block<const Eigen::MatrixXcd> block(int m, int m_prime) const {
    return matrix.block((m + m_max) * block_dim, (m_prime + m_max) * block_dim, block_dim, block_dim);
  }
};

enum class PopulationMeasure { CentralReplica, MaxReplica };

struct FloquetSolution {
  int m_max = 0;
  double base_frequency = 0.0;
  int block_dim = 0;
  Eigen::VectorXd quasienergies;    // ascending, unfolded
  Eigen::MatrixXcd eigenvectors;    // one column per state
  Eigen::MatrixXd populations;      // (state, m + M) -> ||u_{alpha,m}||^2

  Eigen::Index size() const { return quasienergies.size(); }
  double population(Eigen::Index state, int m) const { return populations(state, m + m_max); }
  double population_scalar(Eigen::Index state, PopulationMeasure measure = PopulationMeasure::CentralReplica) const;
  // Replica-summed probability on each of the block_dim sites.
  Eigen::VectorXd site_probabilities(Eigen::Index state) const;
  // States whose unfolded quasienergy lies in [-Omega_base/2, Omega_base/2).
  std::vector<int> central_states() const;
  // Ascending quasienergies of central_states().
  std::vector<double> central_quasienergies() const;
};

/// Builds the Floquet matrix from the harmonics of p_v(t) and p_w(t).
///
/// `intra[n]` and `inter[n]` are the coefficients of exp(+i n Omega_base t)
/// in the expansions of the hopping phases; they need to cover |n| <= 2M.
FloquetMatrix assemble_from_harmonics(const ChainGeometry& geom, const HarmonicCoefficients& intra,
                                      const HarmonicCoefficients& inter, int m_max, double base_frequency);

/// Closed-form Jacobi-Anger blocks for the monochromatic drive.
FloquetMatrix assemble_monochromatic(const ChainGeometry& geom, const DriveSpec& d, int m_max);

/// Quadrature path valid for every drive kind.
///
/// The hopping phases are projected on exp(i n Omega_base t) over the window
/// [window_center - T/2, window_center + T/2], T = 2 pi / Omega_base.
FloquetMatrix assemble_numeric(const ChainGeometry& geom, const DriveSpec& d, int m_max, double base_frequency,
                               const QuadratureSettings& q = {}, double window_center = 0.0);

/// Double Jacobi-Anger expansion for the beating drive with base frequency
/// Omega_-. Requires Omega_+/Omega_- to be an integer within 1e-9 (so that
/// the drive is periodic in 2 pi/Omega_-); otherwise throws
/// UnsupportedConfiguration. inner_cutoff < 0 selects M + 10.
FloquetMatrix assemble_beating(const ChainGeometry& geom, const DriveSpec& d, int m_max, int inner_cutoff = -1);

/// High-frequency limit: SSH chain with v -> v J0(r g), w -> w J0((1-r) g).
Eigen::MatrixXd h00_approx(const ChainGeometry& geom, double g);

/// Dense Hermitian eigendecomposition; quasienergies ascending.
///
/// Throws ContractError if the matrix is not Hermitian to 1e-12 and
/// NumericError if the eigensolver does not converge.
FloquetSolution diagonalize(const FloquetMatrix& h);

/// Reduces each value into [-Omega_base/2, Omega_base/2).
double fold(double quasienergy, double omega_base);
std::vector<double> fold(std::span<const double> quasienergies, double omega_base);

enum class PropagationFrame { Lab, Transformed };

/// One-period time-evolution operator by classical fixed-step RK4.
///
/// Lab frame integrates i dU/dt = [H_S + V(t)] U; the transformed frame
/// integrates i dU/dt = P^dagger H_S P U, which is the only meaningful
/// choice for the non-periodic Gaussian pulse. Throws AccuracyError if
/// ||U^dagger U - 1|| exceeds 1e-8.
Eigen::MatrixXcd propagate_one_period(const ChainGeometry& geom, const DriveSpec& d, double base_period, int steps,
                                      PropagationFrame frame = PropagationFrame::Lab, double t_start = 0.0);

/// Quasienergies -arg(lambda)/T of a one-period propagator, folded and
/// sorted.
std::vector<double> propagator_quasienergies(const Eigen::MatrixXcd& u, double base_period);

}  // namespace fssh
