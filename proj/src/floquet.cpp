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

#include "floquet_ssh/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "floquet_ssh/errors.hpp"

namespace fssh {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kSymmetryTolerance = 1e-12;
constexpr double kCommensurateTolerance = 1e-9;

void check_replica_args(const ChainGeometry& geom, int m_max, double base_frequency) {
  geom.validate();
  if (m_max < 0) throw ContractError(fmt::format("floquet: replica cutoff M = {} must be >= 0", m_max));
  if (!(base_frequency > 0.0) || !std::isfinite(base_frequency)) {
    throw ContractError(fmt::format("floquet: base frequency {} must be positive", base_frequency));
  }
}

// J_n(sign * x) for any integer n from a table of J_k(x), k >= 0.
double bessel_from_table(const std::vector<double>& table, int n, bool negate_argument) {
  const int k = std::abs(n);
  if (k >= static_cast<int>(table.size())) return 0.0;
  double value = table[k];
  if (k % 2 == 1 && n < 0) value = -value;
  if (k % 2 == 1 && negate_argument) value = -value;
  return value;
}

// Reflection l -> N+1-l with A <-> B, combined with a half-period time
// shift (sign (-1)^m on replica m). Commutes with the Floquet matrix
// whenever s(t + T/2) = -s(t).
ReplicaSymmetry reflection_half_period_symmetry(int block_dim, int m_max) {
  const int replicas = 2 * m_max + 1;
  ReplicaSymmetry s;
  s.image.resize(static_cast<std::size_t>(replicas) * block_dim);
  s.sign.resize(s.image.size());
  for (int m = -m_max; m <= m_max; ++m) {
    const int offset = (m + m_max) * block_dim;
    for (int j = 0; j < block_dim; ++j) {
      s.image[offset + j] = offset + (block_dim - 1 - j);
      s.sign[offset + j] = (m % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return s;
}

HarmonicCoefficients reversed(const HarmonicCoefficients& a) {
  std::vector<cplx> values(a.values().rbegin(), a.values().rend());
  return HarmonicCoefficients(a.n_max(), std::move(values));
}

bool symmetry_commutes(const Eigen::MatrixXcd& h, const ReplicaSymmetry& s) {
  const Eigen::Index n = h.rows();
  if (static_cast<Eigen::Index>(s.image.size()) != n || s.sign.size() != s.image.size()) return false;
  for (Eigen::Index i = 0; i < n; ++i) {
    const int j = s.image[i];
    if (j < 0 || j >= n || s.image[j] != i || s.sign[i] * s.sign[j] != 1.0) return false;
  }
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  for (Eigen::Index col = 0; col < n; ++col) {
    const int image_col = s.image[col];
    for (Eigen::Index row = 0; row < n; ++row) {
      const cplx mapped = s.sign[row] * s.sign[col] * h(row, col);
      if (std::abs(h(s.image[row], image_col) - mapped) > kSymmetryTolerance * scale) return false;
    }
  }
  return true;
}

struct SectorVector {
  int first;
  double first_coeff;
  int second;  // -1 for a fixed point of the permutation
  double second_coeff;
};

std::pair<std::vector<SectorVector>, std::vector<SectorVector>> sector_bases(const ReplicaSymmetry& s) {
  std::vector<SectorVector> plus;
  std::vector<SectorVector> minus;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (int i = 0; i < static_cast<int>(s.image.size()); ++i) {
    const int j = s.image[i];
    if (j == i) {
      (s.sign[i] > 0 ? plus : minus).push_back({i, 1.0, -1, 0.0});
    } else if (i < j) {
      plus.push_back({i, inv_sqrt2, j, s.sign[i] * inv_sqrt2});
      minus.push_back({i, inv_sqrt2, j, -s.sign[i] * inv_sqrt2});
    }
  }
  return {std::move(plus), std::move(minus)};
}

template <typename Matrix>
Matrix project(const Matrix& h, const std::vector<SectorVector>& basis) {
  const Eigen::Index n = h.rows();
  const Eigen::Index k = static_cast<Eigen::Index>(basis.size());
  Matrix hq(n, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    const SectorVector& b = basis[a];
    hq.col(a) = b.first_coeff * h.col(b.first);
    if (b.second >= 0) hq.col(a) += b.second_coeff * h.col(b.second);
  }
  Matrix out(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    const SectorVector& b = basis[a];
    out.row(a) = b.first_coeff * hq.row(b.first);
    if (b.second >= 0) out.row(a) += b.second_coeff * hq.row(b.second);
  }
  return out;
}

struct EigenPairs {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

template <typename Matrix>
EigenPairs dense_eigensolve(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericError(fmt::format(
        "diagonalize: eigensolver did not converge (dimension {}, max |H_ij| = {:.6g}, Frobenius norm = {:.6g})",
        h.rows(), h.cwiseAbs().maxCoeff(), h.norm()));
  }
  return {solver.eigenvalues(), solver.eigenvectors().template cast<cplx>()};
}

template <typename Matrix>
EigenPairs solve_with_symmetry(const Matrix& h, const ReplicaSymmetry& s) {
  auto [plus, minus] = sector_bases(s);
  const Eigen::Index n = h.rows();
  EigenPairs out{Eigen::VectorXd(n), Eigen::MatrixXcd::Zero(n, n)};
  Eigen::Index filled = 0;
  for (const auto* basis : {&plus, &minus}) {
    if (basis->empty()) continue;
    const EigenPairs sector = dense_eigensolve(project(h, *basis));
    for (Eigen::Index col = 0; col < sector.values.size(); ++col, ++filled) {
      out.values[filled] = sector.values[col];
      for (Eigen::Index a = 0; a < static_cast<Eigen::Index>(basis->size()); ++a) {
        const SectorVector& b = (*basis)[a];
        out.vectors(b.first, filled) += b.first_coeff * sector.vectors(a, col);
        if (b.second >= 0) out.vectors(b.second, filled) += b.second_coeff * sector.vectors(a, col);
      }
    }
  }
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return out.values[a] < out.values[b]; });
  EigenPairs sorted{Eigen::VectorXd(n), Eigen::MatrixXcd(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    sorted.values[i] = out.values[order[i]];
    sorted.vectors.col(i) = out.vectors.col(order[i]);
  }
  return sorted;
}

template <typename Matrix>
EigenPairs solve(const Matrix& h, const std::optional<ReplicaSymmetry>& symmetry, bool symmetry_ok) {
  if (symmetry && symmetry_ok) return solve_with_symmetry(h, *symmetry);
  return dense_eigensolve(h);
}

}  // namespace

double FloquetSolution::population_scalar(Eigen::Index state, PopulationMeasure measure) const {
  if (measure == PopulationMeasure::MaxReplica) return populations.row(state).maxCoeff();
  return population(state, 0);
}

Eigen::VectorXd FloquetSolution::site_probabilities(Eigen::Index state) const {
  Eigen::VectorXd prob = Eigen::VectorXd::Zero(block_dim);
  const int replicas = 2 * m_max + 1;
  for (int r = 0; r < replicas; ++r) {
    prob += eigenvectors.col(state).segment(static_cast<Eigen::Index>(r) * block_dim, block_dim).cwiseAbs2();
  }
  return prob;
}

std::vector<int> FloquetSolution::central_states() const {
  std::vector<int> out;
  const double half = 0.5 * base_frequency;
  for (Eigen::Index i = 0; i < quasienergies.size(); ++i) {
    if (quasienergies[i] >= -half && quasienergies[i] < half) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<double> FloquetSolution::central_quasienergies() const {
  std::vector<double> out;
  for (int i : central_states()) out.push_back(quasienergies[i]);
  return out;
}

FloquetMatrix assemble_from_harmonics(const ChainGeometry& geom, const HarmonicCoefficients& intra,
                                      const HarmonicCoefficients& inter, int m_max, double base_frequency) {
  check_replica_args(geom, m_max, base_frequency);
  if (intra.n_max() < 2 * m_max || inter.n_max() < 2 * m_max) {
    throw ContractError(fmt::format("floquet: harmonics up to |n| = {} are needed for M = {}", 2 * m_max, m_max));
  }
  const int d = geom.dim();
  FloquetMatrix fm;
  fm.m_max = m_max;
  fm.base_frequency = base_frequency;
  fm.block_dim = d;
  fm.matrix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(fm.replicas()) * d,
                                     static_cast<Eigen::Index>(fm.replicas()) * d);
  for (int m = -m_max; m <= m_max; ++m) {
    for (int mp = -m_max; mp <= m_max; ++mp) {
      const int n = mp - m;
      const Eigen::Index r0 = static_cast<Eigen::Index>(m + m_max) * d;
      const Eigen::Index c0 = static_cast<Eigen::Index>(mp + m_max) * d;
      const cplx up_v = geom.v * intra[n];
      const cplx down_v = geom.v * std::conj(intra[-n]);
      const cplx fwd_w = geom.w * inter[n];
      const cplx back_w = geom.w * std::conj(inter[-n]);
      for (int cell = 0; cell < geom.n_dimers; ++cell) {
        const int a = site_index(cell, Sublattice::A);
        const int b = site_index(cell, Sublattice::B);
        fm.matrix(r0 + a, c0 + b) = up_v;
        fm.matrix(r0 + b, c0 + a) = down_v;
        if (cell + 1 < geom.n_dimers) {
          const int next_a = site_index(cell + 1, Sublattice::A);
          fm.matrix(r0 + next_a, c0 + b) = fwd_w;
          fm.matrix(r0 + b, c0 + next_a) = back_w;
        }
      }
      if (n == 0) {
        for (int j = 0; j < d; ++j) fm.matrix(r0 + j, c0 + j) = -m * base_frequency;
      }
    }
  }
  return fm;
}

FloquetMatrix assemble_monochromatic(const ChainGeometry& geom, const DriveSpec& d, int m_max) {
  d.validate();
  if (d.kind != DriveKind::Monochromatic) throw ContractError("assemble_monochromatic: drive is not monochromatic");
  check_replica_args(geom, m_max, d.omega_drive);
  const int n_max = 2 * m_max;
  const double g_intra = geom.r * d.g;
  const double g_inter = (1.0 - geom.r) * d.g;
  const std::vector<double> j_intra = bessel_j_sequence(n_max, g_intra);
  const std::vector<double> j_inter = bessel_j_sequence(n_max, g_inter);
  // exp(-i g' sin) = sum J_n(-g') e^{in Omega t}; exp(+i g'' sin) = sum J_n(g'') e^{in Omega t}
  const cplx gauge_intra = std::polar(1.0, -g_intra * d.phase_offset);
  const cplx gauge_inter = std::polar(1.0, g_inter * d.phase_offset);
  std::vector<cplx> intra(2 * n_max + 1);
  std::vector<cplx> inter(2 * n_max + 1);
  for (int n = -n_max; n <= n_max; ++n) {
    intra[n + n_max] = bessel_from_table(j_intra, n, true) * gauge_intra;
    inter[n + n_max] = bessel_from_table(j_inter, n, false) * gauge_inter;
  }
  FloquetMatrix fm = assemble_from_harmonics(geom, HarmonicCoefficients(n_max, std::move(intra)),
                                             HarmonicCoefficients(n_max, std::move(inter)), m_max, d.omega_drive);
  if (d.phase_offset == 0.0) fm.symmetry = reflection_half_period_symmetry(fm.block_dim, m_max);
  return fm;
}

FloquetMatrix assemble_numeric(const ChainGeometry& geom, const DriveSpec& d, int m_max, double base_frequency,
                               const QuadratureSettings& q, double window_center) {
  d.validate();
  check_replica_args(geom, m_max, base_frequency);
  q.validate();
  const double period = 2.0 * std::numbers::pi / base_frequency;
  const double t_start = window_center - 0.5 * period;
  const int n_max = 2 * m_max;
  auto p_intra = [&](double t) { return hopping_modulations(d, geom, t).intra; };
  auto p_inter = [&](double t) { return hopping_modulations(d, geom, t).inter; };
  // fourier_coefficients projects on e^{+i n Omega t}; the harmonic n of the
  // expansion f = sum c_n e^{i n Omega t} is its index -n.
  const HarmonicCoefficients intra = reversed(fourier_coefficients(p_intra, period, n_max, q, t_start));
  const HarmonicCoefficients inter = reversed(fourier_coefficients(p_inter, period, n_max, q, t_start));
  FloquetMatrix fm = assemble_from_harmonics(geom, intra, inter, m_max, base_frequency);
  // s(t + T/2) = -s(t) holds for the monochromatic drive and for a beating
  // drive whose Omega_+/Omega_- is an odd integer.
  bool half_period_antisymmetric = false;
  if (d.phase_offset == 0.0 && base_frequency == d.natural_base_frequency()) {
    if (d.kind == DriveKind::Monochromatic) {
      half_period_antisymmetric = true;
    } else if (d.kind == DriveKind::Beating) {
      const double ratio = d.omega_plus() / d.omega_minus();
      const long long k = std::llround(ratio);
      half_period_antisymmetric =
          std::abs(ratio - static_cast<double>(k)) <= kCommensurateTolerance * ratio && k % 2 == 1;
    }
  }
  if (half_period_antisymmetric) fm.symmetry = reflection_half_period_symmetry(fm.block_dim, m_max);
  return fm;
}

FloquetMatrix assemble_beating(const ChainGeometry& geom, const DriveSpec& d, int m_max, int inner_cutoff) {
  d.validate();
  if (d.kind != DriveKind::Beating) throw ContractError("assemble_beating: drive is not a beating drive");
  const double wp = d.omega_plus();
  const double wm = d.omega_minus();
  check_replica_args(geom, m_max, wm);
  const double ratio = wp / wm;
  const long long harmonic = std::llround(ratio);
  if (std::abs(ratio - static_cast<double>(harmonic)) > kCommensurateTolerance * ratio) {
    throw UnsupportedConfiguration(fmt::format(
        "assemble_beating: Omega_+/Omega_- = {:.12g} is not an integer, so the drive is not periodic in "
        "2 pi/Omega_-; use assemble_numeric instead",
        ratio));
  }
  const int k = static_cast<int>(harmonic);
  const int inner = inner_cutoff < 0 ? m_max + 10 : inner_cutoff;
  const int n_max = 2 * m_max;

  // s(t) = a_+ sin(Omega_+ t) + a_- sin(Omega_- t), a_pm = Omega / (2 Omega_pm)
  const double amp_plus = d.omega_drive / (2.0 * wp);
  const double amp_minus = d.omega_drive / (2.0 * wm);
  auto harmonics = [&](double coupling) {
    // exp(i coupling s(t)) = sum_{m1,m2} J_m1(coupling a_+) J_m2(coupling a_-) e^{i(m1 k + m2) Omega_- t}
    const std::vector<double> j_plus = bessel_j_sequence(inner, std::abs(coupling * amp_plus));
    const std::vector<double> j_minus = bessel_j_sequence(inner, std::abs(coupling * amp_minus));
    const bool negate = coupling < 0.0;
    const cplx gauge = std::polar(1.0, coupling * d.phase_offset);
    std::vector<cplx> values(2 * n_max + 1);
    for (int n = -n_max; n <= n_max; ++n) {
      double acc = 0.0;
      for (int m1 = -inner; m1 <= inner; ++m1) {
        const long long m2 = static_cast<long long>(n) - static_cast<long long>(k) * m1;
        if (m2 < -inner || m2 > inner) continue;
        acc += bessel_from_table(j_plus, m1, negate) * bessel_from_table(j_minus, static_cast<int>(m2), negate);
      }
      values[n + n_max] = acc * gauge;
    }
    return HarmonicCoefficients(n_max, std::move(values));
  };
  FloquetMatrix fm =
      assemble_from_harmonics(geom, harmonics(-geom.r * d.g), harmonics((1.0 - geom.r) * d.g), m_max, wm);
  if (d.phase_offset == 0.0 && k % 2 == 1) fm.symmetry = reflection_half_period_symmetry(fm.block_dim, m_max);
  return fm;
}

Eigen::MatrixXd h00_approx(const ChainGeometry& geom, double g) {
  geom.validate();
  return build_ssh_matrix(geom.n_dimers, geom.v * bessel_j(0, geom.r * g), geom.w * bessel_j(0, (1.0 - geom.r) * g));
}

FloquetSolution diagonalize(const FloquetMatrix& h) {
  const Eigen::Index n = h.matrix.rows();
  if (n == 0 || h.matrix.cols() != n || h.block_dim <= 0 ||
      n != static_cast<Eigen::Index>(h.replicas()) * h.block_dim) {
    throw ContractError("diagonalize: matrix shape does not match the replica layout");
  }
  const double scale = std::max(1.0, h.matrix.cwiseAbs().maxCoeff());
  const double asymmetry = (h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (!(asymmetry <= kHermitianTolerance * scale)) {
    throw ContractError(fmt::format("diagonalize: matrix is not Hermitian (max |H - H^dagger| = {:.3g})", asymmetry));
  }
  const bool symmetry_ok = h.symmetry && symmetry_commutes(h.matrix, *h.symmetry);
  const bool is_real = (h.matrix.imag().array() == 0.0).all();

  EigenPairs pairs = is_real ? solve(Eigen::MatrixXd(h.matrix.real()), h.symmetry, symmetry_ok)
                             : solve(h.matrix, h.symmetry, symmetry_ok);

  FloquetSolution sol;
  sol.m_max = h.m_max;
  sol.base_frequency = h.base_frequency;
  sol.block_dim = h.block_dim;
  sol.quasienergies = std::move(pairs.values);
  sol.eigenvectors = std::move(pairs.vectors);
  const int replicas = h.replicas();
  sol.populations.resize(n, replicas);
  for (Eigen::Index state = 0; state < n; ++state) {
    for (int r = 0; r < replicas; ++r) {
      sol.populations(state, r) =
          sol.eigenvectors.col(state).segment(static_cast<Eigen::Index>(r) * h.block_dim, h.block_dim).squaredNorm();
    }
  }
  return sol;
}

double fold(double quasienergy, double omega_base) {
  if (!(omega_base > 0.0)) throw ContractError("fold: omega_base must be positive");
  const double half = 0.5 * omega_base;
  double x = quasienergy - omega_base * std::floor(quasienergy / omega_base + 0.5);
  if (x >= half) x -= omega_base;
  if (x < -half) x += omega_base;
  return x;
}

std::vector<double> fold(std::span<const double> quasienergies, double omega_base) {
  std::vector<double> out;
  out.reserve(quasienergies.size());
  for (double e : quasienergies) out.push_back(fold(e, omega_base));
  return out;
}

}  // namespace fssh
