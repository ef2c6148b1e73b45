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

#include "floquet_ssh/drive.hpp"

#include <cmath>

#include <fmt/format.h>

#include "floquet_ssh/errors.hpp"
#include "floquet_ssh/specfun.hpp"

namespace fssh {

std::string_view to_string(DriveKind kind) {
  switch (kind) {
    case DriveKind::Monochromatic:
      return "monochromatic";
    case DriveKind::Gaussian:
      return "gaussian";
    case DriveKind::Beating:
      return "beating";
  }
  return "unknown";
}

DriveSpec DriveSpec::monochromatic(double g, double omega) {
  DriveSpec d;
  d.kind = DriveKind::Monochromatic;
  d.g = g;
  d.omega_drive = omega;
  return d;
}

DriveSpec DriveSpec::gaussian(double g, double omega, double c) {
  DriveSpec d = monochromatic(g, omega);
  d.kind = DriveKind::Gaussian;
  d.c = c;
  return d;
}

DriveSpec DriveSpec::beating(double g, double omega, double omega_env) {
  DriveSpec d = monochromatic(g, omega);
  d.kind = DriveKind::Beating;
  d.omega_env = omega_env;
  return d;
}

void DriveSpec::validate() const {
  if (!(g >= 0.0) || !std::isfinite(g)) throw ContractError(fmt::format("drive: g = {} violates g >= 0", g));
  if (!(omega_drive > 0.0) || !std::isfinite(omega_drive)) {
    throw ContractError(fmt::format("drive: omega = {} violates omega > 0", omega_drive));
  }
  if (!std::isfinite(phase_offset)) throw ContractError("drive: phase_offset must be finite");
  if (kind == DriveKind::Gaussian && (!(c > 0.0) || !std::isfinite(c))) {
    throw ContractError(fmt::format("drive: gaussian pulse needs c > 0, got {}", c));
  }
  if (kind == DriveKind::Beating && !(omega_env > 0.0 && omega_env < omega_drive)) {
    throw ContractError(
        fmt::format("drive: beating needs 0 < omega_env < omega, got omega_env = {}, omega = {}", omega_env,
                    omega_drive));
  }
}

double DriveSpec::natural_base_frequency() const {
  return kind == DriveKind::Beating ? omega_minus() : omega_drive;
}

double field_profile(const DriveSpec& d, double t) {
  const double carrier = std::cos(d.omega_drive * t);
  switch (d.kind) {
    case DriveKind::Monochromatic:
      return carrier;
    case DriveKind::Gaussian: {
      const double gamma_t = t * d.omega_drive / d.c;
      return std::exp(-gamma_t * gamma_t) * carrier;
    }
    case DriveKind::Beating:
      return carrier * std::cos(d.omega_env * t);
  }
  return 0.0;
}

double phase_integral(const DriveSpec& d, double t) {
  double s = 0.0;
  switch (d.kind) {
    case DriveKind::Monochromatic:
      s = std::sin(d.omega_drive * t);
      break;
    case DriveKind::Gaussian:
      s = gaussian_phase(d.omega_drive * t, d.c);
      break;
    case DriveKind::Beating: {
      const double wp = d.omega_plus();
      const double wm = d.omega_minus();
      s = d.omega_drive / (2.0 * wp) * std::sin(wp * t) + d.omega_drive / (2.0 * wm) * std::sin(wm * t);
      break;
    }
  }
  return s + d.phase_offset;
}

HoppingPhases hopping_modulations(const DriveSpec& d, const ChainGeometry& geom, double t) {
  const double s = phase_integral(d, t);
  const double g_intra = geom.r * d.g;
  const double g_inter = (1.0 - geom.r) * d.g;
  return {std::polar(1.0, -g_intra * s), std::polar(1.0, g_inter * s)};
}

Eigen::VectorXd site_positions(const ChainGeometry& geom) {
  Eigen::VectorXd x(geom.dim());
  for (int cell = 0; cell < geom.n_dimers; ++cell) {
    // cell index l = cell + 1
    const double centre = 0.5 * (2.0 * (cell + 1) - geom.n_dimers - 1);
    x[site_index(cell, Sublattice::A)] = centre - 0.5 * geom.r;
    x[site_index(cell, Sublattice::B)] = centre + 0.5 * geom.r;
  }
  return x;
}

Eigen::VectorXd potential_matrix(const ChainGeometry& geom, const DriveSpec& d, double t) {
  return (d.g * d.omega_drive * field_profile(d, t)) * site_positions(geom);
}

Eigen::VectorXcd unitary_p(const ChainGeometry& geom, const DriveSpec& d, double t) {
  const double gs = d.g * phase_integral(d, t);
  const Eigen::VectorXd x = site_positions(geom);
  Eigen::VectorXcd p(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) p[j] = std::polar(1.0, -gs * x[j]);
  return p;
}

Eigen::MatrixXcd transformed_hamiltonian(const ChainGeometry& geom, const DriveSpec& d, double t) {
  const HoppingPhases phases = hopping_modulations(d, geom, t);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(geom.dim(), geom.dim());
  for (int cell = 0; cell < geom.n_dimers; ++cell) {
    const int a = site_index(cell, Sublattice::A);
    const int b = site_index(cell, Sublattice::B);
    h(a, b) = geom.v * phases.intra;
    h(b, a) = std::conj(h(a, b));
    if (cell + 1 < geom.n_dimers) {
      const int next_a = site_index(cell + 1, Sublattice::A);
      h(next_a, b) = geom.w * phases.inter;
      h(b, next_a) = std::conj(h(next_a, b));
    }
  }
  return h;
}

}  // namespace fssh
