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
#include <string_view>

#include <Eigen/Dense>

#include "floquet_ssh/lattice.hpp"

namespace fssh {

enum class DriveKind { Monochromatic, Gaussian, Beating };

std::string_view to_string(DriveKind kind);

/// Electric-field drive in dimensionless units (hbar = w = 1).
///
/// g = e a E0 / (hbar Omega) is the light-matter coupling. The field is
/// E(t)/E0 = f(t) cos(Omega t) with f = 1 (monochromatic), exp(-(t Gamma)^2)
/// with Gamma = Omega/c (Gaussian pulse centred at t = 0) or cos(omega t)
/// (beating). `phase_offset` is a constant added to the accumulated phase
/// s(t); it is a pure gauge and must not change quasienergies.
struct DriveSpec {
  DriveKind kind = DriveKind::Monochromatic;
  double g = 0.0;
  double omega_drive = 10.0;
  double c = 0.0;          // Omega / Gamma, Gaussian only
  double omega_env = 0.0;  // envelope frequency, Beating only
  double phase_offset = 0.0;

  static DriveSpec monochromatic(double g, double omega);
  static DriveSpec gaussian(double g, double omega, double c);
  static DriveSpec beating(double g, double omega, double omega_env);

  // Throws ContractError unless g >= 0, Omega > 0, and c > 0 (Gaussian) or
  // 0 < omega < Omega (Beating).
  void validate() const;

  DriveSpec with_coupling(double coupling) const {
    DriveSpec copy = *this;
    copy.g = coupling;
    return copy;
  }

  double omega_plus() const { return omega_drive + omega_env; }
  double omega_minus() const { return omega_drive - omega_env; }
  // Replica spacing the Floquet construction uses for this drive: Omega,
  // or Omega_- for the beating drive.
  double natural_base_frequency() const;

  bool operator==(const DriveSpec&) const = default;
};

/// E(t)/E0.
double field_profile(const DriveSpec& d, double t);

/// s(t) = Omega * integral_0^t E(t')/E0 dt' (+ phase_offset).
///
/// Monochromatic: sin(Omega t). Gaussian: gaussian_phase(Omega t, c).
/// Beating: (Omega/2Omega_+) sin(Omega_+ t) + (Omega/2Omega_-) sin(Omega_- t).
double phase_integral(const DriveSpec& d, double t);

struct HoppingPhases {
  std::complex<double> intra;  // multiplies v on |l,A><l,B|
  std::complex<double> inter;  // multiplies w on |l+1,A><l,B|
};

/// p_v = exp(-i r g s(t)), p_w = exp(+i (1-r) g s(t)).
HoppingPhases hopping_modulations(const DriveSpec& d, const ChainGeometry& geom, double t);

/// Position of every site along the chain in units of a, measured from the
/// chain centre: (2l - N - 1)/2 - (r/2) sigma_z with sigma_z = +1 on A.
Eigen::VectorXd site_positions(const ChainGeometry& geom);

/// Diagonal of the dipole potential V(t) = g Omega E(t)/E0 * x.
Eigen::VectorXd potential_matrix(const ChainGeometry& geom, const DriveSpec& d, double t);

/// Diagonal of the frame transformation P(t) = exp(-i g s(t) x), which
/// solves i dP/dt = V(t) P and commutes with V(t).
Eigen::VectorXcd unitary_p(const ChainGeometry& geom, const DriveSpec& d, double t);

/// Transformed-frame Hamiltonian P^dagger(t) H_S P(t).
Eigen::MatrixXcd transformed_hamiltonian(const ChainGeometry& geom, const DriveSpec& d, double t);

}  // namespace fssh
