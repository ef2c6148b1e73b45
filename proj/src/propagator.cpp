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

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "floquet_ssh/errors.hpp"
#include "floquet_ssh/floquet.hpp"

namespace fssh {

namespace {

constexpr double kUnitarityTolerance = 1e-8;

}  // namespace

Eigen::MatrixXcd propagate_one_period(const ChainGeometry& geom, const DriveSpec& d, double base_period, int steps,
                                      PropagationFrame frame, double t_start) {
  geom.validate();
  d.validate();
  if (!(base_period > 0.0)) throw ContractError("propagate_one_period: base_period must be positive");
  if (steps < 1) throw ContractError("propagate_one_period: steps must be >= 1");

  const Eigen::MatrixXcd h_static = build_static_hamiltonian(geom).cast<cplx>();
  const Eigen::VectorXd x = site_positions(geom);
  const cplx minus_i{0.0, -1.0};
  // -i H(t)
  auto generator = [&](double t) -> Eigen::MatrixXcd {
    if (frame == PropagationFrame::Transformed) return minus_i * transformed_hamiltonian(geom, d, t);
    Eigen::MatrixXcd h = h_static;
    h.diagonal() += (d.g * d.omega_drive * field_profile(d, t) * x).cast<cplx>();
    return minus_i * h;
  };

  const Eigen::Index dim = geom.dim();
  const double dt = base_period / steps;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::MatrixXcd a_begin = generator(t_start);
  for (int step = 0; step < steps; ++step) {
    const double t = t_start + step * dt;
    const Eigen::MatrixXcd a_mid = generator(t + 0.5 * dt);
    const Eigen::MatrixXcd a_end = generator(t_start + (step + 1) * dt);
    const Eigen::MatrixXcd k1 = a_begin * u;
    const Eigen::MatrixXcd k2 = a_mid * (u + 0.5 * dt * k1);
    const Eigen::MatrixXcd k3 = a_mid * (u + 0.5 * dt * k2);
    const Eigen::MatrixXcd k4 = a_end * (u + dt * k3);
    u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    a_begin = a_end;
  }

  const double defect = (u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).norm();
  if (!(defect < kUnitarityTolerance)) {
    throw AccuracyError(fmt::format(
        "propagate_one_period: unitarity defect {:.3g} exceeds {:.0e}; increase the number of steps (now {})", defect,
        kUnitarityTolerance, steps));
  }
  return u;
}

std::vector<double> propagator_quasienergies(const Eigen::MatrixXcd& u, double base_period) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u, false);
  if (solver.info() != Eigen::Success) throw NumericError("propagator_quasienergies: eigensolver failed");
  const double omega = 2.0 * std::numbers::pi / base_period;
  std::vector<double> out;
  out.reserve(u.rows());
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    out.push_back(fold(-std::arg(solver.eigenvalues()[i]) / base_period, omega));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fssh
