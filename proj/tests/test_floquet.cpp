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

#include <Eigen/Dense>
#include <doctest.h>

#include "floquet_ssh/errors.hpp"
#include "floquet_ssh/floquet.hpp"
#include "floquet_ssh/validation.hpp"

using namespace fssh;

namespace {

double bessel_reference(int n, double x) {
  const double value = std::cyl_bessel_j(static_cast<double>(std::abs(n)), std::abs(x));
  const bool flip = (n < 0 && n % 2 != 0) != (x < 0.0 && n % 2 != 0);
  return flip ? -value : value;
}

FloquetMatrix without_symmetry(FloquetMatrix h) {
  h.symmetry.reset();
  return h;
}

}  // namespace

TEST_CASE("zero coupling replicates the static spectrum") {
  const ChainGeometry geom{3, 0.3, 1.0, 0.4};
  const FloquetMatrix h = assemble_monochromatic(geom, DriveSpec::monochromatic(0.0, 10.0), 2);
  REQUIRE(h.dim() == 6 * 5);
  const Eigen::MatrixXd h_static = build_static_hamiltonian(geom);
  for (int m = -2; m <= 2; ++m) {
    for (int mp = -2; mp <= 2; ++mp) {
      Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(6, 6);
      if (m == mp) expected = h_static.cast<cplx>() - cplx(m * 10.0) * Eigen::MatrixXcd::Identity(6, 6);
      CHECK((h.block(m, mp) - expected).cwiseAbs().maxCoeff() < 1e-15);
    }
  }
  const Eigen::VectorXd e_static = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h_static).eigenvalues();
  const FloquetSolution sol = diagonalize(h);
  std::vector<double> expected;
  for (int m = -2; m <= 2; ++m) {
    for (double e : e_static) expected.push_back(e - m * 10.0);
  }
  std::vector<double> got(sol.quasienergies.data(), sol.quasienergies.data() + sol.size());
  CHECK(matched_distance(got, expected) < 1e-12);
}

TEST_CASE("monochromatic blocks carry Bessel-weighted hoppings") {
  const ChainGeometry geom{3, 0.3, 1.0, 0.6};
  const double g = 2.7;
  const FloquetMatrix h = assemble_monochromatic(geom, DriveSpec::monochromatic(g, 10.0), 4);
  const int a0 = site_index(0, Sublattice::A);
  const int b0 = site_index(0, Sublattice::B);
  const int a1 = site_index(1, Sublattice::A);
  for (int m = -2; m <= 2; ++m) {
    for (int n = -2; n <= 2; ++n) {
      const auto blk = h.block(m, m + n);
      CAPTURE(m);
      CAPTURE(n);
      // e^{-i r g sin} = sum_n J_n(-r g) e^{i n Omega t}; e^{i (1-r) g sin} = sum_n J_n((1-r) g) e^{i n Omega t}
      CHECK(std::abs(blk(a0, b0) - 0.3 * bessel_reference(n, -0.6 * g)) < 1e-14);
      CHECK(std::abs(blk(b0, a0) - 0.3 * bessel_reference(-n, -0.6 * g)) < 1e-14);
      CHECK(std::abs(blk(a1, b0) - 1.0 * bessel_reference(n, 0.4 * g)) < 1e-14);
      CHECK(std::abs(blk(b0, a1) - 1.0 * bessel_reference(-n, 0.4 * g)) < 1e-14);
      CHECK(blk(a0, a1) == cplx{});
    }
  }
}

TEST_CASE("quadrature assembly matches the closed form") {
  for (double r : {0.0, 0.6}) {
    const ChainGeometry geom{4, 0.3, 1.0, r};
    for (double g : {0.5, 2.0, 5.0}) {
      const DriveSpec d = DriveSpec::monochromatic(g, 10.0);
      const FloquetMatrix analytic = assemble_monochromatic(geom, d, 20);
      CHECK(max_entry_difference(analytic.matrix, assemble_numeric(geom, d, 20, 10.0).matrix) < 1e-9);
      CHECK(max_entry_difference(analytic.matrix,
                                 assemble_numeric(geom, d, 20, 10.0, {1024, QuadratureRule::Trapezoid}).matrix) <
            1e-9);
    }
  }
}

TEST_CASE("beating closed form matches quadrature for commensurate frequencies") {
  const ChainGeometry geom{3, 0.3, 1.0, 0.6};
  // (Omega_+, Omega_-) = (15, 5) and (12, 6): odd and even ratios.
  for (const DriveSpec& d : {DriveSpec::beating(1.8, 10.0, 5.0), DriveSpec::beating(1.8, 9.0, 3.0)}) {
    const FloquetMatrix analytic = assemble_beating(geom, d, 8);
    const FloquetMatrix numeric = assemble_numeric(geom, d, 8, d.omega_minus(), {2048, QuadratureRule::Simpson});
    CHECK(analytic.base_frequency == d.omega_minus());
    CHECK(max_entry_difference(analytic.matrix, numeric.matrix) < 1e-9);
  }
  CHECK_THROWS_AS(assemble_beating(geom, DriveSpec::beating(1.0, 10.0, 3.3), 4), UnsupportedConfiguration);
}

TEST_CASE("assembled matrices are Hermitian for every drive") {
  const ChainGeometry geom{4, 1.1, 1.0, 0.6};
  for (const DriveSpec& d : {DriveSpec::monochromatic(3.0, 10.0), DriveSpec::gaussian(3.0, 10.0, 2.0),
                             DriveSpec::beating(3.0, 10.0, 3.3)}) {
    const FloquetMatrix h = assemble_numeric(geom, d, 10, d.natural_base_frequency());
    CHECK((h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("symmetry-sector solve reproduces the full solve") {
  const ChainGeometry geom{5, 0.3, 1.0, 0.6};
  for (const FloquetMatrix& h : {assemble_monochromatic(geom, DriveSpec::monochromatic(2.2, 10.0), 6),
                                 assemble_beating(geom, DriveSpec::beating(2.2, 10.0, 5.0), 6)}) {
    REQUIRE(h.symmetry.has_value());
    const FloquetSolution fast = diagonalize(h);
    const FloquetSolution full = diagonalize(without_symmetry(h));
    CHECK((fast.quasienergies - full.quasienergies).cwiseAbs().maxCoeff() < 1e-11);
    const Eigen::MatrixXcd residual = h.matrix * fast.eigenvectors - fast.eigenvectors * fast.quasienergies.asDiagonal();
    CHECK(residual.cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("a gauge offset removes the symmetry but not the spectrum") {
  const ChainGeometry geom{4, 1.1, 1.0, 0.6};
  DriveSpec d = DriveSpec::monochromatic(3.0, 10.0);
  d.phase_offset = 0.9;
  const FloquetMatrix shifted = assemble_monochromatic(geom, d, 12);
  CHECK_FALSE(shifted.symmetry.has_value());
  const FloquetMatrix plain = assemble_monochromatic(geom, DriveSpec::monochromatic(3.0, 10.0), 12);
  CHECK(matched_distance(diagonalize(shifted).central_quasienergies(), diagonalize(plain).central_quasienergies()) <
        1e-8);
}

TEST_CASE("solutions are orthonormal and populations normalized") {
  const ChainGeometry geom{4, 0.3, 1.0, 0.0};
  const FloquetSolution sol = diagonalize(assemble_monochromatic(geom, DriveSpec::monochromatic(4.0, 10.0), 10));
  const Eigen::Index n = sol.size();
  CHECK((sol.eigenvectors.adjoint() * sol.eigenvectors - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <
        1e-12);
  for (Eigen::Index i = 0; i < n; ++i) {
    CHECK(std::abs(sol.populations.row(i).sum() - 1.0) < 1e-12);
    CHECK(std::abs(sol.site_probabilities(i).sum() - 1.0) < 1e-12);
    CHECK(sol.population_scalar(i, PopulationMeasure::MaxReplica) >= sol.population_scalar(i));
  }
  for (Eigen::Index i = 1; i < n; ++i) CHECK(sol.quasienergies[i - 1] <= sol.quasienergies[i]);
  CHECK(sol.central_states().size() == 8);
}

TEST_CASE("central quasienergies are chiral paired at r = 0") {
  const ChainGeometry geom{6, 0.3, 1.0, 0.0};
  for (double g : {1.0, 2.5, 6.0}) {
    const std::vector<double> e =
        diagonalize(assemble_monochromatic(geom, DriveSpec::monochromatic(g, 10.0), 20)).central_quasienergies();
    for (std::size_t i = 0; i < e.size(); ++i) CHECK(std::abs(e[i] + e[e.size() - 1 - i]) < 1e-8);
  }
}

TEST_CASE("high-frequency limit approaches the renormalized chain") {
  const ChainGeometry geom{4, 0.3, 1.0, 0.6};
  const double g = 2.0;
  const Eigen::MatrixXd h00 = h00_approx(geom, g);
  CHECK((h00 - build_ssh_matrix(4, 0.3 * std::cyl_bessel_j(0.0, 0.6 * g), std::cyl_bessel_j(0.0, 0.4 * g)))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  const Eigen::VectorXd e = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h00).eigenvalues();
  const std::vector<double> expected(e.data(), e.data() + e.size());
  const std::vector<double> floquet =
      diagonalize(assemble_monochromatic(geom, DriveSpec::monochromatic(g, 400.0), 6)).central_quasienergies();
  CHECK(matched_distance(floquet, expected) < 1e-2);
}

TEST_CASE("truncation convergence near the zone centre") {
  const ChainGeometry geom{6, 1.1, 1.0, 0.6};
  const DriveSpec d = DriveSpec::monochromatic(8.0, 10.0);
  const std::vector<double> m20 = diagonalize(assemble_monochromatic(geom, d, 20)).central_quasienergies();
  const std::vector<double> m25 = diagonalize(assemble_monochromatic(geom, d, 25)).central_quasienergies();
  CHECK(hausdorff_distance(m20, m25) < 1e-6);
}

TEST_CASE("fold maps into the half-open zone") {
  CHECK(fold(5.0, 10.0) == -5.0);
  CHECK(fold(-5.0, 10.0) == -5.0);
  CHECK(fold(4.5, 10.0) == 4.5);
  CHECK(fold(23.0, 10.0) == doctest::Approx(3.0));
  CHECK(fold(-17.0, 10.0) == doctest::Approx(3.0));
  const std::vector<double> in{12.0, -6.0};
  const std::vector<double> out = fold(in, 10.0);
  CHECK(out[0] == doctest::Approx(2.0));
  CHECK(out[1] == doctest::Approx(4.0));
}

TEST_CASE("diagonalize rejects non-Hermitian input") {
  FloquetMatrix h = assemble_monochromatic({2, 0.3, 1.0, 0.0}, DriveSpec::monochromatic(1.0, 10.0), 1);
  h.matrix(0, 1) += cplx{1e-6, 0.0};
  CHECK_THROWS_AS(diagonalize(h), ContractError);
}

TEST_CASE("replica arguments are validated") {
  CHECK_THROWS_AS(assemble_monochromatic({2, 0.3, 1.0, 0.0}, DriveSpec::monochromatic(1.0, 10.0), -1), ContractError);
  CHECK_THROWS_AS(assemble_numeric({2, 0.3, 1.0, 0.0}, DriveSpec::monochromatic(1.0, 10.0), 2, 0.0), ContractError);
}
