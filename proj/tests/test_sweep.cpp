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

#include <cmath>
#include <cstdlib>
#include <functional>

#include <doctest.h>

#include "floquet_ssh/errors.hpp"
#include "floquet_ssh/sweep.hpp"

using namespace fssh;

namespace {

// Roots of f on (0, g_max] by a fine scan plus bisection; independent of
// phase_boundary.
std::vector<double> scan_roots(const std::function<double(double)>& f, double g_max) {
  std::vector<double> roots;
  const double step = 1e-4;
  double lo = step;
  double flo = f(lo);
  for (double hi = 2 * step; hi <= g_max + 1e-12; hi += step) {
    const double fhi = f(hi);
    if ((flo < 0.0) != (fhi < 0.0)) {
      double a = lo;
      double b = hi;
      double fa = flo;
      for (int i = 0; i < 60; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    lo = hi;
    flo = fhi;
  }
  return roots;
}

double bessel0(double x) { return std::cyl_bessel_j(0.0, x); }

}  // namespace

TEST_CASE("row count is 2N(2M+1) per grid point") {
  SweepOptions small;
  small.m_max = 0;
  const SweepResult a = sweep_g({2, 0.3, 1.0, 0.0}, DriveSpec::monochromatic(0.0, 10.0), {0.0}, small);
  CHECK(a.rows.size() == 4);
  const SweepResult b = sweep_g({20, 0.3, 1.0, 0.0}, DriveSpec::monochromatic(0.0, 10.0), {1.0});
  CHECK(b.rows.size() == 1640);
  CHECK(b.metadata.m_max == 20);
  CHECK(b.metadata.base_frequency == 10.0);
}

TEST_CASE("zero coupling reproduces the static spectrum in every replica") {
  const ChainGeometry geom{3, 0.3, 1.0, 0.0};
  SweepOptions options;
  options.m_max = 2;
  options.fold = true;
  const SweepResult r = sweep_g(geom, DriveSpec::monochromatic(0.0, 10.0), {0.0}, options);
  Eigen::VectorXd e = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(build_static_hamiltonian(geom)).eigenvalues();
  REQUIRE(r.rows.size() == 30);
  for (std::size_t i = 0; i < r.rows.size(); ++i) CHECK(std::abs(r.rows[i].quasienergy - e[i / 5]) < 1e-12);
}

TEST_CASE("rows are ordered by coupling, then quasienergy") {
  SweepOptions options;
  options.m_max = 3;
  const SweepResult r = sweep_g({4, 0.3, 1.0, 0.6}, DriveSpec::monochromatic(0.0, 10.0), {0.5, 1.0, 2.0}, options);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    const SweepRow& p = r.rows[i - 1];
    const SweepRow& q = r.rows[i];
    CHECK((p.g < q.g || (p.g == q.g && p.quasienergy <= q.quasienergy)));
  }
}

TEST_CASE("worker count does not change the result") {
  SweepOptions one;
  one.m_max = 5;
  one.workers = 1;
  SweepOptions many = one;
  many.workers = 3;
  const std::vector<double> grid{0.0, 0.7, 1.4, 2.1, 2.8};
  const ChainGeometry geom{5, 1.1, 1.0, 0.6};
  const SweepResult a = sweep_g(geom, DriveSpec::monochromatic(0.0, 10.0), grid, one);
  const SweepResult b = sweep_g(geom, DriveSpec::monochromatic(0.0, 10.0), grid, many);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].quasienergy == b.rows[i].quasienergy);
    CHECK(a.rows[i].population == b.rows[i].population);
    CHECK(a.rows[i].edge_weight == b.rows[i].edge_weight);
    CHECK(a.rows[i].state_index == b.rows[i].state_index);
  }
}

TEST_CASE("a failing grid point is recorded without aborting the sweep") {
  SweepOptions options;
  options.m_max = 2;
  const SweepResult r = sweep_g({2, 0.3, 1.0, 0.0}, DriveSpec::monochromatic(0.0, 10.0), {1.0, 150.0}, options);
  REQUIRE(r.points.size() == 2);
  CHECK(r.points[0].ok);
  CHECK_FALSE(r.points[1].ok);
  CHECK_FALSE(r.points[1].error.empty());
  CHECK(r.rows.back().state_index == -1);
  CHECK(std::isnan(r.rows.back().quasienergy));
}

TEST_CASE("sweep preconditions") {
  const ChainGeometry geom{2, 0.3, 1.0, 0.0};
  CHECK_THROWS_AS(sweep_g(geom, DriveSpec::monochromatic(0.0, 10.0), {1.0, 1.0}), ContractError);
  CHECK_THROWS_AS(sweep_g(geom, DriveSpec::monochromatic(0.0, 10.0), {}), ContractError);
  CHECK_THROWS_AS(sweep_g(geom, DriveSpec::gaussian(0.0, 10.0, 2.0), {1.0}), UnsupportedConfiguration);
  SweepOptions numeric;
  numeric.method = AssemblyMethod::Numeric;
  numeric.m_max = 3;
  CHECK(sweep_g(geom, DriveSpec::gaussian(0.0, 10.0, 2.0), {1.0}, numeric).points[0].ok);
}

TEST_CASE("edge states are found in the topological static limit only") {
  const DriveSpec d = DriveSpec::monochromatic(0.0, 10.0);
  SweepOptions options;
  options.m_max = 2;
  CHECK(sweep_g({20, 0.3, 1.0, 0.0}, d, {0.0}, options).points[0].edge_state_count == 2);
  CHECK(sweep_g({20, 1.1, 1.0, 0.0}, d, {0.0}, options).points[0].edge_state_count == 0);
  const FloquetSolution sol = diagonalize(assemble_monochromatic({20, 0.3, 1.0, 0.0}, d, 2));
  CHECK_THROWS_AS(detect_edge_states(sol, {20, 0.3, 1.0, 0.0}, 0.05, 1.0), ContractError);
}

TEST_CASE("phase boundary roots agree with an independent scan") {
  SUBCASE("r = 0") {
    const BoundaryResult b = phase_boundary(0.3, 1.0, 0.0, 8.0);
    const auto expected = scan_roots([](double g) { return 0.3 - std::abs(bessel0(g)); }, 8.0);
    REQUIRE(b.roots.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(b.roots[i] - expected[i]) < 1e-9);
    CHECK(b.roots.front() == doctest::Approx(1.8687317571587674).epsilon(1e-10));
  }
  SUBCASE("r = 0.6, trivial start") {
    const BoundaryResult b = phase_boundary(1.1, 1.0, 0.6, 8.0);
    const auto expected =
        scan_roots([](double g) { return std::abs(1.1 * bessel0(0.6 * g)) - std::abs(bessel0(0.4 * g)); }, 8.0);
    REQUIRE(b.roots.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(b.roots[i] - expected[i]) < 1e-9);
  }
}

TEST_CASE("phase boundary edge cases") {
  CHECK(phase_boundary(1.0, 1.0, 0.5, 8.0).degenerate);
  CHECK_THROWS_AS(phase_boundary(0.3, 1.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(phase_boundary(0.3, 1.0, 0.0, 101.0), DomainError);
  CHECK(phase_boundary(0.3, 1.0, 0.0, 1.0).roots.empty());
}

TEST_CASE("worker count comes from the environment") {
  setenv("FLOQUET_SSH_WORKERS", "3", 1);
  CHECK(default_worker_count() == 3);
  setenv("FLOQUET_SSH_WORKERS", "zero", 1);
  CHECK(default_worker_count() >= 1);
  unsetenv("FLOQUET_SSH_WORKERS");
}
