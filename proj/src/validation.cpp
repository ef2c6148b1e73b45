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

#include "floquet_ssh/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "floquet_ssh/errors.hpp"
#include "floquet_ssh/specfun.hpp"
#include "floquet_ssh/sweep.hpp"

namespace fssh {

namespace {

constexpr double kOmega = 10.0;

CheckResult bounded(std::string name, double measured, double tolerance, std::string detail = {}) {
  return {std::move(name), measured < tolerance, measured, tolerance, std::move(detail)};
}

// Independent root of J0(g) = level on a bracket via the standard library.
double bisect_j0_level(double level, double lo, double hi) {
  auto f = [level](double g) { return std::cyl_bessel_j(0.0, g) - level; };
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

CheckResult check_bessel() {
  double worst = 0.0;
  for (int n = 0; n <= 30; ++n) {
    for (double x = 0.0; x <= 60.0; x += 0.37) {
      worst = std::max(worst, std::abs(bessel_j(n, x) - std::cyl_bessel_j(static_cast<double>(n), x)));
    }
  }
  return bounded("specfun: J_n against std::cyl_bessel_j", worst, 1e-12);
}

CheckResult check_gaussian_phase() {
  double worst = 0.0;
  for (double c : {0.5, 2.0, 10.0, 100.0}) {
    for (double tau = -60.0; tau <= 60.0; tau += 0.731) {
      worst = std::max(worst, std::abs(gaussian_phase(tau, c) - gaussian_phase_erf(tau, c)));
    }
  }
  return bounded("specfun: Gaussian phase quadrature against the Faddeeva form", worst, 1e-12);
}

CheckResult check_quadrature_vs_bessel() {
  const ChainGeometry geom{4, 0.3, 1.0, 0.6};
  double worst = 0.0;
  for (double g : {0.5, 2.0, 5.0}) {
    const DriveSpec d = DriveSpec::monochromatic(g, kOmega);
    const FloquetMatrix analytic = assemble_monochromatic(geom, d, 20);
    const FloquetMatrix numeric = assemble_numeric(geom, d, 20, kOmega);
    worst = std::max(worst, max_entry_difference(analytic.matrix, numeric.matrix));
  }
  return bounded("floquet: quadrature blocks against Bessel blocks (N=4, M=20)", worst, 1e-9);
}

CheckResult check_frame_equivalence() {
  const ChainGeometry geom{4, 0.3, 1.0, 0.6};
  double worst = 0.0;
  for (const DriveSpec& d : {DriveSpec::monochromatic(2.0, kOmega), DriveSpec::gaussian(2.0, kOmega, 2.0),
                             DriveSpec::beating(2.0, kOmega, 3.0)}) {
    worst = std::max(worst, frame_equivalence_residual(geom, d));
  }
  return bounded("drive: i dP/dt = V P for all drive kinds (N=4)", worst, 1e-6);
}

CheckResult check_propagator() {
  const ChainGeometry geom{4, 0.3, 1.0, 0.6};
  const DriveSpec d = DriveSpec::monochromatic(3.0, kOmega);
  const double period = 2.0 * std::numbers::pi / kOmega;
  const std::vector<double> reference = propagator_quasienergies(propagate_one_period(geom, d, period, 100000), period);
  const std::vector<double> floquet = diagonalize(assemble_monochromatic(geom, d, 20)).central_quasienergies();
  return bounded("propagator: RK4 eigenphases against Floquet quasienergies (N=4, g=3)",
                 matched_distance(floquet, reference), 1e-6);
}

CheckResult check_limits() {
  const ChainGeometry geom{4, 0.3, 1.0, 0.6};
  const double g = 2.0;
  const std::vector<double> mono =
      diagonalize(assemble_monochromatic(geom, DriveSpec::monochromatic(g, kOmega), 20)).central_quasienergies();
  const std::vector<double> wide =
      diagonalize(assemble_numeric(geom, DriveSpec::gaussian(g, kOmega, 1e6), 20, kOmega)).central_quasienergies();
  const std::vector<double> slow =
      diagonalize(assemble_numeric(geom, DriveSpec::beating(g, kOmega, 1e-8 * kOmega), 20, kOmega))
          .central_quasienergies();
  const double worst = std::max(matched_distance(mono, wide), matched_distance(mono, slow));
  return bounded("drive: wide Gaussian and slow beating reduce to monochromatic", worst, 1e-6);
}

std::vector<CheckResult> check_invariants() {
  std::vector<CheckResult> out;
  const ChainGeometry chiral_geom{4, 0.3, 1.0, 0.0};
  const ChainGeometry geom{4, 1.1, 1.0, 0.6};

  double hermiticity = 0.0;
  double normalization = 0.0;
  double pairing = 0.0;
  for (double g : {1.0, 4.0, 8.0}) {
    const FloquetMatrix h = assemble_monochromatic(chiral_geom, DriveSpec::monochromatic(g, kOmega), 20);
    hermiticity = std::max(hermiticity, (h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff());
    const FloquetSolution sol = diagonalize(h);
    for (Eigen::Index i = 0; i < sol.size(); ++i) {
      normalization = std::max(normalization, std::abs(sol.populations.row(i).sum() - 1.0));
    }
    const std::vector<double> e = sol.central_quasienergies();
    for (std::size_t i = 0; i < e.size(); ++i) pairing = std::max(pairing, std::abs(e[i] + e[e.size() - 1 - i]));
  }
  out.push_back(bounded("floquet: Hermiticity", hermiticity, 1e-12));
  out.push_back(bounded("floquet: replica populations sum to one", normalization, 1e-10));
  out.push_back(bounded("floquet: chiral pairing at r=0", pairing, 1e-8));

  DriveSpec shifted = DriveSpec::monochromatic(3.0, kOmega);
  shifted.phase_offset = 0.7;
  const std::vector<double> plain =
      diagonalize(assemble_monochromatic(geom, DriveSpec::monochromatic(3.0, kOmega), 20)).central_quasienergies();
  const std::vector<double> gauged = diagonalize(assemble_monochromatic(geom, shifted, 20)).central_quasienergies();
  out.push_back(bounded("floquet: gauge offset leaves quasienergies unchanged", matched_distance(plain, gauged), 1e-8));

  const DriveSpec strong = DriveSpec::monochromatic(8.0, kOmega);
  const std::vector<double> m20 = diagonalize(assemble_monochromatic(geom, strong, 20)).central_quasienergies();
  const std::vector<double> m25 = diagonalize(assemble_monochromatic(geom, strong, 25)).central_quasienergies();
  out.push_back(bounded("floquet: M=20 to M=25 stability at g=8", hausdorff_distance(m20, m25), 1e-6));
  return out;
}

std::vector<CheckResult> check_static_edges() {
  std::vector<CheckResult> out;
  const StaticEdgeReport topo = static_edge_report(ChainGeometry{20, 0.3, 1.0, 0.0});
  const double weakest =
      topo.edge_weights.empty() ? 0.0 : *std::min_element(topo.edge_weights.begin(), topo.edge_weights.end());
  const bool topo_ok = topo.zero_modes.size() == 2 && weakest > 0.9;
  out.push_back({"lattice: two edge modes at v/w=0.3 (N=20)", topo_ok, static_cast<double>(topo.zero_modes.size()),
                 2.0, fmt::format("smallest edge weight {:.6f}", weakest)});
  const StaticEdgeReport trivial = static_edge_report(ChainGeometry{20, 1.1, 1.0, 0.0});
  out.push_back({"lattice: no zero modes at v/w=1.1 (N=20)", trivial.zero_modes.empty(),
                 static_cast<double>(trivial.zero_modes.size()), 0.0, {}});
  return out;
}

CheckResult check_boundary() {
  const BoundaryResult result = phase_boundary(0.3, 1.0, 0.0, 8.0);
  if (result.roots.empty()) return {"sweep: phase boundary root of J0(g)=0.3", false, 0.0, 1e-9, "no root found"};
  const double oracle = bisect_j0_level(0.3, 1.0, 2.4);
  return bounded("sweep: phase boundary root of J0(g)=0.3", std::abs(result.roots.front() - oracle), 1e-9,
                 fmt::format("root {:.12f}", result.roots.front()));
}

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double frame_equivalence_residual(const ChainGeometry& geom, const DriveSpec& d, int samples, double step) {
  const double period = 2.0 * std::numbers::pi / d.natural_base_frequency();
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = -0.5 * period + period * k / (samples - 1);
    const Eigen::VectorXcd derivative = (unitary_p(geom, d, t + step) - unitary_p(geom, d, t - step)) / (2.0 * step);
    const Eigen::VectorXcd p = unitary_p(geom, d, t);
    const Eigen::VectorXd v = potential_matrix(geom, d, t);
    const Eigen::VectorXcd residual = cplx{0.0, 1.0} * derivative - v.cwiseProduct(p);
    worst = std::max(worst, residual.cwiseAbs().maxCoeff());
  }
  return worst;
}

double max_entry_difference(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  return (a - b).cwiseAbs().maxCoeff();
}

double matched_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double hausdorff_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  auto one_sided = [](const std::vector<double>& from, const std::vector<double>& to) {
    double worst = 0.0;
    for (double x : from) {
      double nearest = std::numeric_limits<double>::infinity();
      for (double y : to) nearest = std::min(nearest, std::abs(x - y));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

StaticEdgeReport static_edge_report(const ChainGeometry& geom, double energy_tol, int edge_cells) {
  geom.validate();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(build_static_hamiltonian(geom));
  if (solver.info() != Eigen::Success) throw NumericError("static eigensolver did not converge");
  StaticEdgeReport report;
  report.energies = solver.eigenvalues();
  for (Eigen::Index i = 0; i < report.energies.size(); ++i) {
    if (std::abs(report.energies[i]) >= energy_tol) continue;
    report.zero_modes.push_back(static_cast<int>(i));
    const Eigen::VectorXd amplitudes = solver.eigenvectors().col(i);
    report.edge_weights.push_back(
        edge_weight(StateVector::normalized(amplitudes.cast<cplx>()), geom, edge_cells));
  }
  return report;
}

ValidationReport run_validation_suite(const std::function<void(const CheckResult&)>& on_check) {
  ValidationReport report;
  auto add = [&](CheckResult c) {
    if (on_check) on_check(c);
    report.checks.push_back(std::move(c));
  };
  auto guarded = [&](const char* name, auto&& run) {
    try {
      run();
    } catch (const std::exception& e) {
      add({name, false, 0.0, 0.0, fmt::format("threw: {}", e.what())});
    }
  };
  guarded("specfun: J_n", [&] { add(check_bessel()); });
  guarded("specfun: Gaussian phase", [&] { add(check_gaussian_phase()); });
  guarded("floquet: quadrature", [&] { add(check_quadrature_vs_bessel()); });
  guarded("drive: frame equivalence", [&] { add(check_frame_equivalence()); });
  guarded("propagator", [&] { add(check_propagator()); });
  guarded("drive: limits", [&] { add(check_limits()); });
  guarded("floquet: invariants", [&] {
    for (CheckResult& c : check_invariants()) add(std::move(c));
  });
  guarded("lattice: static edges", [&] {
    for (CheckResult& c : check_static_edges()) add(std::move(c));
  });
  guarded("sweep: boundary", [&] { add(check_boundary()); });
  return report;
}

}  // namespace fssh
