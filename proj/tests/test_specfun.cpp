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
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include "floquet_ssh/errors.hpp"
#include "floquet_ssh/specfun.hpp"

using namespace fssh;

namespace {

double relative_error(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

// Independent evaluation of the defining integral.
double phase_integral_reference(double tau, double c) {
  auto f = [c](double s) { return std::exp(-s * s / (c * c)) * std::cos(s); };
  const double upper = std::abs(tau);
  double sum = 0.0;
  const int pieces = std::max(1, static_cast<int>(std::ceil(upper / 2.0)));
  for (int k = 0; k < pieces; ++k) {
    sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, upper * k / pieces,
                                                                          upper * (k + 1) / pieces, 0, 1e-15);
  }
  return tau < 0.0 ? -sum : sum;
}

}  // namespace

TEST_CASE("bessel_j agrees with the standard library over the supported range") {
  double worst = 0.0;
  for (int n = 0; n <= 40; ++n) {
    for (double x = 0.0; x <= 100.0; x += 0.173) {
      worst = std::max(worst, std::abs(bessel_j(n, x) - std::cyl_bessel_j(static_cast<double>(n), x)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("bessel_j matches high-precision reference values") {
  struct Case {
    int n;
    double x;
    double value;
  };
  const Case cases[] = {
      {0, 1e-3, 0.999999750000015625},     {1, 1e-3, 0.00049999993750000261457},
      {5, 7.3, 0.31370617089730907746},    {30, 10.0, 1.5510960782574670069e-12},
      {0, 100.0, 0.019985850304223122424}, {7, 55.5, 0.10585960486464913917},
      {150, 99.0, 8.7781475631372857602e-17}, {2, 0.5, 0.030604023458682641307},
  };
  for (const Case& c : cases) {
    CAPTURE(c.n);
    CAPTURE(c.x);
    CHECK(relative_error(bessel_j(c.n, c.x), c.value) < 1e-12);
  }
}

TEST_CASE("bessel_j parity holds exactly") {
  for (int n = 0; n <= 12; ++n) {
    for (double x : {0.3, 2.5, 17.0, 64.0}) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      CHECK(bessel_j(-n, x) == sign * bessel_j(n, x));
      CHECK(bessel_j(n, -x) == sign * bessel_j(n, x));
    }
  }
}

TEST_CASE("bessel_j satisfies the even-order sum rule") {
  for (double x : {0.0, 0.7, 5.0, 42.0, 99.5}) {
    double sum = bessel_j(0, x);
    for (int k = 1; k <= 100; ++k) sum += 2.0 * bessel_j(2 * k, x);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("bessel_j rejects arguments outside the supported range") {
  CHECK_THROWS_AS(bessel_j(201, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(0, 100.5), DomainError);
  CHECK_THROWS_AS(bessel_j(0, std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("bessel_j_sequence agrees with single evaluations") {
  for (double x : {0.2, 3.0, 30.0}) {
    const std::vector<double> seq = bessel_j_sequence(50, x);
    REQUIRE(seq.size() == 51);
    for (int k = 0; k <= 50; ++k) CHECK(std::abs(seq[k] - bessel_j(k, x)) < 1e-15);
  }
}

TEST_CASE("faddeeva_w matches high-precision reference values") {
  struct Case {
    cplx z;
    cplx value;
  };
  const Case cases[] = {
      {{0.5, 0.5}, {0.53315670791217491377, 0.23048823138445840871}},
      {{3.0, 0.1}, {0.0079426809987699907004, 0.20074234309867737198}},
      {{-2.0, 1.0}, {0.1402395813662779437, -0.22221344017989910261}},
      {{10.0, 10.0}, {0.02827946745423245666, 0.028138433276336895631}},
      {{0.001, 0.0}, {0.99999900000049999983, 0.0011283784148430354347}},
      {{20.0, 0.5}, {0.00070745221988472956216, 0.028227120903787738529}},
      {{1.0, -2.0}, {-26.476058778199206857, -30.308571116743307258}},
  };
  for (const Case& c : cases) {
    CAPTURE(c.z);
    CHECK(std::abs(faddeeva_w(c.z) - c.value) / std::abs(c.value) < 1e-13);
  }
}

TEST_CASE("gaussian_phase agrees with adaptive quadrature of its definition") {
  for (double c : {0.5, 2.0, 10.0, 100.0}) {
    double worst = 0.0;
    for (double tau = -100.0; tau <= 100.0; tau += 0.917) {
      worst = std::max(worst, std::abs(gaussian_phase(tau, c) - phase_integral_reference(tau, c)));
    }
    CAPTURE(c);
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("gaussian_phase matches high-precision reference values") {
  CHECK(gaussian_phase(1.0, 2.0) == doctest::Approx(0.7856200457694075584).epsilon(1e-13));
  CHECK(gaussian_phase(10.0, 0.5) == doctest::Approx(0.41626657519367264341).epsilon(1e-13));
  CHECK(gaussian_phase(-3.0, 10.0) == doctest::Approx(-0.18888032506018150318).epsilon(1e-13));
  CHECK(gaussian_phase(50.0, 100.0) == doctest::Approx(-0.21187710098649086968).epsilon(1e-13));
}

TEST_CASE("gaussian_phase is odd, tends to sin for wide pulses and to its limit for long times") {
  for (double tau : {0.4, 3.3, 25.0}) CHECK(gaussian_phase(-tau, 3.0) == -gaussian_phase(tau, 3.0));
  for (double tau : {0.1, 1.0, 3.0}) CHECK(std::abs(gaussian_phase(tau, 1e6) - std::sin(tau)) < 1e-10);
  const double c = 2.0;
  const double limit = 0.5 * std::sqrt(std::numbers::pi) * c * std::exp(-c * c / 4.0);
  CHECK(gaussian_phase(1e4, c) == doctest::Approx(limit).epsilon(1e-13));
}

TEST_CASE("the closed form and the quadrature agree") {
  for (double c : {0.5, 2.0, 10.0, 100.0}) {
    for (double tau = -60.0; tau <= 60.0; tau += 1.37) {
      CHECK(std::abs(gaussian_phase_erf(tau, c) - gaussian_phase(tau, c)) < 1e-12);
    }
  }
}

TEST_CASE("gaussian_phase rejects a non-positive width") {
  CHECK_THROWS_AS(gaussian_phase(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(gaussian_phase(1.0, -1.0), DomainError);
}

TEST_CASE("fourier_coefficients reproduce the Jacobi-Anger expansion") {
  const double omega = 10.0;
  const double period = 2.0 * std::numbers::pi / omega;
  for (QuadratureRule rule : {QuadratureRule::Simpson, QuadratureRule::Trapezoid}) {
    for (double z : {0.5, 2.0, 5.0}) {
      const HarmonicCoefficients a = fourier_coefficients(
          [&](double t) { return std::exp(cplx{0.0, z * std::sin(omega * t)}); }, period, 30,
          QuadratureSettings{1024, rule});
      for (int n = -30; n <= 30; ++n) {
        // With the e^{+i n Omega t} projection the n-th coefficient is J_{-n}(z).
        CHECK(std::abs(a[n] - std::cyl_bessel_j(std::abs(n), z) * ((n < 0 || n % 2 == 0) ? 1.0 : -1.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("fourier_coefficients index convention") {
  const double period = 0.7;
  const double omega = 2.0 * std::numbers::pi / period;
  const HarmonicCoefficients a =
      fourier_coefficients([&](double t) { return std::exp(cplx{0.0, omega * t}); }, period, 3);
  CHECK(std::abs(a[-1] - 1.0) < 1e-14);
  CHECK(std::abs(a[1]) < 1e-14);
  CHECK(std::abs(a[0]) < 1e-14);
  CHECK(a[4] == cplx{});  // outside the stored range
  CHECK(a.n_max() == 3);
}

TEST_CASE("fourier_coefficients reports the time of a non-finite sample") {
  try {
    fourier_coefficients([](double t) { return t > 0.5 ? cplx{std::nan(""), 0.0} : cplx{1.0, 0.0}; }, 1.0, 2);
    FAIL("expected an EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.time() > 0.5);
    CHECK(e.time() <= 1.0);
  }
}

TEST_CASE("quadrature settings are validated") {
  CHECK_THROWS_AS((QuadratureSettings{32, QuadratureRule::Simpson}.validate()), ContractError);
  CHECK_THROWS_AS((QuadratureSettings{1025, QuadratureRule::Simpson}.validate()), ContractError);
  CHECK_NOTHROW((QuadratureSettings{1025, QuadratureRule::Trapezoid}.validate()));
}
