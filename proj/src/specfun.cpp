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

#include "floquet_ssh/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <fmt/format.h>

#include "floquet_ssh/errors.hpp"

namespace fssh {

namespace {

constexpr int kMaxOrder = 200;
constexpr double kMaxArgument = 100.0;
constexpr double kRescaleAbove = 1e250;

void check_bessel_domain(int n_max, double x) {
  if (!std::isfinite(x) || std::abs(x) > kMaxArgument) {
    throw DomainError(fmt::format("bessel_j: |x| = {} outside [0, {}]", std::abs(x), kMaxArgument));
  }
  if (n_max > kMaxOrder) {
    throw DomainError(fmt::format("bessel_j: |n| = {} exceeds {}", n_max, kMaxOrder));
  }
}

// Ascending series, used for 0 < x < 1 where every term is positive in
// magnitude ordering and no cancellation occurs.
double bessel_series(int n, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int k = 1; k <= n; ++k) term *= half / k;
  if (term == 0.0) return 0.0;
  const double q = -half * half;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * (n + k));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Miller's algorithm for 1 <= x <= 100: backward recurrence from an order
// far above both n_max and x, normalized with J_0 + 2 sum_k J_2k = 1.
std::vector<double> bessel_miller(int n_max, double x) {
  const int big = std::max(n_max, static_cast<int>(std::ceil(x)));
  const int start = 2 * ((big + 20 + static_cast<int>(std::sqrt(160.0 * (big + 1)))) / 2);
  std::vector<double> j(start + 2, 0.0);
  j[start] = 1e-300;
  const double two_over_x = 2.0 / x;
  for (int k = start; k >= 1; --k) {
    j[k - 1] = k * two_over_x * j[k] - j[k + 1];
    if (std::abs(j[k - 1]) > kRescaleAbove) {
      for (int i = k - 1; i <= start; ++i) j[i] /= kRescaleAbove;
    }
  }
  double norm = j[0];
  for (int k = 2; k <= start; k += 2) norm += 2.0 * j[k];
  j.resize(n_max + 1);
  for (double& value : j) value /= norm;
  return j;
}

std::vector<double> bessel_nonnegative(int n_max, double x) {
  std::vector<double> out(n_max + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
  } else if (x < 1.0) {
    for (int n = 0; n <= n_max; ++n) out[n] = bessel_series(n, x);
  } else {
    out = bessel_miller(n_max, x);
  }
  return out;
}

struct WeidemanTable {
  static constexpr int kTerms = 64;
  double l;
  std::array<double, kTerms> poly;  // poly[p] multiplies Z^p

  WeidemanTable() {
    constexpr int m = 2 * kTerms;
    constexpr int m2 = 2 * m;
    l = std::sqrt(kTerms / std::numbers::sqrt2);
    std::array<double, m> f{};  // f[|k|], the sampled function is even in k
    for (int k = 1; k < m; ++k) {
      const double t = l * std::tan(0.5 * k * std::numbers::pi / m);
      f[k] = std::exp(-t * t) * (l * l + t * t);
    }
    f[0] = l * l;
    for (int p = 1; p <= kTerms; ++p) {
      double acc = f[0];
      for (int k = 1; k < m; ++k) acc += 2.0 * f[k] * std::cos(2.0 * std::numbers::pi * k * p / m2);
      poly[p - 1] = acc / m2;
    }
  }
};

}  // namespace

double bessel_j(int n, double x) {
  check_bessel_domain(std::abs(n), x);
  const int order = std::abs(n);
  bool negate = false;
  if (n < 0 && (order % 2 == 1)) negate = !negate;
  if (x < 0.0 && (order % 2 == 1)) negate = !negate;
  const double ax = std::abs(x);
  double value;
  if (ax == 0.0) {
    value = order == 0 ? 1.0 : 0.0;
  } else if (ax < 1.0) {
    value = bessel_series(order, ax);
  } else {
    value = bessel_miller(order, ax)[order];
  }
  return negate ? -value : value;
}

std::vector<double> bessel_j_sequence(int n_max, double x) {
  if (n_max < 0) throw DomainError("bessel_j_sequence: negative n_max");
  check_bessel_domain(n_max, x);
  std::vector<double> out = bessel_nonnegative(n_max, std::abs(x));
  if (x < 0.0) {
    for (int n = 1; n <= n_max; n += 2) out[n] = -out[n];
  }
  return out;
}

cplx faddeeva_w(cplx z) {
  if (z.imag() < 0.0) {
    // w(z) = 2 exp(-z^2) - w(-z)
    return 2.0 * std::exp(-z * z) - faddeeva_w(-z);
  }
  static const WeidemanTable table;
  const cplx iz{-z.imag(), z.real()};
  const cplx denom = table.l - iz;
  const cplx zz = (table.l + iz) / denom;
  cplx p = 0.0;
  for (int k = WeidemanTable::kTerms - 1; k >= 0; --k) p = p * zz + table.poly[k];
  return 2.0 * p / (denom * denom) + (1.0 / std::sqrt(std::numbers::pi)) / denom;
}

double gaussian_phase(double tau, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError(fmt::format("gaussian_phase: c must be positive and finite, got {}", c));
  }
  if (!std::isfinite(tau)) throw DomainError("gaussian_phase: non-finite tau");
  const double sign = tau < 0.0 ? -1.0 : 1.0;
  // Beyond 7c the envelope is below e^-49 and contributes nothing.
  const double upper = std::min(std::abs(tau), 7.0 * c);
  if (upper == 0.0) return 0.0;
  const double panel = std::min(1.0, 0.25 * c);
  const int panels = static_cast<int>(std::ceil(upper / panel));
  const double width = upper / panels;
  const double inv_c2 = 1.0 / (c * c);
  auto integrand = [inv_c2](double s) { return std::exp(-s * s * inv_c2) * std::cos(s); };
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    sum += boost::math::quadrature::gauss<double, 20>::integrate(integrand, p * width, (p + 1) * width);
  }
  return sign * sum;
}

double gaussian_phase_erf(double tau, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError(fmt::format("gaussian_phase_erf: c must be positive and finite, got {}", c));
  }
  const double sign = tau < 0.0 ? -1.0 : 1.0;
  const double t = std::abs(tau);
  // e^{-c^2/4} erf(t/c + ic/2) = e^{-c^2/4} - e^{-t^2/c^2} e^{-it} w(-c/2 + it/c)
  const cplx w = faddeeva_w(cplx{-0.5 * c, t / c});
  const cplx scaled = std::exp(-0.25 * c * c) - std::exp(-t * t / (c * c)) * std::polar(1.0, -t) * w;
  return sign * 0.5 * std::sqrt(std::numbers::pi) * c * scaled.real();
}

void QuadratureSettings::validate() const {
  if (samples_per_period < 64) {
    throw ContractError(fmt::format("quadrature: samples_per_period = {} must be >= 64", samples_per_period));
  }
  if (rule == QuadratureRule::Simpson && samples_per_period % 2 != 0) {
    throw ContractError(fmt::format("quadrature: Simpson rule needs an even sample count, got {}", samples_per_period));
  }
}

HarmonicCoefficients::HarmonicCoefficients(int n_max, std::vector<cplx> values)
    : n_max_(n_max), values_(std::move(values)) {
  if (n_max_ < 0 || values_.size() != static_cast<std::size_t>(2 * n_max_ + 1)) {
    throw ContractError("HarmonicCoefficients: expected 2*n_max+1 values");
  }
}

HarmonicCoefficients fourier_coefficients(const std::function<cplx(double)>& phase_fn, double base_period,
                                          int n_max, const QuadratureSettings& q, double t_start) {
  q.validate();
  if (!(base_period > 0.0) || !std::isfinite(base_period)) {
    throw ContractError("fourier_coefficients: base_period must be positive");
  }
  if (n_max < 0) throw ContractError("fourier_coefficients: n_max must be >= 0");

  const int k_count = q.samples_per_period;
  const double h = base_period / k_count;
  std::vector<cplx> weighted(k_count + 1);
  for (int k = 0; k <= k_count; ++k) {
    const double t = t_start + k * h;
    const cplx f = phase_fn(t);
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) {
      throw EvaluationError(fmt::format("fourier_coefficients: non-finite sample at t = {}", t), t);
    }
    double weight;
    if (q.rule == QuadratureRule::Trapezoid) {
      weight = (k == 0 || k == k_count) ? 0.5 : 1.0;
    } else {
      weight = (k == 0 || k == k_count) ? 1.0 / 3.0 : (k % 2 == 1 ? 4.0 / 3.0 : 2.0 / 3.0);
    }
    weighted[k] = weight * f;
  }

  // exp(i n Omega t_k) = exp(i n Omega t_start) * root[(n k) mod K]
  std::vector<cplx> root(k_count);
  for (int j = 0; j < k_count; ++j) root[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / k_count);
  const double omega = 2.0 * std::numbers::pi / base_period;

  std::vector<cplx> values(2 * n_max + 1);
  for (int n = -n_max; n <= n_max; ++n) {
    const long long step = ((static_cast<long long>(n) % k_count) + k_count) % k_count;
    cplx acc = 0.0;
    long long idx = 0;
    for (int k = 0; k <= k_count; ++k) {
      acc += weighted[k] * root[idx];
      idx += step;
      if (idx >= k_count) idx -= k_count;
    }
    values[n + n_max] = std::polar(1.0, n * omega * t_start) * acc / static_cast<double>(k_count);
  }
  return HarmonicCoefficients(n_max, std::move(values));
}

}  // namespace fssh
