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
#include <functional>
#include <vector>

namespace fssh {

using cplx = std::complex<double>;

/// Bessel function of the first kind J_n(x) for integer order.
///
/// Supported range is |n| <= 200 and |x| <= 100; outside of it a DomainError
/// is thrown. Uses a power series for |x| < 1 and Miller's backward recurrence
/// (normalized by J_0 + 2 sum J_2k = 1) otherwise. Negative orders and
/// arguments are reduced with J_{-n}(x) = J_n(-x) = (-1)^n J_n(x), so the
/// parity relation holds bit for bit.
double bessel_j(int n, double x);

/// All J_k(x) for k = 0..n_max from a single backward recurrence.
std::vector<double> bessel_j_sequence(int n_max, double x);

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im z >= 0.
///
/// Weideman's rational approximation with 64 terms; relative accuracy is
/// better than 1e-15 in the closed upper half plane.
cplx faddeeva_w(cplx z);

/// s(tau) = integral_0^tau exp(-sigma^2/c^2) cos(sigma) d sigma.
///
/// This is the phase accumulated by a Gaussian-enveloped cosine field in
/// dimensionless time tau = Omega t with c = Omega/Gamma. Evaluated by
/// composite Gauss-Legendre quadrature of the defining integral; never
/// overflows. Throws DomainError for c <= 0 or non-finite input.
double gaussian_phase(double tau, double c);

/// Same quantity through the closed form
/// (sqrt(pi) c e^{-c^2/4} / 2) Re erf(tau/c + i c/2), rewritten with the
/// Faddeeva function so that no intermediate exceeds O(1) for any c.
double gaussian_phase_erf(double tau, double c);

enum class QuadratureRule { Trapezoid, Simpson };

struct QuadratureSettings {
  int samples_per_period = 1024;  // number of subintervals per period
  QuadratureRule rule = QuadratureRule::Simpson;

  // Throws ContractError unless samples_per_period >= 64 (and even for
  // Simpson).
  void validate() const;

  bool operator==(const QuadratureSettings&) const = default;
};

/// Fourier coefficients a_n for n in [-n_max, n_max], stored contiguously.
class HarmonicCoefficients {
 public:
  HarmonicCoefficients() = default;
  HarmonicCoefficients(int n_max, std::vector<cplx> values);

  int n_max() const { return n_max_; }
  // Zero outside the stored range.
  cplx operator[](int n) const {
    return (n < -n_max_ || n > n_max_) ? cplx{} : values_[n + n_max_];
  }
  const std::vector<cplx>& values() const { return values_; }

 private:
  int n_max_ = 0;
  std::vector<cplx> values_;
};

/// a_n = (1/T) integral_{t0}^{t0+T} f(t) exp(+i n Omega t) dt with
/// Omega = 2 pi / T.
///
/// With this sign convention f(t) = exp(i Omega t) yields a_{-1} = 1. The
/// integrand is sampled once on an equidistant grid and weighted by the
/// chosen rule. A non-finite sample raises EvaluationError carrying its t.
HarmonicCoefficients fourier_coefficients(
    const std::function<cplx(double)>& phase_fn, double base_period,
    int n_max, const QuadratureSettings& q = {}, double t_start = 0.0);

}  // namespace fssh
