// Copyright 2026 The opucdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Complex-argument special functions used by the closed-form Toeplitz
// results: principal log-gamma, log of the Barnes G-function, the modified
// Bessel function I_k, and the terminating Gauss hypergeometric sum.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "opuc/common.hpp"

namespace opuc {

namespace detail {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficient set).
// Relative accuracy of exp(log_gamma) is ~1e-15 in the right half-plane.
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

inline Complex log_gamma_right_half(Complex z) {
  // Valid for Re z >= 0.5; principal branch.
  Complex zm1 = z - 1.0;
  Complex series(kLanczosCoeff[0], 0.0);
  for (int k = 1; k < 15; ++k) series += kLanczosCoeff[k] / (zm1 + double(k));
  Complex t = zm1 + (kLanczosG + 0.5);
  return 0.5 * std::log(kTwoPi) + (zm1 + 0.5) * std::log(t) - t +
         std::log(series);
}

}  // namespace detail

/// Principal-branch log of the gamma function.  The imaginary part is the
/// principal one for Re z >= 0.5; for Re z < 0.5 the reflection formula is
/// used and the result is correct modulo 2*pi*i, which is all the gamma
/// ratios in this library require.
inline Complex log_gamma(Complex z) {
  if (is_near_nonpositive_integer(z)) {
    throw std::domain_error("log_gamma: argument is a pole of gamma");
  }
  if (z.real() >= 0.5) return detail::log_gamma_right_half(z);
  // log Gamma(z) = log(pi) - log(sin(pi z)) - log Gamma(1 - z)
  return std::log(Complex(kPi)) - std::log(std::sin(kPi * z)) -
         detail::log_gamma_right_half(1.0 - z);
}

/// 1/Gamma(z), entire in z; returns exactly 0 at the poles of gamma.
inline Complex reciprocal_gamma(Complex z) {
  if (z.real() >= 0.5) return std::exp(-detail::log_gamma_right_half(z));
  if (is_near_nonpositive_integer(z)) return Complex(0.0, 0.0);
  // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi
  return std::sin(kPi * z) *
         std::exp(detail::log_gamma_right_half(1.0 - z)) / kPi;
}

namespace detail {

// zeta'(-1) = 1/12 - log A (A the Glaisher-Kinkelin constant); the additive
// constant in the asymptotic expansion of log G(z+1).
inline constexpr double kZetaPrimeMinusOne = -0.16542114370045092921;

// B_{2k+2} / (4k (k+1)) for k = 1..8.
inline constexpr double kBarnesAsympCoeff[8] = {
    -1.0 / 240.0,          // B_4  / 8
    1.0 / 1008.0,          // B_6  / 24
    -1.0 / 1440.0,         // B_8  / 48
    1.0 / 1056.0,          // B_10 / 80
    -691.0 / 327600.0,     // B_12 / 120
    1.0 / 144.0,           // B_14 / 168
    -3617.0 / 114240.0,    // B_16 / 224
    43867.0 / 229824.0,    // B_18 / 288
};

// Asymptotic expansion of log G(w+1), usable once Re w >= 20.
inline Complex log_barnes_g_1p_asymptotic(Complex w) {
  Complex lw = std::log(w);
  Complex w2 = w * w;
  Complex sum = 0.5 * w2 * lw - 0.75 * w2 + 0.5 * w * std::log(kTwoPi) -
                lw / 12.0 + kZetaPrimeMinusOne;
  Complex iw2 = 1.0 / w2;
  Complex p = iw2;
  for (double c : kBarnesAsympCoeff) {
    sum += c * p;
    p *= iw2;
  }
  return sum;
}

}  // namespace detail

/// log of the Barnes G-function, G(z+1) = Gamma(z) G(z), G(1) = 1.
/// Computed by shifting upward with the functional equation until the
/// asymptotic expansion applies.  Imaginary part principal for Re z >= 0.5
/// up to the log-gamma caveat above.
inline Complex barnes_g_log(Complex z, double shift_target = 20.0) {
  if (is_near_nonpositive_integer(z)) {
    throw std::domain_error("barnes_g_log: argument is a nonpositive integer");
  }
  // log G(z) = log G(z+k) - sum_{j=0}^{k-1} log Gamma(z+j)
  int shifts = 0;
  if (z.real() < shift_target) {
    shifts = int(std::ceil(shift_target - z.real()));
  }
  Complex acc(0.0, 0.0);
  for (int j = 0; j < shifts; ++j) acc += log_gamma(z + double(j));
  Complex w = z + double(shifts) - 1.0;  // log G(z+k) = logG1p(z+k-1)
  return detail::log_barnes_g_1p_asymptotic(w) - acc;
}

/// Modified Bessel function of the first kind, nonnegative integer order.
/// Ascending series for small t, Miller downward recurrence normalized by
/// the series value of I_0 for larger t (forward recurrence in the order is
/// unstable).
template <typename Real = double>
Real bessel_i_series(int order, Real t) {
  if (order < 0) throw std::domain_error("bessel_i: order must be >= 0");
  if (t < Real(0)) throw std::domain_error("bessel_i: t must be >= 0");
  using std::abs;
  Real half_t = t / 2;
  // (t/2)^order / order!
  Real term(1);
  for (int j = 1; j <= order; ++j) term *= half_t / Real(j);
  Real x2 = half_t * half_t;
  Real sum = term;
  for (int m = 1; m < 4000; ++m) {
    term *= x2 / (Real(m) * Real(m + order));
    sum += term;
    if (abs(term) <= abs(sum) * std::numeric_limits<Real>::epsilon()) break;
  }
  return sum;
}

inline double bessel_i(int order, double t) {
  if (order < 0) throw std::domain_error("bessel_i: order must be >= 0");
  if (t < 0.0) throw std::domain_error("bessel_i: t must be >= 0");
  if (t == 0.0) return order == 0 ? 1.0 : 0.0;
  if (t <= 15.0 || order == 0) return bessel_i_series(order, t);

  int start = order + 30 + int(t);
  double above = 0.0;  // I_{k+1} (unnormalized)
  double cur = 1e-30;  // I_k
  double at_order = 0.0;
  double at_zero = 0.0;
  for (int k = start; k >= 1; --k) {
    double below = above + (2.0 * k / t) * cur;  // I_{k-1}
    above = cur;
    cur = below;
    if (k - 1 == order) at_order = cur;
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      above *= 1e-250;
      at_order *= 1e-250;
    }
  }
  at_zero = cur;
  return at_order * (bessel_i_series(0, t) / at_zero);
}

/// Terminating Gauss hypergeometric sum
///   2F1(-n, b; c; z) = sum_{k=0}^{n} [(-n)_k (b)_k / (c)_k] z^k / k!.
inline Complex hyp2f1_terminating(int n, Complex b, Complex c, Complex z) {
  if (n < 0) throw std::domain_error("hyp2f1_terminating: n must be >= 0");
  for (int k = 0; k < n; ++k) {
    if (is_near_nonpositive_integer(c + double(k))) {
      throw std::domain_error(
          "hyp2f1_terminating: lower parameter hits a nonpositive integer");
    }
  }
  Complex term(1.0, 0.0);
  Complex sum = term;
  for (int k = 0; k < n; ++k) {
    term *= (Complex(double(-n + k)) * (b + double(k))) /
            ((c + double(k)) * double(k + 1)) * z;
    sum += term;
  }
  return sum;
}

/// Coefficients (ascending powers) of the same terminating 2F1 as a
/// degree-n polynomial in z.
inline std::vector<Complex> hyp2f1_terminating_coeffs(int n, Complex b,
                                                      Complex c) {
  if (n < 0) throw std::domain_error("hyp2f1_terminating: n must be >= 0");
  for (int k = 0; k < n; ++k) {
    if (is_near_nonpositive_integer(c + double(k))) {
      throw std::domain_error(
          "hyp2f1_terminating: lower parameter hits a nonpositive integer");
    }
  }
  std::vector<Complex> coeffs(std::size_t(n) + 1);
  Complex term(1.0, 0.0);
  coeffs[0] = term;
  for (int k = 0; k < n; ++k) {
    term *= (Complex(double(-n + k)) * (b + double(k))) /
            ((c + double(k)) * double(k + 1));
    coeffs[std::size_t(k) + 1] = term;
  }
  return coeffs;
}

}  // namespace opuc
