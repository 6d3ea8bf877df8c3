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
// Quadrature over the unit circle.  Two rules, both returning the mean
// (1/2pi) * integral over [0, 2pi):
//   * periodic trapezoid: spectrally accurate for smooth periodic
//     integrands (Bessel and exponential-with-poles weights);
//   * a sin^6 endpoint substitution with the midpoint rule for integrands
//     with an algebraic singularity at theta = 0 (Fisher-Hartwig weights).

#pragma once

#include <functional>

#include "opuc/common.hpp"

namespace opuc {

namespace detail {

// Kahan-compensated accumulation; several integrals here are small numbers
// produced by cancellation over the grid.
struct CompensatedSum {
  Complex sum{0.0, 0.0};
  Complex carry{0.0, 0.0};
  void add(Complex x) {
    Complex y = x - carry;
    Complex t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace detail

/// Mean of f over theta in [0, 2pi) with the P-point periodic trapezoid
/// rule (equal to the rectangle rule by periodicity).
template <typename F>
Complex circle_mean_trapezoid(const F& f, int points) {
  detail::CompensatedSum acc;
  for (int j = 0; j < points; ++j) {
    acc.add(f(kTwoPi * j / points));
  }
  return acc.sum / double(points);
}

/// Mean of f over theta in (0, 2pi) for integrands with an integrable
/// algebraic singularity at theta = 0 (mod 2pi).  Substitutes
/// theta = 2u - (3/2)sin 2u + (3/10)sin 4u - (1/30)sin 6u, u in [0, pi],
/// whose derivative (32/5)sin^6 u vanishes to sixth order at both ends,
/// and applies the midpoint rule so the endpoints are never evaluated.
template <typename F>
Complex circle_mean_endpoint_singular(const F& f, int points) {
  detail::CompensatedSum acc;
  const double h = kPi / points;
  for (int j = 0; j < points; ++j) {
    double u = (j + 0.5) * h;
    double theta = 2.0 * u - 1.5 * std::sin(2.0 * u) +
                   0.3 * std::sin(4.0 * u) - std::sin(6.0 * u) / 30.0;
    double s = std::sin(u);
    double s2 = s * s;
    double jac = 6.4 * s2 * s2 * s2;  // 32/5 sin^6 u
    acc.add(f(theta) * jac);
  }
  return acc.sum * (h / kTwoPi);
}

struct QuadratureResult {
  Complex value{0.0, 0.0};
  int points = 0;
  double error_estimate = 0.0;
};

/// Doubles the point count until two successive evaluations agree to tol
/// (relative to max(|value|, scale_floor)).  Throws AccuracyError with the
/// best estimate if the cap is reached without stabilizing.
template <typename Rule>
QuadratureResult refine_to_tolerance(const Rule& rule, int start_points,
                                     double tol, int max_points,
                                     double scale_floor = 1e-30) {
  Complex prev = rule(start_points);
  int p = start_points;
  while (p < max_points) {
    p *= 2;
    Complex next = rule(p);
    double err = std::abs(next - prev) /
                 std::max(std::abs(next), scale_floor);
    if (err <= tol) return {next, p, err};
    prev = next;
  }
  Complex last = prev;
  Complex more = rule(2 * p);
  double err = std::abs(more - last) / std::max(std::abs(more), scale_floor);
  if (err <= tol) return {more, 2 * p, err};
  throw AccuracyError("quadrature did not stabilize at requested tolerance",
                      more, err);
}

}  // namespace opuc
