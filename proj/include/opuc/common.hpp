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

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace opuc {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Thrown when an adaptive quadrature fails to stabilize below its target
/// tolerance.  Carries the best estimate reached so callers can decide
/// whether it is still usable.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, Complex best_estimate,
                double achieved_tolerance)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        achieved_tolerance_(achieved_tolerance) {}

  Complex best_estimate() const { return best_estimate_; }
  double achieved_tolerance() const { return achieved_tolerance_; }

 private:
  Complex best_estimate_;
  double achieved_tolerance_;
};

/// Thrown when a moment sequence has a vanishing leading principal minor,
/// i.e. the weight is degenerate at some degree.
class DegenerateWeightError : public std::domain_error {
 public:
  DegenerateWeightError(const std::string& what, int degree)
      : std::domain_error(what), degree_(degree) {}

  int degree() const { return degree_; }

 private:
  int degree_;
};

/// |a - b| / max(|a|, |b|, floor).  The floor keeps comparisons of values
/// that are both tiny from reporting spurious relative blowups.
inline double rel_diff(Complex a, Complex b, double floor = 0.0) {
  double scale = std::max({std::abs(a), std::abs(b), floor});
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

inline bool is_near_nonpositive_integer(Complex z, double eps = 1e-12) {
  if (z.real() > 0.5 || std::abs(z.imag()) > eps) return false;
  return std::abs(z.real() - std::round(z.real())) <= eps;
}

}  // namespace opuc
