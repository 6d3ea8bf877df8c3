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
// The three weight families on the unit circle, normalized so that the
// zeroth Fourier coefficient is 1/(2pi):
//
//   FisherHartwig(alpha, beta):  C (1-z)^{alpha+i beta} (1-1/z)^{alpha-i beta}
//   Bessel(t):                   C exp(t cos theta)
//   ExpPoles(t, {(z_a, g_a)}):   C e^{t z} prod_a ((z - z_a)/z)^{g_a}
//
// Moments come from per-family closed forms where available and from
// quadrature otherwise; the quadrature path doubles as an independent
// oracle for the closed forms.

#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "opuc/quadrature.hpp"
#include "opuc/specfun.hpp"

namespace opuc {

struct FisherHartwig {
  double alpha = 0.0;
  double beta = 0.0;
};

struct Bessel {
  double t = 1.0;
};

struct PoleTerm {
  double z = -0.5;  // pole location, -1 < z < 0
  double g = 2.0;   // exponent
};

struct ExpPoles {
  double t = 1.0;
  std::vector<PoleTerm> poles;
};

/// A validated, normalized symbol.  Construction computes the normalization
/// constant C; instances are immutable afterwards.
class SymbolSpec {
 public:
  static SymbolSpec fisher_hartwig(double alpha, double beta) {
    if (!(alpha > -0.5)) {
      throw std::domain_error("FisherHartwig requires alpha > -1/2");
    }
    SymbolSpec s;
    s.variant_ = FisherHartwig{alpha, beta};
    // C = Gamma(1+a+ib) Gamma(1+a-ib) / (2pi Gamma(1+2a))
    Complex ab(alpha, beta);
    double logc = (log_gamma(1.0 + ab) + log_gamma(1.0 + std::conj(ab)))
                      .real() -
                  log_gamma(Complex(1.0 + 2.0 * alpha)).real();
    s.normalizer_ = std::exp(logc) / kTwoPi;
    s.hermitian_ = true;
    return s;
  }

  static SymbolSpec bessel(double t) {
    if (!(t > 0.0)) throw std::domain_error("Bessel weight requires t > 0");
    SymbolSpec s;
    s.variant_ = Bessel{t};
    s.normalizer_ = 1.0 / (kTwoPi * bessel_i(0, t));
    s.hermitian_ = true;
    return s;
  }

  static SymbolSpec exp_poles(double t, std::vector<PoleTerm> poles) {
    double g_sum = 0.0, gz_sum = 0.0;
    for (const auto& p : poles) {
      if (!(p.z > -1.0 && p.z < 0.0)) {
        throw std::domain_error("ExpPoles requires -1 < z_a < 0");
      }
      g_sum += p.g;
      gz_sum += p.g * p.z;
    }
    if (!(g_sum > 0.0)) throw std::domain_error("ExpPoles requires sum g_a > 0");
    if (std::abs(gz_sum + 1.0) > 1e-12) {
      throw std::domain_error("ExpPoles requires sum g_a z_a = -1");
    }
    SymbolSpec s;
    s.variant_ = ExpPoles{t, std::move(poles)};
    s.hermitian_ = false;
    s.normalizer_ = 1.0;
    // C fixed by the quadrature value of the unnormalized zeroth moment.
    auto w0 = refine_to_tolerance(
        [&s](int p) {
          return circle_mean_trapezoid(
              [&s](double th) { return s.unnormalized_weight(th); }, p);
        },
        64, 1e-13, 1 << 20);
    s.normalizer_ = 1.0 / (kTwoPi * w0.value.real());
    if (std::abs(w0.value.imag()) > 1e-10 * std::abs(w0.value.real())) {
      throw std::domain_error("ExpPoles zeroth moment is not real");
    }
    return s;
  }

  const std::variant<FisherHartwig, Bessel, ExpPoles>& variant() const {
    return variant_;
  }
  bool is_fisher_hartwig() const {
    return std::holds_alternative<FisherHartwig>(variant_);
  }
  bool is_bessel() const { return std::holds_alternative<Bessel>(variant_); }
  bool is_exp_poles() const {
    return std::holds_alternative<ExpPoles>(variant_);
  }
  const FisherHartwig& fh() const { return std::get<FisherHartwig>(variant_); }
  const Bessel& bes() const { return std::get<Bessel>(variant_); }
  const ExpPoles& ep() const { return std::get<ExpPoles>(variant_); }

  /// True when the weight is real on the circle, so moments satisfy
  /// w_{-m} = conj(w_m) and the usual sesquilinear pairing applies.
  bool hermitian() const { return hermitian_; }

  /// The normalization constant C.
  double normalizer() const { return normalizer_; }

  /// Weight value at z = e^{i theta}, including C.  The Fisher-Hartwig
  /// branch uses the real form C (2 sin(theta/2))^{2 alpha}
  /// e^{-beta (theta - pi)} on (0, 2pi), which realizes the branch with the
  /// first factor analytic inside the disc and 1 at z = 0.
  Complex weight(double theta) const {
    return normalizer_ * unnormalized_weight(theta);
  }

  /// True for the family whose weight is singular (or vanishing with
  /// unbounded derivatives) at theta = 0.
  bool singular_at_one() const { return is_fisher_hartwig(); }

  Complex unnormalized_weight(double theta) const {
    if (is_fisher_hartwig()) {
      const auto& p = fh();
      double s = 2.0 * std::sin(0.5 * theta);
      return std::pow(s, 2.0 * p.alpha) * std::exp(-p.beta * (theta - kPi));
    }
    if (is_bessel()) {
      return std::exp(bes().t * std::cos(theta));
    }
    const auto& e = ep();
    Complex z = std::polar(1.0, theta);
    Complex w = std::exp(e.t * z);
    for (const auto& pt : e.poles) {
      // (z - z_a)/z = 1 - z_a e^{-i theta}; Re > 0 since -1 < z_a < 0, so
      // the principal power is continuous in theta.
      w *= std::pow(1.0 - pt.z * std::conj(z), pt.g);
    }
    return w;
  }

 private:
  SymbolSpec() = default;
  std::variant<FisherHartwig, Bessel, ExpPoles> variant_;
  double normalizer_ = 1.0;
  bool hermitian_ = true;
};

/// The normalization constant for a family (same value SymbolSpec computes).
inline double normalizer(const SymbolSpec& spec) { return spec.normalizer(); }

/// Trapezoidal (or, for Fisher-Hartwig, substituted-midpoint) approximation
/// of w_m = (1/2pi) int w(e^{i theta}) e^{-i m theta} d theta at a fixed
/// point count.
inline Complex quadrature_moment(const SymbolSpec& spec, int m, int points) {
  if (points < 16) {
    throw std::domain_error("quadrature_moment: need at least 16 points");
  }
  auto f = [&spec, m](double th) {
    return spec.weight(th) * std::polar(1.0, -m * th);
  };
  if (spec.singular_at_one()) {
    return circle_mean_endpoint_singular(f, points);
  }
  return circle_mean_trapezoid(f, points);
}

/// Same moment with automatic point doubling until stable.  Stability is
/// judged against max(|value|, w_0) so that moments far below the weight's
/// natural scale stop at the roundoff floor instead of refining forever.
inline Complex quadrature_moment_auto(const SymbolSpec& spec, int m,
                                      double tol = 1e-12,
                                      int max_points = 1 << 20) {
  auto rule = [&spec, m](int p) { return quadrature_moment(spec, m, p); };
  return refine_to_tolerance(rule, 128, tol, max_points, 1.0 / kTwoPi).value;
}

/// Closed-form (Fisher-Hartwig, Bessel) or quadrature (ExpPoles) Fourier
/// coefficient of the normalized weight.
inline Complex moment(const SymbolSpec& spec, int m) {
  if (spec.is_fisher_hartwig()) {
    const auto& p = spec.fh();
    // w_m = C (-1)^m Gamma(1+2a) / (Gamma(1+a+ib-m) Gamma(1+a-ib+m));
    // either denominator gamma can sit at a pole (integer alpha, beta = 0),
    // where the moment vanishes.
    Complex ab(p.alpha, p.beta);
    Complex val = std::exp(log_gamma(Complex(1.0 + 2.0 * p.alpha))) *
                  reciprocal_gamma(1.0 + ab - double(m)) *
                  reciprocal_gamma(1.0 + std::conj(ab) + double(m));
    double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return spec.normalizer() * sign * val;
  }
  if (spec.is_bessel()) {
    int k = std::abs(m);
    return Complex(bessel_i(k, spec.bes().t) /
                   (kTwoPi * bessel_i(0, spec.bes().t)));
  }
  return quadrature_moment_auto(spec, m);
}

/// Immutable cache of moments w_m for |m| <= max_order.
class MomentSequence {
 public:
  MomentSequence(SymbolSpec spec, int max_order)
      : spec_(std::move(spec)), max_order_(max_order) {
    values_.reserve(2 * std::size_t(max_order) + 1);
    for (int m = -max_order; m <= max_order; ++m) {
      values_.push_back(moment(spec_, m));
    }
  }

  const SymbolSpec& spec() const { return spec_; }
  int max_order() const { return max_order_; }
  bool hermitian() const { return spec_.hermitian(); }

  Complex operator()(int m) const {
    if (m < -max_order_ || m > max_order_) {
      throw std::out_of_range("MomentSequence: order beyond cached range");
    }
    return values_[std::size_t(m + max_order_)];
  }

  /// A fresh sequence covering a larger range (the cache itself stays
  /// immutable).
  MomentSequence extended(int new_max_order) const {
    return MomentSequence(spec_, std::max(new_max_order, max_order_));
  }

 private:
  SymbolSpec spec_;
  int max_order_;
  std::vector<Complex> values_;
};

}  // namespace opuc
