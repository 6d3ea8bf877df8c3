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
// Toeplitz matrices from moments, determinants, and the orthonormal
// polynomial data built by explicit Gram solves.  The Gram route is kept
// independent of the Szego recurrences so it can serve as the oracle that
// validates them.

#pragma once

#include <vector>

#include "opuc/linalg.hpp"
#include "opuc/polynomial.hpp"
#include "opuc/residual.hpp"
#include "opuc/symbols.hpp"

namespace opuc {

/// n x n matrix with entry(j, k) = w_{j-k}.
class ToeplitzMatrix {
 public:
  ToeplitzMatrix(const MomentSequence& moments, int n) : n_(n), m_(n) {
    if (moments.max_order() < n - 1) {
      throw std::out_of_range("build_toeplitz: moments cover |m| < n");
    }
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) m_.at(j, k) = moments(j - k);
    }
  }

  int size() const { return n_; }
  Complex entry(int j, int k) const { return m_.at(j, k); }
  const DenseMatrix<Complex>& dense() const { return m_; }

 private:
  int n_;
  DenseMatrix<Complex> m_;
};

inline ToeplitzMatrix build_toeplitz(const MomentSequence& moments, int n) {
  return ToeplitzMatrix(moments, n);
}

/// Determinant by LU with partial pivoting; returns 0 (with the singular
/// flag in the underlying LU) on exact singularity.
inline Complex det_lu(const ToeplitzMatrix& matrix) {
  if (matrix.size() == 0) return Complex(1.0, 0.0);
  return lu_det(matrix.dense()).det;
}

/// Per-degree orthonormal polynomial data.
///   phi_n(z) = k_n z^n + l_n z^{n-1} + ... + phi_n(0)
/// with the derived parameters r_n = phi_n(0)/k_n, m_n = k_n/k_{n+1},
/// s_n = r_{n+1}/r_n.
class OpucSequence {
 public:
  int n_max() const { return int(coeffs_.size()) - 1; }
  bool hermitian() const { return hermitian_; }

  const Poly& coeffs(int n) const { return coeffs_.at(std::size_t(n)); }
  Complex k(int n) const { return k_.at(std::size_t(n)); }
  Complex phi0(int n) const { return coeffs_.at(std::size_t(n)).front(); }
  Complex l(int n) const {
    const Poly& p = coeffs_.at(std::size_t(n));
    return n >= 1 ? p[p.size() - 2] : Complex(0.0, 0.0);
  }
  /// Squared norm of the monic polynomial under the (bi)linear pairing;
  /// k_n^2 = 1 / h_n.
  Complex monic_norm_sq(int n) const { return h_.at(std::size_t(n)); }

  Complex r(int n) const { return r_.at(std::size_t(n)); }
  Complex m(int n) const { return k(n) / k(n + 1); }
  Complex s(int n) const {
    Complex rn = r(n);
    if (rn == Complex(0.0, 0.0)) {
      throw std::domain_error("OpucSequence: s_n undefined, r_n = 0");
    }
    return r(n + 1) / rn;
  }

  friend OpucSequence opuc_solve(const MomentSequence&, int);

 private:
  bool hermitian_ = true;
  std::vector<Poly> coeffs_;      // orthonormal phi_n, ascending powers
  std::vector<Complex> k_;        // leading coefficients
  std::vector<Complex> h_;        // monic squared norms
  std::vector<Complex> r_;        // monic constant terms Phi_n(0)
};

/// Builds phi_0..phi_{n_max} by solving the Gram system for the monic
/// polynomial of each degree and normalizing.  For Hermitian weights the
/// squared norm is sum_{j,k} c_j conj(c_k) 2pi w_{k-j} and k_n > 0; for
/// complex weights the conjugation is dropped (formal bilinear pairing) and
/// the square root branch is chosen continuous in n with k_0 = 1.
inline OpucSequence opuc_solve(const MomentSequence& moments, int n_max) {
  if (moments.max_order() < n_max) {
    throw std::out_of_range("opuc_solve: moments cover |m| <= n_max");
  }
  const bool herm = moments.hermitian();
  OpucSequence seq;
  seq.hermitian_ = herm;

  std::vector<Poly> monic(std::size_t(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    Poly& c = monic[std::size_t(n)];
    c.assign(std::size_t(n) + 1, Complex(0.0, 0.0));
    c[std::size_t(n)] = 1.0;
    if (n > 0) {
      // <Phi_n, z^k> = 0 for k < n:
      //   sum_{j<n} c_j w_{k-j} = -w_{k-n},  k = 0..n-1.
      DenseMatrix<Complex> g(n);
      std::vector<Complex> rhs(std::size_t(n), Complex(0.0, 0.0));
      for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) g.at(k, j) = moments(k - j);
        rhs[std::size_t(k)] = -moments(k - n);
      }
      std::vector<Complex> sol;
      try {
        sol = lu_solve(g, rhs);
      } catch (const DegenerateWeightError&) {
        throw DegenerateWeightError(
            "opuc_solve: vanishing leading principal minor at degree " +
                std::to_string(n),
            n);
      }
      for (int j = 0; j < n; ++j) c[std::size_t(j)] = sol[std::size_t(j)];
    }

    // Squared norm h_n of the monic polynomial.
    Complex h(0.0, 0.0);
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= n; ++k) {
        Complex ck = herm ? std::conj(c[std::size_t(k)]) : c[std::size_t(k)];
        h += c[std::size_t(j)] * ck * kTwoPi * moments(k - j);
      }
    }
    if (herm) {
      if (!(h.real() > 0.0) || std::abs(h.imag()) > 1e-8 * h.real()) {
        throw DegenerateWeightError(
            "opuc_solve: nonpositive norm at degree " + std::to_string(n), n);
      }
      h = Complex(h.real(), 0.0);
    } else if (std::abs(h) == 0.0) {
      throw DegenerateWeightError(
          "opuc_solve: vanishing norm at degree " + std::to_string(n), n);
    }
    seq.h_.push_back(h);

    Complex k = 1.0 / std::sqrt(h);
    if (herm) {
      k = Complex(std::abs(k), 0.0);
    } else if (n > 0) {
      // keep the branch continuous in n (k_0 = 1)
      Complex prev = seq.k_.back();
      if ((k * std::conj(prev)).real() < 0.0) k = -k;
    }
    seq.k_.push_back(k);
    seq.r_.push_back(c[0]);
    seq.coeffs_.push_back(poly_scale(c, k));
  }
  return seq;
}

/// Determinant through the product formula Delta_n = prod_j 1/(2pi k_j^2),
/// using the monic norms directly (1/(2pi k_j^2) = h_j / 2pi).
inline Complex delta_product(const OpucSequence& seq, int n) {
  if (n > seq.n_max() + 1) {
    throw std::out_of_range("delta_product: sequence too short");
  }
  Complex prod(1.0, 0.0);
  for (int j = 0; j < n; ++j) prod *= seq.monic_norm_sq(j) / kTwoPi;
  return prod;
}

/// The * operation on the coefficients of phi_n; the conjugation follows
/// the weight's pairing convention.
inline Poly star(const OpucSequence& seq, int n) {
  return poly_star(seq.coeffs(n), seq.hermitian());
}

/// Residuals of the Szego recurrences and the l_n difference equation,
/// evaluated coefficient-wise and at sample points on |z| = 1:
///
///   k_n z phi_n       = k_{n+1} phi_{n+1} - phi_{n+1}(0) phi*_{n+1}
///   k_n phi_{n+1}     = k_{n+1} z phi_n + phi_{n+1}(0) phi*_n
///   k_n phi_n(0) phi_{n+1} + k_{n-1} phi_{n+1}(0) z phi_{n-1}
///        = (k_n phi_{n+1}(0) + k_{n+1} phi_n(0) z) phi_n
///   l_{n+1}/k_{n+1}   = l_n/k_n + cc(phi_n(0)/k_n) phi_{n+1}(0)/k_{n+1}
///
/// cc is conjugation for Hermitian weights and the identity otherwise.
inline ResidualReport check_recurrences(const OpucSequence& seq, int n,
                                        double tol = 1e-10) {
  if (n < 1 || n + 1 > seq.n_max()) {
    throw std::out_of_range("check_recurrences: need indices n-1..n+1");
  }
  ResidualReport report;
  const bool herm = seq.hermitian();
  auto cc = [herm](Complex v) { return herm ? std::conj(v) : v; };

  const Poly& pn = seq.coeffs(n);
  const Poly& pn1 = seq.coeffs(n + 1);
  const Poly& pm1 = seq.coeffs(n - 1);
  Complex kn = seq.k(n), kn1 = seq.k(n + 1), km1 = seq.k(n - 1);
  Complex f0n = seq.phi0(n), f0n1 = seq.phi0(n + 1);

  auto add_poly_check = [&](const char* name, const Poly& lhs,
                            const Poly& rhs) {
    Poly diff = poly_sub(lhs, rhs);
    double scale = std::max(poly_max_abs(lhs), poly_max_abs(rhs));
    report.add(std::string(name) + " (coefficients)", n, std::nullopt,
               poly_max_abs(diff), scale, tol);
    for (int j = 0; j < 8; ++j) {
      Complex z = std::polar(1.0, kTwoPi * (j + 0.37) / 8.0);
      double abs_resid = std::abs(poly_eval(lhs, z) - poly_eval(rhs, z));
      double pscale = std::max(std::abs(poly_eval(lhs, z)),
                               std::abs(poly_eval(rhs, z)));
      report.add(std::string(name) + " (on circle)", n, z, abs_resid,
                 std::max(pscale, scale), tol);
    }
  };

  // k_n z phi_n = k_{n+1} phi_{n+1} - phi_{n+1}(0) phi*_{n+1}
  add_poly_check("szego down", poly_scale(poly_mul_z(pn), kn),
                 poly_sub(poly_scale(pn1, kn1),
                          poly_scale(poly_star(pn1, herm), f0n1)));

  // k_n phi_{n+1} = k_{n+1} z phi_n + phi_{n+1}(0) phi*_n
  add_poly_check("szego up", poly_scale(pn1, kn),
                 poly_add(poly_scale(poly_mul_z(pn), kn1),
                          poly_scale(poly_star(pn, herm), f0n1)));

  // three-term relation (phi*_n eliminated)
  {
    Poly lhs = poly_add(poly_scale(pn1, kn * f0n),
                        poly_scale(poly_mul_z(pm1), km1 * f0n1));
    Poly rhs = poly_add(poly_scale(pn, kn * f0n1),
                        poly_scale(poly_mul_z(pn), kn1 * f0n));
    add_poly_check("three term", lhs, rhs);
  }

  // l_{n+1}/k_{n+1} = l_n/k_n + cc(phi_n(0)/k_n) phi_{n+1}(0)/k_{n+1}
  {
    Complex lhs = seq.l(n + 1) / kn1;
    Complex rhs = seq.l(n) / kn + cc(f0n / kn) * (f0n1 / kn1);
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    report.add("l recursion", n, std::nullopt, std::abs(lhs - rhs), scale,
               tol);
  }
  return report;
}

}  // namespace opuc
