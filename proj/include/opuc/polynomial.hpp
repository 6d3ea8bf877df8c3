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

#include <algorithm>
#include <vector>

#include "opuc/common.hpp"

namespace opuc {

/// Polynomials are coefficient vectors in ascending powers of z.
using Poly = std::vector<Complex>;

inline Complex poly_eval(const Poly& p, Complex z) {
  Complex acc(0.0, 0.0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return Poly{Complex(0.0, 0.0)};
  Poly d(p.size() - 1);
  for (std::size_t j = 1; j < p.size(); ++j) d[j - 1] = double(j) * p[j];
  return d;
}

/// The * operation: coefficient a_j of a degree-n polynomial maps to
/// conj(a_{n-j}).  With conjugate=false the reversal is plain, which is the
/// formal variant used for non-Hermitian weights.
inline Poly poly_star(const Poly& p, bool conjugate = true) {
  Poly q(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    Complex a = p[p.size() - 1 - j];
    q[j] = conjugate ? std::conj(a) : a;
  }
  return q;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Complex(0.0, 0.0));
  for (std::size_t j = 0; j < a.size(); ++j) r[j] += a[j];
  for (std::size_t j = 0; j < b.size(); ++j) r[j] += b[j];
  return r;
}

inline Poly poly_scale(const Poly& a, Complex c) {
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  return poly_add(a, poly_scale(b, Complex(-1.0, 0.0)));
}

/// Multiplication by z (shift up by one power).
inline Poly poly_mul_z(const Poly& a) {
  Poly r(a.size() + 1, Complex(0.0, 0.0));
  for (std::size_t j = 0; j < a.size(); ++j) r[j + 1] = a[j];
  return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline double poly_max_abs(const Poly& p) {
  double m = 0.0;
  for (const auto& c : p) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace opuc
