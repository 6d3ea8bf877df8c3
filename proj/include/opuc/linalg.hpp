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
// Small dense LU with partial pivoting, templated on the scalar so the same
// code serves complex<double> and software floating types.  The matrices in
// this library are tiny (n <= ~40); nothing here is tuned for size.

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "opuc/common.hpp"

namespace opuc {

template <typename Scalar>
class DenseMatrix {
 public:
  DenseMatrix() : n_(0) {}
  explicit DenseMatrix(int n) : n_(n), a_(std::size_t(n) * n, Scalar(0)) {}

  int size() const { return n_; }
  Scalar& at(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
  const Scalar& at(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }

 private:
  int n_;
  std::vector<Scalar> a_;
};

template <typename Scalar>
struct LuResult {
  Scalar det = Scalar(0);
  bool singular = false;
};

namespace detail {

template <typename Scalar>
auto magnitude(const Scalar& x) {
  using std::abs;
  return abs(x);
}

// In-place factorization; returns the pivot permutation and determinant.
template <typename Scalar>
LuResult<Scalar> lu_factor(DenseMatrix<Scalar>& m, std::vector<int>& perm) {
  const int n = m.size();
  perm.resize(std::size_t(n));
  for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
  LuResult<Scalar> res;
  res.det = Scalar(1);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    auto best = magnitude(m.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      auto cand = magnitude(m.at(r, col));
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best == decltype(best)(0)) {
      res.det = Scalar(0);
      res.singular = true;
      return res;
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      std::swap(perm[std::size_t(pivot)], perm[std::size_t(col)]);
      res.det = -res.det;
    }
    res.det *= m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      Scalar f = m.at(r, col) / m.at(col, col);
      m.at(r, col) = f;
      for (int j = col + 1; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return res;
}

}  // namespace detail

/// Determinant via LU with partial pivoting.  An exactly-zero pivot sets
/// the singular flag and a zero determinant.
template <typename Scalar>
LuResult<Scalar> lu_det(DenseMatrix<Scalar> m) {
  std::vector<int> perm;
  return detail::lu_factor(m, perm);
}

/// Solves m x = b.  Throws DegenerateWeightError on an exactly singular
/// matrix (callers solve Gram systems whose minors the spec assumes
/// nonzero).
template <typename Scalar>
std::vector<Scalar> lu_solve(DenseMatrix<Scalar> m,
                             const std::vector<Scalar>& b) {
  const int n = m.size();
  std::vector<int> perm;
  auto lu = detail::lu_factor(m, perm);
  if (lu.singular) {
    throw DegenerateWeightError("lu_solve: singular matrix", n);
  }
  std::vector<Scalar> x(b.size());
  for (int i = 0; i < n; ++i) x[std::size_t(i)] = b[std::size_t(perm[std::size_t(i)])];
  // forward substitution (unit lower triangular)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) x[std::size_t(i)] -= m.at(i, j) * x[std::size_t(j)];
  }
  // back substitution
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[std::size_t(i)] -= m.at(i, j) * x[std::size_t(j)];
    x[std::size_t(i)] /= m.at(i, i);
  }
  return x;
}

}  // namespace opuc
