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

#include <optional>
#include <string>
#include <vector>

#include "opuc/common.hpp"

namespace opuc {

/// One identity-check residual.  `absolute` is |lhs - rhs|; `relative` is
/// the same scaled by the largest term magnitude entering the identity.
/// Pass/fail is decided on the relative form.
struct ResidualEntry {
  std::string identity;
  int n = 0;
  std::optional<Complex> point;  // sample point, when the check is pointwise
  double absolute = 0.0;
  double relative = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

class ResidualReport {
 public:
  void add(std::string identity, int n, std::optional<Complex> point,
           double absolute, double scale, double tolerance) {
    ResidualEntry e;
    e.identity = std::move(identity);
    e.n = n;
    e.point = point;
    e.absolute = absolute;
    e.relative = scale > 0.0 ? absolute / scale : absolute;
    e.tolerance = tolerance;
    e.pass = e.relative <= tolerance;
    entries_.push_back(std::move(e));
  }

  void merge(const ResidualReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(),
                    other.entries_.end());
  }

  const std::vector<ResidualEntry>& entries() const { return entries_; }

  bool all_pass() const {
    for (const auto& e : entries_) {
      if (!e.pass) return false;
    }
    return true;
  }

  double max_relative() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, e.relative);
    return m;
  }

  double max_relative(const std::string& identity) const {
    double m = 0.0;
    for (const auto& e : entries_) {
      if (e.identity == identity) m = std::max(m, e.relative);
    }
    return m;
  }

 private:
  std::vector<ResidualEntry> entries_;
};

}  // namespace opuc
