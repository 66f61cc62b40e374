// Copyright 2026 The dilkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dilkit/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace dilkit {

VerificationReport& VerificationReport::add(std::string name, double value,
                                            double threshold, bool gating) {
  residuals_.push_back({std::move(name), value, threshold, gating});
  return *this;
}

VerificationReport& VerificationReport::add_witness(std::string name,
                                                    Matrix m) {
  witnesses_.emplace_back(std::move(name), std::move(m));
  return *this;
}

VerificationReport& VerificationReport::add_note(std::string note) {
  notes_.push_back(std::move(note));
  return *this;
}

VerificationReport& VerificationReport::merge(const VerificationReport& other,
                                              const std::string& prefix,
                                              bool gating) {
  for (const auto& r : other.residuals_)
    residuals_.push_back(
        {prefix + r.name, r.value, r.threshold, gating && r.gating});
  for (const auto& w : other.witnesses_)
    witnesses_.emplace_back(prefix + w.first, w.second);
  for (const auto& n : other.notes_) notes_.push_back(prefix + n);
  return *this;
}

bool VerificationReport::pass() const {
  return std::all_of(residuals_.begin(), residuals_.end(),
                     [](const Residual& r) { return !r.gating || r.passed(); });
}

const Residual* VerificationReport::find(const std::string& name) const {
  for (const auto& r : residuals_)
    if (r.name == name) return &r;
  return nullptr;
}

double VerificationReport::value(const std::string& name) const {
  if (const Residual* r = find(name)) return r->value;
  throw std::out_of_range("no residual named " + name);
}

std::optional<Residual> VerificationReport::worst_failure() const {
  std::optional<Residual> worst;
  double worst_ratio = 0.0;
  for (const auto& r : residuals_) {
    if (!r.gating || r.passed()) continue;
    const double ratio = r.value / r.threshold;
    if (!worst || ratio > worst_ratio) {
      worst = r;
      worst_ratio = ratio;
    }
  }
  return worst;
}

}  // namespace dilkit
