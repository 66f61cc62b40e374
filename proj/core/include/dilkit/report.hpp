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

#ifndef DILKIT_REPORT_HPP_
#define DILKIT_REPORT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dilkit/linalg.hpp"

namespace dilkit {

struct Residual {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  // Non-gating residuals are diagnostics and do not affect pass().
  bool gating = true;

  bool passed() const { return value < threshold; }
};

// Named residuals plus optional witness matrices. Verifiers never reduce to a
// bare boolean; the numbers are kept for diagnostics and certificates.
class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string check) : check_(std::move(check)) {}

  const std::string& check() const { return check_; }

  VerificationReport& add(std::string name, double value, double threshold,
                          bool gating = true);
  VerificationReport& add_witness(std::string name, Matrix m);
  VerificationReport& add_note(std::string note);
  // Appends another report's residuals, prefixing their names.
  VerificationReport& merge(const VerificationReport& other,
                            const std::string& prefix, bool gating = true);

  bool pass() const;
  const std::vector<Residual>& residuals() const { return residuals_; }
  const std::vector<std::pair<std::string, Matrix>>& witnesses() const {
    return witnesses_;
  }
  const std::vector<std::string>& notes() const { return notes_; }

  // Throws std::out_of_range when absent.
  double value(const std::string& name) const;
  const Residual* find(const std::string& name) const;
  // The gating residual with the largest value/threshold ratio among the
  // failing ones, if any.
  std::optional<Residual> worst_failure() const;

 private:
  std::string check_;
  std::vector<Residual> residuals_;
  std::vector<std::pair<std::string, Matrix>> witnesses_;
  std::vector<std::string> notes_;
};

}  // namespace dilkit

#endif  // DILKIT_REPORT_HPP_
