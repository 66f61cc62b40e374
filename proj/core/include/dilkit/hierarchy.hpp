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

/**
 * @file hierarchy.hpp
 * @brief Certificate-based placement of a channel in the chain
 *   mixed-unitary < catalytic < equilibrating-and-unital < factorizable
 *   < doubly-stochastic.
 *
 * Membership is only claimed with a verified certificate attached. Only
 * unitality is decided outright; a failure there rules out every class.
 */
#ifndef DILKIT_HIERARCHY_HPP_
#define DILKIT_HIERARCHY_HPP_

#include <array>
#include <optional>
#include <string_view>

#include "dilkit/channel.hpp"
#include "dilkit/report.hpp"

namespace dilkit {

// Ordered from smallest to largest class.
enum class ChannelClass {
  kMixedUnitary = 0,
  kCatalytic = 1,
  kEquilibratingUnital = 2,  // = strongly factorizable
  kFactorizable = 3,
  kDoublyStochastic = 4,
};
inline constexpr int kNumClasses = 5;

enum class Membership { kCertifiedIn, kCertifiedOut, kUnknown };

std::string_view to_string(ChannelClass c);
std::string_view to_string(Membership m);

struct ClassStatus {
  Membership status = Membership::kUnknown;
  VerificationReport certificate;
};

class HierarchyReport {
 public:
  // Throws InternalConsistencyError if the statuses are not monotone along
  // the chain.
  explicit HierarchyReport(std::array<ClassStatus, kNumClasses> classes);

  const ClassStatus& operator[](ChannelClass c) const {
    return classes_[static_cast<int>(c)];
  }
  const std::array<ClassStatus, kNumClasses>& classes() const {
    return classes_;
  }

  static bool is_monotone(const std::array<ClassStatus, kNumClasses>& c);

 private:
  std::array<ClassStatus, kNumClasses> classes_;
};

struct Certificates {
  std::optional<MixedUnitaryDecomposition> mixed_unitary;
  std::optional<Dilation> catalytic;
  // Any dilation with [U, 1 (x) env] = 0.
  std::optional<Dilation> equilibrating;
};

// Throws ValidationError for malformed certificates and DimensionError for
// non-square channels.
HierarchyReport classify(const ChannelChoi& channel,
                         const Certificates& certificates,
                         const Tolerance& tol = {});

}  // namespace dilkit

#endif  // DILKIT_HIERARCHY_HPP_
