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

#ifndef DILKIT_ERRORS_HPP_
#define DILKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dilkit {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong shapes, non-finite entries, broken type invariants.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

class ResourceError : public InputError {
 public:
  using InputError::InputError;
};

class RankError : public InputError {
 public:
  using InputError::InputError;
};

// A supplied object was checked and does not have the requested property.
// Carries the offending residual so callers can report it as a witness.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, std::string residual_name,
                    double residual, double threshold)
      : Error(what),
        residual_name_(std::move(residual_name)),
        residual_(residual),
        threshold_(threshold) {}

  const std::string& residual_name() const noexcept { return residual_name_; }
  double residual() const noexcept { return residual_; }
  double threshold() const noexcept { return threshold_; }

 private:
  std::string residual_name_;
  double residual_;
  double threshold_;
};

class DegeneracyError : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class NotEquilibratingError : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class NotThermalError : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class NotRobustError : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class NotCatalyticUnitaryError : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class NotDualUnitaryError : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

// A construction failed its own post-check. Indicates a bug, not bad input.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace dilkit

#endif  // DILKIT_ERRORS_HPP_
