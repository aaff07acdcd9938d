// Copyright 2026 The trustac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trustac {

enum class ErrorCode {
  kInvalidArgument,
  kUnknownEntity,
  kUnknownRole,
  kUnknownDomain,
  kUnknownResource,
  kSelfRating,
  kRatingOutOfRange,
  kMixedDomains,
  kAllWeightsZero,
  kDuplicateRole,
  kUnknownParent,
  kDuplicateEntity,
  kDuplicateDomain,
  kBadSecret,
  kNotAuthenticated,
  kRoleNotGranted,
  kRoleNotHeld,
  kNoPriorInteraction,
  kNotPermitted,
  kInvalidScenario,
};

std::string_view to_string(ErrorCode code);

// All recoverable failures in the library are reported with this type; the
// code is what callers (and the CLI exit-status mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace trustac
