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


#include "trustac/error.hpp"

namespace trustac {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnknownEntity: return "UnknownEntity";
    case ErrorCode::kUnknownRole: return "UnknownRole";
    case ErrorCode::kUnknownDomain: return "UnknownDomain";
    case ErrorCode::kUnknownResource: return "UnknownResource";
    case ErrorCode::kSelfRating: return "SelfRating";
    case ErrorCode::kRatingOutOfRange: return "RatingOutOfRange";
    case ErrorCode::kMixedDomains: return "MixedDomains";
    case ErrorCode::kAllWeightsZero: return "AllWeightsZero";
    case ErrorCode::kDuplicateRole: return "DuplicateRole";
    case ErrorCode::kUnknownParent: return "UnknownParent";
    case ErrorCode::kDuplicateEntity: return "DuplicateEntity";
    case ErrorCode::kDuplicateDomain: return "DuplicateDomain";
    case ErrorCode::kBadSecret: return "BadSecret";
    case ErrorCode::kNotAuthenticated: return "NotAuthenticated";
    case ErrorCode::kRoleNotGranted: return "RoleNotGranted";
    case ErrorCode::kRoleNotHeld: return "RoleNotHeld";
    case ErrorCode::kNoPriorInteraction: return "NoPriorInteraction";
    case ErrorCode::kNotPermitted: return "NotPermitted";
    case ErrorCode::kInvalidScenario: return "InvalidScenario";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace trustac
