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


#include "trustac/types.hpp"

#include <cmath>

#include "trustac/error.hpp"

namespace trustac {

namespace {

std::pair<std::string, std::string> split_qualified(std::string_view text, const char* what) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("expected <domain>:<name> for ") + what + ", got '" +
                    std::string(text) + "'");
  }
  return {std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
}

}  // namespace

EntityId::EntityId(DomainId domain, std::string name)
    : domain_(std::move(domain)), name_(std::move(name)) {
  if (domain_.empty() || name_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "entity id needs a domain and a non-empty name");
  }
}

EntityId EntityId::parse(std::string_view text) {
  auto [domain, name] = split_qualified(text, "entity");
  return EntityId(std::move(domain), std::move(name));
}

RoleId::RoleId(DomainId domain, std::string name)
    : domain_(std::move(domain)), name_(std::move(name)) {
  if (domain_.empty() || name_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "role id needs a domain and a non-empty name");
  }
}

RoleId RoleId::parse(std::string_view text) {
  auto [domain, name] = split_qualified(text, "role");
  return RoleId(std::move(domain), std::move(name));
}

PermissionId::PermissionId(std::string name, ResourceId resource)
    : name_(std::move(name)), resource_(std::move(resource)) {
  if (name_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "permission name must be non-empty");
  }
}

bool is_valid_rating(double value) noexcept {
  return std::isfinite(value) && value > -1.0 && value < 1.0;
}

ExperienceRating::ExperienceRating(double value) : value_(value) {
  if (!is_valid_rating(value)) {
    throw Error(ErrorCode::kRatingOutOfRange,
                "experience rating must lie strictly inside (-1, 1), got " + std::to_string(value));
  }
}

}  // namespace trustac
