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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace trustac {

using DomainId = std::string;
using ResourceId = std::string;

// Event-counter time. Certificates and epochs are driven by this, never by
// the wall clock.
using LogicalTime = std::uint64_t;

// An entity is identified by its home domain plus a name unique within it.
// Textual form is "domain:name".
class EntityId {
 public:
  EntityId(DomainId domain, std::string name);

  static EntityId parse(std::string_view text);

  const DomainId& domain() const noexcept { return domain_; }
  const std::string& name() const noexcept { return name_; }
  std::string str() const { return domain_ + ":" + name_; }

  auto operator<=>(const EntityId&) const = default;

 private:
  DomainId domain_;
  std::string name_;
};

class RoleId {
 public:
  RoleId(DomainId domain, std::string name);

  static RoleId parse(std::string_view text);

  const DomainId& domain() const noexcept { return domain_; }
  const std::string& name() const noexcept { return name_; }
  std::string str() const { return domain_ + ":" + name_; }

  auto operator<=>(const RoleId&) const = default;

 private:
  DomainId domain_;
  std::string name_;
};

// An access point: a named operation on a resource.
class PermissionId {
 public:
  PermissionId(std::string name, ResourceId resource);

  const std::string& name() const noexcept { return name_; }
  const ResourceId& resource() const noexcept { return resource_; }
  std::string str() const { return name_ + "@" + resource_; }

  auto operator<=>(const PermissionId&) const = default;

 private:
  std::string name_;
  ResourceId resource_;
};

// A single interaction assessment, strictly inside (-1, 1). Values at the
// bounds are rejected, not clamped.
class ExperienceRating {
 public:
  explicit ExperienceRating(double value);

  double value() const noexcept { return value_; }

 private:
  double value_;
};

bool is_valid_rating(double value) noexcept;

}  // namespace trustac
