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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trustac/types.hpp"

namespace trustac {

enum class HierarchyViolationKind {
  kCycle,
  kDanglingEdge,
  kMissingGuest,
  kGuestNotMinimal,
};

struct HierarchyViolation {
  HierarchyViolationKind kind;
  std::string detail;
};

std::string_view to_string(HierarchyViolationKind kind);

/// Seniority graph of one domain's roles. An edge parent -> child means the
/// parent is senior; a >= b holds when b is reachable from a (or a == b).
/// Seniors inherit every permission of their juniors.
///
/// add_role() keeps the graph acyclic by construction. add_edge() does not,
/// so hierarchies loaded from configuration should go through validate().
class RoleHierarchy {
 public:
  explicit RoleHierarchy(DomainId domain);

  const DomainId& domain() const noexcept { return domain_; }

  void add_role(const std::string& name, const std::set<std::string>& parents = {},
                std::set<PermissionId> permissions = {});
  /// Unchecked edge insertion. Endpoints are not required to exist.
  void add_edge(const std::string& parent, const std::string& child);
  void grant(const std::string& role, PermissionId permission);
  void set_guest(const std::string& name);

  bool contains(const RoleId& role) const;
  bool contains(const std::string& name) const { return nodes_.contains(name); }
  std::vector<RoleId> roles() const;
  std::optional<RoleId> guest() const;
  std::size_t size() const noexcept { return nodes_.size(); }

  RoleId role(const std::string& name) const;

  /// Reflexive: is_ancestor(x, x) is true.
  bool is_ancestor(const RoleId& senior, const RoleId& junior) const;
  bool is_strict_ancestor(const RoleId& senior, const RoleId& junior) const {
    return senior != junior && is_ancestor(senior, junior);
  }

  /// Roles reachable downward from `role`, including itself.
  std::set<RoleId> descendants(const RoleId& role) const;
  std::set<RoleId> children(const RoleId& role) const;
  std::set<RoleId> parents(const RoleId& role) const;

  const std::set<PermissionId>& own_permissions(const RoleId& role) const;
  std::set<PermissionId> effective_permissions(const RoleId& role) const;

  std::vector<HierarchyViolation> validate() const;

 private:
  struct Node {
    std::set<std::string> children;
    std::set<std::string> parents;
    std::set<PermissionId> permissions;
  };

  const Node& node(const RoleId& role) const;

  DomainId domain_;
  std::map<std::string, Node> nodes_;
  // Edges whose endpoints were not members at insertion time.
  std::set<std::pair<std::string, std::string>> dangling_;
  std::optional<std::string> guest_;
};

}  // namespace trustac
