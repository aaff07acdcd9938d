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


#include "trustac/role_model.hpp"

#include <algorithm>
#include <functional>

#include "trustac/error.hpp"

namespace trustac {

std::string_view to_string(HierarchyViolationKind kind) {
  switch (kind) {
    case HierarchyViolationKind::kCycle: return "cycle";
    case HierarchyViolationKind::kDanglingEdge: return "dangling-edge";
    case HierarchyViolationKind::kMissingGuest: return "missing-guest";
    case HierarchyViolationKind::kGuestNotMinimal: return "guest-not-minimal";
  }
  return "unknown";
}

RoleHierarchy::RoleHierarchy(DomainId domain) : domain_(std::move(domain)) {}

void RoleHierarchy::add_role(const std::string& name, const std::set<std::string>& parents,
                             std::set<PermissionId> permissions) {
  if (name.empty()) throw Error(ErrorCode::kInvalidArgument, "role name must be non-empty");
  if (nodes_.contains(name)) {
    throw Error(ErrorCode::kDuplicateRole, domain_ + ":" + name + " already exists");
  }
  for (const auto& p : parents) {
    if (!nodes_.contains(p)) {
      throw Error(ErrorCode::kUnknownParent, domain_ + ":" + p + " is not a role of " + domain_);
    }
  }
  Node& n = nodes_[name];
  n.permissions = std::move(permissions);
  for (const auto& p : parents) {
    n.parents.insert(p);
    nodes_[p].children.insert(name);
  }

  for (auto it = dangling_.begin(); it != dangling_.end();) {
    const auto& [parent, child] = *it;
    if (nodes_.contains(parent) && nodes_.contains(child)) {
      nodes_[parent].children.insert(child);
      nodes_[child].parents.insert(parent);
      it = dangling_.erase(it);
    } else {
      ++it;
    }
  }
}

void RoleHierarchy::add_edge(const std::string& parent, const std::string& child) {
  if (nodes_.contains(parent) && nodes_.contains(child)) {
    nodes_[parent].children.insert(child);
    nodes_[child].parents.insert(parent);
  } else {
    dangling_.emplace(parent, child);
  }
}

void RoleHierarchy::grant(const std::string& role, PermissionId permission) {
  const auto it = nodes_.find(role);
  if (it == nodes_.end()) {
    throw Error(ErrorCode::kUnknownRole, domain_ + ":" + role + " is not a role of " + domain_);
  }
  it->second.permissions.insert(std::move(permission));
}

void RoleHierarchy::set_guest(const std::string& name) { guest_ = name; }

bool RoleHierarchy::contains(const RoleId& role) const {
  return role.domain() == domain_ && nodes_.contains(role.name());
}

std::vector<RoleId> RoleHierarchy::roles() const {
  std::vector<RoleId> out;
  out.reserve(nodes_.size());
  for (const auto& [name, _] : nodes_) out.emplace_back(domain_, name);
  return out;
}

std::optional<RoleId> RoleHierarchy::guest() const {
  if (!guest_ || !nodes_.contains(*guest_)) return std::nullopt;
  return RoleId(domain_, *guest_);
}

RoleId RoleHierarchy::role(const std::string& name) const {
  if (!nodes_.contains(name)) {
    throw Error(ErrorCode::kUnknownRole, domain_ + ":" + name + " is not a role of " + domain_);
  }
  return RoleId(domain_, name);
}

const RoleHierarchy::Node& RoleHierarchy::node(const RoleId& role) const {
  if (role.domain() != domain_) {
    throw Error(ErrorCode::kUnknownRole, role.str() + " is not a role of " + domain_);
  }
  const auto it = nodes_.find(role.name());
  if (it == nodes_.end()) {
    throw Error(ErrorCode::kUnknownRole, role.str() + " is not a role of " + domain_);
  }
  return it->second;
}

std::set<RoleId> RoleHierarchy::descendants(const RoleId& role) const {
  node(role);
  std::set<std::string> seen{role.name()};
  std::vector<std::string> stack{role.name()};
  while (!stack.empty()) {
    const std::string cur = std::move(stack.back());
    stack.pop_back();
    for (const auto& c : nodes_.at(cur).children) {
      if (seen.insert(c).second) stack.push_back(c);
    }
  }
  std::set<RoleId> out;
  for (const auto& n : seen) out.emplace(domain_, n);
  return out;
}

bool RoleHierarchy::is_ancestor(const RoleId& senior, const RoleId& junior) const {
  node(junior);
  return descendants(senior).contains(junior);
}

std::set<RoleId> RoleHierarchy::children(const RoleId& role) const {
  std::set<RoleId> out;
  for (const auto& c : node(role).children) out.emplace(domain_, c);
  return out;
}

std::set<RoleId> RoleHierarchy::parents(const RoleId& role) const {
  std::set<RoleId> out;
  for (const auto& p : node(role).parents) out.emplace(domain_, p);
  return out;
}

const std::set<PermissionId>& RoleHierarchy::own_permissions(const RoleId& role) const {
  return node(role).permissions;
}

std::set<PermissionId> RoleHierarchy::effective_permissions(const RoleId& role) const {
  std::set<PermissionId> out;
  for (const auto& d : descendants(role)) {
    const auto& own = nodes_.at(d.name()).permissions;
    out.insert(own.begin(), own.end());
  }
  return out;
}

std::vector<HierarchyViolation> RoleHierarchy::validate() const {
  std::vector<HierarchyViolation> out;

  for (const auto& [parent, child] : dangling_) {
    out.push_back({HierarchyViolationKind::kDanglingEdge,
                   domain_ + ": edge " + parent + " -> " + child + " references a missing role"});
  }

  // Tarjan: one violation per strongly connected component that contains a
  // cycle (size > 1, or a self-loop).
  std::map<std::string, int> index, low;
  std::set<std::string> on_stack;
  std::vector<std::string> stack;
  int counter = 0;
  std::function<void(const std::string&)> connect = [&](const std::string& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    for (const auto& w : nodes_.at(v).children) {
      if (!index.contains(w)) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack.contains(w)) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::string> component;
      std::string w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        component.push_back(w);
      } while (w != v);
      const bool self_loop = nodes_.at(v).children.contains(v);
      if (component.size() > 1 || self_loop) {
        std::sort(component.begin(), component.end());
        std::string members;
        for (const auto& m : component) members += (members.empty() ? "" : ", ") + m;
        out.push_back({HierarchyViolationKind::kCycle, domain_ + ": cycle among {" + members + "}"});
      }
    }
  };
  for (const auto& [name, _] : nodes_) {
    if (!index.contains(name)) connect(name);
  }

  if (!nodes_.empty()) {
    if (!guest_) {
      out.push_back({HierarchyViolationKind::kMissingGuest, domain_ + ": no guest role designated"});
    } else if (!nodes_.contains(*guest_)) {
      out.push_back({HierarchyViolationKind::kMissingGuest,
                     domain_ + ": guest role " + *guest_ + " is not a member"});
    } else if (!nodes_.at(*guest_).children.empty()) {
      out.push_back({HierarchyViolationKind::kGuestNotMinimal,
                     domain_ + ": guest role " + *guest_ + " has junior roles"});
    }
  } else if (guest_) {
    out.push_back({HierarchyViolationKind::kMissingGuest,
                   domain_ + ": guest role " + *guest_ + " is not a member"});
  }
  return out;
}

}  // namespace trustac
