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

#include "trustac/role_model.hpp"
#include "trustac/types.hpp"

namespace trustac {

enum class CorrelationKind { kTransitive, kNonTransitive };

/// Lets holders of `outer_role` act as `local_role` in the local domain.
/// Transitive correlations are inherited by every strict senior of the outer
/// role; non-transitive ones apply to that exact role only.
struct Correlation {
  RoleId outer_role;
  RoleId local_role;
  CorrelationKind kind = CorrelationKind::kTransitive;

  auto operator<=>(const Correlation&) const = default;
};

enum class PolicyClass { kDefault, kClear, kPartial };

std::string_view to_string(CorrelationKind kind);
std::string_view to_string(PolicyClass policy);

class CorrelationSet {
 public:
  CorrelationSet(DomainId outer_domain, DomainId local_domain);

  const DomainId& outer_domain() const noexcept { return outer_; }
  const DomainId& local_domain() const noexcept { return local_; }
  const std::set<Correlation>& correlations() const noexcept { return correlations_; }

  /// Rejects correlations that do not run outer_domain -> local_domain.
  void add(Correlation c);

  /// Cached result of classify_policy(); reset by add().
  std::optional<PolicyClass> classification() const noexcept { return classification_; }
  PolicyClass classify(const RoleHierarchy& outer, const RoleHierarchy& local);

 private:
  DomainId outer_;
  DomainId local_;
  std::set<Correlation> correlations_;
  std::optional<PolicyClass> classification_;
};

/// Default when the only correlation is outer guest -> local guest; Clear when
/// every outer role has a correlation of its own; Partial otherwise.
PolicyClass classify_policy(const CorrelationSet& cs, const RoleHierarchy& outer,
                            const RoleHierarchy& local);

std::set<RoleId> candidate_roles(const RoleId& outer_role, const CorrelationSet& cs,
                                 const RoleHierarchy& outer);

struct ConversionResult {
  std::optional<RoleId> local_role;
  std::set<RoleId> candidates;
  std::optional<Correlation> via;
  bool guest_fallback = false;
  // More than one maximal candidate; the lexicographically smallest name won.
  bool tie_broken = false;
};

/// Converts to the highest local role the correlations allow. When no
/// correlation applies, falls back to the local guest only if an
/// outer-guest -> local-guest correlation exists; otherwise no role.
ConversionResult convert_role(const RoleId& outer_role, const CorrelationSet& cs,
                              const RoleHierarchy& outer, const RoleHierarchy& local);

/// Effective local permissions of every outer role after conversion.
std::map<RoleId, std::set<PermissionId>> build_access_point_list(const CorrelationSet& cs,
                                                                 const RoleHierarchy& outer,
                                                                 const RoleHierarchy& local);

}  // namespace trustac
