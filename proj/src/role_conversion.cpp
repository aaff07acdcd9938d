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


#include "trustac/role_conversion.hpp"

#include "trustac/error.hpp"

namespace trustac {

std::string_view to_string(CorrelationKind kind) {
  return kind == CorrelationKind::kTransitive ? "transitive" : "non-transitive";
}

std::string_view to_string(PolicyClass policy) {
  switch (policy) {
    case PolicyClass::kDefault: return "Default";
    case PolicyClass::kClear: return "Clear";
    case PolicyClass::kPartial: return "Partial";
  }
  return "Unknown";
}

CorrelationSet::CorrelationSet(DomainId outer_domain, DomainId local_domain)
    : outer_(std::move(outer_domain)), local_(std::move(local_domain)) {
  if (outer_ == local_) {
    throw Error(ErrorCode::kInvalidArgument, "correlations must run between two different domains");
  }
}

void CorrelationSet::add(Correlation c) {
  if (c.outer_role.domain() != outer_ || c.local_role.domain() != local_) {
    throw Error(ErrorCode::kInvalidArgument, "correlation " + c.outer_role.str() + " -> " +
                                                 c.local_role.str() + " does not run " + outer_ +
                                                 " -> " + local_);
  }
  correlations_.insert(std::move(c));
  classification_.reset();
}

PolicyClass CorrelationSet::classify(const RoleHierarchy& outer, const RoleHierarchy& local) {
  classification_ = classify_policy(*this, outer, local);
  return *classification_;
}

namespace {

void check_inputs(const CorrelationSet& cs, const RoleHierarchy& outer, const RoleHierarchy& local) {
  if (outer.domain() != cs.outer_domain() || local.domain() != cs.local_domain()) {
    throw Error(ErrorCode::kInvalidArgument, "hierarchies do not match correlation set " +
                                                 cs.outer_domain() + " -> " + cs.local_domain());
  }
  for (const auto& c : cs.correlations()) {
    if (!outer.contains(c.outer_role)) {
      throw Error(ErrorCode::kUnknownRole, c.outer_role.str() + " is not an outer role");
    }
    if (!local.contains(c.local_role)) {
      throw Error(ErrorCode::kUnknownRole, c.local_role.str() + " is not a local role");
    }
  }
}

std::optional<Correlation> guest_correlation(const CorrelationSet& cs, const RoleHierarchy& outer,
                                             const RoleHierarchy& local) {
  const auto og = outer.guest();
  const auto lg = local.guest();
  if (!og || !lg) return std::nullopt;
  for (const auto& c : cs.correlations()) {
    if (c.outer_role == *og && c.local_role == *lg) return c;
  }
  return std::nullopt;
}

// Does correlation `c` grant its local role to `outer_role`?
bool applies(const Correlation& c, const RoleId& outer_role, const RoleHierarchy& outer) {
  if (c.outer_role == outer_role) return true;
  return c.kind == CorrelationKind::kTransitive && outer.is_strict_ancestor(outer_role, c.outer_role);
}

}  // namespace

PolicyClass classify_policy(const CorrelationSet& cs, const RoleHierarchy& outer,
                            const RoleHierarchy& local) {
  check_inputs(cs, outer, local);
  if (cs.correlations().size() == 1 && guest_correlation(cs, outer, local)) {
    return PolicyClass::kDefault;
  }
  std::set<RoleId> mapped;
  for (const auto& c : cs.correlations()) mapped.insert(c.outer_role);
  for (const auto& r : outer.roles()) {
    if (!mapped.contains(r)) return PolicyClass::kPartial;
  }
  return PolicyClass::kClear;
}

std::set<RoleId> candidate_roles(const RoleId& outer_role, const CorrelationSet& cs,
                                 const RoleHierarchy& outer) {
  if (!outer.contains(outer_role)) {
    throw Error(ErrorCode::kUnknownRole, outer_role.str() + " is not a role of " + outer.domain());
  }
  std::set<RoleId> out;
  for (const auto& c : cs.correlations()) {
    if (applies(c, outer_role, outer)) out.insert(c.local_role);
  }
  return out;
}

ConversionResult convert_role(const RoleId& outer_role, const CorrelationSet& cs,
                              const RoleHierarchy& outer, const RoleHierarchy& local) {
  check_inputs(cs, outer, local);
  ConversionResult result;
  result.candidates = candidate_roles(outer_role, cs, outer);

  if (result.candidates.empty()) {
    if (const auto g = guest_correlation(cs, outer, local)) {
      result.candidates.insert(g->local_role);
      result.local_role = g->local_role;
      result.via = *g;
      result.guest_fallback = true;
    }
    return result;
  }

  // Maximal candidates: nothing else in the set sits strictly above them.
  std::vector<RoleId> maxima;
  for (const auto& c : result.candidates) {
    bool dominated = false;
    for (const auto& other : result.candidates) {
      if (local.is_strict_ancestor(other, c)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maxima.push_back(c);
  }
  // candidates is ordered by (domain, name), so the first maximum has the
  // smallest name.
  result.local_role = maxima.front();
  result.tie_broken = maxima.size() > 1;

  // Prefer a correlation on the exact role over an inherited one.
  std::optional<Correlation> inherited;
  for (const auto& c : cs.correlations()) {
    if (c.local_role != *result.local_role || !applies(c, outer_role, outer)) continue;
    if (c.outer_role == outer_role) {
      result.via = c;
      break;
    }
    if (!inherited) inherited = c;
  }
  if (!result.via) result.via = inherited;
  return result;
}

std::map<RoleId, std::set<PermissionId>> build_access_point_list(const CorrelationSet& cs,
                                                                 const RoleHierarchy& outer,
                                                                 const RoleHierarchy& local) {
  std::map<RoleId, std::set<PermissionId>> out;
  for (const auto& r : outer.roles()) {
    const auto conv = convert_role(r, cs, outer, local);
    out[r] = conv.local_role ? local.effective_permissions(*conv.local_role)
                             : std::set<PermissionId>{};
  }
  return out;
}

}  // namespace trustac
