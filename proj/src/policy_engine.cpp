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


#include "trustac/policy_engine.hpp"

#include <sodium.h>

#include <algorithm>
#include <cmath>

#include "format.hpp"
#include "trustac/error.hpp"

namespace trustac {

using detail::short_real;

std::string_view to_string(Outcome outcome) {
  return outcome == Outcome::kPermit ? "Permit" : "Deny";
}

std::string_view to_string(DenyReason reason) {
  switch (reason) {
    case DenyReason::kBelowTrustThreshold: return "BelowTrustThreshold";
    case DenyReason::kNoPermission: return "NoPermission";
    case DenyReason::kAuthenticationFailed: return "AuthenticationFailed";
    case DenyReason::kNoConversion: return "NoConversion";
    case DenyReason::kInterDomainDistrust: return "InterDomainDistrust";
  }
  return "Unknown";
}

std::string_view stage_label(PipelineStage stage) {
  switch (stage) {
    case PipelineStage::kEnforcementReceive: return "b:pep-receive";
    case PipelineStage::kInformationRequest: return "c:pdp-to-pip";
    case PipelineStage::kTrustLookup: return "d:tmp-trust";
    case PipelineStage::kDecision: return "e:pdp-decide";
    case PipelineStage::kEnforcementRespond: return "f:pep-respond";
  }
  return "?";
}

double PolicyDatabase::threshold_for(const ResourceId& resource) const {
  const auto it = resource_thresholds.find(resource);
  return it == resource_thresholds.end() ? permit_threshold : it->second;
}

std::vector<std::string> PolicyDatabase::violations() const {
  std::vector<std::string> out = trust.violations();
  for (auto& v : cross.violations()) out.push_back(std::move(v));
  const auto in_range = [](double v) { return std::isfinite(v) && v >= -1.0 && v <= 1.0; };
  if (!in_range(permit_threshold)) out.push_back("permit_threshold must lie in [-1, 1]");
  for (const auto& [resource, t] : resource_thresholds) {
    if (!in_range(t)) out.push_back("threshold for resource " + resource + " must lie in [-1, 1]");
  }
  if (certificate_ttl == 0) out.push_back("certificate_ttl must be positive");
  return out;
}

AccessControlCenter::AccessControlCenter(RoleHierarchy hierarchy, PolicyDatabase policy,
                                         std::string_view signing_key)
    : hierarchy_(std::move(hierarchy)),
      policy_(std::move(policy)),
      ledger_(hierarchy_.domain(), policy_.trust),
      authority_(hierarchy_.domain(), signing_key) {
  if (const auto bad = policy_.violations(); !bad.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "policy of " + domain() + ": " + bad.front());
  }
}

void AccessControlCenter::register_entity(const EntityId& entity, std::string secret) {
  if (entity.domain() != domain()) {
    throw Error(ErrorCode::kInvalidArgument, entity.str() + " is not a member of " + domain());
  }
  if (secret.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "secret for " + entity.str() + " must be non-empty");
  }
  if (secrets_.contains(entity)) {
    throw Error(ErrorCode::kDuplicateEntity, entity.str() + " already registered");
  }
  secrets_.emplace(entity, std::move(secret));
  ledger_.register_entity(entity);
}

void AccessControlCenter::admit_visitor(const EntityId& entity) { ledger_.register_entity(entity); }

void AccessControlCenter::register_resource(const ResourceId& resource, const EntityId& owner) {
  require_member(owner);
  owners_.insert_or_assign(resource, owner);
}

std::optional<EntityId> AccessControlCenter::resource_owner(const ResourceId& resource) const {
  const auto it = owners_.find(resource);
  if (it == owners_.end()) return std::nullopt;
  return it->second;
}

void AccessControlCenter::require_member(const EntityId& entity) const {
  if (!secrets_.contains(entity)) {
    throw Error(ErrorCode::kUnknownEntity, entity.str() + " is not registered in " + domain());
  }
}

RoleGrant AccessControlCenter::assign_role(const EntityId& entity, const RoleId& role) {
  require_member(entity);
  if (!hierarchy_.contains(role)) {
    throw Error(ErrorCode::kUnknownRole, role.str() + " is not a role of " + domain());
  }
  const bool fresh = grants_[entity].insert(role).second;
  return RoleGrant{entity, role, fresh};
}

bool AccessControlCenter::holds_role(const EntityId& entity, const RoleId& role) const {
  const auto it = grants_.find(entity);
  return it != grants_.end() && it->second.contains(role);
}

std::set<RoleId> AccessControlCenter::roles_of(const EntityId& entity) const {
  const auto it = grants_.find(entity);
  return it == grants_.end() ? std::set<RoleId>{} : it->second;
}

SessionToken AccessControlCenter::authenticate(const Credential& cred) {
  require_member(cred.entity);
  const std::string& stored = secrets_.at(cred.entity);
  const bool match = stored.size() == cred.secret.size() &&
                     sodium_memcmp(stored.data(), cred.secret.data(), stored.size()) == 0;
  if (!match) {
    throw Error(ErrorCode::kBadSecret, "credential rejected for " + cred.entity.str());
  }
  const std::uint64_t serial = next_session_++;
  sessions_[cred.entity] = serial;
  return SessionToken{cred.entity, serial};
}

Decision AccessControlCenter::judge(const RoleId& role, const ResourceId& resource, double trust,
                                    const std::string& request_id) const {
  Decision d{request_id, Outcome::kDeny, std::nullopt, trust};
  const auto perms = hierarchy_.effective_permissions(role);
  const bool allowed = std::any_of(perms.begin(), perms.end(),
                                   [&](const PermissionId& p) { return p.resource() == resource; });
  if (!allowed) {
    d.reason = DenyReason::kNoPermission;
  } else if (!(trust > policy_.threshold_for(resource))) {
    d.reason = DenyReason::kBelowTrustThreshold;
  } else {
    d.outcome = Outcome::kPermit;
  }
  return d;
}

AuthorizationResult AccessControlCenter::authorize_local(const AccessRequest& req) {
  if (!is_authenticated(req.requester)) {
    throw Error(ErrorCode::kNotAuthenticated, req.requester.str() + " has no session in " + domain());
  }
  if (!holds_role(req.requester, req.role)) {
    throw Error(ErrorCode::kRoleNotGranted,
                req.requester.str() + " does not hold " + req.role.str());
  }

  AuthorizationResult out;
  out.trace.request_id = req.request_id;
  auto& steps = out.trace.steps;

  steps.push_back({PipelineStage::kEnforcementReceive,
                   req.requester.str() + " as " + req.role.name() + " -> " + req.resource});
  steps.push_back({PipelineStage::kInformationRequest, "attributes of " + req.requester.str()});

  const double trust = ledger_.trust_of(req.requester);
  const double threshold = policy_.threshold_for(req.resource);
  steps.push_back({PipelineStage::kTrustLookup,
                   "td=" + short_real(trust) + " threshold=" + short_real(threshold)});

  out.decision = judge(req.role, req.resource, trust, req.request_id);
  steps.push_back({PipelineStage::kDecision,
                   out.decision.permitted() ? std::string("Permit")
                                            : "Deny(" + std::string(to_string(*out.decision.reason)) + ")"});

  if (out.decision.permitted()) {
    permits_.emplace(req.requester, req.role, req.resource);
    if (const auto owner = resource_owner(req.resource); owner && *owner != req.requester) {
      record_interaction(req.requester, *owner);
    }
    out.certificate = issue_certificate(req.requester, req.role, req.resource);
    steps.push_back({PipelineStage::kEnforcementRespond, "certificate " + out.certificate->signature.substr(0, 16)});
  } else {
    steps.push_back({PipelineStage::kEnforcementRespond, "denial returned"});
  }
  return out;
}

std::pair<EntityId, EntityId> AccessControlCenter::ordered(const EntityId& a, const EntityId& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

void AccessControlCenter::record_interaction(const EntityId& a, const EntityId& b) {
  interactions_.insert(ordered(a, b));
}

bool AccessControlCenter::has_interaction(const EntityId& a, const EntityId& b) const {
  return interactions_.contains(ordered(a, b));
}

const PairwiseTrust& AccessControlCenter::post_interaction_feedback(const EntityId& rater,
                                                                    const EntityId& ratee,
                                                                    ExperienceRating ex) {
  if (!has_interaction(rater, ratee)) {
    throw Error(ErrorCode::kNoPriorInteraction, "no permitted interaction between " + rater.str() +
                                                    " and " + ratee.str() + " this epoch");
  }
  return ledger_.record_experience(rater, ratee, ex);
}

const PairwiseTrust& AccessControlCenter::import_history(const EntityId& rater,
                                                         const EntityId& ratee,
                                                         ExperienceRating ex) {
  return ledger_.record_experience(rater, ratee, ex);
}

Certificate AccessControlCenter::issue_certificate(const EntityId& holder, const RoleId& role,
                                                   const ResourceId& resource) {
  if (!permits_.contains({holder, role, resource})) {
    throw Error(ErrorCode::kNotPermitted, "no permit for " + holder.str() + " as " + role.str() +
                                              " on " + resource);
  }
  return authority_.issue(holder, role, resource, ledger_.trust_of(holder), now_,
                          policy_.certificate_ttl);
}

bool AccessControlCenter::verify_certificate(const Certificate& cert) const {
  return authority_.verify(cert, now_);
}

const DomainTrustView& AccessControlCenter::advance_epoch() {
  interactions_.clear();
  return ledger_.advance_epoch();
}

}  // namespace trustac
