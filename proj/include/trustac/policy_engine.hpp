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

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "trustac/certificate.hpp"
#include "trustac/cross_domain_trust.hpp"
#include "trustac/role_model.hpp"
#include "trustac/trust_core.hpp"
#include "trustac/types.hpp"

namespace trustac {

/// Domain security policy. Thresholds are compared strictly: a request is
/// permitted only when the requester's trust exceeds the threshold.
struct PolicyDatabase {
  TrustParams trust;
  CrossParams cross;
  double permit_threshold = 0.25;
  std::map<ResourceId, double> resource_thresholds;
  LogicalTime certificate_ttl = 100;

  double threshold_for(const ResourceId& resource) const;
  std::vector<std::string> violations() const;
};

struct Credential {
  EntityId entity;
  std::string secret;
};

struct AccessRequest {
  EntityId requester;
  RoleId role;
  ResourceId resource;
  std::string request_id;
};

enum class Outcome { kPermit, kDeny };

enum class DenyReason {
  kBelowTrustThreshold,
  kNoPermission,
  kAuthenticationFailed,
  kNoConversion,
  kInterDomainDistrust,
};

std::string_view to_string(Outcome outcome);
std::string_view to_string(DenyReason reason);

struct Decision {
  std::string request_id;
  Outcome outcome = Outcome::kDeny;
  std::optional<DenyReason> reason;
  double trust_at_decision = 0.0;

  bool permitted() const noexcept { return outcome == Outcome::kPermit; }
};

/// Stages of local authorization, in the order they always run.
enum class PipelineStage {
  kEnforcementReceive,  // PEP takes the request and hands it to the PDP
  kInformationRequest,  // PDP asks the PIP for requester attributes
  kTrustLookup,         // TMP supplies the requester's trust degree
  kDecision,            // PDP weighs trust and permissions
  kEnforcementRespond,  // PEP answers, with a certificate on permit
};

std::string_view stage_label(PipelineStage stage);

struct PipelineStep {
  PipelineStage stage;
  std::string detail;
};

struct PipelineTrace {
  std::string request_id;
  std::vector<PipelineStep> steps;
};

struct AuthorizationResult {
  Decision decision;
  std::optional<Certificate> certificate;
  PipelineTrace trace;
};

struct SessionToken {
  EntityId entity;
  std::uint64_t serial = 0;
};

struct RoleGrant {
  EntityId entity;
  RoleId role;
  bool newly_granted = false;
};

/// Authentication and authorization center of a single domain.
///
/// Owns the domain's role hierarchy, policy database and trust ledger. Trust
/// is read from the ledger's last epoch snapshot during authorization and
/// only written by post_interaction_feedback() and advance_epoch().
class AccessControlCenter {
 public:
  AccessControlCenter(RoleHierarchy hierarchy, PolicyDatabase policy, std::string_view signing_key);

  const DomainId& domain() const noexcept { return hierarchy_.domain(); }
  const RoleHierarchy& hierarchy() const noexcept { return hierarchy_; }
  const PolicyDatabase& policy() const noexcept { return policy_; }
  const TrustLedger& ledger() const noexcept { return ledger_; }
  const CertificateAuthority& authority() const noexcept { return authority_; }

  void register_entity(const EntityId& entity, std::string secret);
  bool is_member(const EntityId& entity) const { return secrets_.contains(entity); }
  /// Lets a foreign entity accrue trust records here. Idempotent.
  void admit_visitor(const EntityId& entity);

  void register_resource(const ResourceId& resource, const EntityId& owner);
  std::optional<EntityId> resource_owner(const ResourceId& resource) const;
  const std::map<ResourceId, EntityId>& resources() const noexcept { return owners_; }

  /// Grants any existing role of this domain. Re-granting is a no-op.
  RoleGrant assign_role(const EntityId& entity, const RoleId& role);
  bool holds_role(const EntityId& entity, const RoleId& role) const;
  std::set<RoleId> roles_of(const EntityId& entity) const;

  SessionToken authenticate(const Credential& cred);
  bool is_authenticated(const EntityId& entity) const { return sessions_.contains(entity); }

  /// Runs the PEP -> PDP -> PIP -> TMP -> PDP -> PEP pipeline.
  AuthorizationResult authorize_local(const AccessRequest& req);

  /// PDP core shared with the federation: permission check first, then the
  /// strict trust threshold.
  Decision judge(const RoleId& role, const ResourceId& resource, double trust,
                 const std::string& request_id) const;

  /// Marks a permitted interaction so both parties may rate each other.
  void record_interaction(const EntityId& a, const EntityId& b);
  bool has_interaction(const EntityId& a, const EntityId& b) const;

  const PairwiseTrust& post_interaction_feedback(const EntityId& rater, const EntityId& ratee,
                                                 ExperienceRating ex);

  /// Loads a rating from prior history without an interaction in this
  /// epoch. Used when restoring a scenario's initial state.
  const PairwiseTrust& import_history(const EntityId& rater, const EntityId& ratee,
                                      ExperienceRating ex);

  /// Requires a prior Permit for exactly (holder, role, resource).
  Certificate issue_certificate(const EntityId& holder, const RoleId& role,
                                const ResourceId& resource);
  bool verify_certificate(const Certificate& cert) const;

  void set_clock(LogicalTime now) noexcept { now_ = now; }
  LogicalTime now() const noexcept { return now_; }

  /// Recomputes reputations and trust, and closes the feedback window for
  /// interactions of the finished epoch.
  const DomainTrustView& advance_epoch();

  double trust_of(const EntityId& entity) const { return ledger_.trust_of(entity); }

 private:
  void require_member(const EntityId& entity) const;
  static std::pair<EntityId, EntityId> ordered(const EntityId& a, const EntityId& b);

  RoleHierarchy hierarchy_;
  PolicyDatabase policy_;
  TrustLedger ledger_;
  CertificateAuthority authority_;
  std::map<EntityId, std::string> secrets_;
  std::map<EntityId, std::set<RoleId>> grants_;
  std::map<EntityId, std::uint64_t> sessions_;
  std::map<ResourceId, EntityId> owners_;
  std::set<std::pair<EntityId, EntityId>> interactions_;
  std::set<std::tuple<EntityId, RoleId, ResourceId>> permits_;
  std::uint64_t next_session_ = 1;
  LogicalTime now_ = 0;
};

}  // namespace trustac
