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

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trustac/certificate.hpp"
#include "trustac/cross_domain_trust.hpp"
#include "trustac/policy_engine.hpp"
#include "trustac/role_conversion.hpp"
#include "trustac/types.hpp"

namespace trustac {

/// The twelve steps of a cross-domain request, in protocol order.
enum class ProtocolStep {
  kRolePossession = 1,      // i    requester holds the outer role at home
  kHomeTrust,               // ii   home AAC evaluates the requester's trust
  kInterDomainGate,         // iii  coordinator checks TD(target, home)
  kForwardRequest,          // iv   request carried to the target with certificate
  kRoleConversion,          // v    outer role converted to a local role
  kCertificateRelay,        // vi   certificate handed to the target AAC
  kTrustMapping,            // vii  coordinator maps trust into the target
  kLocalJudgement,          // viii target AAC applies its local policy
  kResult,                  // ix   resource granted or refused
  kVisitorFeedback,         // x    visitor rates the provider (home ledger)
  kProviderFeedback,        // xi   provider rates the visitor (target ledger)
  kPairTrustUpdate,         // xii  coordinator refreshes domain-pair trust
};

std::string_view step_label(ProtocolStep step);

struct ProtocolRecord {
  ProtocolStep step;
  std::string digest;  // payload_digest of `detail`
  bool ok = true;
  std::string detail;
};

struct ProtocolTrace {
  std::string request_id;
  std::vector<ProtocolRecord> steps;
};

struct CrossDomainRequest {
  EntityId requester;
  DomainId home_domain;
  DomainId target_domain;
  RoleId outer_role;
  ResourceId resource;
  std::string request_id;
};

/// Both halves of a finished cross-domain interaction.
struct CrossFeedback {
  ExperienceRating visitor_rates_provider;
  ExperienceRating provider_rates_visitor;
};

using FeedbackSource =
    std::function<CrossFeedback(const EntityId& visitor, const EntityId& provider)>;

struct CrossDomainResult {
  Decision decision;
  ProtocolTrace trace;
  std::optional<Certificate> interdomain_certificate;
  std::optional<Certificate> access_certificate;
  std::optional<ConversionResult> conversion;
  std::optional<EntityId> provider;
  std::optional<CrossFeedback> feedback;
  double effective_trust = 0.0;
};

struct FederationConfig {
  double interdomain_threshold = 0.0;
  // Also refresh (home, target) from the visitor's rating of the provider.
  bool update_reverse = true;
  LogicalTime certificate_ttl = 100;
  std::string signing_key = "federation";
};

/// Advanced authentication and authorization center: owns every domain's
/// AAC, the correlation sets between them and the domain-pair trust matrix.
/// All calls are serialized through this object.
class Federation {
 public:
  explicit Federation(FederationConfig config = {});

  const FederationConfig& config() const noexcept { return config_; }

  /// Joins a domain and initializes pair trust against every registered
  /// domain, in both directions, at the neutral value.
  void register_domain(AccessControlCenter aac);
  bool has_domain(const DomainId& domain) const { return domains_.contains(domain); }
  std::vector<DomainId> domains() const;

  AccessControlCenter& domain(const DomainId& domain);
  const AccessControlCenter& domain(const DomainId& domain) const;

  /// Validated against both hierarchies, classified, and stored under
  /// (outer, local), replacing any previous set.
  void set_correlations(CorrelationSet cs);
  const CorrelationSet* correlations(const DomainId& outer, const DomainId& local) const;

  const DomainPairTrust& pair_trust(const DomainId& observer, const DomainId& observed) const;
  const std::map<std::pair<DomainId, DomainId>, DomainPairTrust>& pair_trust_matrix() const noexcept {
    return pair_trust_;
  }
  void set_pair_trust(const DomainPairTrust& value);

  /// TD(target, home) * max(TD(requester, home), 0), clamped to [-1, 1].
  double map_trust(const EntityId& requester, const DomainId& target) const;

  /// Recomputes how `observer` regards `observed` from the observer's ledger.
  /// Left untouched while no entity of `observed` has been rated there.
  const DomainPairTrust& update_pair_trust(const DomainId& observer, const DomainId& observed);

  ConversionResult convert(const RoleId& outer_role, const DomainId& target) const;

  CrossDomainResult request_cross_domain_access(const CrossDomainRequest& req,
                                                const FeedbackSource& feedback);

  void set_clock(LogicalTime now);
  LogicalTime now() const noexcept { return now_; }

  void advance_epoch();

  bool verify_interdomain_certificate(const Certificate& cert) const {
    return authority_.verify(cert, now_);
  }

 private:
  void require_domain(const DomainId& domain) const;
  DomainPairTrust neutral_pair(const DomainId& observer, const DomainId& observed) const;

  FederationConfig config_;
  CertificateAuthority authority_;
  std::map<DomainId, AccessControlCenter> domains_;
  std::map<std::pair<DomainId, DomainId>, CorrelationSet> correlations_;
  std::map<std::pair<DomainId, DomainId>, DomainPairTrust> pair_trust_;
  LogicalTime now_ = 0;
};

}  // namespace trustac
