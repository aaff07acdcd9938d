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


#include "trustac/federation.hpp"

#include <algorithm>

#include "format.hpp"
#include "trustac/error.hpp"

namespace trustac {

using detail::short_real;

std::string_view step_label(ProtocolStep step) {
  switch (step) {
    case ProtocolStep::kRolePossession: return "i:role-possession";
    case ProtocolStep::kHomeTrust: return "ii:home-trust";
    case ProtocolStep::kInterDomainGate: return "iii:interdomain-gate";
    case ProtocolStep::kForwardRequest: return "iv:forward-request";
    case ProtocolStep::kRoleConversion: return "v:role-conversion";
    case ProtocolStep::kCertificateRelay: return "vi:certificate-relay";
    case ProtocolStep::kTrustMapping: return "vii:trust-mapping";
    case ProtocolStep::kLocalJudgement: return "viii:local-judgement";
    case ProtocolStep::kResult: return "ix:result";
    case ProtocolStep::kVisitorFeedback: return "x:visitor-feedback";
    case ProtocolStep::kProviderFeedback: return "xi:provider-feedback";
    case ProtocolStep::kPairTrustUpdate: return "xii:pair-trust-update";
  }
  return "?";
}

Federation::Federation(FederationConfig config)
    : config_(std::move(config)), authority_("federation", config_.signing_key) {
  const double t = config_.interdomain_threshold;
  if (!(t >= -1.0 && t <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "interdomain_threshold must lie in [-1, 1]");
  }
}

void Federation::require_domain(const DomainId& domain) const {
  if (!domains_.contains(domain)) {
    throw Error(ErrorCode::kUnknownDomain, domain + " is not registered");
  }
}

DomainPairTrust Federation::neutral_pair(const DomainId& observer, const DomainId& observed) const {
  const PolicyDatabase& policy = domains_.at(observer).policy();
  DomainPairTrust p{observer, observed, 0.0, policy.trust.initial_rp, 0.0};
  p.cross_td = compute_cross_td(p, policy.cross);
  return p;
}

void Federation::register_domain(AccessControlCenter aac) {
  const DomainId id = aac.domain();
  if (domains_.contains(id)) {
    throw Error(ErrorCode::kDuplicateDomain, id + " is already registered");
  }
  aac.set_clock(now_);
  domains_.emplace(id, std::move(aac));
  for (const auto& [other, _] : domains_) {
    if (other == id) continue;
    pair_trust_[{id, other}] = neutral_pair(id, other);
    pair_trust_[{other, id}] = neutral_pair(other, id);
  }
}

std::vector<DomainId> Federation::domains() const {
  std::vector<DomainId> out;
  for (const auto& [id, _] : domains_) out.push_back(id);
  return out;
}

AccessControlCenter& Federation::domain(const DomainId& domain) {
  require_domain(domain);
  return domains_.at(domain);
}

const AccessControlCenter& Federation::domain(const DomainId& domain) const {
  require_domain(domain);
  return domains_.at(domain);
}

void Federation::set_correlations(CorrelationSet cs) {
  const auto& outer = domain(cs.outer_domain()).hierarchy();
  const auto& local = domain(cs.local_domain()).hierarchy();
  cs.classify(outer, local);
  const auto key = std::pair{cs.outer_domain(), cs.local_domain()};
  correlations_.insert_or_assign(key, std::move(cs));
}

const CorrelationSet* Federation::correlations(const DomainId& outer, const DomainId& local) const {
  const auto it = correlations_.find({outer, local});
  return it == correlations_.end() ? nullptr : &it->second;
}

const DomainPairTrust& Federation::pair_trust(const DomainId& observer,
                                              const DomainId& observed) const {
  require_domain(observer);
  require_domain(observed);
  const auto it = pair_trust_.find({observer, observed});
  if (it == pair_trust_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "no pair trust for " + observer + " -> " + observed);
  }
  return it->second;
}

void Federation::set_pair_trust(const DomainPairTrust& value) {
  pair_trust(value.observer, value.observed);
  const auto in_range = [](double v) { return v >= -1.0 && v <= 1.0; };
  if (!in_range(value.cross_dtd) || !in_range(value.cross_rp) || !in_range(value.cross_td)) {
    throw Error(ErrorCode::kInvalidArgument, "pair trust values must lie in [-1, 1]");
  }
  pair_trust_[{value.observer, value.observed}] = value;
}

double Federation::map_trust(const EntityId& requester, const DomainId& target) const {
  const DomainId& home = requester.domain();
  const auto& home_aac = domain(home);
  require_domain(target);
  if (!home_aac.is_member(requester)) {
    throw Error(ErrorCode::kUnknownEntity, requester.str() + " is not registered in " + home);
  }
  const double pair = pair_trust(target, home).cross_td;
  const double own = std::max(home_aac.trust_of(requester), 0.0);
  return std::clamp(pair * own, -1.0, 1.0);
}

const DomainPairTrust& Federation::update_pair_trust(const DomainId& observer,
                                                     const DomainId& observed) {
  pair_trust(observer, observed);
  const AccessControlCenter& aac = domains_.at(observer);
  const DomainTrustView snap = aac.ledger().snapshot();

  std::set<EntityId> foreign;
  for (const auto& e : aac.ledger().entities()) {
    if (e.domain() == observed && snap.inbound.contains(e)) foreign.insert(e);
  }
  DomainPairTrust& stored = pair_trust_.at({observer, observed});
  if (foreign.empty()) return stored;

  const CrossParams& params = aac.policy().cross;
  DomainPairTrust next{observer, observed, compute_cross_dtd(snap, foreign), 0.0, 0.0};
  try {
    next.cross_rp = compute_cross_rp(snap, foreign, params);
  } catch (const Error& e) {
    // Every contributor carries zero weight: there is no weighted evidence.
    if (e.code() != ErrorCode::kAllWeightsZero) throw;
    next.cross_rp = 0.0;
  }
  next.cross_td = compute_cross_td(next, params);
  stored = next;
  return stored;
}

ConversionResult Federation::convert(const RoleId& outer_role, const DomainId& target) const {
  const auto& outer = domain(outer_role.domain()).hierarchy();
  const auto& local = domain(target).hierarchy();
  const CorrelationSet* cs = correlations(outer_role.domain(), target);
  if (cs == nullptr) {
    if (!outer.contains(outer_role)) {
      throw Error(ErrorCode::kUnknownRole, outer_role.str() + " is not a role of " + outer.domain());
    }
    return ConversionResult{};
  }
  return convert_role(outer_role, *cs, outer, local);
}

CrossDomainResult Federation::request_cross_domain_access(const CrossDomainRequest& req,
                                                          const FeedbackSource& feedback) {
  require_domain(req.home_domain);
  require_domain(req.target_domain);
  if (req.home_domain == req.target_domain) {
    throw Error(ErrorCode::kInvalidArgument, "cross-domain request must leave its home domain");
  }
  if (req.requester.domain() != req.home_domain || req.outer_role.domain() != req.home_domain) {
    throw Error(ErrorCode::kInvalidArgument, "requester and role must belong to " + req.home_domain);
  }
  AccessControlCenter& home = domains_.at(req.home_domain);
  AccessControlCenter& target = domains_.at(req.target_domain);
  if (!home.is_member(req.requester)) {
    throw Error(ErrorCode::kUnknownEntity, req.requester.str() + " is not registered in " + req.home_domain);
  }
  const auto provider = target.resource_owner(req.resource);
  if (!provider) {
    throw Error(ErrorCode::kUnknownResource, req.resource + " is not a resource of " + req.target_domain);
  }

  CrossDomainResult out;
  out.trace.request_id = req.request_id;
  out.decision.request_id = req.request_id;
  const auto record = [&](ProtocolStep step, bool ok, std::string detail) {
    std::string payload = req.request_id + "|" + std::string(step_label(step)) + "|" + detail;
    out.trace.steps.push_back({step, payload_digest(payload), ok, std::move(detail)});
  };
  const auto deny = [&](ProtocolStep step, DenyReason reason, double trust, std::string detail) {
    out.decision.outcome = Outcome::kDeny;
    out.decision.reason = reason;
    out.decision.trust_at_decision = trust;
    record(step, false, std::move(detail) + " -> Deny(" + std::string(to_string(reason)) + ")");
    return out;
  };

  // i
  if (!home.holds_role(req.requester, req.outer_role)) {
    throw Error(ErrorCode::kRoleNotHeld, req.requester.str() + " does not hold " + req.outer_role.str());
  }
  record(ProtocolStep::kRolePossession, true, req.requester.str() + " holds " + req.outer_role.str());

  // ii: informational; the binding trust gate for the visitor is step viii.
  const double home_td = home.trust_of(req.requester);
  const double home_threshold = home.policy().permit_threshold;
  record(ProtocolStep::kHomeTrust, true,
         "td=" + short_real(home_td) + " home-threshold=" + short_real(home_threshold) +
             (home_td > home_threshold ? " above" : " below"));

  // iii
  const double pair_td = pair_trust(req.target_domain, req.home_domain).cross_td;
  const std::string gate = "TD(" + req.target_domain + "," + req.home_domain + ")=" + short_real(pair_td) +
                           " threshold=" + short_real(config_.interdomain_threshold);
  if (!(pair_td > config_.interdomain_threshold)) {
    return deny(ProtocolStep::kInterDomainGate, DenyReason::kInterDomainDistrust, pair_td, gate);
  }
  out.interdomain_certificate =
      authority_.issue(req.requester, req.outer_role, req.resource, pair_td, now_, config_.certificate_ttl);
  record(ProtocolStep::kInterDomainGate, true,
         gate + " certificate " + out.interdomain_certificate->signature.substr(0, 16));

  // iv
  target.admit_visitor(req.requester);
  record(ProtocolStep::kForwardRequest, true,
         req.requester.str() + " -> " + provider->str() + " for " + req.resource);

  // v
  out.conversion = convert(req.outer_role, req.target_domain);
  if (!out.conversion->local_role) {
    return deny(ProtocolStep::kRoleConversion, DenyReason::kNoConversion, pair_td,
                req.outer_role.str() + " has no local role");
  }
  const RoleId local_role = *out.conversion->local_role;
  record(ProtocolStep::kRoleConversion, true, req.outer_role.str() + " -> " + local_role.str());

  // vi
  const bool cert_ok = authority_.verify(*out.interdomain_certificate, now_);
  record(ProtocolStep::kCertificateRelay, cert_ok,
         std::string("certificate ") + (cert_ok ? "valid" : "invalid"));
  // vii
  out.effective_trust = map_trust(req.requester, req.target_domain);
  record(ProtocolStep::kTrustMapping, true,
         short_real(pair_td) + " * max(" + short_real(home_td) + ", 0) = " + short_real(out.effective_trust));

  // viii
  const std::string judged = "trust=" + short_real(out.effective_trust) + " threshold=" +
                             short_real(target.policy().threshold_for(req.resource));
  if (!cert_ok) {
    return deny(ProtocolStep::kLocalJudgement, DenyReason::kInterDomainDistrust, out.effective_trust,
                judged + " certificate rejected");
  }
  Decision d = target.judge(local_role, req.resource, out.effective_trust, req.request_id);
  if (!d.permitted()) {
    return deny(ProtocolStep::kLocalJudgement, *d.reason, out.effective_trust, judged);
  }
  out.decision = d;
  record(ProtocolStep::kLocalJudgement, true, judged + " -> Permit");

  // ix
  out.provider = provider;
  out.access_certificate = target.authority().issue(req.requester, local_role, req.resource,
                                                    out.effective_trust, target.now(),
                                                    target.policy().certificate_ttl);
  target.record_interaction(req.requester, *provider);
  home.admit_visitor(*provider);
  home.record_interaction(req.requester, *provider);
  record(ProtocolStep::kResult, true,
         "granted certificate " + out.access_certificate->signature.substr(0, 16));

  // x, xi: both ratings are collected before either is applied.
  const CrossFeedback fb = feedback(req.requester, *provider);
  out.feedback = fb;
  const auto& up = home.post_interaction_feedback(req.requester, *provider, fb.visitor_rates_provider);
  record(ProtocolStep::kVisitorFeedback, true,
         "ex=" + short_real(fb.visitor_rates_provider.value()) + " qos=" + short_real(up.qos));
  const auto& down = target.post_interaction_feedback(*provider, req.requester, fb.provider_rates_visitor);
  record(ProtocolStep::kProviderFeedback, true,
         "ex=" + short_real(fb.provider_rates_visitor.value()) + " qos=" + short_real(down.qos));

  // xii
  const double forward = update_pair_trust(req.target_domain, req.home_domain).cross_td;
  std::string detail = "TD(" + req.target_domain + "," + req.home_domain + ")=" + short_real(forward);
  if (config_.update_reverse) {
    const double reverse = update_pair_trust(req.home_domain, req.target_domain).cross_td;
    detail += " TD(" + req.home_domain + "," + req.target_domain + ")=" + short_real(reverse);
  }
  record(ProtocolStep::kPairTrustUpdate, true, detail);
  return out;
}

void Federation::set_clock(LogicalTime now) {
  now_ = now;
  for (auto& [_, aac] : domains_) aac.set_clock(now);
}

void Federation::advance_epoch() {
  for (auto& [_, aac] : domains_) aac.advance_epoch();
}

}  // namespace trustac
