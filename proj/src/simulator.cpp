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


#include "trustac/simulator.hpp"

#include "trustac/error.hpp"

namespace trustac {

namespace {

// Rating streams drawn per event.
constexpr std::uint32_t kStreamAboutProvider = 0;
constexpr std::uint32_t kStreamAboutRequester = 1;

std::string request_id(std::uint64_t index) { return "req-" + std::to_string(index); }

}  // namespace

Simulator::Simulator(Scenario scenario)
    : scenario_(std::move(scenario)), federation_(build_federation(scenario_)) {
  for (const auto& e : scenario_.entities) {
    profiles_.emplace(EntityId(e.domain, e.name), scenario_.profiles.at(e.profile));
  }
}

double Simulator::rate(const EntityId& subject, std::uint64_t index, std::uint32_t stream) const {
  return profiles_.at(subject).sample(scenario_.seed, index, stream);
}

void Simulator::emit(LogicalTime time, TracePayload payload) {
  result_.trace.push_back(TraceEvent{result_.trace.size() + 1, time, std::move(payload)});
}

SimulationResult Simulator::run() {
  result_ = {};
  samples_ = 0;
  sample_trajectories();

  const std::uint64_t per_round = scenario_.schedule.size();
  for (std::uint64_t round = 0; round < scenario_.rounds; ++round) {
    for (std::uint64_t i = 0; i < per_round; ++i) {
      const std::uint64_t index = round * per_round + i;
      now_ = index + 1;
      federation_.set_clock(now_);
      const ScheduledEvent& ev = scenario_.schedule[i];
      switch (ev.kind) {
        case EventKind::kLocalRequest: local_request(ev, index); break;
        case EventKind::kCrossRequest: cross_request(ev, index); break;
        case EventKind::kEpochAdvance: epoch_advance(ev); break;
      }
    }
  }
  return std::move(result_);
}

void Simulator::local_request(const ScheduledEvent& ev, std::uint64_t index) {
  const EntityId requester = EntityId::parse(ev.requester);
  AccessControlCenter& aac = federation_.domain(requester.domain());
  const std::string id = request_id(index);

  const std::string secret = ev.secret ? *ev.secret : scenario_.find_entity(ev.requester)->secret;
  try {
    aac.authenticate({requester, secret});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBadSecret) throw;
    emit(now_, AuthenticationRecord{id, requester, std::string(to_string(e.code()))});
    return;
  }

  AccessRequest req{requester, RoleId(requester.domain(), ev.role), ev.resource, id};
  AuthorizationResult res = aac.authorize_local(req);
  const bool permitted = res.decision.permitted();
  emit(now_, LocalDecisionRecord{req, std::move(res)});
  if (!permitted) return;

  const EntityId provider = *aac.resource_owner(ev.resource);
  const double about_provider = rate(provider, index, kStreamAboutProvider);
  const double about_requester = rate(requester, index, kStreamAboutRequester);
  const PairwiseTrust up =
      aac.post_interaction_feedback(requester, provider, ExperienceRating(about_provider));
  const PairwiseTrust down =
      aac.post_interaction_feedback(provider, requester, ExperienceRating(about_requester));
  emit(now_, FeedbackRecord{id, requester, provider, aac.domain(), aac.domain(), about_provider,
                            about_requester, up, down});
}

void Simulator::cross_request(const ScheduledEvent& ev, std::uint64_t index) {
  const EntityId requester = EntityId::parse(ev.requester);
  const std::string id = request_id(index);
  CrossDomainRequest req{requester, requester.domain(), ev.target,
                         RoleId(requester.domain(), ev.role), ev.resource, id};

  const FeedbackSource feedback = [&](const EntityId& visitor, const EntityId& provider) {
    return CrossFeedback{ExperienceRating(rate(provider, index, kStreamAboutProvider)),
                         ExperienceRating(rate(visitor, index, kStreamAboutRequester))};
  };
  CrossDomainResult res = federation_.request_cross_domain_access(req, feedback);
  const bool permitted = res.decision.permitted();
  std::optional<FeedbackRecord> fb;
  if (permitted) {
    const EntityId provider = *res.provider;
    const auto& home = federation_.domain(req.home_domain).ledger();
    const auto& target = federation_.domain(req.target_domain).ledger();
    fb = FeedbackRecord{id,
                        requester,
                        provider,
                        req.home_domain,
                        req.target_domain,
                        res.feedback->visitor_rates_provider.value(),
                        res.feedback->provider_rates_visitor.value(),
                        *home.pairwise(requester, provider),
                        *target.pairwise(provider, requester)};
  }
  emit(now_, CrossDecisionRecord{req, std::move(res)});
  if (fb) emit(now_, std::move(*fb));
}

void Simulator::epoch_advance(const ScheduledEvent& ev) {
  EpochRecord rec;
  if (ev.domain) {
    federation_.domain(*ev.domain).advance_epoch();
  } else {
    federation_.advance_epoch();
  }
  for (const auto& d : federation_.domains()) {
    if (ev.domain && *ev.domain != d) continue;
    rec.views.push_back(federation_.domain(d).ledger().view());
  }
  for (const auto& [key, pair] : federation_.pair_trust_matrix()) rec.pairs.push_back(pair);
  emit(now_, std::move(rec));
  sample_trajectories();
}

void Simulator::sample_trajectories() {
  const std::uint64_t sample = samples_++;
  auto& out = result_.trajectories;
  for (const auto& d : federation_.domains()) {
    const AccessControlCenter& aac = federation_.domain(d);
    const TrustLedger& ledger = aac.ledger();
    for (const auto& e : ledger.entities()) {
      if (e.domain() != d) continue;
      out.push_back({sample, "td", d, e.str(), ledger.trust_of(e)});
      out.push_back({sample, "rp", d, e.str(), ledger.reputation_of(e)});
    }
    for (const auto& ratee : ledger.entities()) {
      for (const auto& rec : ledger.inbound(ratee)) {
        out.push_back({sample, "qos", d, rec.rater.str() + ">" + rec.ratee.str(), rec.qos});
      }
    }
  }
  for (const auto& [key, pair] : federation_.pair_trust_matrix()) {
    out.push_back({sample, "pair_td", pair.observer, pair.observed, pair.cross_td});
  }
}

SimulationResult run_scenario(const Scenario& scenario) {
  Simulator sim(scenario);
  return sim.run();
}

}  // namespace trustac
