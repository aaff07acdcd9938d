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
#include <string>
#include <variant>
#include <vector>

#include "trustac/federation.hpp"
#include "trustac/policy_engine.hpp"
#include "trustac/scenario.hpp"

namespace trustac {

struct AuthenticationRecord {
  std::string request_id;
  EntityId entity;
  std::string error;
};

struct LocalDecisionRecord {
  AccessRequest request;
  AuthorizationResult result;
};

struct CrossDecisionRecord {
  CrossDomainRequest request;
  CrossDomainResult result;
};

/// Both ratings of one permitted interaction and the records they produced.
struct FeedbackRecord {
  std::string request_id;
  EntityId requester;
  EntityId provider;
  DomainId requester_ledger;  // where the requester's rating of the provider landed
  DomainId provider_ledger;   // where the provider's rating of the requester landed
  double requester_rates_provider = 0.0;
  double provider_rates_requester = 0.0;
  PairwiseTrust about_provider;
  PairwiseTrust about_requester;
};

struct EpochRecord {
  std::vector<DomainTrustView> views;
  std::vector<DomainPairTrust> pairs;
};

using TracePayload = std::variant<AuthenticationRecord, LocalDecisionRecord, CrossDecisionRecord,
                                  FeedbackRecord, EpochRecord>;

struct TraceEvent {
  std::uint64_t seq = 0;
  LogicalTime time = 0;
  TracePayload payload;
};

struct TrajectoryPoint {
  std::uint64_t sample = 0;
  std::string series;  // td | rp | qos | pair_td
  DomainId domain;
  std::string subject;
  double value = 0.0;
};

struct SimulationResult {
  std::vector<TraceEvent> trace;
  std::vector<TrajectoryPoint> trajectories;
};

/// Deterministic single-threaded replay of a scenario's schedule. Time is
/// the event index; every decision, feedback pair and epoch boundary is
/// appended to the trace, and trust trajectories are sampled once at the
/// start and after every epoch boundary.
class Simulator {
 public:
  explicit Simulator(Scenario scenario);

  SimulationResult run();

  const Federation& federation() const noexcept { return federation_; }
  const Scenario& scenario() const noexcept { return scenario_; }

 private:
  void local_request(const ScheduledEvent& ev, std::uint64_t index);
  void cross_request(const ScheduledEvent& ev, std::uint64_t index);
  void epoch_advance(const ScheduledEvent& ev);
  void sample_trajectories();
  void emit(LogicalTime time, TracePayload payload);
  double rate(const EntityId& subject, std::uint64_t index, std::uint32_t stream) const;

  Scenario scenario_;
  Federation federation_;
  std::map<EntityId, BehaviorProfile> profiles_;
  SimulationResult result_;
  std::uint64_t samples_ = 0;
  LogicalTime now_ = 0;
};

SimulationResult run_scenario(const Scenario& scenario);

}  // namespace trustac
