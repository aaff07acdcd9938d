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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trustac/behavior.hpp"
#include "trustac/error.hpp"
#include "trustac/federation.hpp"
#include "trustac/policy_engine.hpp"
#include "trustac/role_conversion.hpp"

namespace trustac {

struct PermissionSpec {
  std::string name;
  ResourceId resource;
};

struct RoleSpec {
  std::string name;
  std::vector<std::string> parents;
  std::vector<PermissionSpec> permissions;
};

struct ResourceSpec {
  ResourceId name;
  std::string owner;  // entity name inside the domain
};

struct DomainSpec {
  DomainId id;
  std::vector<RoleSpec> roles;
  std::string guest;
  PolicyDatabase policy;
  std::vector<ResourceSpec> resources;
  std::string signing_key;  // derived from id and seed when empty
};

struct EntitySpec {
  DomainId domain;
  std::string name;
  std::string secret;
  std::string profile;
  std::vector<std::string> roles;
};

struct CorrelationSpec {
  std::string outer_role;
  std::string local_role;
  CorrelationKind kind = CorrelationKind::kTransitive;
};

struct CorrelationSetSpec {
  DomainId outer_domain;
  DomainId local_domain;
  std::vector<CorrelationSpec> entries;
};

/// A rating already on record before the run starts.
struct HistorySpec {
  DomainId ledger;  // where it is recorded; defaults to the rater's domain
  std::string rater;
  std::string ratee;
  double ex = 0.0;
};

struct PairTrustSpec {
  DomainId observer;
  DomainId observed;
  double dtd = 0.0;
  double rp = 0.0;
  std::optional<double> td;  // delta blend of dtd and rp when absent
};

enum class EventKind { kLocalRequest, kCrossRequest, kEpochAdvance };

std::string_view to_string(EventKind kind);

struct ScheduledEvent {
  EventKind kind = EventKind::kEpochAdvance;
  std::string requester;  // "domain:name"
  std::string role;       // role name in the requester's home domain
  ResourceId resource;
  DomainId target;                    // cross requests
  std::optional<std::string> secret;  // overrides the declared secret
  std::optional<DomainId> domain;     // epoch advance of a single domain
};

struct InitialState {
  std::vector<HistorySpec> history;
  std::uint64_t epochs = 0;  // epoch advances applied after the history
  std::vector<PairTrustSpec> pair_trust;
};

/// Declarative simulation input. The schedule is replayed `rounds` times.
struct Scenario {
  std::uint64_t seed = 0;
  std::uint64_t rounds = 1;
  std::map<std::string, BehaviorProfile> profiles;
  std::vector<DomainSpec> domains;
  std::vector<EntitySpec> entities;
  std::vector<CorrelationSetSpec> correlations;
  FederationConfig federation;
  InitialState initial;
  std::vector<ScheduledEvent> schedule;

  const DomainSpec* find_domain(const DomainId& id) const;
  const EntitySpec* find_entity(const std::string& qualified) const;
};

class ScenarioError : public Error {
 public:
  explicit ScenarioError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Raised when a scenario file cannot be read at all.
class ScenarioIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural parse of the JSON text. Throws ScenarioError listing every
/// malformed field with its location.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::filesystem::path& path);

/// Semantic checks: references resolve, hierarchies validate, correlation
/// sets classify, and every parameter is in range. Empty when runnable.
std::vector<std::string> validate_scenario(const Scenario& scenario);

/// Builds the federation and applies the initial state. The scenario must
/// validate.
Federation build_federation(const Scenario& scenario);

RoleHierarchy build_hierarchy(const DomainSpec& spec);
CorrelationSet build_correlations(const CorrelationSetSpec& spec);

}  // namespace trustac
