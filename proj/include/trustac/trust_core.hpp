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
#include <vector>

#include "trustac/types.hpp"

namespace trustac {

/// Blending weights and neutral starting values for one domain's trust
/// metrics. alpha blends QoS history, beta blends direct-trust history and
/// gamma splits domain trust between direct trust and reputation.
struct TrustParams {
  double alpha = 0.5;
  double beta = 0.5;
  double gamma = 0.5;
  double initial_qos = 0.0;
  double initial_dtd = 0.0;
  double initial_rp = 0.5;

  /// Human-readable range violations; empty when the parameters are usable.
  std::vector<std::string> violations() const;
};

/// Running trust state of one rater toward one ratee.
struct PairwiseTrust {
  EntityId rater;
  EntityId ratee;
  std::uint64_t k = 0;
  double qos = 0.0;
  double dtd = 0.0;
  double last_ex = 0.0;
};

/// What the raters of an entity currently say about it, averaged over the
/// distinct raters with at least one recorded interaction.
struct InboundSummary {
  std::size_t raters = 0;
  double mean_qos = 0.0;
  double mean_dtd = 0.0;
};

/// Per-domain trust snapshot. Reputations and domain trust are frozen at the
/// last epoch boundary; `inbound` is filled by TrustLedger::snapshot() from
/// the live pairwise table.
struct DomainTrustView {
  DomainId domain;
  std::map<EntityId, double> reputations;
  std::map<EntityId, double> domain_trust;
  std::map<EntityId, InboundSummary> inbound;
  std::uint64_t epoch = 0;
};

/// Single-writer store of pairwise interaction histories for one domain.
///
/// Entities registered here are members of the domain or visitors admitted
/// while they interact in it. Reputation is recomputed only at epoch
/// boundaries, each epoch reading the previous epoch's reputations, so the
/// result never depends on the order entities are visited.
class TrustLedger {
 public:
  TrustLedger(DomainId domain, TrustParams params);

  const DomainId& domain() const noexcept { return domain_; }
  const TrustParams& params() const noexcept { return params_; }

  /// Idempotent. New entities start at the neutral reputation and trust.
  void register_entity(const EntityId& entity);
  bool is_registered(const EntityId& entity) const;
  const std::set<EntityId>& entities() const noexcept { return entities_; }

  /// Applies one interaction rating:
  ///   qos' = alpha * qos + (1 - alpha) * ex
  ///   dtd' = beta * qos + (1 - beta) * ex     (pre-update qos)
  const PairwiseTrust& record_experience(const EntityId& rater, const EntityId& ratee,
                                         ExperienceRating ex);

  std::optional<PairwiseTrust> pairwise(const EntityId& rater, const EntityId& ratee) const;
  /// Records toward `ratee`, ordered by rater.
  std::vector<PairwiseTrust> inbound(const EntityId& ratee) const;
  InboundSummary inbound_summary(const EntityId& ratee) const;

  /// Mean over raters of qos(rater -> ratee) weighted by each rater's
  /// reputation in `prior`; initial_rp when nobody has rated the ratee.
  double compute_reputation(const EntityId& ratee, const DomainTrustView& prior) const;

  /// gamma * mean inbound dtd + (1 - gamma) * reputation in `view`. The
  /// mean falls back to initial_dtd when there are no raters. Weights at the
  /// closed bounds 0 and 1 are accepted here.
  double compute_domain_trust(const EntityId& entity, const DomainTrustView& view,
                              const TrustParams& params) const;
  double compute_domain_trust(const EntityId& entity, const DomainTrustView& view) const {
    return compute_domain_trust(entity, view, params_);
  }

  /// Pure: the view one epoch after `view`, computed in a single Jacobi pass.
  DomainTrustView next_epoch(const DomainTrustView& view) const;

  /// Replaces the current view with next_epoch(current).
  const DomainTrustView& advance_epoch();

  const DomainTrustView& view() const noexcept { return view_; }
  /// Current view plus fresh inbound summaries for every entity.
  DomainTrustView snapshot() const;

  /// Trust of `entity` at the last epoch boundary.
  double trust_of(const EntityId& entity) const;
  double reputation_of(const EntityId& entity) const;

  std::uint64_t interactions_recorded() const noexcept { return interactions_; }

 private:
  void require_registered(const EntityId& entity) const;
  double neutral_trust() const;

  DomainId domain_;
  TrustParams params_;
  std::set<EntityId> entities_;
  // ratee -> rater -> record
  std::map<EntityId, std::map<EntityId, PairwiseTrust>> by_ratee_;
  DomainTrustView view_;
  std::uint64_t interactions_ = 0;
};

}  // namespace trustac
