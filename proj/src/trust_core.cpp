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


#include "trustac/trust_core.hpp"

#include <cmath>

#include "trustac/error.hpp"

namespace trustac {

namespace {

bool in_open_unit(double v) { return std::isfinite(v) && v > 0.0 && v < 1.0; }
bool in_signed_unit(double v) { return std::isfinite(v) && v >= -1.0 && v <= 1.0; }

}  // namespace

std::vector<std::string> TrustParams::violations() const {
  std::vector<std::string> out;
  const auto weight = [&](const char* name, double v) {
    if (!in_open_unit(v)) out.push_back(std::string(name) + " must lie in (0, 1), got " + std::to_string(v));
  };
  const auto initial = [&](const char* name, double v) {
    if (!in_signed_unit(v)) out.push_back(std::string(name) + " must lie in [-1, 1], got " + std::to_string(v));
  };
  weight("alpha", alpha);
  weight("beta", beta);
  weight("gamma", gamma);
  initial("initial_qos", initial_qos);
  initial("initial_dtd", initial_dtd);
  initial("initial_rp", initial_rp);
  return out;
}

TrustLedger::TrustLedger(DomainId domain, TrustParams params)
    : domain_(std::move(domain)), params_(params) {
  if (const auto bad = params_.violations(); !bad.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "trust parameters for " + domain_ + ": " + bad.front());
  }
  view_.domain = domain_;
}

double TrustLedger::neutral_trust() const {
  return params_.gamma * params_.initial_dtd + (1.0 - params_.gamma) * params_.initial_rp;
}

void TrustLedger::register_entity(const EntityId& entity) {
  if (!entities_.insert(entity).second) return;
  view_.reputations.emplace(entity, params_.initial_rp);
  view_.domain_trust.emplace(entity, neutral_trust());
}

bool TrustLedger::is_registered(const EntityId& entity) const {
  return entities_.contains(entity);
}

void TrustLedger::require_registered(const EntityId& entity) const {
  if (!is_registered(entity)) {
    throw Error(ErrorCode::kUnknownEntity, entity.str() + " is not registered in " + domain_);
  }
}

const PairwiseTrust& TrustLedger::record_experience(const EntityId& rater, const EntityId& ratee,
                                                    ExperienceRating ex) {
  require_registered(rater);
  require_registered(ratee);
  if (rater == ratee) {
    throw Error(ErrorCode::kSelfRating, rater.str() + " cannot rate itself");
  }

  auto& row = by_ratee_[ratee];
  auto it = row.find(rater);
  if (it == row.end()) {
    it = row.emplace(rater, PairwiseTrust{rater, ratee, 0, params_.initial_qos,
                                          params_.initial_dtd, 0.0})
             .first;
  }
  PairwiseTrust& rec = it->second;
  const double prev_qos = rec.qos;
  const double e = ex.value();
  rec.qos = params_.alpha * prev_qos + (1.0 - params_.alpha) * e;
  rec.dtd = params_.beta * prev_qos + (1.0 - params_.beta) * e;
  rec.last_ex = e;
  ++rec.k;
  ++interactions_;
  return rec;
}

std::optional<PairwiseTrust> TrustLedger::pairwise(const EntityId& rater,
                                                   const EntityId& ratee) const {
  const auto row = by_ratee_.find(ratee);
  if (row == by_ratee_.end()) return std::nullopt;
  const auto it = row->second.find(rater);
  if (it == row->second.end()) return std::nullopt;
  return it->second;
}

std::vector<PairwiseTrust> TrustLedger::inbound(const EntityId& ratee) const {
  std::vector<PairwiseTrust> out;
  if (const auto row = by_ratee_.find(ratee); row != by_ratee_.end()) {
    out.reserve(row->second.size());
    for (const auto& [rater, rec] : row->second) {
      if (rec.k > 0) out.push_back(rec);
    }
  }
  return out;
}

InboundSummary TrustLedger::inbound_summary(const EntityId& ratee) const {
  InboundSummary s;
  for (const auto& rec : inbound(ratee)) {
    ++s.raters;
    s.mean_qos += rec.qos;
    s.mean_dtd += rec.dtd;
  }
  if (s.raters > 0) {
    s.mean_qos /= static_cast<double>(s.raters);
    s.mean_dtd /= static_cast<double>(s.raters);
  }
  return s;
}

double TrustLedger::compute_reputation(const EntityId& ratee, const DomainTrustView& prior) const {
  require_registered(ratee);
  if (prior.domain != domain_) {
    throw Error(ErrorCode::kInvalidArgument,
                "view of " + prior.domain + " used with ledger of " + domain_);
  }
  double sum = 0.0;
  std::size_t raters = 0;
  for (const auto& rec : inbound(ratee)) {
    const auto rp = prior.reputations.find(rec.rater);
    const double weight = rp == prior.reputations.end() ? params_.initial_rp : rp->second;
    sum += rec.qos * weight;
    ++raters;
  }
  if (raters == 0) return params_.initial_rp;
  return sum / static_cast<double>(raters);
}

double TrustLedger::compute_domain_trust(const EntityId& entity, const DomainTrustView& view,
                                         const TrustParams& params) const {
  require_registered(entity);
  const InboundSummary s = inbound_summary(entity);
  const double direct = s.raters == 0 ? params.initial_dtd : s.mean_dtd;
  const auto rp = view.reputations.find(entity);
  const double reputation = rp == view.reputations.end() ? params.initial_rp : rp->second;
  return params.gamma * direct + (1.0 - params.gamma) * reputation;
}

DomainTrustView TrustLedger::next_epoch(const DomainTrustView& view) const {
  DomainTrustView next;
  next.domain = domain_;
  next.epoch = view.epoch + 1;
  for (const auto& e : entities_) {
    next.reputations[e] = compute_reputation(e, view);
  }
  for (const auto& e : entities_) {
    next.domain_trust[e] = compute_domain_trust(e, next);
  }
  return next;
}

const DomainTrustView& TrustLedger::advance_epoch() {
  view_ = next_epoch(view_);
  return view_;
}

DomainTrustView TrustLedger::snapshot() const {
  DomainTrustView snap = view_;
  for (const auto& e : entities_) {
    const InboundSummary s = inbound_summary(e);
    if (s.raters > 0) snap.inbound.emplace(e, s);
  }
  return snap;
}

double TrustLedger::trust_of(const EntityId& entity) const {
  require_registered(entity);
  return view_.domain_trust.at(entity);
}

double TrustLedger::reputation_of(const EntityId& entity) const {
  require_registered(entity);
  return view_.reputations.at(entity);
}

}  // namespace trustac
