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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "trustac/trust_core.hpp"
#include "trustac/types.hpp"

namespace trustac {

enum class ThetaMode {
  kUniform,      // every contributor weighs 1
  kExplicit,     // configured per entity, default_theta when absent
  kDirectTrust,  // max(0, direct trust of the entity in the observer)
};

struct CrossParams {
  double delta = 0.5;
  ThetaMode theta_mode = ThetaMode::kUniform;
  std::map<EntityId, double> theta;
  double default_theta = 1.0;

  std::vector<std::string> violations() const;
};

/// How domain `observer` (X) regards domain `observed` (Y).
struct DomainPairTrust {
  DomainId observer;
  DomainId observed;
  double cross_dtd = 0.0;
  double cross_rp = 0.0;
  double cross_td = 0.0;
};

/// Mean direct trust the observer holds toward the given foreign entities,
/// over those that have interacted in the observer domain. 0 when none have.
double compute_cross_dtd(const DomainTrustView& observer_view,
                         const std::set<EntityId>& foreign_entities);

/// Normalized-theta weighted sum of qos * reputation of the contributing
/// foreign entities inside the observer domain. 0 when none contribute.
double compute_cross_rp(const DomainTrustView& observer_view,
                        const std::set<EntityId>& foreign_entities, const CrossParams& params);

/// delta * cross_dtd + (1 - delta) * cross_rp. delta may sit on the closed
/// bounds here.
double compute_cross_td(const DomainPairTrust& pair, const CrossParams& params);

}  // namespace trustac
