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


#include "trustac/cross_domain_trust.hpp"

#include <algorithm>
#include <cmath>

#include "trustac/error.hpp"

namespace trustac {

namespace {

// All foreign entities must come from one domain other than the observer's.
void check_foreign(const DomainTrustView& view, const std::set<EntityId>& foreign) {
  if (foreign.empty()) return;
  const DomainId& observed = foreign.begin()->domain();
  for (const auto& e : foreign) {
    if (e.domain() != observed || e.domain() == view.domain) {
      throw Error(ErrorCode::kMixedDomains,
                  e.str() + " does not belong to a single foreign domain of " + view.domain);
    }
  }
}

}  // namespace

std::vector<std::string> CrossParams::violations() const {
  std::vector<std::string> out;
  if (!(std::isfinite(delta) && delta > 0.0 && delta < 1.0)) {
    out.push_back("delta must lie in (0, 1), got " + std::to_string(delta));
  }
  if (!(std::isfinite(default_theta) && default_theta >= 0.0)) {
    out.push_back("default_theta must be >= 0");
  }
  for (const auto& [entity, w] : theta) {
    if (!(std::isfinite(w) && w >= 0.0)) {
      out.push_back("theta for " + entity.str() + " must be >= 0");
    }
  }
  return out;
}

double compute_cross_dtd(const DomainTrustView& observer_view,
                         const std::set<EntityId>& foreign_entities) {
  check_foreign(observer_view, foreign_entities);
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& e : foreign_entities) {
    const auto it = observer_view.inbound.find(e);
    if (it == observer_view.inbound.end() || it->second.raters == 0) continue;
    sum += it->second.mean_dtd;
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

double compute_cross_rp(const DomainTrustView& observer_view,
                        const std::set<EntityId>& foreign_entities, const CrossParams& params) {
  check_foreign(observer_view, foreign_entities);

  struct Contributor {
    double weight;
    double qos;
    double rp;
  };
  std::vector<Contributor> contributors;
  double total = 0.0;
  for (const auto& e : foreign_entities) {
    const auto it = observer_view.inbound.find(e);
    if (it == observer_view.inbound.end() || it->second.raters == 0) continue;
    double w = 1.0;
    switch (params.theta_mode) {
      case ThetaMode::kUniform:
        break;
      case ThetaMode::kExplicit: {
        const auto t = params.theta.find(e);
        w = t == params.theta.end() ? params.default_theta : t->second;
        break;
      }
      case ThetaMode::kDirectTrust:
        w = std::max(0.0, it->second.mean_dtd);
        break;
    }
    const auto rp = observer_view.reputations.find(e);
    contributors.push_back({w, it->second.mean_qos, rp == observer_view.reputations.end() ? 0.0 : rp->second});
    total += w;
  }
  if (contributors.empty()) return 0.0;
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kAllWeightsZero,
                "theta weights of contributors toward " + observer_view.domain + " sum to zero");
  }
  double out = 0.0;
  for (const auto& c : contributors) out += (c.weight / total) * c.qos * c.rp;
  return out;
}

double compute_cross_td(const DomainPairTrust& pair, const CrossParams& params) {
  return params.delta * pair.cross_dtd + (1.0 - params.delta) * pair.cross_rp;
}

}  // namespace trustac
