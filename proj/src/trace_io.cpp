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


#include "trustac/trace_io.hpp"

#include <array>
#include <cstdio>

namespace trustac {

using nlohmann::json;

namespace {

json reason_json(const std::optional<DenyReason>& r) {
  return r ? json(std::string(to_string(*r))) : json(nullptr);
}

json optional_certificate(const std::optional<Certificate>& c) {
  return c ? to_json(*c) : json(nullptr);
}

struct PayloadWriter {
  json& out;

  void operator()(const AuthenticationRecord& r) const {
    out["kind"] = "authentication_failure";
    out["request_id"] = r.request_id;
    out["entity"] = r.entity.str();
    out["error"] = r.error;
  }

  void operator()(const LocalDecisionRecord& r) const {
    out["kind"] = "local_decision";
    out["request"] = {{"request_id", r.request.request_id},
                      {"requester", r.request.requester.str()},
                      {"role", r.request.role.str()},
                      {"resource", r.request.resource}};
    out["decision"] = to_json(r.result.decision);
    out["pipeline"] = to_json(r.result.trace)["steps"];
    out["certificate"] = optional_certificate(r.result.certificate);
  }

  void operator()(const CrossDecisionRecord& r) const {
    out["kind"] = "cross_decision";
    out["request"] = {{"request_id", r.request.request_id},
                      {"requester", r.request.requester.str()},
                      {"home", r.request.home_domain},
                      {"target", r.request.target_domain},
                      {"role", r.request.outer_role.str()},
                      {"resource", r.request.resource}};
    out["decision"] = to_json(r.result.decision);
    out["protocol"] = to_json(r.result.trace)["steps"];
    out["effective_trust"] = r.result.effective_trust;
    out["conversion"] = r.result.conversion ? to_json(*r.result.conversion) : json(nullptr);
    out["interdomain_certificate"] = optional_certificate(r.result.interdomain_certificate);
    out["certificate"] = optional_certificate(r.result.access_certificate);
  }

  void operator()(const FeedbackRecord& r) const {
    out["kind"] = "feedback";
    out["request_id"] = r.request_id;
    out["requester"] = r.requester.str();
    out["provider"] = r.provider.str();
    out["requester_rates_provider"] = {{"ex", r.requester_rates_provider},
                                       {"ledger", r.requester_ledger},
                                       {"record", to_json(r.about_provider)}};
    out["provider_rates_requester"] = {{"ex", r.provider_rates_requester},
                                       {"ledger", r.provider_ledger},
                                       {"record", to_json(r.about_requester)}};
  }

  void operator()(const EpochRecord& r) const {
    out["kind"] = "epoch";
    json views = json::array();
    for (const auto& v : r.views) views.push_back(to_json(v));
    json pairs = json::array();
    for (const auto& p : r.pairs) pairs.push_back(to_json(p));
    out["domains"] = std::move(views);
    out["pair_trust"] = std::move(pairs);
  }
};

}  // namespace

json to_json(const Decision& d) {
  return {{"request_id", d.request_id},
          {"outcome", std::string(to_string(d.outcome))},
          {"reason", reason_json(d.reason)},
          {"trust_at_decision", d.trust_at_decision}};
}

json to_json(const Certificate& c) {
  return {{"holder", c.holder.str()},         {"role", c.granted_role.str()},
          {"resource", c.resource},           {"trust_snapshot", c.trust_snapshot},
          {"issued_at", c.issued_at},         {"expires_at", c.expires_at},
          {"issuer", c.issuer},               {"signature", c.signature}};
}

json to_json(const PipelineTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"stage", std::string(stage_label(s.stage))}, {"detail", s.detail}});
  }
  return {{"request_id", t.request_id}, {"steps", std::move(steps)}};
}

json to_json(const ProtocolTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"step", std::string(step_label(s.step))},
                     {"ok", s.ok},
                     {"digest", s.digest},
                     {"detail", s.detail}});
  }
  return {{"request_id", t.request_id}, {"steps", std::move(steps)}};
}

json to_json(const ConversionResult& r) {
  json candidates = json::array();
  for (const auto& c : r.candidates) candidates.push_back(c.str());
  json via = nullptr;
  if (r.via) {
    via = {{"outer_role", r.via->outer_role.str()},
           {"local_role", r.via->local_role.str()},
           {"kind", std::string(to_string(r.via->kind))}};
  }
  return {{"local_role", r.local_role ? json(r.local_role->str()) : json(nullptr)},
          {"candidates", std::move(candidates)},
          {"via", std::move(via)},
          {"guest_fallback", r.guest_fallback},
          {"tie_broken", r.tie_broken}};
}

json to_json(const PairwiseTrust& p) {
  return {{"rater", p.rater.str()}, {"ratee", p.ratee.str()}, {"k", p.k},
          {"qos", p.qos},           {"dtd", p.dtd},           {"last_ex", p.last_ex}};
}

json to_json(const DomainTrustView& v) {
  json rp = json::object();
  for (const auto& [e, value] : v.reputations) rp[e.str()] = value;
  json td = json::object();
  for (const auto& [e, value] : v.domain_trust) td[e.str()] = value;
  return {{"domain", v.domain}, {"epoch", v.epoch}, {"reputation", std::move(rp)},
          {"domain_trust", std::move(td)}};
}

json to_json(const DomainPairTrust& p) {
  return {{"observer", p.observer}, {"observed", p.observed}, {"dtd", p.cross_dtd},
          {"rp", p.cross_rp},       {"td", p.cross_td}};
}

json to_json(const TraceEvent& ev) {
  json out = {{"seq", ev.seq}, {"time", ev.time}};
  std::visit(PayloadWriter{out}, ev.payload);
  return out;
}

std::string trace_to_jsonl(const std::vector<TraceEvent>& trace) {
  std::string out;
  for (const auto& ev : trace) {
    out += to_json(ev).dump();
    out += '\n';
  }
  return out;
}

std::string trajectories_to_csv(const std::vector<TrajectoryPoint>& points) {
  std::string out = "sample,series,domain,subject,value\n";
  std::array<char, 40> buf{};
  for (const auto& p : points) {
    std::snprintf(buf.data(), buf.size(), "%.17g", p.value);
    out += std::to_string(p.sample) + "," + p.series + "," + p.domain + "," + p.subject + "," +
           buf.data() + "\n";
  }
  return out;
}

}  // namespace trustac
