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


#include "trustac/scenario.hpp"

#include <cmath>
#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace trustac {

using nlohmann::json;

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kLocalRequest: return "local_request";
    case EventKind::kCrossRequest: return "cross_request";
    case EventKind::kEpochAdvance: return "epoch_advance";
  }
  return "?";
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
  return out;
}

// Collects every structural problem instead of stopping at the first.
class Reader {
 public:
  std::vector<std::string> errors;

  void fail(const std::string& path, const std::string& msg) { errors.push_back(path + ": " + msg); }

  const json* member(const json& obj, const char* key, const std::string& path, bool required) {
    if (!obj.is_object()) {
      fail(path, "expected an object");
      return nullptr;
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(path + "." + key, "missing");
      return nullptr;
    }
    return &*it;
  }

  std::string str(const json& obj, const char* key, const std::string& path, bool required = true,
                  std::string fallback = {}) {
    const json* v = member(obj, key, path, required);
    if (v == nullptr) return fallback;
    if (!v->is_string()) {
      fail(path + "." + key, "expected a string");
      return fallback;
    }
    return v->get<std::string>();
  }

  std::optional<std::string> opt_str(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key)) return std::nullopt;
    return str(obj, key, path);
  }

  double real(const json& obj, const char* key, const std::string& path, bool required,
              double fallback) {
    const json* v = member(obj, key, path, required);
    if (v == nullptr) return fallback;
    if (!v->is_number()) {
      fail(path + "." + key, "expected a number");
      return fallback;
    }
    return v->get<double>();
  }

  std::uint64_t count(const json& obj, const char* key, const std::string& path, bool required,
                      std::uint64_t fallback) {
    const json* v = member(obj, key, path, required);
    if (v == nullptr) return fallback;
    if (!v->is_number_unsigned()) {
      fail(path + "." + key, "expected a non-negative integer");
      return fallback;
    }
    return v->get<std::uint64_t>();
  }

  bool boolean(const json& obj, const char* key, const std::string& path, bool fallback) {
    const json* v = member(obj, key, path, false);
    if (v == nullptr) return fallback;
    if (!v->is_boolean()) {
      fail(path + "." + key, "expected true or false");
      return fallback;
    }
    return v->get<bool>();
  }

  const json* array(const json& obj, const char* key, const std::string& path, bool required) {
    const json* v = member(obj, key, path, required);
    if (v == nullptr) return nullptr;
    if (!v->is_array()) {
      fail(path + "." + key, "expected an array");
      return nullptr;
    }
    return v;
  }

  std::vector<std::string> strings(const json& obj, const char* key, const std::string& path) {
    std::vector<std::string> out;
    const json* arr = array(obj, key, path, false);
    if (arr == nullptr) return out;
    for (std::size_t i = 0; i < arr->size(); ++i) {
      const auto& v = (*arr)[i];
      if (!v.is_string()) {
        fail(path + "." + key + "[" + std::to_string(i) + "]", "expected a string");
        continue;
      }
      out.push_back(v.get<std::string>());
    }
    return out;
  }
};

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

PolicyDatabase read_policy(Reader& r, const json& obj, const std::string& path) {
  PolicyDatabase p;
  if (!obj.is_object()) {
    r.fail(path, "expected an object");
    return p;
  }
  p.trust.alpha = r.real(obj, "alpha", path, false, p.trust.alpha);
  p.trust.beta = r.real(obj, "beta", path, false, p.trust.beta);
  p.trust.gamma = r.real(obj, "gamma", path, false, p.trust.gamma);
  p.trust.initial_qos = r.real(obj, "initial_qos", path, false, p.trust.initial_qos);
  p.trust.initial_dtd = r.real(obj, "initial_dtd", path, false, p.trust.initial_dtd);
  p.trust.initial_rp = r.real(obj, "initial_rp", path, false, p.trust.initial_rp);
  p.permit_threshold = r.real(obj, "permit_threshold", path, false, p.permit_threshold);
  p.certificate_ttl = r.count(obj, "certificate_ttl", path, false, p.certificate_ttl);
  p.cross.delta = r.real(obj, "delta", path, false, p.cross.delta);
  p.cross.default_theta = r.real(obj, "default_theta", path, false, p.cross.default_theta);

  if (const json* t = r.member(obj, "resource_thresholds", path, false)) {
    if (!t->is_object()) {
      r.fail(path + ".resource_thresholds", "expected an object");
    } else {
      for (const auto& [resource, v] : t->items()) {
        if (!v.is_number()) {
          r.fail(path + ".resource_thresholds." + resource, "expected a number");
          continue;
        }
        p.resource_thresholds[resource] = v.get<double>();
      }
    }
  }

  const std::string mode = r.str(obj, "theta_mode", path, false, "uniform");
  if (mode == "uniform") {
    p.cross.theta_mode = ThetaMode::kUniform;
  } else if (mode == "explicit") {
    p.cross.theta_mode = ThetaMode::kExplicit;
  } else if (mode == "direct_trust") {
    p.cross.theta_mode = ThetaMode::kDirectTrust;
  } else {
    r.fail(path + ".theta_mode", "expected uniform, explicit or direct_trust");
  }
  if (const json* t = r.member(obj, "theta", path, false)) {
    if (!t->is_object()) {
      r.fail(path + ".theta", "expected an object");
    } else {
      for (const auto& [key, v] : t->items()) {
        try {
          if (!v.is_number()) throw Error(ErrorCode::kInvalidArgument, "expected a number");
          p.cross.theta.emplace(EntityId::parse(key), v.get<double>());
        } catch (const Error& e) {
          r.fail(path + ".theta." + key, e.what());
        }
      }
    }
  }
  return p;
}

CorrelationKind read_kind(Reader& r, const json& obj, const std::string& path) {
  const std::string kind = r.str(obj, "kind", path, false, "transitive");
  if (kind == "transitive") return CorrelationKind::kTransitive;
  if (kind == "non-transitive" || kind == "non_transitive") return CorrelationKind::kNonTransitive;
  r.fail(path + ".kind", "expected transitive or non-transitive");
  return CorrelationKind::kTransitive;
}

}  // namespace

const DomainSpec* Scenario::find_domain(const DomainId& id) const {
  for (const auto& d : domains) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

const EntitySpec* Scenario::find_entity(const std::string& qualified) const {
  for (const auto& e : entities) {
    if (e.domain + ":" + e.name == qualified) return &e;
  }
  return nullptr;
}

ScenarioError::ScenarioError(std::vector<std::string> violations)
    : Error(ErrorCode::kInvalidScenario, join(violations)), violations_(std::move(violations)) {}

Scenario parse_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioError({std::string("document: ") + e.what()});
  }

  Reader r;
  Scenario s;
  if (!doc.is_object()) throw ScenarioError({"document: expected an object"});

  s.seed = r.count(doc, "seed", "$", false, 0);
  s.rounds = r.count(doc, "rounds", "$", false, 1);

  if (const json* profiles = r.member(doc, "profiles", "$", false)) {
    if (!profiles->is_object()) {
      r.fail("$.profiles", "expected an object");
    } else {
      for (const auto& [name, p] : profiles->items()) {
        const std::string path = "$.profiles." + name;
        BehaviorProfile bp;
        bp.name = name;
        const std::string kind = r.str(p, "kind", path, false, "uniform");
        if (kind == "uniform") {
          bp.kind = ProfileKind::kUniform;
        } else if (kind == "oscillating") {
          bp.kind = ProfileKind::kOscillating;
        } else {
          r.fail(path + ".kind", "expected uniform or oscillating");
        }
        bp.mean = r.real(p, "mean", path, true, 0.0);
        bp.spread = r.real(p, "spread", path, false, 0.0);
        bp.period = r.count(p, "period", path, false, 1);
        s.profiles.emplace(name, bp);
      }
    }
  }

  if (const json* domains = r.array(doc, "domains", "$", true)) {
    for (std::size_t i = 0; i < domains->size(); ++i) {
      const json& d = (*domains)[i];
      const std::string path = at("$.domains", i);
      DomainSpec spec;
      spec.id = r.str(d, "id", path);
      spec.guest = r.str(d, "guest", path, false);
      spec.signing_key = r.str(d, "signing_key", path, false);
      if (const json* roles = r.array(d, "roles", path, true)) {
        for (std::size_t j = 0; j < roles->size(); ++j) {
          const json& role = (*roles)[j];
          const std::string rpath = at(path + ".roles", j);
          RoleSpec rs;
          rs.name = r.str(role, "name", rpath);
          rs.parents = r.strings(role, "parents", rpath);
          if (const json* perms = r.array(role, "permissions", rpath, false)) {
            for (std::size_t k = 0; k < perms->size(); ++k) {
              const std::string ppath = at(rpath + ".permissions", k);
              rs.permissions.push_back({r.str((*perms)[k], "name", ppath),
                                        r.str((*perms)[k], "resource", ppath)});
            }
          }
          spec.roles.push_back(std::move(rs));
        }
      }
      if (const json* policy = r.member(d, "policy", path, false)) {
        spec.policy = read_policy(r, *policy, path + ".policy");
      }
      if (const json* resources = r.array(d, "resources", path, false)) {
        for (std::size_t j = 0; j < resources->size(); ++j) {
          const std::string rpath = at(path + ".resources", j);
          spec.resources.push_back({r.str((*resources)[j], "name", rpath),
                                    r.str((*resources)[j], "owner", rpath)});
        }
      }
      s.domains.push_back(std::move(spec));
    }
  }

  if (const json* entities = r.array(doc, "entities", "$", false)) {
    for (std::size_t i = 0; i < entities->size(); ++i) {
      const json& e = (*entities)[i];
      const std::string path = at("$.entities", i);
      EntitySpec spec;
      const std::string id = r.str(e, "id", path);
      if (!id.empty()) {
        try {
          const EntityId parsed = EntityId::parse(id);
          spec.domain = parsed.domain();
          spec.name = parsed.name();
        } catch (const Error& err) {
          r.fail(path + ".id", err.what());
        }
      }
      spec.secret = r.str(e, "secret", path);
      spec.profile = r.str(e, "profile", path);
      spec.roles = r.strings(e, "roles", path);
      s.entities.push_back(std::move(spec));
    }
  }

  if (const json* sets = r.array(doc, "correlations", "$", false)) {
    for (std::size_t i = 0; i < sets->size(); ++i) {
      const json& c = (*sets)[i];
      const std::string path = at("$.correlations", i);
      CorrelationSetSpec spec;
      spec.outer_domain = r.str(c, "outer", path);
      spec.local_domain = r.str(c, "local", path);
      if (const json* entries = r.array(c, "entries", path, true)) {
        for (std::size_t j = 0; j < entries->size(); ++j) {
          const std::string epath = at(path + ".entries", j);
          CorrelationSpec cs;
          cs.outer_role = r.str((*entries)[j], "outer_role", epath);
          cs.local_role = r.str((*entries)[j], "local_role", epath);
          cs.kind = read_kind(r, (*entries)[j], epath);
          spec.entries.push_back(std::move(cs));
        }
      }
      s.correlations.push_back(std::move(spec));
    }
  }

  if (const json* fed = r.member(doc, "federation", "$", false)) {
    s.federation.interdomain_threshold =
        r.real(*fed, "interdomain_threshold", "$.federation", false, s.federation.interdomain_threshold);
    s.federation.update_reverse = r.boolean(*fed, "update_reverse", "$.federation", s.federation.update_reverse);
    s.federation.certificate_ttl =
        r.count(*fed, "certificate_ttl", "$.federation", false, s.federation.certificate_ttl);
    s.federation.signing_key = r.str(*fed, "signing_key", "$.federation", false, "");
  }
  if (s.federation.signing_key.empty()) {
    s.federation.signing_key = "federation:" + std::to_string(s.seed);
  }

  if (const json* init = r.member(doc, "initial_state", "$", false)) {
    const std::string path = "$.initial_state";
    s.initial.epochs = r.count(*init, "epochs", path, false, 0);
    if (const json* hist = r.array(*init, "history", path, false)) {
      for (std::size_t i = 0; i < hist->size(); ++i) {
        const std::string hpath = at(path + ".history", i);
        HistorySpec h;
        h.rater = r.str((*hist)[i], "rater", hpath);
        h.ratee = r.str((*hist)[i], "ratee", hpath);
        h.ex = r.real((*hist)[i], "ex", hpath, true, 0.0);
        h.ledger = r.str((*hist)[i], "ledger", hpath, false);
        if (h.ledger.empty()) h.ledger = h.rater.substr(0, h.rater.find(':'));
        s.initial.history.push_back(std::move(h));
      }
    }
    if (const json* pairs = r.array(*init, "pair_trust", path, false)) {
      for (std::size_t i = 0; i < pairs->size(); ++i) {
        const std::string ppath = at(path + ".pair_trust", i);
        const json& p = (*pairs)[i];
        PairTrustSpec spec;
        spec.observer = r.str(p, "observer", ppath);
        spec.observed = r.str(p, "observed", ppath);
        spec.dtd = r.real(p, "dtd", ppath, true, 0.0);
        spec.rp = r.real(p, "rp", ppath, true, 0.0);
        if (p.is_object() && p.contains("td")) spec.td = r.real(p, "td", ppath, true, 0.0);
        s.initial.pair_trust.push_back(spec);
      }
    }
  }

  if (const json* sched = r.array(doc, "schedule", "$", false)) {
    for (std::size_t i = 0; i < sched->size(); ++i) {
      const json& e = (*sched)[i];
      const std::string path = at("$.schedule", i);
      ScheduledEvent ev;
      const std::string type = r.str(e, "type", path);
      if (type == "local_request") {
        ev.kind = EventKind::kLocalRequest;
      } else if (type == "cross_request") {
        ev.kind = EventKind::kCrossRequest;
      } else if (type == "epoch_advance") {
        ev.kind = EventKind::kEpochAdvance;
      } else if (!type.empty()) {
        r.fail(path + ".type", "expected local_request, cross_request or epoch_advance");
      }
      if (ev.kind != EventKind::kEpochAdvance) {
        ev.requester = r.str(e, "requester", path);
        ev.role = r.str(e, "role", path);
        ev.resource = r.str(e, "resource", path);
        ev.secret = r.opt_str(e, "secret", path);
      }
      if (ev.kind == EventKind::kCrossRequest) ev.target = r.str(e, "target", path);
      if (ev.kind == EventKind::kEpochAdvance) ev.domain = r.opt_str(e, "domain", path);
      s.schedule.push_back(std::move(ev));
    }
  }

  for (auto& d : s.domains) {
    if (d.signing_key.empty()) d.signing_key = "domain:" + d.id + ":" + std::to_string(s.seed);
  }

  if (!r.errors.empty()) throw ScenarioError(std::move(r.errors));
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioIoError("cannot read scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ScenarioIoError("error reading scenario file " + path.string());
  return parse_scenario(buf.str());
}

RoleHierarchy build_hierarchy(const DomainSpec& spec) {
  RoleHierarchy h(spec.id);
  for (const auto& role : spec.roles) {
    std::set<PermissionId> perms;
    for (const auto& p : role.permissions) perms.emplace(p.name, p.resource);
    h.add_role(role.name, {}, std::move(perms));
  }
  for (const auto& role : spec.roles) {
    for (const auto& parent : role.parents) h.add_edge(parent, role.name);
  }
  if (!spec.guest.empty()) h.set_guest(spec.guest);
  return h;
}

CorrelationSet build_correlations(const CorrelationSetSpec& spec) {
  CorrelationSet cs(spec.outer_domain, spec.local_domain);
  for (const auto& e : spec.entries) {
    cs.add({RoleId(spec.outer_domain, e.outer_role), RoleId(spec.local_domain, e.local_role), e.kind});
  }
  return cs;
}

std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> out;
  const auto add = [&](const std::string& where, const std::string& what) {
    out.push_back(where + ": " + what);
  };

  if (s.rounds == 0) add("$.rounds", "must be at least 1");
  for (const auto& [name, p] : s.profiles) {
    for (const auto& v : p.violations()) add("$.profiles." + name, v);
  }

  std::map<DomainId, RoleHierarchy> hierarchies;
  std::set<DomainId> seen_domains;
  for (std::size_t i = 0; i < s.domains.size(); ++i) {
    const DomainSpec& d = s.domains[i];
    const std::string path = at("$.domains", i);
    if (d.id.empty() || d.id.find(':') != std::string::npos) {
      add(path + ".id", "domain id must be non-empty and contain no ':'");
      continue;
    }
    if (!seen_domains.insert(d.id).second) {
      add(path + ".id", "duplicate domain " + d.id);
      continue;
    }
    std::set<std::string> names;
    bool roles_ok = true;
    for (std::size_t j = 0; j < d.roles.size(); ++j) {
      const RoleSpec& role = d.roles[j];
      if (role.name.empty() || !names.insert(role.name).second) {
        add(at(path + ".roles", j), "role name empty or duplicated: '" + role.name + "'");
        roles_ok = false;
      }
      for (std::size_t k = 0; k < role.permissions.size(); ++k) {
        if (role.permissions[k].name.empty()) {
          add(at(at(path + ".roles", j) + ".permissions", k), "permission name must be non-empty");
          roles_ok = false;
        }
      }
    }
    if (!roles_ok) continue;
    RoleHierarchy h = build_hierarchy(d);
    for (const auto& v : h.validate()) add(path, std::string(to_string(v.kind)) + ": " + v.detail);
    if (d.roles.empty()) add(path + ".roles", "a domain needs at least its guest role");
    for (const auto& v : d.policy.violations()) add(path + ".policy", v);
    for (std::size_t j = 0; j < d.resources.size(); ++j) {
      const auto& res = d.resources[j];
      if (res.name.empty()) add(at(path + ".resources", j), "resource name must be non-empty");
      if (s.find_entity(d.id + ":" + res.owner) == nullptr) {
        add(at(path + ".resources", j), "owner " + d.id + ":" + res.owner + " is not a declared entity");
      }
    }
    hierarchies.emplace(d.id, std::move(h));
  }

  std::set<std::string> seen_entities;
  for (std::size_t i = 0; i < s.entities.size(); ++i) {
    const EntitySpec& e = s.entities[i];
    const std::string path = at("$.entities", i);
    const std::string id = e.domain + ":" + e.name;
    if (!seen_entities.insert(id).second) add(path, "duplicate entity " + id);
    if (e.secret.empty()) add(path + ".secret", "must be non-empty");
    if (!s.profiles.contains(e.profile)) add(path + ".profile", "unknown profile '" + e.profile + "'");
    const auto h = hierarchies.find(e.domain);
    if (h == hierarchies.end()) {
      add(path + ".id", "unknown domain " + e.domain);
      continue;
    }
    for (const auto& role : e.roles) {
      if (!h->second.contains(role)) add(path + ".roles", "unknown role " + e.domain + ":" + role);
    }
  }

  for (std::size_t i = 0; i < s.correlations.size(); ++i) {
    const auto& c = s.correlations[i];
    const std::string path = at("$.correlations", i);
    const auto outer = hierarchies.find(c.outer_domain);
    const auto local = hierarchies.find(c.local_domain);
    if (outer == hierarchies.end() || local == hierarchies.end() || c.outer_domain == c.local_domain) {
      add(path, "correlations need two distinct declared domains");
      continue;
    }
    bool ok = true;
    for (std::size_t j = 0; j < c.entries.size(); ++j) {
      const auto& entry = c.entries[j];
      if (!outer->second.contains(entry.outer_role)) {
        add(at(path + ".entries", j), "unknown outer role " + c.outer_domain + ":" + entry.outer_role);
        ok = false;
      }
      if (!local->second.contains(entry.local_role)) {
        add(at(path + ".entries", j), "unknown local role " + c.local_domain + ":" + entry.local_role);
        ok = false;
      }
    }
    if (ok) {
      try {
        classify_policy(build_correlations(c), outer->second, local->second);
      } catch (const Error& e) {
        add(path, e.what());
      }
    }
  }

  const double t = s.federation.interdomain_threshold;
  if (!(std::isfinite(t) && t >= -1.0 && t <= 1.0)) {
    add("$.federation.interdomain_threshold", "must lie in [-1, 1]");
  }
  if (s.federation.certificate_ttl == 0) add("$.federation.certificate_ttl", "must be positive");

  for (std::size_t i = 0; i < s.initial.history.size(); ++i) {
    const auto& h = s.initial.history[i];
    const std::string path = at("$.initial_state.history", i);
    if (!hierarchies.contains(h.ledger)) add(path + ".ledger", "unknown domain " + h.ledger);
    if (s.find_entity(h.rater) == nullptr) add(path + ".rater", "unknown entity " + h.rater);
    if (s.find_entity(h.ratee) == nullptr) add(path + ".ratee", "unknown entity " + h.ratee);
    if (h.rater == h.ratee) add(path, "an entity cannot rate itself");
    if (!is_valid_rating(h.ex)) add(path + ".ex", "must lie strictly inside (-1, 1)");
  }
  for (std::size_t i = 0; i < s.initial.pair_trust.size(); ++i) {
    const auto& p = s.initial.pair_trust[i];
    const std::string path = at("$.initial_state.pair_trust", i);
    if (!hierarchies.contains(p.observer) || !hierarchies.contains(p.observed) ||
        p.observer == p.observed) {
      add(path, "pair trust needs two distinct declared domains");
    }
    const auto in_range = [](double v) { return std::isfinite(v) && v >= -1.0 && v <= 1.0; };
    if (!in_range(p.dtd) || !in_range(p.rp) || (p.td && !in_range(*p.td))) {
      add(path, "values must lie in [-1, 1]");
    }
  }

  for (std::size_t i = 0; i < s.schedule.size(); ++i) {
    const ScheduledEvent& ev = s.schedule[i];
    const std::string path = at("$.schedule", i);
    if (ev.kind == EventKind::kEpochAdvance) {
      if (ev.domain && !hierarchies.contains(*ev.domain)) add(path, "unknown domain " + *ev.domain);
      continue;
    }
    const EntitySpec* who = s.find_entity(ev.requester);
    if (who == nullptr) {
      add(path, "unknown entity " + ev.requester);
      continue;
    }
    if (std::find(who->roles.begin(), who->roles.end(), ev.role) == who->roles.end()) {
      add(path, ev.requester + " does not hold role " + ev.role);
    }
    const DomainId serving = ev.kind == EventKind::kCrossRequest ? ev.target : who->domain;
    if (ev.kind == EventKind::kCrossRequest && serving == who->domain) {
      add(path, "cross request must target a foreign domain");
    }
    const DomainSpec* dom = s.find_domain(serving);
    if (dom == nullptr) {
      add(path, "unknown domain " + serving);
      continue;
    }
    const auto res = std::find_if(dom->resources.begin(), dom->resources.end(),
                                  [&](const ResourceSpec& r) { return r.name == ev.resource; });
    if (res == dom->resources.end()) {
      add(path, "unknown resource " + ev.resource + " in " + serving);
    } else if (serving + ":" + res->owner == ev.requester) {
      add(path, ev.requester + " cannot request its own resource");
    }
  }
  return out;
}

Federation build_federation(const Scenario& s) {
  if (const auto bad = validate_scenario(s); !bad.empty()) throw ScenarioError(bad);

  Federation fed(s.federation);
  for (const auto& d : s.domains) {
    AccessControlCenter aac(build_hierarchy(d), d.policy, d.signing_key);
    for (const auto& e : s.entities) {
      if (e.domain == d.id) aac.register_entity(EntityId(e.domain, e.name), e.secret);
    }
    for (const auto& r : d.resources) aac.register_resource(r.name, EntityId(d.id, r.owner));
    for (const auto& e : s.entities) {
      if (e.domain != d.id) continue;
      for (const auto& role : e.roles) aac.assign_role(EntityId(e.domain, e.name), RoleId(d.id, role));
    }
    fed.register_domain(std::move(aac));
  }
  for (const auto& c : s.correlations) fed.set_correlations(build_correlations(c));

  for (const auto& h : s.initial.history) {
    AccessControlCenter& aac = fed.domain(h.ledger);
    const EntityId rater = EntityId::parse(h.rater);
    const EntityId ratee = EntityId::parse(h.ratee);
    aac.admit_visitor(rater);
    aac.admit_visitor(ratee);
    aac.import_history(rater, ratee, ExperienceRating(h.ex));
  }
  for (std::uint64_t i = 0; i < s.initial.epochs; ++i) fed.advance_epoch();

  for (const auto& p : s.initial.pair_trust) {
    DomainPairTrust v{p.observer, p.observed, p.dtd, p.rp, 0.0};
    v.cross_td = p.td ? *p.td : compute_cross_td(v, fed.domain(p.observer).policy().cross);
    fed.set_pair_trust(v);
  }
  return fed;
}

}  // namespace trustac
