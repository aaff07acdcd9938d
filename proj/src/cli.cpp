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


#include "trustac/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "format.hpp"
#include "trustac/scenario.hpp"
#include "trustac/simulator.hpp"
#include "trustac/trace_io.hpp"

namespace trustac {

namespace {

namespace fs = std::filesystem;
using detail::short_real;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Scenario load_checked(const std::string& path, std::optional<std::uint64_t> seed) {
  Scenario s = load_scenario(path);
  if (seed) s.seed = *seed;
  auto violations = validate_scenario(s);
  if (!violations.empty()) throw ScenarioError(std::move(violations));
  return s;
}

std::string reason_text(const Decision& d) {
  return d.reason ? std::string(to_string(*d.reason)) : "-";
}

std::string event_summary(const TraceEvent& ev) {
  struct Visitor {
    std::string operator()(const AuthenticationRecord& r) const {
      return "auth-failure " + r.request_id + " " + r.entity.str() + " " + r.error;
    }
    std::string operator()(const LocalDecisionRecord& r) const {
      return "local " + r.request.request_id + " " + r.request.requester.str() + " " +
             r.request.role.name() + " " + r.request.resource + " " +
             std::string(to_string(r.result.decision.outcome)) + " " +
             reason_text(r.result.decision) + " trust=" +
             short_real(r.result.decision.trust_at_decision);
    }
    std::string operator()(const CrossDecisionRecord& r) const {
      return "cross " + r.request.request_id + " " + r.request.requester.str() + " -> " +
             r.request.target_domain + " " + r.request.resource + " " +
             std::string(to_string(r.result.decision.outcome)) + " " +
             reason_text(r.result.decision) + " trust=" + short_real(r.result.effective_trust);
    }
    std::string operator()(const FeedbackRecord& r) const {
      return "feedback " + r.request_id + " " + r.requester.str() + "->" + r.provider.str() + " " +
             short_real(r.requester_rates_provider) + " / " + r.provider.str() + "->" +
             r.requester.str() + " " + short_real(r.provider_rates_requester);
    }
    std::string operator()(const EpochRecord& r) const {
      std::string s = "epoch";
      for (const auto& v : r.views) s += " " + v.domain + "#" + std::to_string(v.epoch);
      return s;
    }
  };
  return std::to_string(ev.seq) + "\t" + std::to_string(ev.time) + "\t" +
         std::visit(Visitor{}, ev.payload);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoFailure("cannot write " + path.string());
  f << content;
  f.flush();
  if (!f) throw IoFailure("write failed for " + path.string());
}

void print_trust_state(const Federation& fed, std::ostream& out) {
  for (const auto& d : fed.domains()) {
    const TrustLedger& ledger = fed.domain(d).ledger();
    out << "domain " << d << " (epoch " << ledger.view().epoch << ")\n";
    for (const auto& e : ledger.entities()) {
      out << "  " << e.str() << "\tTD=" << short_real(ledger.trust_of(e))
          << "\tRp=" << short_real(ledger.reputation_of(e)) << "\n";
    }
  }
  out << "domain-pair trust\n";
  for (const auto& [key, p] : fed.pair_trust_matrix()) {
    out << "  " << p.observer << " -> " << p.observed << "\tdtd=" << short_real(p.cross_dtd)
        << "\trp=" << short_real(p.cross_rp) << "\ttd=" << short_real(p.cross_td) << "\n";
  }
}

nlohmann::json trust_state_json(const Federation& fed) {
  nlohmann::json views = nlohmann::json::array();
  for (const auto& d : fed.domains()) views.push_back(to_json(fed.domain(d).ledger().view()));
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [key, p] : fed.pair_trust_matrix()) pairs.push_back(to_json(p));
  return {{"domains", std::move(views)}, {"pair_trust", std::move(pairs)}};
}

int cmd_run(const std::string& path, std::optional<std::uint64_t> seed,
            const std::optional<std::string>& out_dir, const std::string& format,
            std::ostream& out) {
  const Scenario s = load_checked(path, seed);
  const SimulationResult res = run_scenario(s);
  const std::string jsonl = trace_to_jsonl(res.trace);
  const std::string csv = trajectories_to_csv(res.trajectories);

  if (out_dir) {
    std::error_code ec;
    fs::create_directories(*out_dir, ec);
    if (ec) throw IoFailure("cannot create " + *out_dir + ": " + ec.message());
    write_file(fs::path(*out_dir) / "trace.jsonl", jsonl);
    write_file(fs::path(*out_dir) / "trajectories.csv", csv);
  }
  if (format == "jsonl") {
    out << jsonl;
  } else if (format == "csv") {
    out << csv;
  } else {
    for (const auto& ev : res.trace) out << event_summary(ev) << "\n";
    out << res.trace.size() << " events\n";
  }
  return kExitOk;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const Scenario s = load_scenario(path);
  auto violations = validate_scenario(s);
  if (!violations.empty()) throw ScenarioError(std::move(violations));
  out << "ok: " << s.domains.size() << " domains, " << s.entities.size() << " entities, "
      << s.schedule.size() << " scheduled events\n";
  return kExitOk;
}

int cmd_convert(const std::string& path, const std::string& role, const std::string& target,
                std::ostream& out) {
  const Scenario s = load_checked(path, std::nullopt);
  const Federation fed = build_federation(s);
  const RoleId outer = RoleId::parse(role);
  if (!fed.has_domain(outer.domain())) {
    throw Error(ErrorCode::kUnknownDomain, "unknown domain " + outer.domain());
  }
  if (!fed.has_domain(target)) throw Error(ErrorCode::kUnknownDomain, "unknown domain " + target);
  const ConversionResult r = fed.convert(outer, target);

  const CorrelationSet* cs = fed.correlations(outer.domain(), target);
  out << "outer role: " << outer.str() << "\n";
  out << "target domain: " << target << "\n";
  if (r.local_role) {
    out << "converted: " << r.local_role->str() << (r.guest_fallback ? " (guest fallback)" : "")
        << (r.tie_broken ? " (tie broken)" : "") << "\n";
  } else {
    out << "converted: no conversion (deny)\n";
  }
  out << "candidates:";
  if (r.candidates.empty()) out << " none";
  for (const auto& c : r.candidates) out << " " << c.str();
  out << "\n";
  if (r.via) {
    out << "via: " << r.via->outer_role.str() << " -> " << r.via->local_role.str() << " ("
        << to_string(r.via->kind) << ")\n";
  } else {
    out << "via: none\n";
  }
  out << "policy: "
      << (cs && cs->classification() ? std::string(to_string(*cs->classification())) : "none")
      << "\n";
  return kExitOk;
}

int cmd_decide(const std::string& path, const std::string& requester_text, const std::string& role,
               const std::string& resource, const std::optional<std::string>& cross,
               std::ostream& out) {
  const Scenario s = load_checked(path, std::nullopt);
  Federation fed = build_federation(s);
  const EntityId requester = EntityId::parse(requester_text);
  if (!fed.has_domain(requester.domain())) {
    throw Error(ErrorCode::kUnknownDomain, "unknown domain " + requester.domain());
  }
  const EntitySpec* spec = s.find_entity(requester.str());
  if (spec == nullptr) throw Error(ErrorCode::kUnknownEntity, "unknown entity " + requester.str());
  const RoleId role_id(requester.domain(), role);
  const std::string id = "decide-0";
  fed.set_clock(1);

  std::optional<Certificate> cert;
  if (!cross) {
    AccessControlCenter& aac = fed.domain(requester.domain());
    if (!aac.resource_owner(resource)) {
      throw Error(ErrorCode::kUnknownResource, "unknown resource " + resource);
    }
    aac.authenticate({requester, spec->secret});
    const AuthorizationResult res = aac.authorize_local({requester, role_id, resource, id});
    out << "outcome: " << to_string(res.decision.outcome) << "\n";
    out << "reason: " << reason_text(res.decision) << "\n";
    out << "trust_at_decision: " << short_real(res.decision.trust_at_decision) << "\n";
    out << "trace:\n";
    for (const auto& st : res.trace.steps) {
      out << "  " << stage_label(st.stage) << "\t" << st.detail << "\n";
    }
    cert = res.certificate;
  } else {
    if (!fed.has_domain(*cross)) throw Error(ErrorCode::kUnknownDomain, "unknown domain " + *cross);
    std::map<EntityId, BehaviorProfile> profiles;
    for (const auto& e : s.entities) {
      profiles.emplace(EntityId(e.domain, e.name), s.profiles.at(e.profile));
    }
    const FeedbackSource feedback = [&](const EntityId& visitor, const EntityId& provider) {
      return CrossFeedback{ExperienceRating(profiles.at(provider).sample(s.seed, 0, 0)),
                           ExperienceRating(profiles.at(visitor).sample(s.seed, 0, 1))};
    };
    const CrossDomainResult res = fed.request_cross_domain_access(
        {requester, requester.domain(), *cross, role_id, resource, id}, feedback);
    out << "outcome: " << to_string(res.decision.outcome) << "\n";
    out << "reason: " << reason_text(res.decision) << "\n";
    out << "trust_at_decision: " << short_real(res.decision.trust_at_decision) << "\n";
    out << "effective_trust: " << short_real(res.effective_trust) << "\n";
    out << "trace:\n";
    for (const auto& st : res.trace.steps) {
      out << "  " << step_label(st.step) << "\t" << (st.ok ? "ok" : "fail") << "\t" << st.digest
          << "\t" << st.detail << "\n";
    }
    cert = res.access_certificate;
  }
  if (cert) {
    out << "certificate: " << cert->holder.str() << " " << cert->granted_role.str() << " "
        << cert->resource << " digest " << payload_digest(cert->canonical_payload()) << "\n";
  }
  return kExitOk;
}

int cmd_trust_report(const std::string& path, std::optional<std::uint64_t> seed,
                     const std::string& format, std::ostream& out) {
  const Scenario s = load_checked(path, seed);
  Simulator sim(s);
  sim.run();
  if (format == "jsonl") {
    out << trust_state_json(sim.federation()).dump() << "\n";
  } else {
    print_trust_state(sim.federation(), out);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trust-aware multi-domain access control simulator", "trustac"};
  app.require_subcommand(1);

  std::string path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::string format = "table";
  std::string role, target, requester, resource;
  std::optional<std::string> cross;

  auto* run = app.add_subcommand("run", "Run a scenario and export its trace");
  run->add_option("scenario", path, "Scenario file")->required();
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--out", out_dir, "Write trace.jsonl and trajectories.csv here");
  run->add_option("--format", format, "Standard output format")
      ->check(CLI::IsMember({"table", "jsonl", "csv"}));

  auto* validate = app.add_subcommand("validate", "Check a scenario file");
  validate->add_option("scenario", path, "Scenario file")->required();

  auto* convert = app.add_subcommand("convert-role", "Convert an outer role into a target domain");
  convert->add_option("scenario", path, "Scenario file")->required();
  convert->add_option("--role", role, "Outer role as domain:name")->required();
  convert->add_option("--target", target, "Target domain")->required();

  auto* decide = app.add_subcommand("decide", "Evaluate one request over the initial state");
  decide->add_option("scenario", path, "Scenario file")->required();
  decide->add_option("--requester", requester, "Requester as domain:name")->required();
  decide->add_option("--role", role, "Role name in the requester's domain")->required();
  decide->add_option("--resource", resource, "Resource name")->required();
  decide->add_option("--cross", cross, "Target domain of a cross-domain request");

  auto* report = app.add_subcommand("trust-report", "Run a scenario and print final trust");
  report->add_option("scenario", path, "Scenario file")->required();
  report->add_option("--seed", seed, "Override the scenario seed");
  report->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "jsonl"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (run->parsed()) return cmd_run(path, seed, out_dir, format, out);
    if (validate->parsed()) return cmd_validate(path, out);
    if (convert->parsed()) return cmd_convert(path, role, target, out);
    if (decide->parsed()) return cmd_decide(path, requester, role, resource, cross, out);
    if (report->parsed()) return cmd_trust_report(path, seed, format, out);
  } catch (const ScenarioIoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ScenarioError& e) {
    err << "invalid scenario:\n";
    for (const auto& v : e.violations()) err << "  " << v << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace trustac
