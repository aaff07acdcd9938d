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


// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "test_support.hpp"
#include "trustac/cross_domain_trust.hpp"
#include "trustac/trace_io.hpp"
#include "trustac/trust_core.hpp"

namespace trustac {
namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Scenario fixture(const std::string& name) {
  return load_scenario(testing::source_path("data/scenarios/" + name + ".json"));
}

// |qos_k - e| = alpha^k |qos_0 - e| for constant e, alpha in {0.1, 0.5, 0.9},
// k <= 100, within 1e-12; under one second.
Verdict geometric_convergence() {
  Verdict o;
  const auto start = Clock::now();
  double worst = 0.0;
  const double starts[] = {-0.9, 0.0, 0.45};
  const double targets[] = {-0.7, 0.3, 0.95};
  for (double alpha : {0.1, 0.5, 0.9}) {
    for (double q0 : starts) {
      for (double e : targets) {
        TrustParams p;
        p.alpha = alpha;
        p.initial_qos = q0;
        TrustLedger l("D", p);
        const EntityId a("D", "a"), b("D", "b");
        l.register_entity(a);
        l.register_entity(b);
        for (int k = 1; k <= 100; ++k) {
          const double q = l.record_experience(a, b, ExperienceRating(e)).qos;
          const double err = std::abs(std::abs(q - e) - std::pow(alpha, k) * std::abs(q0 - e));
          worst = std::max(worst, err);
        }
      }
    }
  }
  const double t = seconds_since(start);
  if (worst > 1e-12) o.fail("max deviation " + fmt(worst));
  if (t >= 1.0) o.fail("runtime " + fmt(t) + " s");
  o.detail = o.pass ? "max deviation " + fmt(worst) + ", " + fmt(t) + " s" : o.detail;
  return o;
}

// 1e5 random updates over 20 entities, random alpha/beta/gamma/delta; every
// qos, dtd, reputation, domain trust and cross quantity stays in [-1, 1];
// under ten seconds.
Verdict boundedness_fuzz() {
  Verdict o;
  const auto start = Clock::now();
  std::mt19937_64 rng(2024);
  constexpr int kUpdates = 100000;
  constexpr int kPerConfig = 10000;
  std::size_t escapes = 0, checked = 0;
  auto check = [&](double v) {
    ++checked;
    if (!(v >= -1.0 && v <= 1.0)) ++escapes;
  };
  for (int block = 0; block < kUpdates / kPerConfig; ++block) {
    TrustParams p;
    p.alpha = testing::random_weight(rng);
    p.beta = testing::random_weight(rng);
    p.gamma = testing::random_weight(rng);
    CrossParams cp;
    cp.delta = testing::random_weight(rng);
    TrustLedger l("X", p);
    std::vector<EntityId> ids;
    for (int i = 0; i < 20; ++i) {
      ids.emplace_back(i < 12 ? "X" : "Y", "e" + std::to_string(i));
      l.register_entity(ids.back());
    }
    std::set<EntityId> foreign(ids.begin() + 12, ids.end());
    for (int u = 0; u < kPerConfig; ++u) {
      const std::size_t r = rng() % 20;
      std::size_t t = rng() % 20;
      if (t == r) t = (t + 1) % 20;
      const auto& rec = l.record_experience(ids[r], ids[t], ExperienceRating(testing::random_rating(rng)));
      check(rec.qos);
      check(rec.dtd);
      if ((u + 1) % 500 == 0) {
        const auto& v = l.advance_epoch();
        for (const auto& [id, x] : v.reputations) check(x);
        for (const auto& [id, x] : v.domain_trust) check(x);
        const auto snap = l.snapshot();
        DomainPairTrust pair{"X", "Y", compute_cross_dtd(snap, foreign),
                             compute_cross_rp(snap, foreign, cp), 0.0};
        pair.cross_td = compute_cross_td(pair, cp);
        check(pair.cross_dtd);
        check(pair.cross_rp);
        check(pair.cross_td);
      }
    }
  }
  const double t = seconds_since(start);
  if (escapes) o.fail(std::to_string(escapes) + " values escaped");
  if (t >= 10.0) o.fail("runtime " + fmt(t) + " s");
  if (o.pass) o.detail = std::to_string(kUpdates) + " updates, " + std::to_string(checked) +
                         " values checked, 0 escaped, " + fmt(t) + " s";
  return o;
}

// The hand-arithmetic examples for the update, reputation, domain-trust and
// cross-domain formulas, within 1e-12.
Verdict equation_fixtures() {
  Verdict o;
  int n = 0;
  auto expect = [&](const std::string& name, double got, double want) {
    ++n;
    if (std::abs(got - want) > 1e-12) o.fail(name + ": got " + fmt(got) + " want " + fmt(want));
  };
  const EntityId a("D", "a"), b("D", "b"), c("D", "c");

  {  // qos/dtd update with zero history (approached at the open bound)
    TrustLedger l("D", {});
    l.register_entity(a);
    l.register_entity(b);
    const auto& r = l.record_experience(a, b, ExperienceRating(0.999));
    expect("first update qos", r.qos, 0.4995);
    expect("first update dtd", r.dtd, 0.4995);
  }
  {  // fixed point
    TrustParams p;
    p.alpha = 0.35;
    p.initial_qos = 0.3;
    TrustLedger l("D", p);
    l.register_entity(a);
    l.register_entity(b);
    expect("fixed point", l.record_experience(a, b, ExperienceRating(0.3)).qos, 0.3);
  }
  {  // alpha 0.8, beta 0.6, qos 0.5, ex -0.5
    TrustParams p;
    p.alpha = 0.8;
    p.beta = 0.6;
    p.initial_qos = 0.5;
    TrustLedger l("D", p);
    l.register_entity(a);
    l.register_entity(b);
    const auto& r = l.record_experience(a, b, ExperienceRating(-0.5));
    expect("update qos", r.qos, 0.30);
    expect("update dtd", r.dtd, 0.10);
  }
  {  // reputation
    TrustLedger empty("D", {});
    empty.register_entity(a);
    expect("reputation without raters", empty.compute_reputation(a, empty.view()), 0.5);

    TrustParams p;
    p.initial_qos = 0.8;
    TrustLedger l("D", p);
    for (const auto& e : {a, b, c}) l.register_entity(e);
    l.record_experience(b, a, ExperienceRating(0.8));
    l.record_experience(c, a, ExperienceRating(0.0));
    DomainTrustView prior;
    prior.domain = "D";
    prior.reputations = {{b, 0.5}, {c, 0.5}};
    expect("reputation two raters", l.compute_reputation(a, prior), 0.3);
    prior.reputations = {{b, 0.0}, {c, 0.0}};
    expect("reputation zero raters", l.compute_reputation(a, prior), 0.0);
  }
  {  // domain trust
    TrustParams p;
    p.initial_qos = 0.4;
    TrustLedger l("D", p);
    l.register_entity(a);
    l.register_entity(b);
    l.record_experience(b, a, ExperienceRating(0.4));
    DomainTrustView v;
    v.reputations = {{a, 0.3}};
    TrustParams g = p;
    g.gamma = 1.0;
    expect("domain trust gamma 1", l.compute_domain_trust(a, v, g), 0.4);
    g.gamma = 0.5;
    expect("domain trust gamma 0.5", l.compute_domain_trust(a, v, g), 0.35);
    g.gamma = 0.0;
    expect("domain trust gamma 0", l.compute_domain_trust(a, v, g), 0.3);
  }
  {  // cross-domain
    const EntityId y1("Y", "1"), y2("Y", "2");
    DomainTrustView v;
    v.domain = "X";
    expect("cross dtd none", compute_cross_dtd(v, {y1}), 0.0);
    v.inbound[y1] = {1, 0.8, 0.6};
    v.reputations[y1] = 0.5;
    expect("cross dtd single", compute_cross_dtd(v, {y1}), 0.6);
    expect("cross rp single", compute_cross_rp(v, {y1}, {}), 0.4);
    v.inbound[y1] = {1, 0.8, 0.2};
    v.inbound[y2] = {1, 0.4, 0.8};
    v.reputations[y2] = 0.5;
    expect("cross dtd mean", compute_cross_dtd(v, {y1, y2}), 0.5);
    expect("cross rp two", compute_cross_rp(v, {y1, y2}, {}), 0.3);
    v.reputations = {{y1, 0.0}, {y2, 0.0}};
    expect("cross rp zero", compute_cross_rp(v, {y1, y2}, {}), 0.0);
    CrossParams cp;
    DomainPairTrust pair{"X", "Y", 0.5, 0.3, 0.0};
    cp.delta = 1.0;
    expect("cross td delta 1", compute_cross_td(pair, cp), 0.5);
    cp.delta = 0.0;
    expect("cross td delta 0", compute_cross_td(pair, cp), 0.3);
    cp.delta = 0.6;
    expect("cross td delta 0.6", compute_cross_td(pair, cp), 0.42);
  }
  if (o.pass) o.detail = std::to_string(n) + " fixtures exact within 1e-12";
  return o;
}

// 1000 random instances, <= 12 roles per hierarchy, <= 10 correlations of
// mixed kinds; every outer role's conversion equals the enumerator; < 30 s.
Verdict conversion_oracle() {
  Verdict o;
  const auto start = Clock::now();
  std::mt19937_64 rng(99);
  std::size_t roles = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto outer = testing::random_hierarchy(rng, "O", 12, "o");
    const auto local = testing::random_hierarchy(rng, "L", 12, "l");
    const auto corr = testing::random_correlations(rng, outer, local, 10);
    const auto oh = outer.build();
    const auto lh = local.build();
    const auto cs = testing::build_set(outer, local, corr);
    for (std::size_t r = 0; r < outer.names.size(); ++r) {
      const RoleId role("O", outer.names[r]);
      const auto why = testing::compare_conversion(
          convert_role(role, cs, oh, lh),
          testing::brute_force_convert(outer, local, corr, static_cast<int>(r)), role);
      ++roles;
      if (!why.empty()) o.fail("instance " + std::to_string(i) + ": " + why);
    }
  }
  const double t = seconds_since(start);
  if (t >= 30.0) o.fail("runtime " + fmt(t) + " s");
  if (o.pass) o.detail = "1000 instances, " + std::to_string(roles) + " conversions agree, " + fmt(t) + " s";
  return o;
}

// Committed two-domain fixture: Manager -> Professor through correlation 1,
// correlation 2 stays on Engineer, Guest -> Guest through correlation 3.
Verdict conversion_fixture() {
  Verdict o;
  const Federation f = build_federation(fixture("two_domain"));
  const RoleId manager("DM1", "Manager"), engineer("DM1", "Engineer"), guest("DM1", "Guest");
  const RoleId professor("DM0", "Professor"), researcher("DM0", "Researcher"), host_guest("DM0", "Guest");

  const auto m = f.convert(manager, "DM0");
  if (m.local_role != professor) o.fail("Manager did not convert to Professor");
  if (!m.via || m.via->outer_role != manager || m.via->kind != CorrelationKind::kTransitive)
    o.fail("Manager conversion not via correlation 1");

  const auto e = f.convert(engineer, "DM0");
  if (!e.candidates.contains(researcher)) o.fail("Engineer lacks Researcher");
  const RoleHierarchy& outer = f.domain("DM1").hierarchy();
  for (const auto& r : outer.roles()) {
    if (!outer.is_strict_ancestor(r, engineer)) continue;
    if (f.convert(r, "DM0").candidates.contains(researcher))
      o.fail(r.str() + " obtained Researcher through a non-transitive correlation");
  }

  const auto g = f.convert(guest, "DM0");
  if (g.local_role != host_guest) o.fail("Guest did not convert to Guest");
  if (f.correlations("DM1", "DM0")->classification() != PolicyClass::kPartial)
    o.fail("fixture policy is not Partial");

  const Federation d = build_federation(fixture("default_only"));
  if (d.correlations("DM1", "DM0")->classification() != PolicyClass::kDefault)
    o.fail("guest-only set is not Default");
  for (const auto& r : d.domain("DM1").hierarchy().roles()) {
    if (d.convert(r, "DM0").local_role != host_guest) o.fail(r.str() + " not mapped to Guest under Default");
  }
  if (o.pass) o.detail = "Manager->Professor, non-transitive isolation, Guest->Guest under Default";
  return o;
}

// 500 randomized simulated requests: local traces are b..f, cross permits
// carry i..xii, cross denials stop at iii, v or viii.
Verdict protocol_conformance() {
  Verdict o;
  std::mt19937_64 rng(500);
  const auto base = fixture("two_domain");
  std::size_t requests = 0, local = 0, permits = 0;
  std::map<std::string, std::size_t> deny_at;
  for (int i = 0; i < 10; ++i) {
    const auto s = testing::random_scenario(rng, base, 50);
    const auto res = run_scenario(s);
    std::size_t n = 0;
    for (const auto& p : testing::check_simulation(res, &n)) o.fail(p);
    requests += n;
    for (const auto& ev : res.trace) {
      if (std::holds_alternative<LocalDecisionRecord>(ev.payload)) ++local;
      if (const auto* c = std::get_if<CrossDecisionRecord>(&ev.payload)) {
        if (c->result.decision.permitted()) {
          ++permits;
        } else {
          ++deny_at[std::string(step_label(c->result.trace.steps.back().step))];
        }
      }
    }
  }
  if (requests < 500) o.fail("only " + std::to_string(requests) + " requests simulated");
  if (o.pass) {
    std::ostringstream d;
    d << requests << " requests (" << local << " local, " << permits << " cross permits";
    for (const auto& [step, count] : deny_at) d << ", " << count << " denied at " << step;
    d << ")";
    o.detail = d.str();
  }
  return o;
}

// Bundled scenario: the malicious visitor's effective trust falls below the
// host threshold, every later request of theirs is denied, the honest visitor
// keeps being served, and the trace equals the committed golden file.
Verdict end_to_end() {
  Verdict o;
  const auto s = fixture("two_domain");
  const auto res = run_scenario(s);
  const double threshold = s.find_domain("DM0")->policy.threshold_for("grades");
  bool crossed = false, permitted_before = false;
  std::size_t honest = 0, honest_permits = 0;
  std::uint64_t crossing_seq = 0;
  for (const auto& ev : res.trace) {
    const auto* c = std::get_if<CrossDecisionRecord>(&ev.payload);
    if (!c) continue;
    const auto& r = c->result;
    if (c->request.requester.name() == "alice") {
      ++honest;
      if (r.decision.permitted()) ++honest_permits;
      continue;
    }
    if (!crossed && r.decision.permitted() && r.effective_trust > threshold) permitted_before = true;
    if (!crossed && !r.decision.permitted()) {
      crossed = true;
      crossing_seq = ev.seq;
      if (r.effective_trust > threshold) o.fail("malicious visitor denied while above threshold");
      if (r.decision.reason != DenyReason::kBelowTrustThreshold ||
          r.trace.steps.back().step != ProtocolStep::kLocalJudgement)
        o.fail("crossing denial is not BelowTrustThreshold at step viii");
    } else if (crossed && r.decision.permitted()) {
      o.fail("malicious visitor permitted after the crossing (seq " + std::to_string(ev.seq) + ")");
    }
  }
  if (!permitted_before) o.fail("malicious visitor never started above the threshold");
  if (!crossed) o.fail("malicious visitor never fell below the threshold");
  if (honest == 0 || honest_permits != honest) {
    o.fail("honest visitor permitted " + std::to_string(honest_permits) + "/" + std::to_string(honest));
  }
  const std::string golden = testing::read_file(testing::source_path("tests/golden/two_domain.trace.jsonl"));
  if (trace_to_jsonl(res.trace) != golden) o.fail("trace differs from golden file");
  const std::string golden_csv =
      testing::read_file(testing::source_path("tests/golden/two_domain.trajectories.csv"));
  if (trajectories_to_csv(res.trajectories) != golden_csv) o.fail("trajectories differ from golden file");
  if (o.pass) {
    o.detail = "malicious visitor denied from seq " + std::to_string(crossing_seq) + ", honest " +
               std::to_string(honest_permits) + "/" + std::to_string(honest) +
               " permitted, golden trace matches";
  }
  return o;
}

// Same seed, same bytes; another seed, other bytes that still conform.
Verdict determinism() {
  Verdict o;
  std::mt19937_64 rng(8);
  std::vector<Scenario> cases = {fixture("two_domain"), fixture("high_trust")};
  for (int i = 0; i < 3; ++i) cases.push_back(testing::random_scenario(rng, cases.front(), 40));
  for (auto& s : cases) {
    const auto a = run_scenario(s);
    const auto b = run_scenario(s);
    if (trace_to_jsonl(a.trace) != trace_to_jsonl(b.trace) ||
        trajectories_to_csv(a.trajectories) != trajectories_to_csv(b.trajectories))
      o.fail("repeat run differs for seed " + std::to_string(s.seed));
    Scenario other = s;
    other.seed = s.seed ^ 0x9e3779b97f4a7c15ULL;
    const auto c = run_scenario(other);
    if (trace_to_jsonl(c.trace) == trace_to_jsonl(a.trace))
      o.fail("seed change left the trace unchanged for seed " + std::to_string(s.seed));
    for (const auto& p : testing::check_simulation(c)) o.fail("reseeded run: " + p);
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " scenarios reproducible and seed-sensitive";
  return o;
}

}  // namespace
}  // namespace trustac

int main() {
  using namespace trustac;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"trust-update-convergence", geometric_convergence},
      {"boundedness-fuzz", boundedness_fuzz},
      {"equation-fixtures", equation_fixtures},
      {"conversion-oracle-equivalence", conversion_oracle},
      {"role-conversion-fixture", conversion_fixture},
      {"protocol-conformance", protocol_conformance},
      {"end-to-end-scenario", end_to_end},
      {"determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
