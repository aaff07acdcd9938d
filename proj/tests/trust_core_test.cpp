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

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "trustac/error.hpp"

namespace trustac {
namespace {

constexpr double kTol = 1e-12;

EntityId E(const std::string& name) { return EntityId("D", name); }

TrustLedger ledger_with(std::initializer_list<const char*> names, TrustParams p = {}) {
  TrustLedger l("D", p);
  for (const char* n : names) l.register_entity(E(n));
  return l;
}

TEST(TrustCore, FirstInteractionFromZeroHistory) {
  auto l = ledger_with({"a", "b"});
  // A rating of exactly 1 is refused, so approach it from inside.
  EXPECT_THROW(ExperienceRating(1.0), Error);
  const auto& rec = l.record_experience(E("a"), E("b"), ExperienceRating(0.999));
  EXPECT_NEAR(rec.qos, 0.4995, kTol);
  EXPECT_NEAR(rec.dtd, 0.4995, kTol);
}

TEST(TrustCore, RatingAtCurrentQosIsAFixedPoint) {
  TrustParams p;
  p.alpha = 0.37;
  p.beta = 0.81;
  p.initial_qos = 0.3;
  auto l = ledger_with({"a", "b"}, p);
  const auto& rec = l.record_experience(E("a"), E("b"), ExperienceRating(0.3));
  EXPECT_NEAR(rec.qos, 0.3, kTol);
}

TEST(TrustCore, HandArithmeticUpdate) {
  TrustParams p;
  p.alpha = 0.8;
  p.beta = 0.6;
  p.initial_qos = 0.5;
  auto l = ledger_with({"a", "b"}, p);
  const auto& rec = l.record_experience(E("a"), E("b"), ExperienceRating(-0.5));
  EXPECT_NEAR(rec.qos, 0.8 * 0.5 + 0.2 * -0.5, kTol);
  EXPECT_NEAR(rec.qos, 0.30, kTol);
  EXPECT_NEAR(rec.dtd, 0.6 * 0.5 + 0.4 * -0.5, kTol);
  EXPECT_NEAR(rec.dtd, 0.10, kTol);
  EXPECT_EQ(rec.k, 1u);
}

TEST(TrustCore, DirectTrustUsesPreUpdateQos) {
  auto l = ledger_with({"a", "b"});
  l.record_experience(E("a"), E("b"), ExperienceRating(0.8));   // qos 0.4
  const auto& rec = l.record_experience(E("a"), E("b"), ExperienceRating(-0.4));
  EXPECT_NEAR(rec.qos, 0.5 * 0.4 + 0.5 * -0.4, kTol);
  EXPECT_NEAR(rec.dtd, 0.5 * 0.4 + 0.5 * -0.4, kTol);
  EXPECT_EQ(rec.k, 2u);
}

TEST(TrustCore, RatingsOutsideOpenIntervalAreRejected) {
  EXPECT_THROW(ExperienceRating(1.0), Error);
  EXPECT_THROW(ExperienceRating(-1.0), Error);
  EXPECT_THROW(ExperienceRating(std::nan("")), Error);
  try {
    ExperienceRating bad(1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRatingOutOfRange);
  }
}

TEST(TrustCore, SelfRatingAndUnknownEntitiesAreRejected) {
  auto l = ledger_with({"a"});
  try {
    l.record_experience(E("a"), E("a"), ExperienceRating(0.1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSelfRating);
  }
  try {
    l.record_experience(E("a"), E("ghost"), ExperienceRating(0.1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownEntity);
  }
}

TEST(TrustCore, ReputationWithoutRatersIsInitial) {
  auto l = ledger_with({"a"});
  EXPECT_DOUBLE_EQ(l.compute_reputation(E("a"), l.view()), 0.5);
}

TEST(TrustCore, ReputationIsRaterWeightedMean) {
  TrustParams p;
  p.alpha = 0.5;
  auto l = ledger_with({"a", "b", "c"}, p);
  l.record_experience(E("b"), E("a"), ExperienceRating(0.9));
  l.record_experience(E("c"), E("a"), ExperienceRating(0.8));
  const double qb = l.pairwise(E("b"), E("a"))->qos;
  const double qc = l.pairwise(E("c"), E("a"))->qos;
  EXPECT_NEAR(l.compute_reputation(E("a"), l.view()), (qb * 0.5 + qc * 0.5) / 2, kTol);
}

TEST(TrustCore, ReputationSpecExample) {
  DomainTrustView prior;
  prior.domain = "D";
  prior.reputations = {{E("b"), 0.5}, {E("c"), 0.5}};
  TrustParams q;
  q.alpha = 0.5;
  q.initial_qos = 0.8;
  TrustLedger l2("D", q);
  for (auto n : {"a", "b", "c"}) l2.register_entity(E(n));
  l2.record_experience(E("b"), E("a"), ExperienceRating(0.8));  // stays 0.8
  l2.record_experience(E("c"), E("a"), ExperienceRating(0.0));  // 0.4
  EXPECT_NEAR(l2.compute_reputation(E("a"), prior), (0.8 * 0.5 + 0.4 * 0.5) / 2, kTol);
  EXPECT_NEAR(l2.compute_reputation(E("a"), prior), 0.3, kTol);
}

TEST(TrustCore, ZeroReputationRaterAnnihilates) {
  auto l = ledger_with({"a", "b"});
  l.record_experience(E("b"), E("a"), ExperienceRating(0.9));
  DomainTrustView prior;
  prior.domain = "D";
  prior.reputations = {{E("b"), 0.0}};
  EXPECT_DOUBLE_EQ(l.compute_reputation(E("a"), prior), 0.0);
}

TEST(TrustCore, DomainTrustBlend) {
  TrustParams q;
  q.beta = 0.5;
  q.initial_qos = 0.4;
  TrustLedger l("D", q);
  for (auto n : {"a", "b"}) l.register_entity(E(n));
  l.record_experience(E("b"), E("a"), ExperienceRating(0.4));  // dtd = 0.4
  DomainTrustView view;
  view.reputations = {{E("a"), 0.3}};

  TrustParams g1 = q, g05 = q, g0 = q;
  g1.gamma = 1.0;
  g05.gamma = 0.5;
  g0.gamma = 0.0;
  EXPECT_NEAR(l.compute_domain_trust(E("a"), view, g1), 0.4, kTol);
  EXPECT_NEAR(l.compute_domain_trust(E("a"), view, g05), 0.35, kTol);
  EXPECT_NEAR(l.compute_domain_trust(E("a"), view, g0), 0.3, kTol);
}

TEST(TrustCore, EmptyDomainEpochOnlyAdvancesCounter) {
  TrustLedger l("D", {});
  const auto before = l.view();
  const auto& after = l.advance_epoch();
  EXPECT_EQ(after.epoch, before.epoch + 1);
  EXPECT_TRUE(after.reputations.empty());
  EXPECT_TRUE(after.domain_trust.empty());
}

TEST(TrustCore, FreshEntityNeutralValues) {
  auto l = ledger_with({"a"});
  l.advance_epoch();
  EXPECT_DOUBLE_EQ(l.reputation_of(E("a")), 0.5);
  EXPECT_DOUBLE_EQ(l.trust_of(E("a")), 0.25);
}

TEST(TrustCore, NextEpochIsPure) {
  auto l = ledger_with({"a", "b"});
  l.record_experience(E("a"), E("b"), ExperienceRating(0.6));
  const auto v = l.view();
  const auto n1 = l.next_epoch(v);
  const auto n2 = l.next_epoch(v);
  EXPECT_EQ(n1.reputations, n2.reputations);
  EXPECT_EQ(l.view().epoch, v.epoch);
}

TEST(TrustCore, ThreeEntityLogMatchesReplayOracle) {
  TrustParams p;
  p.alpha = 0.3;
  p.beta = 0.7;
  p.gamma = 0.4;
  TrustLedger l("D", p);
  for (auto n : {"e0", "e1", "e2"}) l.register_entity(E(n));
  testing::TrustOracle o(3, 0.3, 0.7, 0.4);
  const struct { int r, e; double ex; } log[] = {
      {0, 1, 0.9}, {1, 0, 0.2}, {2, 1, -0.4}, {0, 2, 0.5}, {1, 2, 0.7},
      {2, 0, -0.9}, {0, 1, 0.1}, {1, 0, 0.6}, {2, 1, 0.3}};
  int step = 0;
  for (const auto& x : log) {
    l.record_experience(E("e" + std::to_string(x.r)), E("e" + std::to_string(x.e)),
                        ExperienceRating(x.ex));
    o.rate(static_cast<std::size_t>(x.r), static_cast<std::size_t>(x.e), x.ex);
    if (++step % 3 == 0) {
      l.advance_epoch();
      o.epoch();
      for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(l.reputation_of(E("e" + std::to_string(i))), o.rp[static_cast<std::size_t>(i)],
                    kTol);
        EXPECT_NEAR(l.trust_of(E("e" + std::to_string(i))), o.td[static_cast<std::size_t>(i)], kTol);
      }
    }
  }
}

TEST(TrustCore, InboundSummaryAndSnapshot) {
  auto l = ledger_with({"a", "b", "c"});
  l.record_experience(E("b"), E("a"), ExperienceRating(0.8));
  l.record_experience(E("c"), E("a"), ExperienceRating(0.4));
  const auto s = l.inbound_summary(E("a"));
  EXPECT_EQ(s.raters, 2u);
  EXPECT_NEAR(s.mean_qos, 0.3, kTol);
  EXPECT_NEAR(s.mean_dtd, 0.3, kTol);
  EXPECT_EQ(l.snapshot().inbound.at(E("a")).raters, 2u);
  EXPECT_EQ(l.inbound(E("a")).front().rater, E("b"));
  EXPECT_EQ(l.interactions_recorded(), 2u);
}

TEST(TrustCore, ParameterViolations) {
  TrustParams p;
  EXPECT_TRUE(p.violations().empty());
  p.alpha = 1.2;
  EXPECT_FALSE(p.violations().empty());
  EXPECT_THROW(TrustLedger("D", p), Error);
}

// Property: for constant ex, |qos_k - e| = alpha^k |qos_0 - e|.
TEST(TrustCoreProperty, GeometricConvergence) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    TrustParams p;
    p.alpha = testing::random_weight(rng);
    p.initial_qos = testing::uniform(rng, -1, 1);
    const double e = testing::random_rating(rng);
    auto l = ledger_with({"a", "b"}, p);
    for (int k = 1; k <= 60; ++k) {
      const double q = l.record_experience(E("a"), E("b"), ExperienceRating(e)).qos;
      EXPECT_NEAR(std::abs(q - e), std::pow(p.alpha, k) * std::abs(p.initial_qos - e), 1e-12);
    }
  }
}

// Property: arbitrary rating streams keep every metric inside [-1, 1] and
// agree with the replay oracle.
TEST(TrustCoreProperty, BoundedAndOracleEquivalent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    TrustParams p;
    p.alpha = testing::random_weight(rng);
    p.beta = testing::random_weight(rng);
    p.gamma = testing::random_weight(rng);
    const std::size_t n = 2 + rng() % 6;
    TrustLedger l("D", p);
    for (std::size_t i = 0; i < n; ++i) l.register_entity(E("e" + std::to_string(i)));
    testing::TrustOracle o(n, p.alpha, p.beta, p.gamma);
    for (int step = 0; step < 400; ++step) {
      const std::size_t r = rng() % n;
      std::size_t t = rng() % n;
      if (t == r) t = (t + 1) % n;
      const double ex = testing::random_rating(rng);
      const auto& rec = l.record_experience(E("e" + std::to_string(r)), E("e" + std::to_string(t)),
                                            ExperienceRating(ex));
      o.rate(r, t, ex);
      ASSERT_LE(std::abs(rec.qos), 1.0);
      ASSERT_LE(std::abs(rec.dtd), 1.0);
      if (step % 37 == 0) {
        l.advance_epoch();
        o.epoch();
        for (std::size_t i = 0; i < n; ++i) {
          const EntityId id = E("e" + std::to_string(i));
          ASSERT_NEAR(l.reputation_of(id), o.rp[i], 1e-12);
          ASSERT_NEAR(l.trust_of(id), o.td[i], 1e-12);
          ASSERT_LE(std::abs(l.trust_of(id)), 1.0);
        }
      }
    }
  }
}

}  // namespace
}  // namespace trustac
