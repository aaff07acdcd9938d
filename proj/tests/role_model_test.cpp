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


#include "trustac/role_model.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "trustac/error.hpp"

namespace trustac {
namespace {

RoleId R(const std::string& n) { return RoleId("H0", n); }
PermissionId P(const std::string& n) { return {n, "res"}; }

RoleHierarchy university() {
  RoleHierarchy h("H0");
  h.add_role("Dean");
  h.add_role("Professor", {"Dean"}, {P("grade")});
  h.add_role("Researcher", {"Dean"}, {P("lab")});
  h.add_role("Guest", {"Professor", "Researcher"}, {P("read")});
  h.set_guest("Guest");
  return h;
}

TEST(RoleModel, SingleGuestHierarchy) {
  RoleHierarchy h("H0");
  h.add_role("Guest");
  h.set_guest("Guest");
  EXPECT_EQ(h.size(), 1u);
  EXPECT_TRUE(h.validate().empty());
  EXPECT_TRUE(h.children(R("Guest")).empty());
}

TEST(RoleModel, SingleEdgeAncestry) {
  RoleHierarchy h("H0");
  h.add_role("Dean");
  h.add_role("Professor", {"Dean"});
  EXPECT_TRUE(h.is_ancestor(R("Dean"), R("Professor")));
  EXPECT_FALSE(h.is_ancestor(R("Professor"), R("Dean")));
}

TEST(RoleModel, BothFigureHierarchiesValidate) {
  EXPECT_TRUE(university().validate().empty());
  RoleHierarchy h1("H1");
  h1.add_role("Manager");
  h1.add_role("Guest", {"Manager"});
  h1.set_guest("Guest");
  EXPECT_TRUE(h1.validate().empty());
  EXPECT_TRUE(h1.is_ancestor(RoleId("H1", "Manager"), RoleId("H1", "Guest")));
}

TEST(RoleModel, ReflexiveAndTransitive) {
  RoleHierarchy h("H0");
  h.add_role("a");
  h.add_role("b", {"a"});
  h.add_role("c", {"b"});
  EXPECT_TRUE(h.is_ancestor(R("a"), R("a")));
  EXPECT_FALSE(h.is_strict_ancestor(R("a"), R("a")));
  EXPECT_TRUE(h.is_ancestor(R("a"), R("c")));
  EXPECT_TRUE(h.is_strict_ancestor(R("a"), R("c")));
}

TEST(RoleModel, SiblingsIncomparableAgainstClosure) {
  testing::PlainHierarchy plain{"H0", {"top", "left", "right", "leaf"},
                                {{}, {0}, {0}, {1}}, {{}, {}, {}, {}}, -1};
  const auto h = plain.build();
  const auto reach = plain.closure();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(h.is_ancestor(R(plain.names[i]), R(plain.names[j])), reach[i][j]);
  EXPECT_FALSE(h.is_ancestor(R("left"), R("right")));
  EXPECT_FALSE(h.is_ancestor(R("right"), R("left")));
}

TEST(RoleModel, MinimalRoleHasOwnPermissionsOnly) {
  const auto h = university();
  EXPECT_EQ(h.effective_permissions(R("Guest")), std::set<PermissionId>{P("read")});
}

TEST(RoleModel, PureInheritance) {
  RoleHierarchy h("H0");
  h.add_role("child", {}, {P("p")});
  h.add_role("parent");
  h.add_edge("parent", "child");
  EXPECT_TRUE(h.own_permissions(R("parent")).empty());
  EXPECT_EQ(h.effective_permissions(R("parent")), std::set<PermissionId>{P("p")});
}

TEST(RoleModel, DiamondMatchesReachabilityUnion) {
  testing::PlainHierarchy plain{"H0",
                                {"top", "left", "right", "mid", "bottom"},
                                {{}, {0}, {0}, {1, 2}, {3}},
                                {{P("t")}, {P("l")}, {P("r")}, {P("m")}, {P("b")}},
                                4};
  const auto h = plain.build();
  const auto reach = plain.closure();
  for (std::size_t i = 0; i < plain.names.size(); ++i) {
    std::set<PermissionId> expected;
    for (std::size_t j = 0; j < plain.names.size(); ++j)
      if (reach[i][j]) expected.insert(plain.permissions[j].begin(), plain.permissions[j].end());
    EXPECT_EQ(h.effective_permissions(R(plain.names[i])), expected) << plain.names[i];
  }
  EXPECT_TRUE(h.validate().empty());
}

TEST(RoleModel, EmptyHierarchyHasNoViolations) {
  EXPECT_TRUE(RoleHierarchy("H0").validate().empty());
}

TEST(RoleModel, InjectedTwoCycleReportedOnce) {
  auto h = university();
  h.add_edge("Professor", "Dean");
  const auto v = h.validate();
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.front().kind, HierarchyViolationKind::kCycle);
}

TEST(RoleModel, GuestWithChildIsNotMinimal) {
  auto h = university();
  h.add_role("Intern", {"Guest"});
  const auto v = h.validate();
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.front().kind, HierarchyViolationKind::kGuestNotMinimal);
}

TEST(RoleModel, MissingGuestAndDanglingEdges) {
  RoleHierarchy h("H0");
  h.add_role("a");
  h.add_edge("a", "ghost");
  const auto v = h.validate();
  std::set<HierarchyViolationKind> kinds;
  for (const auto& x : v) kinds.insert(x.kind);
  EXPECT_TRUE(kinds.contains(HierarchyViolationKind::kMissingGuest));
  EXPECT_TRUE(kinds.contains(HierarchyViolationKind::kDanglingEdge));
}

TEST(RoleModel, ConstructionErrors) {
  auto h = university();
  try {
    h.add_role("Dean");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateRole);
  }
  try {
    h.add_role("Orphan", {"Nobody"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownParent);
  }
  EXPECT_THROW(h.effective_permissions(R("Nobody")), Error);
}

// Property: random DAGs built through add_role validate, and ancestry and
// inherited permissions agree with an independent closure.
TEST(RoleModelProperty, RandomDagsAgreeWithClosure) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto plain = testing::random_hierarchy(rng, "H0", 12, "r");
    const auto h = plain.build();
    ASSERT_TRUE(h.validate().empty());
    const auto reach = plain.closure();
    for (std::size_t i = 0; i < plain.names.size(); ++i) {
      std::set<PermissionId> expected;
      for (std::size_t j = 0; j < plain.names.size(); ++j) {
        ASSERT_EQ(h.is_ancestor(R(plain.names[i]), R(plain.names[j])), reach[i][j]);
        if (reach[i][j]) expected.insert(plain.permissions[j].begin(), plain.permissions[j].end());
      }
      ASSERT_EQ(h.effective_permissions(R(plain.names[i])), expected);
    }
  }
}

}  // namespace
}  // namespace trustac
