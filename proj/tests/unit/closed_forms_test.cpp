// Copyright 2026 The burnkit Authors
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

#include "burnkit/closed_forms.hpp"

#include <array>
#include <set>
#include <vector>

#include "burnkit/exact_solver.hpp"
#include "burnkit/families.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace burnkit {
namespace {

namespace fe = forest_exceptions;

std::size_t exact(const FamilyDescriptor& d) { return burning_number(build_family(d)); }

TEST(PathCycleTest, SpecExamples) {
  EXPECT_EQ(b_cycle(4), 2u);
  EXPECT_EQ(b_cycle(5), 3u);
  EXPECT_EQ(b_path(1), 1u);
  EXPECT_EQ(b_path(10), 4u);
  EXPECT_THROW(b_cycle(2), InvalidInput);
  EXPECT_THROW(b_path(0), InvalidInput);
}

TEST(TwoPathsTest, SpecExamples) {
  EXPECT_EQ(b_two_paths(2, 2), 3u);
  EXPECT_EQ(b_two_paths(7, 2), 4u);
  EXPECT_EQ(b_two_paths(5, 4), 3u);
  EXPECT_EQ(b_two_paths(4, 5), 3u);
  EXPECT_THROW(b_two_paths(0, 3), InvalidInput);
}

TEST(TwoPathsTest, ExceptionalPairs) {
  std::vector<std::pair<std::size_t, std::size_t>> found;
  for (std::size_t a1 = 1; a1 <= 40; ++a1)
    for (std::size_t a2 = 1; a2 <= a1; ++a2)
      if (fe::in_j_pair(a1, a2)) found.emplace_back(a1, a2);
  EXPECT_EQ(found, (std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {7, 2}, {14, 2}, {23, 2}, {34, 2}}));
  for (const auto& [a1, a2] : found) EXPECT_EQ(b_two_paths(a1, a2), b_path(a1 + a2) + 1);
}

TEST(ThreePathsTest, SpecExamples) {
  EXPECT_EQ(b_three_paths(2, 2, 2), 4u);
  EXPECT_TRUE(fe::in_j1({2, 2, 2}));
  EXPECT_EQ(b_three_paths(11, 11, 2), 6u);
  EXPECT_EQ(b_three_paths(3, 2, 1), 3u);
  EXPECT_EQ(b_three_paths(1, 2, 3), 3u);
  EXPECT_THROW(b_three_paths(1, 0, 3), InvalidInput);
}

TEST(ThreePathsTest, LiteralSets) {
  EXPECT_EQ(fe::kJ5.size(), 23u);
  EXPECT_EQ(std::set(fe::kJ5.begin(), fe::kJ5.end()).size(), 23u);
  for (const auto& t : fe::kJ5) {
    EXPECT_GE(t[0], t[1]);
    EXPECT_GE(t[1], t[2]);
    EXPECT_TRUE(fe::in_j5(t));
  }
  EXPECT_EQ(fe::kD3.size() + fe::kD4.size(), 16u);
}

TEST(ThreePathsTest, SmallLiteralMembersMatchExact) {
  for (const auto& t : fe::kJ5) {
    if (t[0] + t[1] + t[2] > 30) continue;
    EXPECT_EQ(b_three_paths(t[0], t[1], t[2]), exact(LinearForestFamily{{t[0], t[1], t[2]}}));
  }
}

TEST(DegreeCriterionTest, SpecExamples) {
  const std::vector<Edge> k14 = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  EXPECT_EQ(b2_by_degree(Graph::from_edges(5, k14)), 2u);
  EXPECT_EQ(b2_by_degree(Graph(1)), 1u);
  EXPECT_EQ(b2_by_degree(build_family(PathFamily{6})), std::nullopt);
}

TEST(DegreeCriterionTest, IffOnAllGraphsUpToSixVertices) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : testing::all_graphs(n)) {
      const auto b = testing::simulated_burning_number(g);
      const auto crit = b2_by_degree(g);
      if (n == 1) {
        ASSERT_EQ(crit, 1u);
        continue;
      }
      ASSERT_EQ(crit.has_value(), b == 2);
      if (crit) ASSERT_EQ(*crit, 2u);
    }
  }
}

TEST(UnicyclicBoundsTest, SpecExamples) {
  EXPECT_EQ(t_unicyclic_bounds(10, 1), (Bounds{3, 4}));
  EXPECT_EQ(t_unicyclic_bounds(21, 2), (Bounds{4, 5}));
  EXPECT_EQ(t_unicyclic_bounds(9, 0), (Bounds{3, 3}));
  EXPECT_THROW(t_unicyclic_bounds(3, 1), InvalidInput);
}

TEST(UnicyclicBoundsTest, LowerIsLeastIntegerAboveRealBound) {
  // L = ceil(sqrt(n + (t^2 + 4t) / 4) - t / 2), checked by scanning L upward
  // with the squared comparison (2L + t)^2 >= 4n + t^2 + 4t.
  for (std::size_t t = 0; t <= 6; ++t) {
    for (std::size_t n = 3 + t; n <= 400; ++n) {
      std::size_t l = 0;
      while ((2 * l + t) * (2 * l + t) < 4 * n + t * t + 4 * t) ++l;
      const auto b = t_unicyclic_bounds(n, t);
      ASSERT_EQ(b.lower, l) << n << " " << t;
      ASSERT_EQ(b.upper, b_path(n));
      ASSERT_LE(b.lower, b.upper);
    }
  }
}

TEST(StarUpperTest, SpecExamples) {
  const std::array<std::size_t, 3> small = {1, 1, 1};
  const std::array<std::size_t, 3> mid = {5, 5, 5};
  const std::array<std::size_t, 3> skew = {8, 1, 1};
  EXPECT_EQ(b_generalized_star_upper(small), 2u);
  EXPECT_EQ(b_generalized_star_upper(mid), 4u);
  EXPECT_EQ(b_generalized_star_upper(skew), 4u);
  EXPECT_EQ(exact(StarFamily{{8, 1, 1}}), 4u);
  const std::array<std::size_t, 2> two = {3, 3};
  EXPECT_THROW(b_generalized_star_upper(two), InvalidInput);
}

TEST(StarUpperTest, BoundsExactOnSmallSpiders) {
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = 1; b <= a; ++b)
      for (std::size_t c = 1; c <= b; ++c)
        for (std::size_t d = 0; d <= c; ++d) {
          std::vector<std::size_t> arms = {a, b, c};
          if (d > 0) arms.push_back(d);
          ASSERT_LE(exact(StarFamily{arms}), b_generalized_star_upper(arms));
        }
}

}  // namespace
}  // namespace burnkit
