// Copyright 2026 The tugame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdint>

#include "fixtures.hpp"

namespace tugame {
namespace {

using testing::q;
using testing::vec;

TEST(SeparableCosts, Fixtures) {
  EXPECT_EQ(separable_costs(testing::example3()), vec({7, 8, 9}));
  EXPECT_EQ(separable_costs(testing::shared_facility()), vec({5, 5, 5}));
  EXPECT_EQ(separable_costs(testing::additive_cost3()), vec({4, 5, 6}));
}

TEST(NonseparableCost, Fixtures) {
  EXPECT_EQ(nonseparable_cost(testing::example3()), -1);
  EXPECT_EQ(nonseparable_cost(testing::shared_facility()), 6);
  EXPECT_EQ(nonseparable_cost(testing::additive_cost3()), 0);
}

TEST(AcaAllocation, ExampleThreeFails) {
  const aca_result r = aca_allocation(testing::example3());
  EXPECT_EQ(r.status, aca_status::undefined_zero_denominator);
  EXPECT_FALSE(r.allocation);
  EXPECT_EQ(r.nsc, -1);
}

TEST(AcaAllocation, SharedFacility) {
  const aca_result r = aca_allocation(testing::shared_facility());
  EXPECT_EQ(r.status, aca_status::allocated);
  EXPECT_EQ(r.allocation, vec({7, 7, 7}));
}

TEST(AcaAllocation, AdditiveCostsHaveZeroDenominator) {
  // SC_i = c_i, so every c_i - SC_i vanishes.
  const aca_result r = aca_allocation(testing::additive_cost3());
  EXPECT_EQ(r.status, aca_status::undefined_zero_denominator);
  EXPECT_FALSE(r.allocation);
  EXPECT_EQ(r.separable, vec({4, 5, 6}));
  EXPECT_EQ(r.nsc, 0);
}

TEST(AcaAllocation, NegativeNonseparableCostIsFlagged) {
  // SC = (7, 8, 9) as in the failing example but c_1 raised: NSC = -1 and the
  // denominator is 1.
  const cost_game c = testing::three_player<cost_game>(8, 8, 9, 14, 15, 16, 23);
  const aca_result r = aca_allocation(c);
  EXPECT_EQ(r.status, aca_status::allocated_negative_nsc);
  EXPECT_EQ(r.nsc, -1);
  EXPECT_EQ(r.allocation, vec({6, 8, 9}));
}

TEST(SavingsGame, Fixtures) {
  EXPECT_EQ(savings_game(testing::example3()),
            testing::three_player(0, 0, 0, 1, 1, 1, 1));
  EXPECT_EQ(savings_game(testing::additive_cost3()),
            testing::three_player(0, 0, 0, 0, 0, 0, 0));
  EXPECT_EQ(savings_game(testing::shared_facility()),
            testing::three_player(0, 0, 0, 4, 4, 4, 9));
}

TEST(CostIdentities, SavingsTerms) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const cost_game c = oracle::generate_cost_game(seed, n);
    const tu_game v = savings_game(c);
    const utopia_vector upper = utopia_payoffs(v);
    const auto sc = separable_costs(c);
    for (player i = 1; i <= n; ++i) {
      EXPECT_EQ(v.singleton(i), 0);
      EXPECT_EQ(sc[i - 1], c.singleton(i) - upper[i - 1]);
    }
    EXPECT_EQ(nonseparable_cost(c), sum_of(upper) - v.grand());
  }
}

TEST(CostIdentities, AcaMatchesGatelyOfSavingsGame) {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const cost_game c = oracle::generate_cost_game(seed, n);
    const tu_game v = savings_game(c);
    const aca_result a = aca_allocation(c);
    const gately_result g = gately_point(v);
    if (a.allocation) {
      EXPECT_EQ(sum_of(*a.allocation), c.grand());
    }
    if (!is_essential(v)) continue;
    EXPECT_EQ(a.status == aca_status::undefined_zero_denominator,
              g.status == gately_status::undefined_equal_propensity_minus_one);
    EXPECT_EQ(a.nsc < 0, *g.d_star < 0);
    if (!a.allocation || g.status != gately_status::unique_imputation) continue;
    ++compared;
    const utopia_vector upper = utopia_payoffs(v);
    for (player i = 1; i <= n; ++i) {
      EXPECT_EQ(c.singleton(i) - (*a.allocation)[i - 1], (*g.point)[i - 1]);
      EXPECT_EQ((*g.point)[i - 1], v.grand() * upper[i - 1] / sum_of(upper));
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(CostIdentities, ExampleThreePairsWithExampleOne) {
  const tu_game v = savings_game(testing::example3());
  EXPECT_EQ(v, zero_one_normalize(testing::example1()));
  EXPECT_EQ(gately_point(v).status,
            gately_status::undefined_equal_propensity_minus_one);
}

}  // namespace
}  // namespace tugame
