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
#include <iostream>

#include "fixtures.hpp"

namespace tugame {
namespace {

using testing::q;
using testing::vec;
using oracle::game_class;

rational abs_diff(const rational& a, const rational& b) {
  return a > b ? a - b : b - a;
}

TEST(GridMinmax, ExampleTwoApproachesClosedForm) {
  const auto report = oracle::grid_minmax_propensity(testing::example2(), 300);
  EXPECT_EQ(report.resolution, 300U);
  EXPECT_LE(abs_diff(report.best_minmax, q(-2, 5)), q(1, 50));
  EXPECT_GE(report.best_minmax, q(-2, 5));
  EXPECT_EQ(sum_of(report.best_point), testing::example2().grand());
}

TEST(GridMinmax, SymmetricGameCentersTheGrid) {
  const auto report = oracle::grid_minmax_propensity(testing::symmetric3(), 300);
  for (const auto& x : report.best_point) {
    EXPECT_LE(abs_diff(x, q(1, 3)), q(1, 100));
  }
  // 300 is divisible by 3, so the lattice hits the Gately point itself.
  EXPECT_EQ(report.best_point, vec({q(1, 3), q(1, 3), q(1, 3)}));
  EXPECT_EQ(report.best_minmax, 2);
}

TEST(GridMinmax, ExampleOneIsFlat) {
  const auto report = oracle::grid_minmax_propensity(testing::example1(), 100);
  EXPECT_EQ(report.best_minmax, -1);
  // every point ties; the lexicographically smallest interior one wins
  EXPECT_EQ(report.best_point, vec({3 + q(1, 50), 4 + q(1, 50), 5 + q(98, 50)}));
}

TEST(GridMinmax, Preconditions) {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const error& e) {
      return e.code();
    }
    return errc::invalid_argument;
  };
  EXPECT_EQ(code_of([] { oracle::grid_minmax_propensity(testing::additive3(), 10); }),
            errc::not_essential);
  const tu_game five = tabulate<tu_game>(
      5, [](coalition s) { return rational(s.size() == 5 ? 1 : 0); });
  EXPECT_EQ(code_of([&] { oracle::grid_minmax_propensity(five, 10); }),
            errc::too_many_players);
  EXPECT_THROW(oracle::grid_minmax_propensity(testing::symmetric3(), 2), error);
  EXPECT_NO_THROW(oracle::grid_minmax_propensity(testing::symmetric3(), 3));
  EXPECT_EQ(code_of([] { oracle::generate_game(0, 1, game_class::arbitrary); }),
            errc::invalid_argument);
  EXPECT_EQ(code_of([] { oracle::generate_game(0, 5, game_class::arbitrary); }),
            errc::invalid_argument);
}

TEST(GridMinmax, AgreesWithClosedFormOnQuasibalancedGames) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const tu_game g = oracle::generate_game(seed, 3, game_class::quasibalanced);
    const unsigned resolution = 120;
    const auto report = oracle::grid_minmax_propensity(g, resolution);
    const gately_result r = gately_point(g);
    ASSERT_EQ(r.status, gately_status::unique_imputation);
    // The closed form is the true minimum, so the lattice can only be above
    // it, and by no more than the rounding bound.
    const auto bound = testing::grid_minmax_error_bound(g, resolution);
    ASSERT_TRUE(bound);
    EXPECT_GE(report.best_minmax, *r.d_star);
    EXPECT_LE(report.best_minmax - *r.d_star, *bound);
    const rational surplus = g.grand() - singleton_sum(g);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_LE(abs_diff(report.best_point[k], (*r.point)[k]),
                2 * surplus / resolution);
    }
  }
}

TEST(GridMinmax, FixedToleranceIsTooTightForLargePropensities) {
  // d* = 2 and 200 is not divisible by 3: the best lattice point is
  // (66, 67, 67) / 200 with max propensity 134/66, farther than 4/200 from 2.
  const auto report = oracle::grid_minmax_propensity(testing::symmetric3(), 200);
  EXPECT_EQ(report.best_minmax, q(134, 66));
  EXPECT_GT(report.best_minmax - 2, q(4, 200));
}

TEST(GridMinmax, RecordsArbitraryEssentialGames) {
  // Observed, not asserted: the closed form is only claimed for
  // quasibalanced games.
  int unique = 0;
  int within_bound = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const tu_game g = oracle::generate_game(seed, 3, game_class::arbitrary);
    if (!is_essential(g)) continue;
    const gately_result r = gately_point(g);
    if (r.status != gately_status::unique_imputation) continue;
    ++unique;
    const auto report = oracle::grid_minmax_propensity(g, 60);
    const auto bound = testing::grid_minmax_error_bound(g, 60);
    if (bound && report.best_minmax >= *r.d_star &&
        report.best_minmax - *r.d_star <= *bound) {
      ++within_bound;
    }
  }
  RecordProperty("unique_games", unique);
  RecordProperty("within_rounding_bound", within_bound);
  std::cout << "arbitrary essential games with a unique Gately point: "
            << unique << ", grid within rounding bound: " << within_bound
            << "\n";
}

TEST(RecomputeByDefinition, Fixtures) {
  EXPECT_EQ(oracle::recompute_by_definition(testing::example2()).upper,
            vec({q(7, 2), q(9, 2), q(11, 2)}));
  EXPECT_TRUE(
      oracle::recompute_by_definition(testing::example1()).flags.weakly_constant_sum);
  EXPECT_TRUE(oracle::recompute_by_definition(testing::additive3()).flags.inessential);
}

TEST(RecomputeByDefinition, AgreesWithLibrary) {
  for (game_class cls : {game_class::arbitrary, game_class::superadditive,
                         game_class::quasibalanced,
                         game_class::weakly_constant_sum}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const std::size_t n = 2 + seed % 3;
      const tu_game g = oracle::generate_game(seed, n, cls);
      const auto def = oracle::recompute_by_definition(g);
      EXPECT_EQ(def.upper, utopia_payoffs(g));
      EXPECT_EQ(def.lower, minimal_rights(g));
      EXPECT_EQ(def.flags, classify(g)) << serialize_game(g);
    }
  }
}

TEST(GenerateGame, ClassPostconditions) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    for (std::size_t n = 2; n <= 4; ++n) {
      const tu_game sa = oracle::generate_game(seed, n, game_class::superadditive);
      EXPECT_TRUE(is_superadditive(sa));
      EXPECT_TRUE(is_essential(sa));
      const tu_game qb = oracle::generate_game(seed, n, game_class::quasibalanced);
      EXPECT_TRUE(is_quasibalanced(qb));
      EXPECT_TRUE(is_essential(qb));
      const tu_game wcs =
          oracle::generate_game(seed, n, game_class::weakly_constant_sum);
      EXPECT_EQ(utopia_payoffs(wcs),
                oracle::recompute_by_definition(wcs).upper);
      for (player i = 1; i <= n; ++i) {
        EXPECT_EQ(wcs.singleton(i), utopia_payoffs(wcs)[i - 1]);
      }
    }
  }
}

TEST(GenerateGame, Deterministic) {
  EXPECT_EQ(oracle::generate_game(7, 3, game_class::quasibalanced),
            oracle::generate_game(7, 3, game_class::quasibalanced));
  EXPECT_NE(oracle::generate_game(7, 3, game_class::quasibalanced),
            oracle::generate_game(8, 3, game_class::quasibalanced));
  EXPECT_EQ(oracle::generate_cost_game(7, 3), oracle::generate_cost_game(7, 3));
}

}  // namespace
}  // namespace tugame
