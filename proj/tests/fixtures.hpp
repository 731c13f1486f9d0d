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

// Fixture games shared by the test suites.

#ifndef TUGAME_TESTS_FIXTURES_HPP
#define TUGAME_TESTS_FIXTURES_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tugame.hpp"

namespace tugame::testing {

inline rational q(long long num, long long den = 1) {
  return make_rational(num, den);
}

inline allocation vec(std::initializer_list<rational> xs) { return xs; }

/// Three-player game from singleton, pair and grand-coalition values.
template <typename Game = tu_game>
Game three_player(rational v1, rational v2, rational v3, rational v12,
                  rational v13, rational v23, rational v123) {
  std::vector<rational> table = {0,   std::move(v1),  std::move(v2),
                                 std::move(v12),      std::move(v3),
                                 std::move(v13),      std::move(v23),
                                 std::move(v123)};
  return Game::from_table(3, std::move(table));
}

inline tu_game example1() { return three_player(3, 4, 5, 9, 10, 11, 14); }

inline tu_game example2() {
  return three_player(3, 4, 5, 9, 10, 11, q(29, 2));
}

/// v(S) = sum of the member indices.
inline tu_game additive3() { return three_player(1, 2, 3, 3, 4, 5, 6); }

/// v_i = 0, pairs 0, v(N) = 1.
inline tu_game symmetric3() { return three_player(0, 0, 0, 0, 0, 0, 1); }

/// v_i = 0, pairs 2, v(N) = 3: minimal rights meet utopia payoffs.
inline tu_game degenerate_tau3() { return three_player(0, 0, 0, 2, 2, 2, 3); }

inline cost_game example3() {
  return three_player<cost_game>(7, 8, 9, 14, 15, 16, 23);
}

/// c_i = 10, pairs 16, c(N) = 21.
inline cost_game shared_facility() {
  return three_player<cost_game>(10, 10, 10, 16, 16, 16, 21);
}

inline cost_game additive_cost3() {
  return three_player<cost_game>(4, 5, 6, 9, 10, 11, 15);
}

inline tu_game two_player(rational v1, rational v2, rational v12) {
  return tu_game::from_table(2, {0, std::move(v1), std::move(v2),
                                 std::move(v12)});
}

inline std::string samples_dir() { return TUGAME_SAMPLES_DIR; }

/// Upper bound on (grid min-max propensity) - d* for an essential game with
/// d* >= -1 and resolution >= n^2. Some lattice point has every gap
/// y_i = x_i - v_i within (n-1) steps of the optimum y*_i = t (M_i - v_i);
/// d_i = (M_i - v_i) / y_i - 1 is decreasing in y_i, which gives the bound.
/// Empty when a gap is too small for the argument to apply.
inline std::optional<rational> grid_minmax_error_bound(const tu_game& game,
                                                       unsigned resolution) {
  const std::size_t n = game.players();
  const utopia_vector upper = utopia_payoffs(game);
  const rational surplus = game.grand() - singleton_sum(game);
  const rational gap_sum = sum_of(upper) - singleton_sum(game);
  const rational slack = rational(static_cast<long long>(n - 1)) * surplus /
                         static_cast<long long>(resolution);
  rational bound = 0;
  for (player i = 1; i <= n; ++i) {
    const rational gap = upper[i - 1] - game.singleton(i);
    if (gap == 0) continue;
    const rational best = surplus * gap / gap_sum;
    if (best <= slack) return std::nullopt;
    const rational excess = gap / (best - slack) - gap / best;
    if (excess > bound) bound = excess;
  }
  return bound;
}

}  // namespace tugame::testing

#endif  // TUGAME_TESTS_FIXTURES_HPP
