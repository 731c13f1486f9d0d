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

#ifndef TUGAME_TRANSFORMS_HPP
#define TUGAME_TRANSFORMS_HPP

#include <span>
#include <string>

#include "coalition.hpp"
#include "error.hpp"
#include "game.hpp"
#include "rational.hpp"

namespace tugame {

/// Strategically equivalent game w(S) = scale * v(S) + sum_{i in S} shift_i.
inline tu_game strategic_transform(const tu_game& game, const rational& scale,
                                   std::span<const rational> shift) {
  if (scale <= 0) {
    throw error(errc::invalid_argument, "scale must be positive, got " +
                                            to_string(scale));
  }
  if (shift.size() != game.players()) {
    throw error(errc::dimension_mismatch,
                "shift has " + std::to_string(shift.size()) + " entries for " +
                    std::to_string(game.players()) + " players");
  }
  return tabulate<tu_game>(game.players(), [&](coalition s) {
    rational w = scale * game(s);
    for (player i : s.members()) w += shift[i - 1];
    return w;
  });
}

/// w(S) = v(S) - sum_{i in S} v_i
inline tu_game zero_normalize(const tu_game& game) {
  allocation shift;
  for (player i = 1; i <= game.players(); ++i) {
    shift.push_back(-game.singleton(i));
  }
  return strategic_transform(game, rational(1), shift);
}

/// u(S) = (v(S) - sum_{i in S} v_i) / (v(N) - sum_j v_j); requires an
/// essential game.
inline tu_game zero_one_normalize(const tu_game& game) {
  const rational surplus = game.grand() - singleton_sum(game);
  if (surplus <= 0) {
    throw error(errc::not_essential,
                "v(N) - sum v_j = " + to_string(surplus) +
                    " is not positive; cannot rescale to v(N) = 1");
  }
  const rational scale = 1 / surplus;
  allocation shift;
  for (player i = 1; i <= game.players(); ++i) {
    shift.push_back(-scale * game.singleton(i));
  }
  return strategic_transform(game, scale, shift);
}

}  // namespace tugame

#endif  // TUGAME_TRANSFORMS_HPP
