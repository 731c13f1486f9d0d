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

#ifndef TUGAME_BOUNDS_HPP
#define TUGAME_BOUNDS_HPP

#include <bit>
#include <cstddef>
#include <string>
#include <vector>

#include "coalition.hpp"
#include "error.hpp"
#include "game.hpp"
#include "rational.hpp"

namespace tugame {

/// M_i = v(N) - v(N \ {i}), the marginal contribution of each player to
/// the grand coalition. Entry k belongs to player k+1.
using utopia_vector = std::vector<rational>;

/// m_i = max over S containing i of the remainder R(S, i).
using minimal_rights_vector = std::vector<rational>;

inline utopia_vector utopia_payoffs(const tu_game& game) {
  utopia_vector upper;
  upper.reserve(game.players());
  for (player i = 1; i <= game.players(); ++i) {
    upper.push_back(game.grand() - game.without(i));
  }
  return upper;
}

/// What is left for i in S after every other member of S takes its utopia
/// payoff: v(S) - sum_{j in S, j != i} M_j.
inline rational remainder(const tu_game& game, coalition s, player i,
                          const utopia_vector& upper) {
  if (!s.contains(i)) {
    throw error(errc::player_not_in_coalition,
                "player " + std::to_string(i) + " is not in {" + to_key(s) +
                    "}");
  }
  rational r = game(s);
  for (player j : s.members()) {
    if (j != i) r -= upper[j - 1];
  }
  return r;
}

inline rational remainder(const tu_game& game, coalition s, player i) {
  return remainder(game, s, i, utopia_payoffs(game));
}

inline minimal_rights_vector minimal_rights(const tu_game& game,
                                            const utopia_vector& upper) {
  const std::size_t n = game.players();
  const auto table = game.table();

  // upper_sum[S] = sum_{j in S} M_j, built from S minus its lowest member.
  std::vector<rational> upper_sum(table.size());
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    upper_sum[mask] = upper_sum[mask & (mask - 1)] + upper[low];
  }

  minimal_rights_vector lower(n);
  std::vector<bool> set(n, false);
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    for (std::size_t k = 0; k < n; ++k) {
      if ((mask >> k & 1U) == 0) continue;
      rational r = table[mask] - (upper_sum[mask] - upper[k]);
      if (!set[k] || r > lower[k]) {
        lower[k] = std::move(r);
        set[k] = true;
      }
    }
  }
  return lower;
}

inline minimal_rights_vector minimal_rights(const tu_game& game) {
  return minimal_rights(game, utopia_payoffs(game));
}

}  // namespace tugame

#endif  // TUGAME_BOUNDS_HPP
