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

#ifndef TUGAME_PROPERTIES_HPP
#define TUGAME_PROPERTIES_HPP

#include <cstddef>
#include <stdexcept>

#include "bounds.hpp"
#include "coalition.hpp"
#include "game.hpp"
#include "rational.hpp"

namespace tugame {

/// sum_j v_j < v(N)
inline bool is_essential(const tu_game& game) {
  return singleton_sum(game) < game.grand();
}

/// v(S u T) >= v(S) + v(T) for all disjoint S, T. Each unordered pair is
/// visited once by walking the subsets of the complement of S, so the cost
/// is O(3^n).
inline bool is_superadditive(const tu_game& game) {
  const auto table = game.table();
  const std::size_t full = table.size() - 1;
  for (std::size_t s = 1; s < full; ++s) {
    const std::size_t rest = full ^ s;
    for (std::size_t t = rest; t > s; t = (t - 1) & rest) {
      if (table[s | t] < table[s] + table[t]) return false;
    }
  }
  return true;
}

/// Superadditive with sum_j v_j = v(N): the imputation set is one point.
inline bool is_inessential(const tu_game& game) {
  return singleton_sum(game) == game.grand() && is_superadditive(game);
}

/// v(S u {i}) >= v(S) + v_i for all S and i outside S.
inline bool is_weakly_superadditive(const tu_game& game) {
  const auto table = game.table();
  const std::size_t n = game.players();
  for (std::size_t s = 0; s < table.size(); ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t bit = std::size_t{1} << k;
      if ((s & bit) != 0) continue;
      if (table[s | bit] < table[s] + table[bit]) return false;
    }
  }
  return true;
}

/// v_i + v(N \ {i}) = v(N) for every i. Equivalent to v_i = M_i for every
/// i; both forms are evaluated and must agree.
inline bool is_weakly_constant_sum(const tu_game& game) {
  bool by_sum = true;
  for (player i = 1; i <= game.players(); ++i) {
    if (game.singleton(i) + game.without(i) != game.grand()) {
      by_sum = false;
      break;
    }
  }
  const utopia_vector upper = utopia_payoffs(game);
  bool by_utopia = true;
  for (player i = 1; i <= game.players(); ++i) {
    if (game.singleton(i) != upper[i - 1]) {
      by_utopia = false;
      break;
    }
  }
  if (by_sum != by_utopia) {
    throw std::logic_error("weakly constant-sum characterizations disagree");
  }
  return by_sum;
}

/// m_i <= M_i for all i and sum m <= v(N) <= sum M.
inline bool is_quasibalanced(const tu_game& game) {
  const utopia_vector upper = utopia_payoffs(game);
  const minimal_rights_vector lower = minimal_rights(game, upper);
  for (std::size_t k = 0; k < upper.size(); ++k) {
    if (lower[k] > upper[k]) return false;
  }
  return sum_of(lower) <= game.grand() && game.grand() <= sum_of(upper);
}

struct game_classification {
  bool essential = false;
  bool inessential = false;
  bool weakly_superadditive = false;
  bool superadditive = false;
  bool weakly_constant_sum = false;
  bool quasibalanced = false;

  friend bool operator==(const game_classification&,
                         const game_classification&) = default;
};

inline game_classification classify(const tu_game& game) {
  game_classification c;
  c.essential = is_essential(game);
  c.superadditive = is_superadditive(game);
  c.inessential = c.superadditive && singleton_sum(game) == game.grand();
  c.weakly_superadditive = is_weakly_superadditive(game);
  c.weakly_constant_sum = is_weakly_constant_sum(game);
  c.quasibalanced = is_quasibalanced(game);
  return c;
}

}  // namespace tugame

#endif  // TUGAME_PROPERTIES_HPP
