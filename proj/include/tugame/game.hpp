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

#ifndef TUGAME_GAME_HPP
#define TUGAME_GAME_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coalition.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace tugame {

struct tu_kind {
  static constexpr std::string_view name = "tu";
};

struct cost_kind {
  static constexpr std::string_view name = "cost";
};

/// Payoff (or cost) vector; entry k belongs to player k+1.
using allocation = std::vector<rational>;

/// A total characteristic function on 2^N with the empty coalition worth 0.
/// Immutable once constructed; every nonempty coalition has a value.
template <typename Kind>
class characteristic_function {
 public:
  using kind_type = Kind;

  /// Builds from a table indexed by coalition mask. The table must hold
  /// exactly 2^n entries and entry 0 must be 0.
  static characteristic_function from_table(std::size_t n,
                                            std::vector<rational> table) {
    check_player_count(n);
    if (table.size() != (std::size_t{1} << n)) {
      throw error(errc::missing_coalition,
                  "expected " + std::to_string((std::size_t{1} << n) - 1) +
                      " coalition values");
    }
    if (table[0] != 0) {
      throw error(errc::nonzero_empty_coalition,
                  "the empty coalition must be worth 0");
    }
    return characteristic_function(n, std::move(table));
  }

  /// Builds from (coalition, value) pairs that must cover every nonempty
  /// coalition exactly once. An explicit empty-coalition entry is accepted
  /// only if it is 0.
  static characteristic_function from_entries(
      std::size_t n, std::span<const std::pair<coalition, rational>> entries) {
    check_player_count(n);
    const coalition everyone = coalition::grand(n);
    std::vector<rational> table(std::size_t{1} << n);
    std::vector<bool> seen(table.size(), false);
    for (const auto& [s, value] : entries) {
      if (!s.is_subset_of(everyone)) {
        throw error(errc::player_out_of_range,
                    "coalition {" + to_key(s) + "} exceeds n = " +
                        std::to_string(n));
      }
      if (seen[s.mask()]) {
        throw error(errc::duplicate_coalition,
                    "coalition {" + to_key(s) + "} given twice");
      }
      if (s.empty() && value != 0) {
        throw error(errc::nonzero_empty_coalition,
                    "the empty coalition must be worth 0");
      }
      seen[s.mask()] = true;
      table[s.mask()] = value;
    }
    for (std::size_t mask = 1; mask < table.size(); ++mask) {
      if (!seen[mask]) {
        throw error(errc::missing_coalition,
                    "no value for coalition {" +
                        to_key(coalition(static_cast<coalition::mask_type>(
                            mask))) +
                        "}");
      }
    }
    return characteristic_function(n, std::move(table));
  }

  std::size_t players() const noexcept { return n_; }
  coalition grand_coalition() const noexcept { return coalition::grand(n_); }

  const rational& operator()(coalition s) const {
    if (!s.is_subset_of(grand_coalition())) {
      throw error(errc::player_out_of_range,
                  "coalition {" + to_key(s) + "} exceeds n = " +
                      std::to_string(n_));
    }
    return table_[s.mask()];
  }

  /// Worth of the singleton {i}.
  const rational& singleton(player i) const {
    return (*this)(coalition::singleton(i));
  }

  const rational& grand() const noexcept { return table_.back(); }

  /// Worth of N \ {i}.
  const rational& without(player i) const {
    return (*this)(grand_coalition().without(i));
  }

  /// Full table indexed by coalition mask, entry 0 is the empty coalition.
  std::span<const rational> table() const noexcept { return table_; }

  friend bool operator==(const characteristic_function&,
                         const characteristic_function&) = default;

 private:
  characteristic_function(std::size_t n, std::vector<rational> table)
      : n_(n), table_(std::move(table)) {}

  static void check_player_count(std::size_t n) {
    if (n < 1) {
      throw error(errc::bad_player_count, "a game needs at least one player");
    }
    if (n > max_players) {
      throw error(errc::n_too_large, "n = " + std::to_string(n) +
                                         " exceeds the limit of " +
                                         std::to_string(max_players));
    }
  }

  std::size_t n_;
  std::vector<rational> table_;
};

using tu_game = characteristic_function<tu_kind>;
using cost_game = characteristic_function<cost_kind>;

inline tu_game new_tu_game(
    std::size_t n, std::span<const std::pair<coalition, rational>> values) {
  return tu_game::from_entries(n, values);
}

inline cost_game new_cost_game(
    std::size_t n, std::span<const std::pair<coalition, rational>> costs) {
  return cost_game::from_entries(n, costs);
}

template <typename Kind>
const rational& value(const characteristic_function<Kind>& game,
                      coalition s) {
  return game(s);
}

/// Sum of singleton worths, sum_j v({j}).
template <typename Kind>
rational singleton_sum(const characteristic_function<Kind>& game) {
  rational sum = 0;
  for (player i = 1; i <= game.players(); ++i) sum += game.singleton(i);
  return sum;
}

inline rational sum_of(std::span<const rational> xs) {
  rational sum = 0;
  for (const auto& x : xs) sum += x;
  return sum;
}

/// Builds a game by evaluating `f(coalition)` on every nonempty coalition.
template <typename Game, typename F>
Game tabulate(std::size_t n, F&& f) {
  if (n > max_players) {
    throw error(errc::n_too_large, "n = " + std::to_string(n));
  }
  std::vector<rational> table(std::size_t{1} << n);
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    table[mask] = f(coalition(static_cast<coalition::mask_type>(mask)));
  }
  return Game::from_table(n, std::move(table));
}

}  // namespace tugame

#endif  // TUGAME_GAME_HPP
