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

#ifndef TUGAME_ORACLE_HPP
#define TUGAME_ORACLE_HPP

// Brute-force cross-checks for the closed forms. Nothing in here calls the
// solver headers; the quantities are recomputed from their definitions.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "coalition.hpp"
#include "error.hpp"
#include "game.hpp"
#include "properties.hpp"
#include "rational.hpp"

namespace tugame::oracle {

inline constexpr std::size_t max_grid_players = 4;

struct grid_search_report {
  allocation best_point;
  rational best_minmax;
  unsigned resolution = 0;
};

/// Minimizes max_i d(i, x) over the interior lattice
/// x = v + (v(N) - sum v_j) / resolution * k with k_i >= 1, sum k = resolution.
/// Lattice points are visited in lexicographic order of k and only a strict
/// improvement replaces the incumbent, so ties go to the smallest point.
inline grid_search_report grid_minmax_propensity(const tu_game& game,
                                                 unsigned resolution) {
  const std::size_t n = game.players();
  if (n > max_grid_players) {
    throw error(errc::too_many_players,
                "grid search supports at most " +
                    std::to_string(max_grid_players) + " players, got " +
                    std::to_string(n));
  }
  rational lower_total = 0;
  std::vector<rational> lower(n), upper(n);
  const coalition everyone = coalition::grand(n);
  for (std::size_t k = 0; k < n; ++k) {
    lower[k] = game(coalition::singleton(k + 1));
    upper[k] = game(everyone) - game(everyone.without(k + 1));
    lower_total += lower[k];
  }
  const rational surplus = game(everyone) - lower_total;
  if (surplus <= 0) {
    throw error(errc::not_essential,
                "grid search needs an essential game (v(N) > sum v_j)");
  }
  if (resolution < n) {
    throw error(errc::invalid_argument,
                "resolution " + std::to_string(resolution) +
                    " leaves no interior grid point for " + std::to_string(n) +
                    " players");
  }
  const rational step = surplus / resolution;

  grid_search_report report;
  report.resolution = resolution;
  std::vector<unsigned> steps(n, 0);
  allocation x(n);
  bool have_best = false;

  std::function<void(std::size_t, unsigned)> visit = [&](std::size_t k,
                                                         unsigned left) {
    if (k + 1 == n) {
      steps[k] = left;
      rational worst;
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = lower[j] + step * steps[j];
        rational d = (upper[j] - x[j]) / (x[j] - lower[j]);
        if (j == 0 || d > worst) worst = std::move(d);
      }
      if (!have_best || worst < report.best_minmax) {
        report.best_minmax = std::move(worst);
        report.best_point = x;
        have_best = true;
      }
      return;
    }
    const auto remaining_players = static_cast<unsigned>(n - k - 1);
    for (unsigned s = 1; s + remaining_players <= left; ++s) {
      steps[k] = s;
      visit(k + 1, left - s);
    }
  };
  visit(0, resolution);
  return report;
}

struct definition_recomputation {
  std::vector<rational> upper;
  std::vector<rational> lower;
  game_classification flags;
};

/// Utopia payoffs, minimal rights and the classification flags evaluated
/// straight from their definitions with plain nested loops.
inline definition_recomputation recompute_by_definition(const tu_game& game) {
  const std::size_t n = game.players();
  const auto table = game.table();
  const std::size_t count = table.size();
  auto has = [](std::size_t mask, std::size_t k) {
    return ((mask >> k) & 1U) != 0;
  };
  auto value_of_members = [&](const std::vector<std::size_t>& members) {
    std::size_t mask = 0;
    for (std::size_t k : members) mask |= std::size_t{1} << k;
    return table[mask];
  };

  definition_recomputation out;
  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = k;
  const rational grand = value_of_members(all);

  rational singles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i) others.push_back(k);
    }
    out.upper.push_back(grand - value_of_members(others));
    singles += value_of_members({i});
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::optional<rational> best;
    for (std::size_t s = 0; s < count; ++s) {
      if (!has(s, i)) continue;
      rational r = table[s];
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && has(s, j)) r -= out.upper[j];
      }
      if (!best || r > *best) best = r;
    }
    out.lower.push_back(*best);
  }

  auto& f = out.flags;
  f.essential = singles < grand;

  f.superadditive = true;
  for (std::size_t s = 1; s < count && f.superadditive; ++s) {
    for (std::size_t t = 1; t < count; ++t) {
      if ((s & t) == 0 && table[s | t] < table[s] + table[t]) {
        f.superadditive = false;
        break;
      }
    }
  }
  f.inessential = f.superadditive && singles == grand;

  f.weakly_superadditive = true;
  for (std::size_t s = 0; s < count && f.weakly_superadditive; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      if (has(s, i)) continue;
      const std::size_t with_i = s | (std::size_t{1} << i);
      if (table[with_i] < table[s] + value_of_members({i})) {
        f.weakly_superadditive = false;
        break;
      }
    }
  }

  f.weakly_constant_sum = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i) others.push_back(k);
    }
    if (value_of_members({i}) + value_of_members(others) != grand) {
      f.weakly_constant_sum = false;
    }
  }

  rational lower_sum = 0, upper_sum = 0;
  bool componentwise = true;
  for (std::size_t i = 0; i < n; ++i) {
    lower_sum += out.lower[i];
    upper_sum += out.upper[i];
    if (out.lower[i] > out.upper[i]) componentwise = false;
  }
  f.quasibalanced =
      componentwise && lower_sum <= grand && grand <= upper_sum;
  return out;
}

enum class game_class { superadditive, quasibalanced, weakly_constant_sum, arbitrary };

constexpr std::string_view to_string(game_class c) noexcept {
  switch (c) {
    case game_class::superadditive: return "superadditive";
    case game_class::quasibalanced: return "quasibalanced";
    case game_class::weakly_constant_sum: return "weakly_constant_sum";
    case game_class::arbitrary: return "arbitrary";
  }
  return "unknown";
}

namespace detail {

// Draws go through raw mt19937_64 output (its sequence is fixed by the
// standard) so games are identical across standard libraries.
class sampler {
 public:
  explicit sampler(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  bool chance(unsigned percent) { return engine_() % 100 < percent; }

  /// Random rational in [lo, hi] with denominator from {1, 2, 3, 4, 6}.
  rational value(std::int64_t lo, std::int64_t hi) {
    static constexpr std::int64_t dens[] = {1, 2, 3, 4, 6};
    const std::int64_t den = dens[engine_() % 5];
    return make_rational(uniform(lo * den, hi * den), den);
  }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::size_t n,
                              game_class c) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ seed;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h ^= static_cast<std::uint64_t>(n) * 0x94d049bb133111ebULL;
  h ^= static_cast<std::uint64_t>(c) << 56;
  return h ^ (h >> 31);
}

// Superadditive by construction: each coalition is worth its best split
// plus a nonnegative bonus, and the grand coalition gets a positive one.
inline tu_game superadditive_sample(sampler& rng, std::size_t n) {
  std::vector<rational> table(std::size_t{1} << n);
  const std::size_t full = table.size() - 1;
  for (std::size_t s = 1; s <= full; ++s) {
    if ((s & (s - 1)) == 0) {
      table[s] = rng.value(-5, 10);
      continue;
    }
    const std::size_t low = s & (~s + 1);
    std::optional<rational> best;
    for (std::size_t t = (s - 1) & s; t > 0; t = (t - 1) & s) {
      if ((t & low) == 0) continue;
      rational split = table[t] + table[s ^ t];
      if (!best || split > *best) best = std::move(split);
    }
    rational bonus = rng.chance(20) ? rational(0) : rng.value(0, 6);
    if (s == full && bonus == 0) bonus = rng.value(1, 6);
    table[s] = *best + bonus;
  }
  return tu_game::from_table(n, std::move(table));
}

// Games with a nonempty core are quasibalanced: fix a payoff y, give every
// coalition at most what y pays it, and let N be worth exactly sum y.
inline tu_game core_sample(sampler& rng, std::size_t n) {
  std::vector<rational> y(n);
  for (auto& yi : y) yi = rng.value(-3, 12);
  std::vector<rational> table(std::size_t{1} << n);
  const std::size_t full = table.size() - 1;
  for (std::size_t s = 1; s <= full; ++s) {
    rational paid = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if ((s >> k) & 1U) paid += y[k];
    }
    if (s == full) {
      table[s] = paid;
    } else if (s == 1) {
      table[s] = paid - rng.value(1, 5);
    } else {
      table[s] = paid - (rng.chance(25) ? rational(0) : rng.value(0, 5));
    }
  }
  return tu_game::from_table(n, std::move(table));
}

inline tu_game arbitrary_sample(sampler& rng, std::size_t n) {
  std::vector<rational> table(std::size_t{1} << n);
  for (std::size_t s = 1; s < table.size(); ++s) table[s] = rng.value(-10, 20);
  return tu_game::from_table(n, std::move(table));
}

inline tu_game weakly_constant_sum_sample(sampler& rng, std::size_t n) {
  std::vector<rational> table(std::size_t{1} << n);
  const std::size_t full = table.size() - 1;
  rational singles = 0;
  for (std::size_t k = 0; k < n; ++k) {
    table[std::size_t{1} << k] = rng.value(-5, 10);
    singles += table[std::size_t{1} << k];
  }
  // With two players N \ {i} is a singleton, which pins v(N) = v_1 + v_2.
  const rational grand = n <= 2 ? singles : singles + rng.value(1, 10);
  table[full] = grand;
  for (std::size_t k = 0; k < n && n > 1; ++k) {
    table[full ^ (std::size_t{1} << k)] = grand - table[std::size_t{1} << k];
  }
  for (std::size_t s = 1; s < full; ++s) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(s));
    if (size >= 2 && size + 1 < n) table[s] = rng.value(-5, 20);
  }
  return tu_game::from_table(n, std::move(table));
}

}  // namespace detail

inline constexpr unsigned generation_attempts = 1000;

/// Deterministic game of the requested class for (seed, n, class). The
/// sample is re-checked against the class predicate; quasibalanced and
/// superadditive samples are also essential.
inline tu_game generate_game(std::uint64_t seed, std::size_t n,
                             game_class cls) {
  if (n < 2 || n > 4) {
    throw error(errc::invalid_argument,
                "cannot generate a game with n = " + std::to_string(n));
  }
  detail::sampler rng(detail::mix_seed(seed, n, cls));
  for (unsigned attempt = 0; attempt < generation_attempts; ++attempt) {
    switch (cls) {
      case game_class::arbitrary:
        return detail::arbitrary_sample(rng, n);
      case game_class::superadditive: {
        tu_game g = detail::superadditive_sample(rng, n);
        if (is_superadditive(g) && is_essential(g)) return g;
        break;
      }
      case game_class::quasibalanced: {
        // Mostly rejection from superadditive samples, which reaches games
        // with an empty core; otherwise a core-based sample.
        tu_game g = attempt % 4 == 3 ? detail::core_sample(rng, n)
                                     : detail::superadditive_sample(rng, n);
        if (is_quasibalanced(g) && is_essential(g)) return g;
        break;
      }
      case game_class::weakly_constant_sum: {
        tu_game g = detail::weakly_constant_sum_sample(rng, n);
        if (is_weakly_constant_sum(g)) return g;
        break;
      }
    }
  }
  throw error(errc::generation_failed,
              "no " + std::string(to_string(cls)) + " game after " +
                  std::to_string(generation_attempts) + " attempts");
}

/// Cost game whose savings game is a 0-normalized superadditive game, i.e.
/// a subadditive cost game. c(S) = sum_{i in S} c_i - w(S).
inline cost_game generate_cost_game(std::uint64_t seed, std::size_t n) {
  const tu_game base = generate_game(seed, n, game_class::superadditive);
  detail::sampler rng(detail::mix_seed(seed, n, game_class::arbitrary) ^ 0xc057);
  std::vector<rational> single(n);
  for (auto& c : single) c = rng.value(5, 30);
  const auto table = base.table();
  return tabulate<cost_game>(n, [&](coalition s) {
    rational c = 0;
    rational savings = table[s.mask()];
    for (player i : s.members()) {
      c += single[i - 1];
      savings -= table[std::size_t{1} << (i - 1)];
    }
    return c - savings;
  });
}

}  // namespace tugame::oracle

#endif  // TUGAME_ORACLE_HPP
