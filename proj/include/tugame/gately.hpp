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

#ifndef TUGAME_GATELY_HPP
#define TUGAME_GATELY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "bounds.hpp"
#include "error.hpp"
#include "game.hpp"
#include "properties.hpp"
#include "rational.hpp"

namespace tugame {

enum class gately_status {
  unique_imputation,
  inessential_boundary,
  undefined_equal_propensity_minus_one,
  outside_imputation_set,
  not_essential,
};

constexpr std::string_view to_string(gately_status s) noexcept {
  switch (s) {
    case gately_status::unique_imputation: return "UniqueImputation";
    case gately_status::inessential_boundary: return "InessentialBoundary";
    case gately_status::undefined_equal_propensity_minus_one:
      return "UndefinedEqualPropensityMinusOne";
    case gately_status::outside_imputation_set: return "OutsideImputationSet";
    case gately_status::not_essential: return "NotEssential";
  }
  return "Unknown";
}

/// One-line explanation suitable for showing to a user.
constexpr std::string_view describe(gately_status s) noexcept {
  switch (s) {
    case gately_status::unique_imputation:
      return "the Gately point is the unique imputation equalizing the "
             "propensities to disrupt";
    case gately_status::inessential_boundary:
      return "the game is inessential; the only imputation is "
             "(v_1, ..., v_n)";
    case gately_status::undefined_equal_propensity_minus_one:
      return "the equal propensity to disrupt is d* = -1: every imputation "
             "has propensity -1, so the Gately point is not unique";
    case gately_status::outside_imputation_set:
      return "the equal-propensity point is efficient but not individually "
             "rational; no Gately imputation exists";
    case gately_status::not_essential:
      return "the game is not essential (sum of v_i >= v(N) without being "
             "inessential); the Gately point is undefined";
  }
  return "";
}

struct gately_result {
  gately_status status = gately_status::not_essential;
  std::optional<allocation> point;
  /// Equal propensity d*, present for every essential game.
  std::optional<rational> d_star;
  /// t with x = v + t (M - v), present when a point was computed from the
  /// half-line.
  std::optional<rational> line_parameter;
};

/// d(i, x) = (M_i - x_i) / (x_i - v_i) for an efficient x with x_i > v_i.
inline rational propensity_to_disrupt(const tu_game& game, const allocation& x,
                                      player i, const utopia_vector& upper) {
  if (x.size() != game.players()) {
    throw error(errc::dimension_mismatch,
                "allocation has " + std::to_string(x.size()) +
                    " entries for a game with " +
                    std::to_string(game.players()) + " players");
  }
  if (i < 1 || i > game.players()) {
    throw error(errc::player_out_of_range,
                "player " + std::to_string(i) + " outside 1.." +
                    std::to_string(game.players()));
  }
  if (sum_of(x) != game.grand()) {
    throw error(errc::not_efficient,
                "allocation sums to " + to_string(sum_of(x)) + ", not v(N) = " +
                    to_string(game.grand()));
  }
  const rational& xi = x[i - 1];
  const rational& vi = game.singleton(i);
  if (xi == vi) {
    throw error(errc::at_lower_bound,
                "x_" + std::to_string(i) + " equals v_" + std::to_string(i));
  }
  if (xi < vi) {
    throw error(errc::below_lower_bound,
                "x_" + std::to_string(i) + " is below v_" + std::to_string(i));
  }
  return (upper[i - 1] - xi) / (xi - vi);
}

inline rational propensity_to_disrupt(const tu_game& game, const allocation& x,
                                      player i) {
  return propensity_to_disrupt(game, x, i, utopia_payoffs(game));
}

/// d* = (sum M_j - v(N)) / (v(N) - sum v_j); defined for essential games.
inline rational equal_propensity(const tu_game& game,
                                 const utopia_vector& upper) {
  const rational surplus = game.grand() - singleton_sum(game);
  if (surplus <= 0) {
    throw error(errc::not_essential,
                "v(N) - sum v_j = " + to_string(surplus) +
                    " is not positive; d* is undefined");
  }
  return (sum_of(upper) - game.grand()) / surplus;
}

inline rational equal_propensity(const tu_game& game) {
  return equal_propensity(game, utopia_payoffs(game));
}

/// Gately point with the full uniqueness gate.
///
/// Inessential games return (v_1, ..., v_n). Other non-essential games and
/// games with sum M = sum v (d* = -1, which includes every weakly
/// constant-sum game) return no point. Otherwise the point on the half-line
/// from v towards M is computed; it is reported as an imputation only when
/// every direction component (M_i - v_i) has the sign of sum (M_j - v_j).
inline gately_result gately_point(const tu_game& game) {
  gately_result result;
  const std::size_t n = game.players();
  const rational lower_sum = singleton_sum(game);
  const rational surplus = game.grand() - lower_sum;

  if (surplus == 0 && is_superadditive(game)) {
    result.status = gately_status::inessential_boundary;
    allocation point;
    point.reserve(n);
    for (player i = 1; i <= n; ++i) point.push_back(game.singleton(i));
    result.point = std::move(point);
    return result;
  }
  if (surplus <= 0) {
    result.status = gately_status::not_essential;
    return result;
  }

  const utopia_vector upper = utopia_payoffs(game);
  const rational upper_sum = sum_of(upper);
  result.d_star = (upper_sum - game.grand()) / surplus;

  const rational gap = upper_sum - lower_sum;
  if (gap == 0) {
    result.status = gately_status::undefined_equal_propensity_minus_one;
    return result;
  }

  const rational t = surplus / gap;
  allocation point;
  point.reserve(n);
  bool individually_rational = true;
  for (player i = 1; i <= n; ++i) {
    const rational& vi = game.singleton(i);
    const rational direction = upper[i - 1] - vi;
    if (direction * gap < 0) individually_rational = false;
    point.push_back(vi + t * direction);
  }
  result.status = individually_rational ? gately_status::unique_imputation
                                        : gately_status::outside_imputation_set;
  result.point = std::move(point);
  result.line_parameter = t;
  return result;
}

}  // namespace tugame

#endif  // TUGAME_GATELY_HPP
