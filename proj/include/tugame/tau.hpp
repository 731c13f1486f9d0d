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

#ifndef TUGAME_TAU_HPP
#define TUGAME_TAU_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "bounds.hpp"
#include "game.hpp"
#include "properties.hpp"
#include "rational.hpp"

namespace tugame {

enum class tau_status { unique, degenerate_endpoints, not_quasibalanced };

constexpr std::string_view to_string(tau_status s) noexcept {
  switch (s) {
    case tau_status::unique: return "Unique";
    case tau_status::degenerate_endpoints: return "DegenerateEndpoints";
    case tau_status::not_quasibalanced: return "NotQuasibalanced";
  }
  return "Unknown";
}

struct tau_result {
  tau_status status = tau_status::not_quasibalanced;
  std::optional<allocation> point;
  /// Weight on the minimal-rights end: tau = alpha m + (1 - alpha) M.
  std::optional<rational> alpha;
  minimal_rights_vector lower;
  utopia_vector upper;
};

/// The efficient point on the segment from the minimal rights m to the
/// utopia payoffs M. Defined only for quasibalanced games; when m = M that
/// common point is returned.
inline tau_result tau_value(const tu_game& game) {
  tau_result result;
  result.upper = utopia_payoffs(game);
  result.lower = minimal_rights(game, result.upper);

  for (std::size_t k = 0; k < result.upper.size(); ++k) {
    if (result.lower[k] > result.upper[k]) return result;
  }
  const rational lower_sum = sum_of(result.lower);
  const rational upper_sum = sum_of(result.upper);
  if (lower_sum > game.grand() || game.grand() > upper_sum) return result;

  if (lower_sum == upper_sum) {
    // m <= M componentwise with equal sums forces m = M.
    result.status = tau_status::degenerate_endpoints;
    result.point = result.upper;
    return result;
  }

  const rational alpha = (upper_sum - game.grand()) / (upper_sum - lower_sum);
  allocation point;
  point.reserve(result.upper.size());
  for (std::size_t k = 0; k < result.upper.size(); ++k) {
    point.push_back(alpha * result.lower[k] + (1 - alpha) * result.upper[k]);
  }
  result.status = tau_status::unique;
  result.point = std::move(point);
  result.alpha = alpha;
  return result;
}

}  // namespace tugame

#endif  // TUGAME_TAU_HPP
