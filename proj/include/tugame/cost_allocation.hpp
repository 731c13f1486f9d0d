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

#ifndef TUGAME_COST_ALLOCATION_HPP
#define TUGAME_COST_ALLOCATION_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "coalition.hpp"
#include "game.hpp"
#include "rational.hpp"

namespace tugame {

/// SC_i = c(N) - c(N \ {i})
inline std::vector<rational> separable_costs(const cost_game& cost) {
  std::vector<rational> sc;
  sc.reserve(cost.players());
  for (player i = 1; i <= cost.players(); ++i) {
    sc.push_back(cost.grand() - cost.without(i));
  }
  return sc;
}

/// NSC = c(N) - sum_j SC_j
inline rational nonseparable_cost(const cost_game& cost) {
  return cost.grand() - sum_of(separable_costs(cost));
}

/// v(S) = sum_{i in S} c_i - c(S). Always 0-normalized.
inline tu_game savings_game(const cost_game& cost) {
  std::vector<rational> single(cost.players());
  for (player i = 1; i <= cost.players(); ++i) {
    single[i - 1] = cost.singleton(i);
  }
  return tabulate<tu_game>(cost.players(), [&](coalition s) {
    rational v = -cost(s);
    for (player i : s.members()) v += single[i - 1];
    return v;
  });
}

enum class aca_status {
  allocated,
  allocated_negative_nsc,
  undefined_zero_denominator,
};

constexpr std::string_view to_string(aca_status s) noexcept {
  switch (s) {
    case aca_status::allocated: return "Allocated";
    case aca_status::allocated_negative_nsc: return "AllocatedNegativeNSC";
    case aca_status::undefined_zero_denominator:
      return "UndefinedZeroDenominator";
  }
  return "Unknown";
}

struct aca_result {
  aca_status status = aca_status::undefined_zero_denominator;
  std::optional<tugame::allocation> allocation;
  std::vector<rational> separable;
  rational nsc;
};

/// Alternate cost avoided: y_i = SC_i + NSC (c_i - SC_i) / sum_j (c_j - SC_j).
/// A negative NSC is still allocated but flagged.
inline aca_result aca_allocation(const cost_game& cost) {
  aca_result result;
  result.separable = separable_costs(cost);
  result.nsc = cost.grand() - sum_of(result.separable);

  const std::size_t n = cost.players();
  std::vector<rational> avoided(n);
  rational denominator = 0;
  for (std::size_t k = 0; k < n; ++k) {
    avoided[k] = cost.singleton(k + 1) - result.separable[k];
    denominator += avoided[k];
  }
  if (denominator == 0) {
    result.status = aca_status::undefined_zero_denominator;
    return result;
  }

  tugame::allocation y;
  y.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    y.push_back(result.separable[k] + result.nsc * avoided[k] / denominator);
  }
  result.status = result.nsc < 0 ? aca_status::allocated_negative_nsc
                                 : aca_status::allocated;
  result.allocation = std::move(y);
  return result;
}

}  // namespace tugame

#endif  // TUGAME_COST_ALLOCATION_HPP
