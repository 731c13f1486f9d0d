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

// Computes the Gately point and tau-value of a small game built in code.

#include <iostream>
#include <utility>
#include <vector>

#include "tugame.hpp"

int main() {
  using tugame::coalition;
  using tugame::make_rational;

  const std::vector<std::pair<coalition, tugame::rational>> values = {
      {coalition::of({1}), 3},
      {coalition::of({2}), 4},
      {coalition::of({3}), 5},
      {coalition::of({1, 2}), 9},
      {coalition::of({1, 3}), 10},
      {coalition::of({2, 3}), 11},
      {coalition::of({1, 2, 3}), make_rational(29, 2)},
  };
  const tugame::tu_game game = tugame::new_tu_game(3, values);

  const auto gately = tugame::gately_point(game);
  std::cout << "Gately status: " << to_string(gately.status) << "\n";
  if (gately.point) {
    for (std::size_t k = 0; k < gately.point->size(); ++k) {
      std::cout << "  x" << k + 1 << " = " << tugame::to_string((*gately.point)[k])
                << "\n";
    }
  }
  if (gately.d_star) {
    std::cout << "d* = " << tugame::to_string(*gately.d_star) << "\n";
  }

  const auto tau = tugame::tau_value(game);
  std::cout << "tau status: " << to_string(tau.status) << "\n";
  return 0;
}
