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

#ifndef TUGAME_COALITION_HPP
#define TUGAME_COALITION_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace tugame {

/// Players are numbered 1..n throughout the public API.
using player = std::size_t;

inline constexpr std::size_t max_players = 16;

/// A subset of the player set, stored as a bitmask (player i is bit i-1).
class coalition {
 public:
  using mask_type = std::uint32_t;

  constexpr coalition() = default;
  constexpr explicit coalition(mask_type mask) : mask_(mask) {}

  static coalition of(std::initializer_list<player> members) {
    coalition s;
    for (player i : members) s = s.with(i);
    return s;
  }

  static constexpr coalition grand(std::size_t n) {
    return coalition(n >= 32 ? ~mask_type{0} : ((mask_type{1} << n) - 1));
  }

  static coalition singleton(player i) { return coalition().with(i); }

  constexpr mask_type mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(mask_));
  }

  /// Highest member index, 0 for the empty coalition.
  constexpr player max_player() const noexcept {
    return static_cast<player>(std::bit_width(mask_));
  }

  bool contains(player i) const noexcept {
    return i >= 1 && i <= max_players && (mask_ & bit(i)) != 0;
  }

  coalition with(player i) const { return coalition(mask_ | checked_bit(i)); }
  coalition without(player i) const {
    return coalition(mask_ & ~checked_bit(i));
  }

  constexpr bool is_subset_of(coalition other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }

  std::vector<player> members() const {
    std::vector<player> out;
    for (mask_type m = mask_; m != 0; m &= m - 1) {
      out.push_back(static_cast<player>(std::countr_zero(m)) + 1);
    }
    return out;
  }

  friend constexpr coalition operator|(coalition a, coalition b) noexcept {
    return coalition(a.mask_ | b.mask_);
  }
  friend constexpr coalition operator&(coalition a, coalition b) noexcept {
    return coalition(a.mask_ & b.mask_);
  }
  friend constexpr bool operator==(coalition, coalition) = default;
  friend constexpr auto operator<=>(coalition, coalition) = default;

 private:
  static constexpr mask_type bit(player i) noexcept {
    return mask_type{1} << (i - 1);
  }
  static mask_type checked_bit(player i) {
    if (i < 1 || i > max_players) {
      throw error(errc::player_out_of_range,
                  "player " + std::to_string(i) + " outside 1.." +
                      std::to_string(max_players));
    }
    return bit(i);
  }

  mask_type mask_ = 0;
};

/// File key of a coalition: comma-separated increasing indices, "" for the
/// empty coalition.
inline std::string to_key(coalition s) {
  std::string key;
  for (player i : s.members()) {
    if (!key.empty()) key += ',';
    key += std::to_string(i);
  }
  return key;
}

inline coalition parse_coalition_key(std::string_view key) {
  auto fail = [&]() -> coalition {
    throw error(errc::bad_coalition_key,
                "invalid coalition key '" + std::string(key) + "'");
  };
  coalition s;
  if (key.empty()) return s;
  player last = 0;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = key.find(',', pos);
    std::string_view part = key.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    if (part.empty() || part.size() > 2 || part.front() == '0') return fail();
    player i = 0;
    for (char c : part) {
      if (c < '0' || c > '9') return fail();
      i = i * 10 + static_cast<player>(c - '0');
    }
    if (i <= last) return fail();
    if (i > max_players) {
      throw error(errc::player_out_of_range,
                  "coalition key '" + std::string(key) + "' names player " +
                      std::to_string(i));
    }
    s = s.with(i);
    last = i;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

}  // namespace tugame

#endif  // TUGAME_COALITION_HPP
