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

#ifndef TUGAME_ERROR_HPP
#define TUGAME_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tugame {

enum class errc {
  // input / model errors
  missing_coalition,
  duplicate_coalition,
  player_out_of_range,
  n_too_large,
  bad_player_count,
  nonzero_empty_coalition,
  syntax_error,
  bad_coalition_key,
  bad_number,
  kind_mismatch,
  io_error,
  // precondition violations
  not_essential,
  not_efficient,
  at_lower_bound,
  below_lower_bound,
  player_not_in_coalition,
  dimension_mismatch,
  too_many_players,
  invalid_argument,
  generation_failed,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::missing_coalition: return "MissingCoalition";
    case errc::duplicate_coalition: return "DuplicateCoalition";
    case errc::player_out_of_range: return "PlayerOutOfRange";
    case errc::n_too_large: return "NTooLarge";
    case errc::bad_player_count: return "BadPlayerCount";
    case errc::nonzero_empty_coalition: return "NonzeroEmptyCoalition";
    case errc::syntax_error: return "SyntaxError";
    case errc::bad_coalition_key: return "BadCoalitionKey";
    case errc::bad_number: return "BadNumber";
    case errc::kind_mismatch: return "KindMismatch";
    case errc::io_error: return "IOError";
    case errc::not_essential: return "NotEssential";
    case errc::not_efficient: return "NotEfficient";
    case errc::at_lower_bound: return "AtLowerBound";
    case errc::below_lower_bound: return "BelowLowerBound";
    case errc::player_not_in_coalition: return "PlayerNotInCoalition";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::too_many_players: return "TooManyPlayers";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::generation_failed: return "GenerationFailed";
  }
  return "Unknown";
}

/// True for errors caused by malformed or inconsistent game input, as
/// opposed to a well-formed game that violates an operation's precondition.
constexpr bool is_input_error(errc code) noexcept {
  switch (code) {
    case errc::missing_coalition:
    case errc::duplicate_coalition:
    case errc::player_out_of_range:
    case errc::n_too_large:
    case errc::bad_player_count:
    case errc::nonzero_empty_coalition:
    case errc::syntax_error:
    case errc::bad_coalition_key:
    case errc::bad_number:
    case errc::kind_mismatch:
    case errc::io_error:
      return true;
    default:
      return false;
  }
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        position_(position) {}

  errc code() const noexcept { return code_; }

  /// Byte offset into the input, set for syntax errors only.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace tugame

#endif  // TUGAME_ERROR_HPP
