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

#ifndef TUGAME_IO_HPP
#define TUGAME_IO_HPP

#include <json.hpp>

#include <cstdint>
#include <istream>
#include <iterator>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "coalition.hpp"
#include "error.hpp"
#include "game.hpp"
#include "rational.hpp"

namespace tugame {

using any_game = std::variant<tu_game, cost_game>;

namespace detail {

// Streams the game file through SAX events so numbers arrive as their
// original token text and duplicate keys stay visible.
class game_file_reader final : public nlohmann::json_sax<nlohmann::json> {
 public:
  std::optional<std::string> kind;
  std::optional<std::int64_t> n;
  bool saw_values = false;
  std::vector<std::pair<std::string, std::string>> entries;

  bool null() override { return unexpected("null"); }
  bool boolean(bool) override { return unexpected("boolean"); }
  bool binary(binary_t&) override { return unexpected("binary value"); }
  bool start_array(std::size_t) override { return unexpected("array"); }
  bool end_array() override { return unexpected("array"); }

  bool number_integer(number_integer_t val) override {
    return scalar(std::to_string(val), true);
  }
  bool number_unsigned(number_unsigned_t val) override {
    return scalar(std::to_string(val), true);
  }
  bool number_float(number_float_t, const string_t& text) override {
    return scalar(text, true);
  }
  bool string(string_t& val) override { return scalar(val, false); }

  bool start_object(std::size_t) override {
    if (depth_ == 0) {
      depth_ = 1;
      return true;
    }
    if (depth_ == 1 && key_ == "values") {
      if (saw_values) duplicate_field("values");
      saw_values = true;
      depth_ = 2;
      return true;
    }
    return unexpected("object");
  }

  bool end_object() override {
    --depth_;
    return true;
  }

  bool key(string_t& val) override {
    key_ = val;
    if (depth_ == 1 && key_ != "kind" && key_ != "n" && key_ != "values") {
      throw error(errc::syntax_error, "unknown field '" + key_ + "'");
    }
    return true;
  }

  bool parse_error(std::size_t position, const std::string& last_token,
                   const nlohmann::detail::exception&) override {
    throw error(errc::syntax_error,
                "malformed input near '" + last_token + "' at byte " +
                    std::to_string(position),
                position);
  }

 private:
  bool scalar(const std::string& text, bool is_number) {
    if (depth_ == 2) {
      entries.emplace_back(key_, text);
      return true;
    }
    if (depth_ == 1 && key_ == "kind" && !is_number) {
      if (kind) duplicate_field("kind");
      kind = text;
      return true;
    }
    if (depth_ == 1 && key_ == "n" && is_number) {
      if (n) duplicate_field("n");
      if (text.empty() || text.size() > 6 ||
          text.find_first_not_of("-0123456789") != std::string::npos) {
        throw error(errc::syntax_error, "field 'n' must be an integer");
      }
      n = std::stoll(text);
      return true;
    }
    return unexpected(is_number ? "number" : "string");
  }

  [[noreturn]] bool unexpected(const std::string& what) {
    throw error(errc::syntax_error,
                "unexpected " + what +
                    (key_.empty() ? std::string() : " at field '" + key_ + "'"));
  }

  [[noreturn]] static void duplicate_field(const std::string& name) {
    throw error(errc::syntax_error, "field '" + name + "' given twice");
  }

  int depth_ = 0;
  std::string key_;
};

template <typename Game>
Game build_game(std::size_t n,
                const std::vector<std::pair<std::string, std::string>>& raw) {
  if (n > max_players) {
    throw error(errc::n_too_large, "n = " + std::to_string(n) +
                                       " exceeds the limit of " +
                                       std::to_string(max_players));
  }
  std::vector<std::pair<coalition, rational>> entries;
  entries.reserve(raw.size());
  for (const auto& [key, token] : raw) {
    coalition s = parse_coalition_key(key);
    entries.emplace_back(s, parse_rational(token));
  }
  return Game::from_entries(n, entries);
}

}  // namespace detail

/// Reads a game file: {"kind": "tu"|"cost", "n": int, "values": {...}}.
inline any_game parse_game(std::string_view text) {
  detail::game_file_reader reader;
  nlohmann::json::sax_parse(text.begin(), text.end(), &reader);
  if (!reader.kind) throw error(errc::syntax_error, "missing field 'kind'");
  if (!reader.n) throw error(errc::syntax_error, "missing field 'n'");
  if (!reader.saw_values) {
    throw error(errc::syntax_error, "missing field 'values'");
  }
  if (*reader.n < 1) {
    throw error(errc::bad_player_count, "a game needs at least one player");
  }
  const auto n = static_cast<std::size_t>(*reader.n);
  if (*reader.kind == tu_kind::name) {
    return detail::build_game<tu_game>(n, reader.entries);
  }
  if (*reader.kind == cost_kind::name) {
    return detail::build_game<cost_game>(n, reader.entries);
  }
  throw error(errc::syntax_error,
              "field 'kind' must be \"tu\" or \"cost\", got \"" +
                  *reader.kind + "\"");
}

inline any_game parse_game(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_game(std::string_view(text));
}

/// Game as a JSON object; keys in increasing mask order, integers as JSON
/// numbers where they fit in 64 bits, everything else as "p/q" strings.
template <typename Kind>
nlohmann::ordered_json to_json(const characteristic_function<Kind>& game) {
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  const auto table = game.table();
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    const std::string key =
        to_key(coalition(static_cast<coalition::mask_type>(mask)));
    const rational& r = table[mask];
    const integer num = numerator_of(r);
    if (denominator_of(r) == 1 && num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      values[key] = static_cast<std::int64_t>(num);
    } else {
      values[key] = to_string(r);
    }
  }
  nlohmann::ordered_json out;
  out["kind"] = std::string(Kind::name);
  out["n"] = game.players();
  out["values"] = std::move(values);
  return out;
}

template <typename Kind>
std::string serialize_game(const characteristic_function<Kind>& game) {
  return to_json(game).dump(2) + "\n";
}

inline std::string serialize_game(const any_game& game) {
  return std::visit([](const auto& g) { return serialize_game(g); }, game);
}

/// Parses and insists on a TU game.
inline tu_game parse_tu_game(std::string_view text) {
  any_game g = parse_game(text);
  if (auto* tu = std::get_if<tu_game>(&g)) return std::move(*tu);
  throw error(errc::kind_mismatch, "expected a game of kind \"tu\"");
}

inline cost_game parse_cost_game(std::string_view text) {
  any_game g = parse_game(text);
  if (auto* c = std::get_if<cost_game>(&g)) return std::move(*c);
  throw error(errc::kind_mismatch, "expected a game of kind \"cost\"");
}

}  // namespace tugame

#endif  // TUGAME_IO_HPP
