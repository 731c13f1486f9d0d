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

// Command-line front end. `run` is kept separate from main() so the test
// suites can drive it in-process.

#ifndef TUGAME_TOOLS_CLI_HPP
#define TUGAME_TOOLS_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tugame.hpp"

namespace tugame::cli {

enum exit_code : int {
  exit_ok = 0,
  exit_input_error = 2,
  exit_precondition = 3,
  exit_internal = 4,
};

/// Everything a subcommand wants to say, rendered as text or JSON.
struct report {
  std::string command;
  std::string input_digest;
  std::optional<std::string> status;
  std::vector<std::pair<std::string, std::vector<rational>>> vectors;
  std::vector<std::pair<std::string, rational>> scalars;
  std::vector<std::pair<std::string, bool>> flags;
  std::optional<nlohmann::ordered_json> game;
  std::vector<std::string> messages;
};

/// FNV-1a over the canonical serialization.
inline std::string digest(std::string_view canonical) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

inline nlohmann::ordered_json exact_json(const rational& r) {
  return {{"exact", to_string(r)}, {"approx", to_decimal(r)}};
}

inline std::string render_structured(const report& r) {
  nlohmann::ordered_json out;
  out["command"] = r.command;
  out["input_digest"] = r.input_digest;
  out["status"] = r.status ? nlohmann::ordered_json(*r.status) : nullptr;
  nlohmann::ordered_json vectors = nlohmann::ordered_json::object();
  for (const auto& [name, values] : r.vectors) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& v : values) list.push_back(exact_json(v));
    vectors[name] = std::move(list);
  }
  out["vectors"] = std::move(vectors);
  nlohmann::ordered_json scalars = nlohmann::ordered_json::object();
  for (const auto& [name, v] : r.scalars) scalars[name] = exact_json(v);
  out["scalars"] = std::move(scalars);
  if (!r.flags.empty()) {
    nlohmann::ordered_json flags = nlohmann::ordered_json::object();
    for (const auto& [name, v] : r.flags) flags[name] = v;
    out["flags"] = std::move(flags);
  }
  if (r.game) out["game"] = *r.game;
  out["messages"] = r.messages;
  return out.dump(2) + "\n";
}

inline std::string render_text(const report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  os << "input_digest: " << r.input_digest << "\n";
  if (r.status) os << "status: " << *r.status << "\n";
  for (const auto& [name, on] : r.flags) {
    os << name << ": " << (on ? "true" : "false") << "\n";
  }
  for (const auto& [name, values] : r.vectors) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      os << name << "[" << k + 1 << "] = " << to_string(values[k]) << " ("
         << to_decimal(values[k]) << ")\n";
    }
  }
  for (const auto& [name, v] : r.scalars) {
    os << name << " = " << to_string(v) << " (" << to_decimal(v) << ")\n";
  }
  if (r.game) {
    os << "kind: " << (*r.game)["kind"].get<std::string>() << "\n";
    os << "n: " << (*r.game)["n"].get<std::size_t>() << "\n";
    for (const auto& [key, value] : (*r.game)["values"].items()) {
      const rational v = value.is_string()
                             ? parse_rational(value.get<std::string>())
                             : parse_rational(value.dump());
      os << "v{" << key << "} = " << to_string(v) << " (" << to_decimal(v)
         << ")\n";
    }
  }
  for (const auto& m : r.messages) os << "message: " << m << "\n";
  return os.str();
}

namespace detail {

inline any_game load_game(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw error(errc::io_error, "cannot open game file '" + path + "'");
  }
  return parse_game(in);
}

inline tu_game load_tu_game(const std::string& path) {
  any_game g = load_game(path);
  if (auto* tu = std::get_if<tu_game>(&g)) return std::move(*tu);
  throw error(errc::kind_mismatch,
              "'" + path + "' holds a cost game; this command needs kind "
              "\"tu\" (use `savings` to derive one)");
}

inline cost_game load_cost_game(const std::string& path) {
  any_game g = load_game(path);
  if (auto* c = std::get_if<cost_game>(&g)) return std::move(*c);
  throw error(errc::kind_mismatch,
              "'" + path + "' holds a TU game; this command needs kind "
              "\"cost\"");
}

inline allocation parse_allocation(const std::string& text) {
  allocation x;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    x.push_back(parse_rational(text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return x;
}

template <typename Game>
report start(std::string command, const Game& game) {
  report r;
  r.command = std::move(command);
  r.input_digest = digest(serialize_game(game));
  return r;
}

inline report props_report(const tu_game& game) {
  report r = start("props", game);
  const game_classification c = classify(game);
  r.flags = {{"essential", c.essential},
             {"inessential", c.inessential},
             {"weakly_superadditive", c.weakly_superadditive},
             {"superadditive", c.superadditive},
             {"weakly_constant_sum", c.weakly_constant_sum},
             {"quasibalanced", c.quasibalanced}};
  return r;
}

inline report gately_report(const tu_game& game) {
  report r = start("gately", game);
  const gately_result g = gately_point(game);
  r.status = std::string(to_string(g.status));
  if (g.point) r.vectors.emplace_back("x", *g.point);
  if (g.d_star) r.scalars.emplace_back("d_star", *g.d_star);
  if (g.line_parameter) r.scalars.emplace_back("t", *g.line_parameter);
  r.messages.emplace_back(describe(g.status));
  return r;
}

inline report dstar_report(const tu_game& game) {
  report r = start("dstar", game);
  const rational d = equal_propensity(game);
  r.scalars.emplace_back("d_star", d);
  if (d == -1) {
    r.messages.emplace_back(
        describe(gately_status::undefined_equal_propensity_minus_one));
  } else if (d < 0) {
    r.messages.emplace_back(
        "d* < 0: coalitions of size n-1 are preferred over the grand "
        "coalition");
  }
  return r;
}

inline report propensity_report(const tu_game& game, const allocation& x,
                                std::optional<player> only) {
  report r = start("propensity", game);
  const utopia_vector upper = utopia_payoffs(game);
  if (only) {
    r.scalars.emplace_back("d[" + std::to_string(*only) + "]",
                           propensity_to_disrupt(game, x, *only, upper));
    return r;
  }
  std::vector<rational> d;
  for (player i = 1; i <= game.players(); ++i) {
    d.push_back(propensity_to_disrupt(game, x, i, upper));
  }
  r.vectors.emplace_back("d", std::move(d));
  return r;
}

inline report tau_report(const tu_game& game) {
  report r = start("tau", game);
  const tau_result t = tau_value(game);
  r.status = std::string(to_string(t.status));
  if (t.point) r.vectors.emplace_back("tau", *t.point);
  r.vectors.emplace_back("m", t.lower);
  r.vectors.emplace_back("M", t.upper);
  if (t.alpha) r.scalars.emplace_back("alpha", *t.alpha);
  if (t.status == tau_status::not_quasibalanced) {
    r.messages.emplace_back(
        "the game is not quasibalanced; the tau-value is undefined");
  }
  return r;
}

inline report minimal_rights_report(const tu_game& game) {
  report r = start("minimal-rights", game);
  r.vectors.emplace_back("m", minimal_rights(game));
  return r;
}

inline report aca_report(const cost_game& cost) {
  report r = start("aca", cost);
  const aca_result a = aca_allocation(cost);
  r.status = std::string(to_string(a.status));
  r.vectors.emplace_back("SC", a.separable);
  if (a.allocation) r.vectors.emplace_back("y", *a.allocation);
  r.scalars.emplace_back("NSC", a.nsc);
  switch (a.status) {
    case aca_status::allocated:
      break;
    case aca_status::allocated_negative_nsc:
      r.messages.emplace_back(
          "nonseparable cost is negative; ACA is normally not applied here");
      break;
    case aca_status::undefined_zero_denominator:
      r.messages.emplace_back(
          "sum of c_i - SC_i is zero; ACA does not give a unique allocation");
      break;
  }
  return r;
}

inline report game_report(std::string command, const tu_game& source,
                          const tu_game& result) {
  report r = start(std::move(command), source);
  r.game = to_json(result);
  return r;
}

}  // namespace detail

/// Runs one command line (without the program name). Output goes to `out`
/// unless --output is given; diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact solution concepts for cooperative TU and cost games",
               "tugame"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string output_path;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--output", output_path, "Write the report to this file");

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Game file")->required();
    sub->fallthrough();
  };

  auto* props = app.add_subcommand("props", "Classify a TU game");
  add_file(props);
  auto* gately = app.add_subcommand("gately", "Gately point");
  add_file(gately);
  auto* dstar = app.add_subcommand("dstar", "Equal propensity to disrupt d*");
  add_file(dstar);
  auto* propensity =
      app.add_subcommand("propensity", "Propensity to disrupt at a payoff");
  add_file(propensity);
  std::string allocation_text;
  std::optional<player> only_player;
  propensity
      ->add_option("--allocation", allocation_text,
                   "Comma-separated payoffs x1,x2,...")
      ->required();
  propensity->add_option("--player", only_player, "Report a single player");
  auto* tau = app.add_subcommand("tau", "Tau-value");
  add_file(tau);
  auto* rights = app.add_subcommand("minimal-rights", "Minimal rights vector");
  add_file(rights);
  auto* aca = app.add_subcommand("aca", "ACA cost allocation");
  add_file(aca);
  auto* savings = app.add_subcommand("savings", "Savings game of a cost game");
  add_file(savings);
  auto* normalize = app.add_subcommand("normalize", "Normalize a TU game");
  add_file(normalize);
  std::string mode;
  normalize->add_option("--mode", mode, "zero or zero-one")
      ->required()
      ->check(CLI::IsMember({"zero", "zero-one"}));
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force oracles");
  oracle_cmd->require_subcommand(1);
  oracle_cmd->fallthrough();
  auto* minmax =
      oracle_cmd->add_subcommand("minmax", "Grid min-max propensity search");
  add_file(minmax);
  unsigned resolution = 100;
  minmax->add_option("--resolution", resolution, "Grid steps per edge")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "tugame: " << e.what() << "\n";
    return exit_input_error;
  }

  try {
    report r;
    if (*props) {
      r = detail::props_report(detail::load_tu_game(file));
    } else if (*gately) {
      r = detail::gately_report(detail::load_tu_game(file));
    } else if (*dstar) {
      r = detail::dstar_report(detail::load_tu_game(file));
    } else if (*propensity) {
      const tu_game game = detail::load_tu_game(file);
      r = detail::propensity_report(
          game, detail::parse_allocation(allocation_text), only_player);
    } else if (*tau) {
      r = detail::tau_report(detail::load_tu_game(file));
    } else if (*rights) {
      r = detail::minimal_rights_report(detail::load_tu_game(file));
    } else if (*aca) {
      r = detail::aca_report(detail::load_cost_game(file));
    } else if (*savings) {
      const cost_game cost = detail::load_cost_game(file);
      r = detail::start("savings", cost);
      r.game = to_json(savings_game(cost));
    } else if (*normalize) {
      const tu_game game = detail::load_tu_game(file);
      r = detail::game_report("normalize", game,
                              mode == "zero" ? zero_normalize(game)
                                             : zero_one_normalize(game));
    } else if (*minmax) {
      const tu_game game = detail::load_tu_game(file);
      const auto grid = oracle::grid_minmax_propensity(game, resolution);
      r = detail::start("oracle minmax", game);
      r.vectors.emplace_back("best_point", grid.best_point);
      r.scalars.emplace_back("best_minmax", grid.best_minmax);
      r.scalars.emplace_back("resolution", rational(grid.resolution));
      r.scalars.emplace_back("closed_form_d_star", equal_propensity(game));
    }

    const std::string text = format == "structured" ? render_structured(r)
                                                    : render_text(r);
    if (output_path.empty()) {
      out << text;
    } else {
      std::ofstream file_out(output_path, std::ios::binary);
      if (!file_out || !(file_out << text)) {
        err << "tugame: cannot write '" << output_path << "'\n";
        return exit_input_error;
      }
    }
    return exit_ok;
  } catch (const error& e) {
    err << "tugame: " << e.what() << "\n";
    return is_input_error(e.code()) ? exit_input_error : exit_precondition;
  } catch (const std::exception& e) {
    err << "tugame: internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

}  // namespace tugame::cli

#endif  // TUGAME_TOOLS_CLI_HPP
