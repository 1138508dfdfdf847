#pragma once

#include <iosfwd>
#include <string>

#include "pgg/game.hpp"

namespace pgg {

// Line-based text formats. `#` starts a comment, blank lines are skipped,
// indices are 0-based.
//
// Game ("pgg-v1"):
//   pgg-v1
//   nodes <n>
//   price <num>/<den>
//   edge <from> <to>        (one line per edge)
//
// Profile: one line per node, `<node> <num>/<den>`. Every node must appear
// exactly once.

Game parse_game(std::istream& in);
Game parse_game_string(const std::string& text);
std::string serialize_game(const Game& game);

StrategyProfile parse_profile(std::istream& in, std::size_t node_count);
StrategyProfile parse_profile_string(const std::string& text, std::size_t node_count);
std::string serialize_profile(const StrategyProfile& profile);

Game load_game(const std::string& path);
StrategyProfile load_profile(const std::string& path, std::size_t node_count);
void save_text_file(const std::string& path, const std::string& content);

} // namespace pgg
