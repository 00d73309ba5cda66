// Copyright 2026 The protodef Authors
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

#ifndef PROTODEF_GAME_IO_HPP_
#define PROTODEF_GAME_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "protodef/game.hpp"
#include "protodef/preferences.hpp"
#include "protodef/protocol.hpp"

namespace protodef {

// Parsed game file. Outcomes never produced by any profile are pruned from
// the frame and reported in `warnings`.
struct GameDocument {
  GameFrame frame = GameFrame::injective({1});
  std::optional<UtilityProfile> utilities;
  std::vector<NamedObjective> objectives;
  std::vector<std::string> warnings;
};

GameDocument parse_game(std::string_view json_text);
std::string write_game(const GameDocument& doc);

// Accepts either a document with a `utilities` field or the bare value:
// a list with one outcome -> value object per agent, or an object keyed by
// agent name. Values are integers or "p/q" strings.
UtilityProfile parse_utilities(const GameFrame& frame,
                               std::string_view json_text);
// Ordinal utilities are written as their ranks.
std::string write_utilities(const GameFrame& frame, const UtilityProfile& u);

// A named objective of the document, or a comma-separated list of outcome
// names. Names of pruned outcomes are dropped.
Objective parse_objective(const GameDocument& doc, std::string_view spec);

// Compiles a protocol into a game document carrying its objectives.
GameDocument compile_protocol(const ProtocolTree& tree);

std::string read_file(const std::filesystem::path& path);

}  // namespace protodef

#endif  // PROTODEF_GAME_IO_HPP_
