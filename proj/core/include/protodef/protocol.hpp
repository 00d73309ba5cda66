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

#ifndef PROTODEF_PROTOCOL_HPP_
#define PROTODEF_PROTOCOL_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "protodef/game.hpp"

namespace protodef {

struct ProtocolNode {
  bool leaf = false;
  std::size_t owner = 0;             // agent index, internal nodes
  std::vector<std::string> actions;  // internal nodes
  std::vector<std::size_t> children;
  std::string label;  // leaves
  std::size_t line = 0;
  std::size_t column = 0;
};

struct NamedObjective {
  std::string name;
  std::vector<std::string> outcomes;
};

// An extensive-form protocol. Nodes are numbered in preorder; node 0 is the
// root.
struct ProtocolTree {
  std::vector<std::string> agents;
  std::vector<std::string> outcomes;
  bool agents_declared = false;
  bool outcomes_declared = false;
  std::vector<NamedObjective> objectives;
  std::vector<ProtocolNode> nodes;

  // Internal nodes owned by `agent`, in preorder.
  std::vector<std::size_t> nodes_of(std::size_t agent) const;
  std::size_t find_agent(std::string_view name) const;  // throws
};

// Text format:
//
//   ; comment to end of line
//   (agents Alice Bob)              optional
//   (outcomes w0 w1 w2)             optional
//   (objective fair w0 w2)          any number
//   (node Alice (stop (outcome w0))
//               (sign (node Bob (stop (outcome w1)) (sign (outcome w2)))))
//
// Without an agents form, agents are ordered by first appearance; the same
// holds for outcomes.
ProtocolTree parse_protocol(std::string_view text);

// Canonical text; parse_protocol(format_protocol(t)) == t up to positions.
std::string format_protocol(const ProtocolTree& tree);

// One action index per node owned by the agent, in preorder.
using ConditionalPlan = std::vector<std::size_t>;

// Cross product over the agent's nodes; the last node varies fastest.
std::vector<ConditionalPlan> plans(const ProtocolTree& tree,
                                   std::size_t agent);

// Choices at nodes with more than one action joined by "/", or "-".
std::string plan_name(const ProtocolTree& tree, std::size_t agent,
                      const ConditionalPlan& plan);

struct Run {
  std::vector<std::pair<std::size_t, std::size_t>> steps;  // (node, action)
  std::string label;
};

Run play(const ProtocolTree& tree, const std::vector<ConditionalPlan>& plans);

GameFrame to_frame(const ProtocolTree& tree);

// Contract-signing protocol with an optimistic third party (single session).
ProtocolTree asw_model(bool reliable_ttp);
// asw_model rendered as protocol text with a descriptive comment header.
std::string asw_source(bool reliable_ttp);

}  // namespace protodef

#endif  // PROTODEF_PROTOCOL_HPP_
