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

#include "protodef/game_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "protodef/error.hpp"
#include "protodef/rational.hpp"

namespace protodef {
namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::string> string_list(const Json& j, std::string_view field) {
  if (!j.is_array()) {
    throw InvalidInput("field '" + std::string(field) + "' must be a list");
  }
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) {
      throw InvalidInput("field '" + std::string(field) + "' must hold strings");
    }
    out.push_back(x.get<std::string>());
  }
  return out;
}

const Json& require(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) {
    throw InvalidInput(std::string("missing field '") + field + "'");
  }
  return j.at(field);
}

bool is_pruned(const GameFrame& frame, const std::string& name) {
  const auto& p = frame.pruned_outcomes();
  return std::find(p.begin(), p.end(), name) != p.end();
}

Rational parse_value(const Json& v) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(v.get<std::uint64_t>())
                                  : Rational(v.get<std::int64_t>());
  }
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InvalidInput("utility values must be integers or \"p/q\" strings");
}

CardinalUtility parse_agent_utility(const GameFrame& frame, const Json& j,
                                    const std::string& agent) {
  if (!j.is_object()) {
    throw InvalidInput("utilities of '" + agent + "' must map outcomes to values");
  }
  CardinalUtility u(frame.num_outcomes());
  std::vector<bool> seen(frame.num_outcomes(), false);
  for (const auto& [name, value] : j.items()) {
    const auto w = frame.find_outcome(name);
    if (!w) {
      if (is_pruned(frame, name)) continue;
      throw InvalidInput("utilities of '" + agent + "' name unknown outcome '" +
                         name + "'");
    }
    u[*w] = parse_value(value);
    seen[*w] = true;
  }
  for (OutcomeId w = 0; w < frame.num_outcomes(); ++w) {
    if (!seen[w]) {
      throw InvalidInput("utilities of '" + agent + "' miss outcome '" +
                         frame.outcome_name(w) + "'");
    }
  }
  return u;
}

UtilityProfile utilities_from_json(const GameFrame& frame, const Json& j) {
  std::vector<CardinalUtility> values;
  if (j.is_array()) {
    if (j.size() != frame.num_agents()) {
      throw InvalidInput("utilities list one entry per agent");
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      values.push_back(parse_agent_utility(frame, j[i], frame.agent_name(i)));
    }
  } else if (j.is_object()) {
    for (std::size_t i = 0; i < frame.num_agents(); ++i) {
      const auto& name = frame.agent_name(i);
      if (!j.contains(name)) throw InvalidInput("no utilities for agent '" + name + "'");
      values.push_back(parse_agent_utility(frame, j.at(name), name));
    }
    if (j.size() != frame.num_agents()) {
      throw InvalidInput("utilities name an unknown agent");
    }
  } else {
    throw InvalidInput("utilities must be a list or an object");
  }
  return UtilityProfile::cardinal(std::move(values));
}

Json value_json(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1 && numerator(r) >= std::numeric_limits<std::int64_t>::min() &&
      numerator(r) <= std::numeric_limits<std::int64_t>::max()) {
    return numerator(r).convert_to<std::int64_t>();
  }
  return to_string(r);
}

Json utilities_json(const GameFrame& frame, const UtilityProfile& u) {
  u.validate(frame);
  Json out = Json::array();
  for (std::size_t i = 0; i < frame.num_agents(); ++i) {
    Json agent = Json::object();
    for (OutcomeId w = 0; w < frame.num_outcomes(); ++w) {
      agent[frame.outcome_name(w)] = value_json(u.value(i, w));
    }
    out.push_back(std::move(agent));
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

GameDocument parse_game(std::string_view json_text) {
  const Json j = parse_json(json_text);
  if (!j.is_object()) throw InvalidInput("a game file must be a JSON object");
  auto agents = string_list(require(j, "agents"), "agents");
  const Json& strat = require(j, "strategies");
  if (!strat.is_array()) throw InvalidInput("field 'strategies' must be a list");
  std::vector<std::vector<std::string>> strategies;
  for (const auto& s : strat) strategies.push_back(string_list(s, "strategies"));
  auto outcomes = string_list(require(j, "outcomes"), "outcomes");
  const auto labels = string_list(require(j, "outcome_map"), "outcome_map");
  std::vector<OutcomeId> map;
  map.reserve(labels.size());
  for (const auto& l : labels) {
    const auto it = std::find(outcomes.begin(), outcomes.end(), l);
    if (it == outcomes.end()) {
      throw InvalidInput("outcome_map names undeclared outcome '" + l + "'");
    }
    map.push_back(static_cast<OutcomeId>(it - outcomes.begin()));
  }

  GameDocument doc;
  doc.frame = GameFrame(std::move(agents), std::move(strategies),
                        std::move(outcomes), std::move(map));
  for (const auto& p : doc.frame.pruned_outcomes()) {
    doc.warnings.push_back("outcome '" + p + "' is never produced and was pruned");
  }
  if (j.contains("utilities")) {
    doc.utilities = utilities_from_json(doc.frame, j.at("utilities"));
  }
  if (j.contains("objectives")) {
    const Json& objs = j.at("objectives");
    if (!objs.is_object()) throw InvalidInput("field 'objectives' must be an object");
    for (const auto& [name, list] : objs.items()) {
      doc.objectives.push_back({name, string_list(list, "objectives")});
    }
  }
  return doc;
}

std::string write_game(const GameDocument& doc) {
  const GameFrame& f = doc.frame;
  Json j;
  j["agents"] = f.agent_names();
  j["strategies"] = f.strategy_names();
  j["outcomes"] = f.outcome_names();
  Json map = Json::array();
  for (OutcomeId w : f.outcome_map()) map.push_back(f.outcome_name(w));
  j["outcome_map"] = std::move(map);
  if (doc.utilities) j["utilities"] = utilities_json(f, *doc.utilities);
  if (!doc.objectives.empty()) {
    Json objs = Json::object();
    for (const auto& o : doc.objectives) objs[o.name] = o.outcomes;
    j["objectives"] = std::move(objs);
  }
  return j.dump(2) + "\n";
}

UtilityProfile parse_utilities(const GameFrame& frame,
                               std::string_view json_text) {
  const Json j = parse_json(json_text);
  if (j.is_object() && j.contains("utilities")) {
    return utilities_from_json(frame, j.at("utilities"));
  }
  return utilities_from_json(frame, j);
}

std::string write_utilities(const GameFrame& frame, const UtilityProfile& u) {
  Json j;
  j["utilities"] = utilities_json(frame, u);
  return j.dump(2) + "\n";
}

Objective parse_objective(const GameDocument& doc, std::string_view spec) {
  const GameFrame& f = doc.frame;
  std::vector<std::string> labels;
  const std::string name = trim(spec);
  const auto named = std::find_if(doc.objectives.begin(), doc.objectives.end(),
                                  [&](const auto& o) { return o.name == name; });
  if (named != doc.objectives.end()) {
    labels = named->outcomes;
  } else {
    std::stringstream in{std::string(spec)};
    std::string item;
    while (std::getline(in, item, ',')) {
      item = trim(item);
      if (!item.empty()) labels.push_back(item);
    }
  }
  Objective goal(f.num_outcomes());
  for (const auto& l : labels) {
    if (const auto w = f.find_outcome(l)) {
      goal.insert(*w);
    } else if (!is_pruned(f, l)) {
      throw InvalidInput("unknown outcome or objective '" + l + "'");
    }
  }
  return goal;
}

GameDocument compile_protocol(const ProtocolTree& tree) {
  GameDocument doc;
  doc.frame = to_frame(tree);
  for (const auto& p : doc.frame.pruned_outcomes()) {
    doc.warnings.push_back("outcome '" + p + "' is never produced and was pruned");
  }
  for (const auto& o : tree.objectives) {
    NamedObjective kept{o.name, {}};
    for (const auto& l : o.outcomes) {
      if (doc.frame.find_outcome(l)) kept.outcomes.push_back(l);
    }
    doc.objectives.push_back(std::move(kept));
  }
  return doc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace protodef
