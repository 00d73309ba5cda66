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

#include "protodef/protocol.hpp"

#include <algorithm>
#include <sstream>

#include "protodef/error.hpp"

namespace protodef {
namespace {

struct SExpr {
  bool list = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> forms;
    for (skip(); pos_ < text_.size(); skip()) forms.push_back(read());
    return forms;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        return;
      }
    }
  }

  SExpr read() {
    SExpr e;
    e.line = line_;
    e.column = col_;
    const char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", line_, col_);
    if (c == '(') {
      e.list = true;
      advance();
      for (;;) {
        skip();
        if (pos_ >= text_.size()) {
          throw ParseError("unclosed '('", e.line, e.column);
        }
        if (text_[pos_] == ')') {
          advance();
          return e;
        }
        e.items.push_back(read());
      }
    }
    while (pos_ < text_.size()) {
      const char d = text_[pos_];
      if (d == '(' || d == ')' || d == ';' || d == ' ' || d == '\t' ||
          d == '\n' || d == '\r') {
        break;
      }
      e.atom += d;
      advance();
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool is_form(const SExpr& e, std::string_view head) {
  return e.list && !e.items.empty() && !e.items[0].list &&
         e.items[0].atom == head;
}

const std::string& atom_of(const SExpr& e, std::string_view what) {
  if (e.list) throw ParseError("expected " + std::string(what), e.line, e.column);
  return e.atom;
}

std::size_t index_in(std::vector<std::string>& names, const std::string& name,
                     bool declared, std::string_view kind, const SExpr& at) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
  if (declared) {
    throw ParseError("unknown " + std::string(kind) + " '" + name + "'",
                     at.line, at.column);
  }
  names.push_back(name);
  return names.size() - 1;
}

void read_tree(const SExpr& e, ProtocolTree& tree) {
  if (is_form(e, "outcome")) {
    if (e.items.size() != 2 || e.items[1].list) {
      throw ParseError("leaf needs exactly one outcome label", e.line, e.column);
    }
    ProtocolNode leaf;
    leaf.leaf = true;
    leaf.label = e.items[1].atom;
    leaf.line = e.line;
    leaf.column = e.column;
    index_in(tree.outcomes, leaf.label, tree.outcomes_declared, "outcome",
             e.items[1]);
    tree.nodes.push_back(std::move(leaf));
    return;
  }
  if (!is_form(e, "node")) {
    throw ParseError("expected (node ...) or (outcome ...)", e.line, e.column);
  }
  if (e.items.size() < 2) throw ParseError("node without owner", e.line, e.column);
  const SExpr& owner = e.items[1];
  ProtocolNode node;
  node.owner = index_in(tree.agents, atom_of(owner, "agent name"),
                        tree.agents_declared, "agent", owner);
  node.line = e.line;
  node.column = e.column;
  if (e.items.size() < 3) throw ParseError("node without actions", e.line, e.column);
  const std::size_t self = tree.nodes.size();
  tree.nodes.push_back(node);
  for (std::size_t k = 2; k < e.items.size(); ++k) {
    const SExpr& act = e.items[k];
    if (!act.list || act.items.size() != 2 || act.items[0].list) {
      throw ParseError("action must be (NAME SUBTREE)", act.line, act.column);
    }
    const std::string& name = act.items[0].atom;
    auto& actions = tree.nodes[self].actions;
    if (std::find(actions.begin(), actions.end(), name) != actions.end()) {
      throw ParseError("duplicate action '" + name + "'", act.line, act.column);
    }
    actions.push_back(name);
    tree.nodes[self].children.push_back(tree.nodes.size());
    read_tree(act.items[1], tree);
  }
}

void format_node(const ProtocolTree& tree, std::size_t id, std::size_t indent,
                 std::ostringstream& out) {
  const ProtocolNode& n = tree.nodes[id];
  if (n.leaf) {
    out << "(outcome " << n.label << ")";
    return;
  }
  out << "(node " << tree.agents[n.owner];
  for (std::size_t k = 0; k < n.actions.size(); ++k) {
    out << "\n" << std::string(indent + 2, ' ') << "(" << n.actions[k] << " ";
    format_node(tree, n.children[k], indent + 4, out);
    out << ")";
  }
  out << ")";
}

}  // namespace

std::vector<std::size_t> ProtocolTree::nodes_of(std::size_t agent) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!nodes[k].leaf && nodes[k].owner == agent) out.push_back(k);
  }
  return out;
}

std::size_t ProtocolTree::find_agent(std::string_view name) const {
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (agents[i] == name) return i;
  }
  throw InvalidInput("unknown agent '" + std::string(name) + "'");
}

ProtocolTree parse_protocol(std::string_view text) {
  const auto forms = Reader(text).read_all();
  ProtocolTree tree;
  const SExpr* root = nullptr;
  std::vector<const SExpr*> objective_forms;
  for (const SExpr& f : forms) {
    if (is_form(f, "agents") || is_form(f, "outcomes")) {
      const bool agents = is_form(f, "agents");
      auto& names = agents ? tree.agents : tree.outcomes;
      bool& declared = agents ? tree.agents_declared : tree.outcomes_declared;
      if (declared) throw ParseError("repeated declaration", f.line, f.column);
      declared = true;
      for (std::size_t k = 1; k < f.items.size(); ++k) {
        const std::string& name = atom_of(f.items[k], "name");
        if (std::find(names.begin(), names.end(), name) != names.end()) {
          throw ParseError("duplicate name '" + name + "'", f.items[k].line,
                           f.items[k].column);
        }
        names.push_back(name);
      }
      if (names.empty()) throw ParseError("empty declaration", f.line, f.column);
    } else if (is_form(f, "objective")) {
      objective_forms.push_back(&f);
    } else if (is_form(f, "node") || is_form(f, "outcome")) {
      if (root != nullptr) {
        throw ParseError("more than one protocol tree", f.line, f.column);
      }
      root = &f;
    } else {
      throw ParseError("unknown form", f.line, f.column);
    }
  }
  if (root == nullptr) throw ParseError("no protocol tree", 1, 1);
  read_tree(*root, tree);
  for (const SExpr* f : objective_forms) {
    if (f->items.size() < 2) throw ParseError("objective without name", f->line, f->column);
    NamedObjective obj;
    obj.name = atom_of(f->items[1], "objective name");
    for (const auto& o : tree.objectives) {
      if (o.name == obj.name) {
        throw ParseError("duplicate objective '" + obj.name + "'", f->line,
                         f->column);
      }
    }
    for (std::size_t k = 2; k < f->items.size(); ++k) {
      const std::string& label = atom_of(f->items[k], "outcome label");
      if (std::find(tree.outcomes.begin(), tree.outcomes.end(), label) ==
          tree.outcomes.end()) {
        throw ParseError("unknown outcome '" + label + "'", f->items[k].line,
                         f->items[k].column);
      }
      obj.outcomes.push_back(label);
    }
    tree.objectives.push_back(std::move(obj));
  }
  return tree;
}

std::string format_protocol(const ProtocolTree& tree) {
  std::ostringstream out;
  auto decl = [&](std::string_view head, const std::vector<std::string>& xs) {
    out << "(" << head;
    for (const auto& x : xs) out << " " << x;
    out << ")\n";
  };
  if (tree.agents_declared) decl("agents", tree.agents);
  if (tree.outcomes_declared) decl("outcomes", tree.outcomes);
  for (const auto& o : tree.objectives) {
    out << "(objective " << o.name;
    for (const auto& x : o.outcomes) out << " " << x;
    out << ")\n";
  }
  format_node(tree, 0, 0, out);
  out << "\n";
  return out.str();
}

std::vector<ConditionalPlan> plans(const ProtocolTree& tree,
                                   std::size_t agent) {
  const auto owned = tree.nodes_of(agent);
  std::vector<ConditionalPlan> out{ConditionalPlan{}};
  for (std::size_t id : owned) {
    std::vector<ConditionalPlan> next;
    for (const auto& prefix : out) {
      for (std::size_t a = 0; a < tree.nodes[id].actions.size(); ++a) {
        ConditionalPlan p = prefix;
        p.push_back(a);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string plan_name(const ProtocolTree& tree, std::size_t agent,
                      const ConditionalPlan& plan) {
  const auto owned = tree.nodes_of(agent);
  if (plan.size() != owned.size()) throw InvalidInput("plan does not fit the agent");
  std::string name;
  for (std::size_t k = 0; k < owned.size(); ++k) {
    const auto& actions = tree.nodes[owned[k]].actions;
    if (actions.size() < 2) continue;
    if (!name.empty()) name += "/";
    name += actions.at(plan[k]);
  }
  return name.empty() ? "-" : name;
}

Run play(const ProtocolTree& tree, const std::vector<ConditionalPlan>& ps) {
  if (ps.size() != tree.agents.size()) {
    throw InvalidInput("need one plan per agent");
  }
  // Position of each internal node within its owner's plan.
  std::vector<std::size_t> slot(tree.nodes.size(), 0);
  std::vector<std::size_t> seen(tree.agents.size(), 0);
  for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
    if (!tree.nodes[k].leaf) slot[k] = seen[tree.nodes[k].owner]++;
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].size() != seen[i]) throw InvalidInput("plan does not fit the agent");
  }
  Run run;
  std::size_t at = 0;
  while (!tree.nodes[at].leaf) {
    const ProtocolNode& n = tree.nodes[at];
    const std::size_t a = ps[n.owner][slot[at]];
    if (a >= n.actions.size()) throw InvalidInput("plan action out of range");
    run.steps.emplace_back(at, a);
    at = n.children[a];
  }
  run.label = tree.nodes[at].label;
  return run;
}

GameFrame to_frame(const ProtocolTree& tree) {
  const std::size_t n = tree.agents.size();
  std::vector<std::vector<ConditionalPlan>> all(n);
  std::vector<std::vector<std::string>> names(n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    all[i] = plans(tree, i);
    for (const auto& p : all[i]) names[i].push_back(plan_name(tree, i, p));
    total *= all[i].size();
  }
  std::vector<OutcomeId> map(total);
  std::vector<ConditionalPlan> profile(n);
  for (std::size_t p = 0; p < total; ++p) {
    std::size_t rest = p;
    for (std::size_t i = n; i-- > 0;) {
      profile[i] = all[i][rest % all[i].size()];
      rest /= all[i].size();
    }
    const std::string label = play(tree, profile).label;
    map[p] = static_cast<OutcomeId>(
        std::find(tree.outcomes.begin(), tree.outcomes.end(), label) -
        tree.outcomes.begin());
  }
  return GameFrame(tree.agents, std::move(names), tree.outcomes, std::move(map));
}

}  // namespace protodef
