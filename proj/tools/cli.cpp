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

#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "protodef/defend.hpp"
#include "protodef/devgraph.hpp"
#include "protodef/error.hpp"
#include "protodef/game_io.hpp"
#include "protodef/mixed.hpp"
#include "protodef/protocol.hpp"
#include "protodef/solution.hpp"

namespace protodef::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

struct Options {
  std::string game;
  std::string utilities;
  std::string sc = "ne";
  std::string objective;
  std::string defenders;
  std::string method;
  std::string dot;
  std::string protocol;
  std::string out_path;
  bool mixed = false;
  bool unreliable = false;
  bool strict = false;
  std::uint64_t budget = OracleOptions{}.budget;
  unsigned threads = 1;
};

class Session {
 public:
  Session(std::string command, const std::vector<std::string>& args)
      : command_(std::move(command)) {
    report_["command"] = command_;
    report_["arguments"] = args;
    report_["inputs"] = Json::object();
  }

  std::string load(const std::string& role, const std::string& path) {
    std::string text = read_file(path);
    report_["inputs"][role] = {{"path", path}, {"fnv1a", fnv1a(text)}};
    return text;
  }

  void warn(const std::string& w) { warnings_.push_back(w); }
  Json& results() { return results_; }

  void emit(std::ostream& out, double ms) {
    report_["results"] = results_;
    report_["warnings"] = warnings_;
    report_["timing_ms"] = ms;
    out << report_.dump(2) << "\n";
  }

 private:
  std::string command_;
  Json report_;
  Json results_ = Json::object();
  std::vector<std::string> warnings_;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

Json value_json(const Rational& r) {
  using boost::multiprecision::denominator;
  if (denominator(r) == 1) {
    const std::string s = to_string(r);
    if (s.size() < 18) return std::stoll(s);
  }
  return to_string(r);
}

Json outcome_list(const GameFrame& f, const OutcomeSet& set) {
  Json out = Json::array();
  for (OutcomeId w : set.members()) out.push_back(f.outcome_name(w));
  return out;
}

Json agent_list(const GameFrame& f, const AgentSet& set) {
  Json out = Json::array();
  for (std::size_t i : set.members()) out.push_back(f.agent_name(i));
  return out;
}

Json profile_json(const GameFrame& f, ProfileIndex p) {
  Json s = Json::array();
  for (std::size_t i = 0; i < f.num_agents(); ++i) {
    s.push_back(f.strategy_name(i, f.strategy_at(p, i)));
  }
  return {{"strategies", s}, {"outcome", f.outcome_name(f.outcome_at(p))}};
}

Json utilities_json(const GameFrame& f, const UtilityProfile& u) {
  Json out = Json::object();
  for (std::size_t i = 0; i < f.num_agents(); ++i) {
    Json a = Json::object();
    for (OutcomeId w = 0; w < f.num_outcomes(); ++w) {
      a[f.outcome_name(w)] = value_json(u.value(i, w));
    }
    out[f.agent_name(i)] = std::move(a);
  }
  return out;
}

Json mixed_json(const GameFrame& f, const MixedProfile& m) {
  Json out = Json::object();
  for (std::size_t i = 0; i < f.num_agents(); ++i) {
    Json a = Json::object();
    for (std::size_t k = 0; k < f.num_strategies(i); ++k) {
      a[f.strategy_name(i, k)] = to_string(m.probability(i, k));
    }
    out[f.agent_name(i)] = std::move(a);
  }
  return out;
}

Json verdict_json(const GameFrame& f, const Verdict& v) {
  Json out = {{"method", to_string(v.method)}, {"holds", v.holds}};
  if (v.method == Method::kOracle) out["profiles_checked"] = v.profiles_checked;
  if (v.witness) {
    const Witness& w = *v.witness;
    Json wj = {{"index", w.index}, {"utilities", utilities_json(f, w.utilities)}};
    if (w.offending) {
      wj["offending_profile"] = profile_json(f, *w.offending);
    } else {
      wj["offending_profile"] = nullptr;
      wj["solution_empty"] = true;
    }
    out["witness"] = std::move(wj);
  }
  return out;
}

struct Loaded {
  GameDocument doc;
};

GameDocument load_game(Session& s, const Options& o) {
  if (o.game.empty()) throw CLI::RequiredError("--game");
  GameDocument doc = parse_game(s.load("game", o.game));
  for (const auto& w : doc.warnings) s.warn(w);
  if (!o.utilities.empty()) {
    doc.utilities = parse_utilities(doc.frame, s.load("utilities", o.utilities));
  }
  return doc;
}

const UtilityProfile& need_utilities(const GameDocument& doc) {
  if (!doc.utilities) {
    throw InvalidInput("no utilities: pass --utilities or embed them in the game");
  }
  return *doc.utilities;
}

Objective need_objective(const GameDocument& doc, const Options& o) {
  if (o.objective.empty()) throw CLI::RequiredError("--objective");
  return parse_objective(doc, o.objective);
}

DefenderSet parse_defenders(const GameFrame& f, const std::string& spec) {
  if (spec.empty()) return DefenderSet::full(f.num_agents());
  DefenderSet d(f.num_agents());
  if (spec == "-" || spec == "none") return d;
  for (const auto& name : split(spec)) {
    const auto i = f.find_agent(name);
    if (!i) throw InvalidInput("unknown agent '" + name + "'");
    d.insert(*i);
  }
  return d;
}

OracleOptions oracle_options(const Options& o) {
  OracleOptions opts;
  opts.budget = o.budget;
  opts.threads = o.threads;
  opts.strict = o.strict;
  return opts;
}

void cmd_solve(Session& s, const Options& o) {
  const GameDocument doc = load_game(s, o);
  const GameFrame& f = doc.frame;
  const UtilityProfile& u = need_utilities(doc);
  if (o.mixed) {
    auto eqs = mixed_nash_2p(f, u);
    if (parse_solution_concept(o.sc) == SolutionConceptId::kOptNE) {
      eqs = optimal_mixed(f, u, std::move(eqs));
    } else if (parse_solution_concept(o.sc) != SolutionConceptId::kNE) {
      throw UnsupportedOperation("mixed analysis supports ne and optne");
    }
    Json list = Json::array();
    for (const auto& e : eqs) {
      Json payoff = Json::array();
      for (const auto& x : expected_utilities(f, u, e.profile)) {
        payoff.push_back(to_string(x));
      }
      Json ej = {{"profile", mixed_json(f, e.profile)},
                 {"expected_utilities", payoff},
                 {"degenerate", e.degenerate}};
      if (e.degenerate) {
        Json vs = Json::array();
        for (const auto& v : e.vertices) vs.push_back(mixed_json(f, v));
        ej["vertices"] = std::move(vs);
      }
      list.push_back(std::move(ej));
    }
    s.results()["solution_concept"] = "mixed " + to_string(parse_solution_concept(o.sc));
    s.results()["equilibria"] = std::move(list);
    return;
  }
  const auto sc = parse_solution_concept(o.sc);
  const SolutionSet sol = solve(sc, f, u);
  Json list = Json::array();
  for (ProfileIndex p : sol.profiles) list.push_back(profile_json(f, p));
  s.results()["solution_concept"] = to_string(sc);
  s.results()["profiles"] = std::move(list);
  s.results()["outcomes"] = outcome_list(f, outcomes_of(f, sol));
}

void cmd_check(Session& s, const Options& o) {
  const GameDocument doc = load_game(s, o);
  const GameFrame& f = doc.frame;
  const UtilityProfile& u = need_utilities(doc);
  const Objective goal = need_objective(doc, o);
  s.results()["objective"] = outcome_list(f, goal);
  if (o.mixed) {
    s.results()["solution_concept"] = "mixed NE";
    s.results()["correct"] = is_correct_mixed(f, u, goal);
    return;
  }
  const auto sc = parse_solution_concept(o.sc);
  const SolutionSet sol = solve(sc, f, u);
  Json list = Json::array();
  for (ProfileIndex p : sol.profiles) list.push_back(profile_json(f, p));
  s.results()["solution_concept"] = to_string(sc);
  s.results()["correct"] = is_correct(f, u, sc, goal);
  s.results()["profiles"] = std::move(list);
}

void cmd_defend(Session& s, const Options& o) {
  const GameDocument doc = load_game(s, o);
  const GameFrame& f = doc.frame;
  const Objective goal = need_objective(doc, o);
  const DefenderSet d = parse_defenders(f, o.defenders);
  const auto sc = parse_solution_concept(o.sc);
  std::string method = o.method;
  if (method.empty()) method = f.is_injective() ? "oracle" : "both";
  const bool run_oracle = method == "oracle" || method == "both" || method == "all";
  const bool run_char = method == "char" || method == "both" || method == "all";
  const bool run_exp = method == "experimental" || method == "all";
  if (!run_oracle && !run_char && !run_exp) {
    throw CLI::ValidationError("--method", "expected oracle, char, both, experimental or all");
  }
  s.results()["objective"] = outcome_list(f, goal);
  s.results()["defenders"] = agent_list(f, d);
  s.results()["solution_concept"] = (o.mixed ? "mixed " : "") + to_string(sc);
  s.results()["method"] = method;

  Json verdicts = Json::array();
  std::vector<std::pair<std::string, bool>> seen;
  const bool everyone = d.is_full();
  const bool nontrivial = is_nontrivial(f, goal);
  if (o.mixed) {
    if (!everyone) throw UnsupportedOperation("mixed defendability is decided for all agents only");
    bool holds = false;
    if (sc == SolutionConceptId::kNE) {
      holds = defendable_mixed_NE(f, goal);
    } else if (sc == SolutionConceptId::kOptNE) {
      const auto chi = product_decomposition(f, goal);
      holds = chi.has_value();
      if (chi) {
        Json cj = Json::object();
        for (std::size_t i = 0; i < f.num_agents(); ++i) {
          Json names = Json::array();
          for (std::size_t k : (*chi)[i]) names.push_back(f.strategy_name(i, k));
          cj[f.agent_name(i)] = std::move(names);
        }
        s.results()["product_decomposition"] = std::move(cj);
      }
    } else {
      throw UnsupportedOperation("mixed analysis supports ne and optne");
    }
    verdicts.push_back({{"method", "characterization"}, {"holds", holds}});
    s.results()["verdicts"] = std::move(verdicts);
    s.results()["holds"] = holds;
    return;
  }
  if (run_oracle) {
    const Verdict v = defendable_oracle(f, goal, d, sc, oracle_options(o));
    verdicts.push_back(verdict_json(f, v));
    seen.emplace_back("oracle", v.holds);
  }
  const bool graph_applicable = everyone && nontrivial &&
                                (sc == SolutionConceptId::kNE ||
                                 sc == SolutionConceptId::kOptNE);
  if (run_char) {
    if (graph_applicable) {
      const bool h = sc == SolutionConceptId::kNE
                         ? defendable_NE_characterization(f, goal)
                         : defendable_OptNE_characterization(f, goal);
      verdicts.push_back({{"method", "characterization"}, {"holds", h}});
      seen.emplace_back("characterization", h);
    } else {
      s.warn("characterization skipped: it covers NE/OPTNE, all agents as "
             "defenders and nontrivial objectives");
    }
  }
  if (run_exp) {
    if (graph_applicable) {
      const bool h = defendable_experimental(f, goal, sc);
      verdicts.push_back({{"method", "experimental"}, {"holds", h}});
      seen.emplace_back("experimental", h);
    } else {
      s.warn("experimental method skipped: it covers NE/OPTNE, all agents as "
             "defenders and nontrivial objectives");
    }
  }
  bool agree = true;
  for (std::size_t k = 1; k < seen.size(); ++k) {
    if (seen[k].second != seen[0].second) {
      agree = false;
      s.warn("divergence: " + seen[0].first + " says " +
             (seen[0].second ? "true" : "false") + ", " + seen[k].first +
             " says " + (seen[k].second ? "true" : "false"));
    }
  }
  s.results()["verdicts"] = std::move(verdicts);
  if (!seen.empty()) s.results()["holds"] = seen[0].second;
  s.results()["methods_agree"] = agree;
}

void cmd_level(Session& s, const Options& o) {
  const GameDocument doc = load_game(s, o);
  const GameFrame& f = doc.frame;
  const Objective goal = need_objective(doc, o);
  const auto sc = parse_solution_concept(o.sc);
  const SecurityLevel level = security_level(f, goal, sc, oracle_options(o));
  Json members = Json::array();
  for (const auto& m : level.members) members.push_back(agent_list(f, m));
  s.results()["objective"] = outcome_list(f, goal);
  s.results()["solution_concept"] = to_string(sc);
  s.results()["security_level"] = std::move(members);
  s.results()["oracle_calls"] = level.oracle_calls;
}

Json graph_json(const DevGraph& g, const GameFrame& f) {
  Json edges = Json::array();
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& [a, b] = g.edges()[k];
    edges.push_back({{"between", {f.outcome_name(a), f.outcome_name(b)}},
                     {"evidence", g.parallel_evidence()[k]}});
  }
  Json comps = Json::array();
  for (const auto& c : components(g)) {
    Json names = Json::array();
    for (OutcomeId w : c) names.push_back(f.outcome_name(w));
    comps.push_back(std::move(names));
  }
  Json lines = Json::array();
  for (const auto& h : g.hyperedges()) lines.push_back(outcome_list(f, h));
  return {{"vertices", outcome_list(f, g.vertices())},
          {"edges", std::move(edges)},
          {"self_loops", outcome_list(f, g.self_loops())},
          {"lines", std::move(lines)},
          {"components", std::move(comps)},
          {"acyclic_component", acyclic_component_exists(g)},
          {"knot_free_component", knot_free_component_exists(g)}};
}

void cmd_graph(Session& s, const Options& o) {
  const GameDocument doc = load_game(s, o);
  const GameFrame& f = doc.frame;
  const DevGraph g = DevGraph::build(f);
  Objective goal(f.num_outcomes());
  if (!o.objective.empty()) goal = parse_objective(doc, o.objective);
  s.results()["graph"] = graph_json(g, f);
  if (!o.objective.empty()) {
    s.results()["objective"] = outcome_list(f, goal);
    s.results()["neighborhood"] = outcome_list(f, neighborhood(g, goal));
    s.results()["restricted"] = graph_json(g.restrict(goal), f);
  }
  if (!o.dot.empty()) {
    std::ofstream dot(o.dot, std::ios::binary);
    if (!dot) throw InvalidInput("cannot write '" + o.dot + "'");
    dot << to_dot(g, goal);
    s.results()["dot"] = o.dot;
  }
}

void write_artifact(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

// Returns true when the artifact went to `out` instead of a report.
bool cmd_compile(Session& s, const Options& o, std::ostream& out) {
  if (o.protocol.empty()) throw CLI::RequiredError("--protocol");
  const ProtocolTree tree = parse_protocol(s.load("protocol", o.protocol));
  const GameDocument doc = compile_protocol(tree);
  const std::string text = write_game(doc);
  if (o.out_path.empty()) {
    out << text;
    return true;
  }
  write_artifact(o.out_path, text);
  for (const auto& w : doc.warnings) s.warn(w);
  s.results()["out"] = o.out_path;
  s.results()["fnv1a"] = fnv1a(text);
  s.results()["agents"] = doc.frame.agent_names();
  s.results()["profiles"] = doc.frame.num_profiles();
  s.results()["outcomes"] = doc.frame.outcome_names();
  return false;
}

bool cmd_asw(Session& s, const Options& o, std::ostream& out) {
  const std::string text = asw_source(!o.unreliable);
  if (o.out_path.empty()) {
    out << text;
    return true;
  }
  write_artifact(o.out_path, text);
  s.results()["out"] = o.out_path;
  s.results()["reliable_ttp"] = !o.unreliable;
  s.results()["fnv1a"] = fnv1a(text);
  return false;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Defendability analysis of protocols modelled as games", "protodef"};
  app.require_subcommand(1);
  Options o;

  auto add_game = [&](CLI::App* c) {
    c->add_option("--game", o.game, "Game file (JSON)")->required();
  };
  auto add_sc = [&](CLI::App* c) {
    c->add_option("--sc", o.sc, "Solution concept: ne, optne, undom, po");
  };
  auto add_oracle = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "Oracle work limit (utility x strategy profiles)");
    c->add_option("--threads", o.threads, "Oracle worker threads")->check(CLI::Range(1u, 256u));
    c->add_flag("--strict-orders", o.strict, "Enumerate strict preferences only");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Solve a game under given utilities");
  add_game(solve_cmd);
  add_sc(solve_cmd);
  solve_cmd->add_option("--utilities", o.utilities, "Utilities file (JSON)");
  solve_cmd->add_flag("--mixed", o.mixed, "Mixed equilibria (two agents)");

  auto* check_cmd = app.add_subcommand("check", "Check correctness for an objective");
  add_game(check_cmd);
  add_sc(check_cmd);
  check_cmd->add_option("--utilities", o.utilities, "Utilities file (JSON)");
  check_cmd->add_option("--objective", o.objective, "Outcome list or objective name")->required();
  check_cmd->add_flag("--mixed", o.mixed, "Mixed Nash correctness (two agents)");

  auto* defend_cmd = app.add_subcommand("defend", "Decide defendability");
  add_game(defend_cmd);
  add_sc(defend_cmd);
  add_oracle(defend_cmd);
  defend_cmd->add_option("--objective", o.objective, "Outcome list or objective name")->required();
  defend_cmd->add_option("--defenders", o.defenders, "Agent list (default: all; '-' for none)");
  defend_cmd->add_option("--method", o.method, "oracle, char, both, experimental or all")
      ->check(CLI::IsMember({"oracle", "char", "both", "experimental", "all"}));
  defend_cmd->add_flag("--mixed", o.mixed, "Mixed-strategy defendability by all agents");

  auto* level_cmd = app.add_subcommand("level", "Security level (minimal defender sets)");
  add_game(level_cmd);
  add_sc(level_cmd);
  add_oracle(level_cmd);
  level_cmd->add_option("--objective", o.objective, "Outcome list or objective name")->required();

  auto* graph_cmd = app.add_subcommand("graph", "Deviation graph");
  add_game(graph_cmd);
  graph_cmd->add_option("--objective", o.objective, "Outcomes to highlight and restrict to");
  graph_cmd->add_option("--dot", o.dot, "Write DOT text to this file");

  auto* compile_cmd = app.add_subcommand("compile", "Compile a protocol into a game file");
  compile_cmd->add_option("--protocol", o.protocol, "Protocol source")->required();
  compile_cmd->add_option("--out", o.out_path, "Output game file (default: stdout)");

  auto* asw_cmd = app.add_subcommand("asw", "Emit the contract-signing protocol model");
  asw_cmd->add_flag("--unreliable-ttp", o.unreliable, "Let the TTP stop at requests");
  asw_cmd->add_option("--out", o.out_path, "Output protocol file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Session session(chosen->get_name(), args);
  const auto start = std::chrono::steady_clock::now();
  try {
    bool artifact = false;
    const std::string name = chosen->get_name();
    if (name == "solve") cmd_solve(session, o);
    else if (name == "check") cmd_check(session, o);
    else if (name == "defend") cmd_defend(session, o);
    else if (name == "level") cmd_level(session, o);
    else if (name == "graph") cmd_graph(session, o);
    else if (name == "compile") artifact = cmd_compile(session, o, out);
    else if (name == "asw") artifact = cmd_asw(session, o, out);
    if (!artifact) {
      const std::chrono::duration<double, std::milli> ms =
          std::chrono::steady_clock::now() - start;
      session.emit(out, static_cast<double>(static_cast<long long>(ms.count() * 1000)) / 1000);
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}

}  // namespace protodef::cli
