/*
 * Copyright 2026 the ptskit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ptskit/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ptskit {

Pts::Pts(Algebra alg, std::vector<std::string> states)
    : alg_(alg), states_(std::move(states)), out_(states_.size()) {
  if (states_.empty()) throw ValidationError("a transition system needs at least one state");
  std::set<std::string_view> seen;
  for (const auto& s : states_) {
    if (s.empty()) throw ValidationError("state names must be nonempty");
    if (!seen.insert(s).second) throw ValidationError("duplicate state name '" + s + "'");
  }
}

int Pts::state_index(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return static_cast<int>(i);
  throw UnknownName("unknown state '" + std::string(name) + "'");
}

void Pts::add_transition(std::string_view from, std::string_view to, WPair weight) {
  int f = state_index(from);
  int t = state_index(to);
  if (weight.algebra() != alg_)
    throw InstanceMismatch("transition weight from " + weight.algebra().name() +
                           " in a " + alg_.name() + " system");
  if (by_pair_.count({f, t}))
    throw ValidationError("duplicate transition " + std::string(from) + " -> " +
                          std::string(to));
  by_pair_[{f, t}] = static_cast<int>(transitions_.size());
  out_[f].push_back(static_cast<int>(transitions_.size()));
  transitions_.push_back(Transition{f, t, std::move(weight)});
}

const WPair* Pts::edge(int from, int to) const {
  auto it = by_pair_.find({from, to});
  return it == by_pair_.end() ? nullptr : &transitions_[it->second].weight;
}

TruthValue Pts::r_plus(int from, int to) const {
  const WPair* w = edge(from, to);
  return w ? w->pos() : alg_.bottom();
}

TruthValue Pts::r_minus(int from, int to) const {
  const WPair* w = edge(from, to);
  return w ? w->neg() : alg_.bottom();
}

TruthValue Pts::r_plus(std::string_view from, std::string_view to) const {
  return r_plus(state_index(from), state_index(to));
}

TruthValue Pts::r_minus(std::string_view from, std::string_view to) const {
  return r_minus(state_index(from), state_index(to));
}

std::vector<std::string> Pts::successors(std::string_view from) const {
  std::vector<std::string> out;
  for (int t : out_[state_index(from)]) out.push_back(states_[transitions_[t].to]);
  return out;
}

bool operator==(const Pts& a, const Pts& b) {
  if (a.alg_ != b.alg_ || a.states_ != b.states_ ||
      a.transitions_.size() != b.transitions_.size())
    return false;
  for (std::size_t i = 0; i < a.transitions_.size(); ++i) {
    const auto& x = a.transitions_[i];
    const auto& y = b.transitions_[i];
    if (x.from != y.from || x.to != y.to || !(x.weight == y.weight)) return false;
  }
  return true;
}

namespace {

// Propositions must be referencable from formulas, so they share the
// formula identifier syntax and avoid the constant keywords.
bool is_prop_name(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return s != "bot" && s != "top";
}

} // namespace

KripkeModel::KripkeModel(Pts pts, std::vector<std::string> props)
    : pts_(std::move(pts)), props_(std::move(props)) {
  std::set<std::string_view> seen;
  for (const auto& p : props_) {
    if (!is_prop_name(p))
      throw ValidationError("'" + p + "' is not a valid proposition name");
    if (!seen.insert(p).second) throw ValidationError("duplicate proposition '" + p + "'");
  }
}

bool KripkeModel::has_prop(std::string_view name) const {
  return std::find(props_.begin(), props_.end(), name) != props_.end();
}

void KripkeModel::set_valuation(std::string_view prop, std::string_view state, WPair value) {
  if (!has_prop(prop)) throw UnknownName("undeclared proposition '" + std::string(prop) + "'");
  pts_.state_index(state); // validates the name
  if (value.algebra() != algebra())
    throw InstanceMismatch("valuation value from " + value.algebra().name() + " in a " +
                           algebra().name() + " model");
  valuation_.insert_or_assign({std::string(prop), std::string(state)}, std::move(value));
}

WPair KripkeModel::valuation_of(std::string_view prop, std::string_view state) const {
  if (!has_prop(prop)) throw UnknownName("undeclared proposition '" + std::string(prop) + "'");
  pts_.state_index(state);
  auto it = valuation_.find({std::string(prop), std::string(state)});
  if (it != valuation_.end()) return it->second;
  return WPair(algebra().bottom(), algebra().bottom()); // no evidence either way
}

WPair KripkeModel::valuation_of(std::string_view prop, int state) const {
  return valuation_of(prop, pts_.state_name(state));
}

bool operator==(const KripkeModel& a, const KripkeModel& b) {
  return a.pts_ == b.pts_ && a.props_ == b.props_ && a.valuation_ == b.valuation_;
}

namespace {

using nlohmann::ordered_json;

struct ModelReader {
  std::vector<Diagnostic> diags;

  void report(std::string location, std::string message) {
    diags.push_back({std::move(location), std::move(message)});
  }

  std::optional<Algebra> read_algebra(const ordered_json& doc) {
    if (!doc.contains("algebra")) {
      report("algebra", "missing key");
      return std::nullopt;
    }
    const auto& a = doc["algebra"];
    try {
      if (a.is_string()) return Algebra::parse_name(a.get<std::string>());
      if (a.is_object() && a.contains("chain") && a["chain"].is_number_integer())
        return Algebra::chain(a["chain"].get<int>());
    } catch (const Error& e) {
      report("algebra", e.what());
      return std::nullopt;
    }
    report("algebra", "expected \"bool2\", \"chain3\", \"godel\" or {\"chain\": N}");
    return std::nullopt;
  }

  std::vector<std::string> read_names(const ordered_json& doc, const char* key) {
    std::vector<std::string> names;
    if (!doc.contains(key) || !doc[key].is_array()) {
      report(key, "expected an array of names");
      return names;
    }
    std::set<std::string> seen;
    int i = 0;
    for (const auto& item : doc[key]) {
      std::string loc = std::string(key) + "[" + std::to_string(i++) + "]";
      if (!item.is_string() || item.get<std::string>().empty()) {
        report(loc, "expected a nonempty string");
        continue;
      }
      auto name = item.get<std::string>();
      if (!seen.insert(name).second) {
        report(loc, "duplicate name '" + name + "'");
        continue;
      }
      names.push_back(std::move(name));
    }
    return names;
  }

  std::optional<TruthValue> read_literal(const Algebra& alg, const ordered_json& j,
                                         const std::string& loc) {
    if (!j.is_string()) {
      report(loc, "weight literal must be a string");
      return std::nullopt;
    }
    try {
      return alg.parse_literal(j.get<std::string>());
    } catch (const Error& e) {
      report(loc, e.what());
      return std::nullopt;
    }
  }
};

ordered_json algebra_to_json(const Algebra& alg) {
  if (alg.kind() == Algebra::Kind::Chain) return ordered_json{{"chain", alg.carrier_size()}};
  return alg.name();
}

} // namespace

ParseOutcome parse_model(std::string_view text, bool strict) {
  ModelReader rd;
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    rd.report("(file)", std::string("JSON syntax error at byte ") + std::to_string(e.byte) +
                            ": " + e.what());
    return {std::nullopt, std::move(rd.diags)};
  }
  if (!doc.is_object()) {
    rd.report("(file)", "model file must be a JSON object");
    return {std::nullopt, std::move(rd.diags)};
  }

  auto alg = rd.read_algebra(doc);
  auto states = rd.read_names(doc, "states");
  auto props = doc.contains("props") ? rd.read_names(doc, "props") : std::vector<std::string>{};
  for (std::size_t i = 0; i < props.size(); ++i)
    if (!is_prop_name(props[i]))
      rd.report("props[" + std::to_string(i) + "]",
                "'" + props[i] + "' is not a valid proposition name");
  if (states.empty()) rd.report("states", "a model needs at least one state");
  if (!alg || states.empty()) return {std::nullopt, std::move(rd.diags)};

  auto find_name = [](const std::vector<std::string>& names, const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };

  struct RawTransition {
    std::string from, to;
    TruthValue pos, neg;
  };
  std::vector<RawTransition> raw;
  std::set<std::pair<std::string, std::string>> pairs;
  if (doc.contains("transitions")) {
    if (!doc["transitions"].is_array()) {
      rd.report("transitions", "expected an array");
    } else {
      int i = 0;
      for (const auto& t : doc["transitions"]) {
        std::string loc = "transitions[" + std::to_string(i++) + "]";
        if (!t.is_object() || !t.contains("from") || !t.contains("to") ||
            !t.contains("pos") || !t.contains("neg")) {
          rd.report(loc, "expected {\"from\", \"to\", \"pos\", \"neg\"}");
          continue;
        }
        std::string from = t["from"].is_string() ? t["from"].get<std::string>() : "";
        std::string to = t["to"].is_string() ? t["to"].get<std::string>() : "";
        bool ok = true;
        if (!find_name(states, from)) {
          rd.report(loc + ".from", "unknown state '" + from + "'");
          ok = false;
        }
        if (!find_name(states, to)) {
          rd.report(loc + ".to", "unknown state '" + to + "'");
          ok = false;
        }
        auto pos = rd.read_literal(*alg, t["pos"], loc + ".pos");
        auto neg = rd.read_literal(*alg, t["neg"], loc + ".neg");
        if (!ok || !pos || !neg) continue;
        if (!pairs.insert({from, to}).second) {
          rd.report(loc, "duplicate transition " + from + " -> " + to);
          continue;
        }
        raw.push_back({std::move(from), std::move(to), *pos, *neg});
      }
    }
  }

  struct RawValuation {
    std::string prop, state;
    TruthValue pos, neg;
  };
  std::vector<RawValuation> values;
  if (doc.contains("valuation")) {
    if (!doc["valuation"].is_object()) {
      rd.report("valuation", "expected an object keyed by proposition");
    } else {
      for (const auto& [prop, by_state] : doc["valuation"].items()) {
        std::string ploc = "valuation." + prop;
        if (!find_name(props, prop)) {
          rd.report(ploc, "undeclared proposition '" + prop + "'");
          continue;
        }
        if (!by_state.is_object()) {
          rd.report(ploc, "expected an object keyed by state");
          continue;
        }
        for (const auto& [state, pair] : by_state.items()) {
          std::string loc = ploc + "." + state;
          if (!find_name(states, state)) {
            rd.report(loc, "unknown state '" + state + "'");
            continue;
          }
          if (!pair.is_array() || pair.size() != 2) {
            rd.report(loc, "expected [pos, neg]");
            continue;
          }
          auto pos = rd.read_literal(*alg, pair[0], loc + "[0]");
          auto neg = rd.read_literal(*alg, pair[1], loc + "[1]");
          if (pos && neg) values.push_back({prop, state, *pos, *neg});
        }
      }
    }
  }

  if (strict) {
    std::set<std::pair<std::string, std::string>> given;
    for (const auto& v : values) given.insert({v.prop, v.state});
    for (const auto& p : props)
      for (const auto& s : states)
        if (!given.count({p, s}))
          rd.report("valuation." + p + "." + s, "missing entry (strict mode)");
  }

  if (!rd.diags.empty()) return {std::nullopt, std::move(rd.diags)};

  Pts pts(*alg, std::move(states));
  for (auto& t : raw) pts.add_transition(t.from, t.to, WPair(t.pos, t.neg));
  KripkeModel model(std::move(pts), std::move(props));
  for (auto& v : values) model.set_valuation(v.prop, v.state, WPair(v.pos, v.neg));
  return {std::move(model), {}};
}

std::vector<Diagnostic> validate(const KripkeModel& model, bool strict) {
  std::vector<Diagnostic> diags;
  // Structural invariants hold by construction; round-tripping through the
  // serialized form re-checks them all the same way the parser does.
  auto outcome = parse_model(serialize_model(model), strict);
  for (auto& d : outcome.diagnostics) diags.push_back(std::move(d));
  if (outcome.model && !(*outcome.model == model))
    diags.push_back({"(model)", "serialization round-trip mismatch"});
  return diags;
}

std::string serialize_model(const KripkeModel& model) {
  const Algebra& alg = model.algebra();
  ordered_json doc;
  doc["algebra"] = algebra_to_json(alg);
  doc["states"] = model.pts().states();
  doc["props"] = model.props();
  ordered_json transitions = ordered_json::array();
  for (const auto& t : model.pts().transitions()) {
    transitions.push_back({{"from", model.pts().state_name(t.from)},
                           {"to", model.pts().state_name(t.to)},
                           {"pos", alg.format_literal(t.weight.pos())},
                           {"neg", alg.format_literal(t.weight.neg())}});
  }
  doc["transitions"] = std::move(transitions);
  ordered_json valuation = ordered_json::object();
  for (const auto& [key, value] : model.stored_valuation()) {
    valuation[key.first][key.second] = {alg.format_literal(value.pos()),
                                        alg.format_literal(value.neg())};
  }
  doc["valuation"] = std::move(valuation);
  return doc.dump(2) + "\n";
}

KripkeModel must_parse_model(std::string_view text, bool strict) {
  auto outcome = parse_model(text, strict);
  if (outcome.model) return std::move(*outcome.model);
  std::ostringstream msg;
  msg << "model did not parse:";
  for (const auto& d : outcome.diagnostics) msg << "\n  " << d.location << ": " << d.message;
  throw ValidationError(msg.str());
}

} // namespace ptskit
