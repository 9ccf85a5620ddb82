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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptskit/twist.hpp"

namespace ptskit {

struct Transition {
  int from;
  int to;
  WPair weight;
};

/// Finite transition system over one algebra instance. Every ordered state
/// pair carries at most one transition, weighted by a pair of degrees: how
/// strongly the step is enabled and how strongly it is prevented.
///
/// States keep their declaration order; all iteration (successors, relation
/// sweeps, batch evaluation) follows it, so results are reproducible.
class Pts {
public:
  Pts(Algebra alg, std::vector<std::string> states);

  void add_transition(std::string_view from, std::string_view to, WPair weight);

  const Algebra& algebra() const { return alg_; }
  const std::vector<std::string>& states() const { return states_; }
  int state_count() const { return static_cast<int>(states_.size()); }

  int state_index(std::string_view name) const; // throws UnknownName
  const std::string& state_name(int index) const { return states_[index]; }

  const std::vector<Transition>& transitions() const { return transitions_; }

  /// Stored weight of the edge, or nullptr when the pair has no transition.
  const WPair* edge(int from, int to) const;

  /// Weight components; bottom when there is no transition.
  TruthValue r_plus(int from, int to) const;
  TruthValue r_minus(int from, int to) const;
  TruthValue r_plus(std::string_view from, std::string_view to) const;
  TruthValue r_minus(std::string_view from, std::string_view to) const;

  /// Outgoing transitions of a state, in declaration order.
  const std::vector<int>& outgoing(int from) const { return out_[from]; }
  std::vector<std::string> successors(std::string_view from) const;

  friend bool operator==(const Pts& a, const Pts& b);

private:
  Algebra alg_;
  std::vector<std::string> states_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<int>> out_; // per-state indices into transitions_
  std::map<std::pair<int, int>, int> by_pair_;
};

/// A Pts plus a valuation assigning each (proposition, state) a pair of
/// degrees. Entries may be omitted; queries then return (bottom, bottom),
/// i.e. no evidence either way. Strict validation instead requires the
/// valuation to be total.
class KripkeModel {
public:
  KripkeModel(Pts pts, std::vector<std::string> props);

  void set_valuation(std::string_view prop, std::string_view state, WPair value);

  const Pts& pts() const { return pts_; }
  const Algebra& algebra() const { return pts_.algebra(); }
  const std::vector<std::string>& props() const { return props_; }
  bool has_prop(std::string_view name) const;

  WPair valuation_of(std::string_view prop, std::string_view state) const;
  WPair valuation_of(std::string_view prop, int state) const;

  const std::map<std::pair<std::string, std::string>, WPair>& stored_valuation() const {
    return valuation_;
  }

  friend bool operator==(const KripkeModel& a, const KripkeModel& b);

private:
  Pts pts_;
  std::vector<std::string> props_;
  std::map<std::pair<std::string, std::string>, WPair> valuation_; // (prop, state)
};

struct Diagnostic {
  std::string location; // JSON path such as "transitions[2].pos"
  std::string message;
};

struct ParseOutcome {
  std::optional<KripkeModel> model; // present iff diagnostics is empty
  std::vector<Diagnostic> diagnostics;
};

/// Reads the JSON model format:
///
/// {
///   "algebra": "bool2" | "chain3" | {"chain": N} | "godel",
///   "states": ["w1", ...],
///   "props": ["p", ...],
///   "transitions": [{"from": "w1", "to": "w2", "pos": lit, "neg": lit}, ...],
///   "valuation": {"p": {"w1": [lit, lit], ...}, ...}
/// }
///
/// where lit is a weight literal string in the algebra's syntax. Every
/// violation is reported with its location; the model is returned only when
/// the file is clean. With strict=true the valuation must cover all
/// (prop, state) pairs.
ParseOutcome parse_model(std::string_view text, bool strict = false);

/// Re-runs the invariant checks on an in-memory model. Construction already
/// enforces the structural ones, so this reports strict-mode totality gaps
/// and is the hook scripted checks go through.
std::vector<Diagnostic> validate(const KripkeModel& model, bool strict = false);

/// Canonical JSON rendering; parse(serialize(m)) == m.
std::string serialize_model(const KripkeModel& model);

/// Convenience for trusted inputs: throws ValidationError listing every
/// diagnostic if the text does not parse cleanly.
KripkeModel must_parse_model(std::string_view text, bool strict = false);

} // namespace ptskit
