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

#include "ptskit/relations.hpp"

#include <set>

#include <json.hpp>

#include "ptskit/twist.hpp"

namespace ptskit {

bool StateRelation::contains(std::string_view left, std::string_view right) const {
  for (const auto& [l, r] : pairs)
    if (l == left && r == right) return true;
  return false;
}

StateRelation StateRelation::from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("relation file: ") + e.what(), e.byte);
  }
  if (!doc.is_array())
    throw ValidationError("relation file must be a JSON array of [left, right] pairs");
  StateRelation rel;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
      throw ValidationError("relation entries must be two-element arrays of state names");
    rel.pairs.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return rel;
}

std::string StateRelation::to_json_text() const {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& [l, r] : pairs) doc.push_back({l, r});
  return doc.dump() + "\n";
}

namespace {

// Index form of a relation over two concrete models.
struct IndexRelation {
  int n1 = 0, n2 = 0;
  std::vector<char> member; // n1 * n2 membership grid

  void set(int i, int j, bool v) { member[static_cast<std::size_t>(i) * n2 + j] = v ? 1 : 0; }
  bool at(int i, int j) const { return member[static_cast<std::size_t>(i) * n2 + j] != 0; }
};

IndexRelation resolve(const StateRelation& rel, const Pts& p1, const Pts& p2) {
  IndexRelation ir;
  ir.n1 = p1.state_count();
  ir.n2 = p2.state_count();
  ir.member.assign(static_cast<std::size_t>(ir.n1) * ir.n2, 0);
  for (const auto& [l, r] : rel.pairs) ir.set(p1.state_index(l), p2.state_index(r), true);
  return ir;
}

StateRelation to_named(const IndexRelation& ir, const Pts& p1, const Pts& p2) {
  StateRelation rel;
  for (int i = 0; i < ir.n1; ++i)
    for (int j = 0; j < ir.n2; ++j)
      if (ir.at(i, j)) rel.pairs.emplace_back(p1.state_name(i), p2.state_name(j));
  return rel;
}

// Forth condition for one related pair: every step on the left must be
// matched on the right by a related target whose weight dominates (or, for
// bisimulations, equals) the left weight.
bool step_matched(const Pts& p1, const Pts& p2, const IndexRelation& rel, int w1, int w2,
                  bool exact, std::string* detail) {
  for (int ti : p1.outgoing(w1)) {
    const Transition& t = p1.transitions()[ti];
    bool matched = false;
    for (int tj : p2.outgoing(w2)) {
      const Transition& u = p2.transitions()[tj];
      if (!rel.at(t.to, u.to)) continue;
      if (exact ? t.weight == u.weight : pleq(t.weight, u.weight)) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      if (detail)
        *detail = "step " + p1.state_name(t.from) + " -> " + p1.state_name(t.to) + " " +
                  format_wpair(t.weight) + " has no " + (exact ? "equal" : "dominating") +
                  " related match";
      return false;
    }
  }
  return true;
}

bool valuations_ordered(const KripkeModel& m1, const KripkeModel& m2, int w1, int w2,
                        bool exact, std::string* detail) {
  for (const auto& p : m1.props()) {
    if (!m2.has_prop(p)) {
      if (detail) *detail = "proposition '" + p + "' not declared in the right model";
      return false;
    }
    WPair a = m1.valuation_of(p, w1);
    WPair b = m2.valuation_of(p, w2);
    if (exact ? !(a == b) : !pleq(a, b)) {
      if (detail)
        *detail = "valuation of '" + p + "': " + format_wpair(a) +
                  (exact ? " != " : " not below ") + format_wpair(b);
      return false;
    }
  }
  return true;
}

RelationVerdict check_relation(const StateRelation& rel, const KripkeModel& m1,
                               const KripkeModel& m2, bool with_valuations, bool exact,
                               bool both_directions) {
  if (m1.algebra() != m2.algebra())
    throw InstanceMismatch("cannot relate a " + m1.algebra().name() + " model with a " +
                           m2.algebra().name() + " model");
  const Pts& p1 = m1.pts();
  const Pts& p2 = m2.pts();
  IndexRelation ir = resolve(rel, p1, p2);

  IndexRelation converse;
  if (both_directions) {
    converse.n1 = ir.n2;
    converse.n2 = ir.n1;
    converse.member.assign(ir.member.size(), 0);
    for (int i = 0; i < ir.n1; ++i)
      for (int j = 0; j < ir.n2; ++j)
        if (ir.at(i, j)) converse.set(j, i, true);
  }

  for (const auto& [l, r] : rel.pairs) {
    int w1 = p1.state_index(l);
    int w2 = p2.state_index(r);
    std::string detail;
    if (with_valuations && !valuations_ordered(m1, m2, w1, w2, exact, &detail))
      return {false, RelationViolation{l, r, detail}};
    if (!step_matched(p1, p2, ir, w1, w2, exact, &detail))
      return {false, RelationViolation{l, r, detail}};
    if (both_directions && !step_matched(p2, p1, converse, w2, w1, exact, &detail))
      return {false, RelationViolation{l, r, "(back) " + detail}};
  }
  return {true, std::nullopt};
}

StateRelation refine(const KripkeModel& m1, const KripkeModel& m2, bool with_valuations,
                     bool exact, bool both_directions, FixpointStats* stats) {
  if (m1.algebra() != m2.algebra())
    throw InstanceMismatch("cannot relate a " + m1.algebra().name() + " model with a " +
                           m2.algebra().name() + " model");
  const Pts& p1 = m1.pts();
  const Pts& p2 = m2.pts();

  IndexRelation rel;
  rel.n1 = p1.state_count();
  rel.n2 = p2.state_count();
  rel.member.assign(static_cast<std::size_t>(rel.n1) * rel.n2, 0);
  for (int i = 0; i < rel.n1; ++i)
    for (int j = 0; j < rel.n2; ++j)
      rel.set(i, j, !with_valuations || valuations_ordered(m1, m2, i, j, exact, nullptr));

  IndexRelation converse;
  auto rebuild_converse = [&] {
    converse.n1 = rel.n2;
    converse.n2 = rel.n1;
    converse.member.assign(rel.member.size(), 0);
    for (int i = 0; i < rel.n1; ++i)
      for (int j = 0; j < rel.n2; ++j)
        if (rel.at(i, j)) converse.set(j, i, true);
  };

  FixpointStats local;
  bool changed = true;
  while (changed) {
    changed = false;
    ++local.sweeps;
    if (both_directions) rebuild_converse();
    for (int i = 0; i < rel.n1; ++i) {
      for (int j = 0; j < rel.n2; ++j) {
        if (!rel.at(i, j)) continue;
        bool ok = step_matched(p1, p2, rel, i, j, exact, nullptr);
        if (ok && both_directions) {
          ok = step_matched(p2, p1, converse, j, i, exact, nullptr);
        }
        if (!ok) {
          rel.set(i, j, false);
          if (both_directions) converse.set(j, i, false);
          ++local.deleted;
          changed = true;
        }
      }
    }
  }
  if (stats) *stats = local;
  return to_named(rel, p1, p2);
}

} // namespace

RelationVerdict is_simulation(const StateRelation& rel, const KripkeModel& m1,
                              const KripkeModel& m2, bool with_valuations) {
  return check_relation(rel, m1, m2, with_valuations, /*exact=*/false,
                        /*both_directions=*/false);
}

RelationVerdict is_bisimulation(const StateRelation& rel, const KripkeModel& m1,
                                const KripkeModel& m2, bool with_valuations) {
  return check_relation(rel, m1, m2, with_valuations, /*exact=*/true,
                        /*both_directions=*/true);
}

StateRelation largest_simulation(const KripkeModel& m1, const KripkeModel& m2,
                                 bool with_valuations, FixpointStats* stats) {
  return refine(m1, m2, with_valuations, /*exact=*/false, /*both_directions=*/false, stats);
}

StateRelation largest_bisimulation(const KripkeModel& m1, const KripkeModel& m2,
                                   bool with_valuations, FixpointStats* stats) {
  return refine(m1, m2, with_valuations, /*exact=*/true, /*both_directions=*/true, stats);
}

} // namespace ptskit
