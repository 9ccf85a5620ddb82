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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptskit/model.hpp"

namespace ptskit {

/// A set of cross-model state pairs (left model, right model), used both as
/// a candidate handed to the checkers and as the result of the largest-
/// relation computations. Results come out sorted by state declaration
/// order on the left, then on the right.
struct StateRelation {
  std::vector<std::pair<std::string, std::string>> pairs;

  bool contains(std::string_view left, std::string_view right) const;

  /// JSON array of two-element arrays: [["w1","v1"], ...].
  static StateRelation from_json_text(std::string_view text);
  std::string to_json_text() const;
};

struct RelationViolation {
  std::string left;
  std::string right;
  std::string reason;
};

struct RelationVerdict {
  bool holds = false;
  std::optional<RelationViolation> violation; // first one found, in sweep order
};

/// Simulation check: for every related pair (w, v) and every transition
/// w -> w' with weight x there must be some v -> v' with (w', v') related
/// and x <= weight(v -> v') in the pair order. With with_valuations the
/// valuations must also satisfy V1(p, w) <= V2(p, v) for every proposition.
RelationVerdict is_simulation(const StateRelation& rel, const KripkeModel& m1,
                              const KripkeModel& m2, bool with_valuations);

/// Bisimulation check: matching transitions must carry exactly equal weight
/// pairs, in both directions; with with_valuations the valuations of related
/// states must be equal.
RelationVerdict is_bisimulation(const StateRelation& rel, const KripkeModel& m1,
                                const KripkeModel& m2, bool with_valuations);

struct FixpointStats {
  int sweeps = 0;
  int deleted = 0;
};

/// Greatest fixpoint by pair deletion: start from all pairs (restricted by
/// the valuation condition when requested) and sweep in lexicographic state
/// order, dropping pairs whose condition fails, until a sweep deletes
/// nothing. The result is itself a (bi)simulation and contains every
/// (bi)simulation between the two models.
StateRelation largest_simulation(const KripkeModel& m1, const KripkeModel& m2,
                                 bool with_valuations, FixpointStats* stats = nullptr);

StateRelation largest_bisimulation(const KripkeModel& m1, const KripkeModel& m2,
                                   bool with_valuations = true,
                                   FixpointStats* stats = nullptr);

} // namespace ptskit
