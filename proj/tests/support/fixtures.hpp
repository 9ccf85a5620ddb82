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

#include <string>
#include <vector>

#include "ptskit/model.hpp"

namespace ptskit::testing {

inline WPair wp(const Algebra& alg, const char* pos, const char* neg) {
  return WPair(alg.parse_literal(pos), alg.parse_literal(neg));
}

/// Five states, two branches from w1, both branch tips deadlocked.
/// p holds crisply at w2, fails crisply at w3, defaults elsewhere.
inline KripkeModel branching_model() {
  Algebra alg = Algebra::godel();
  Pts pts(alg, {"w1", "w2", "w3", "w4", "w5"});
  pts.add_transition("w1", "w2", wp(alg, "0.4", "0.7"));
  pts.add_transition("w1", "w3", wp(alg, "0.3", "0.6"));
  pts.add_transition("w2", "w4", wp(alg, "0.2", "0.8"));
  pts.add_transition("w3", "w5", wp(alg, "0.2", "0.9"));
  KripkeModel m(std::move(pts), {"p"});
  m.set_valuation("p", "w2", wp(alg, "1", "0"));
  m.set_valuation("p", "w3", wp(alg, "0", "1"));
  return m;
}

/// Four states in a line with a fork at v2; no valuation entries.
inline KripkeModel linear_model() {
  Algebra alg = Algebra::godel();
  Pts pts(alg, {"v1", "v2", "v3", "v4"});
  pts.add_transition("v1", "v2", wp(alg, "0.5", "0.5"));
  pts.add_transition("v2", "v3", wp(alg, "0.3", "0.5"));
  pts.add_transition("v2", "v4", wp(alg, "0.5", "0.5"));
  return KripkeModel(std::move(pts), {"p"});
}

/// One edge w -> w1 with the given weight; V(p, w1) as given.
inline KripkeModel single_edge_model(const Algebra& alg, const WPair& edge, const WPair& vp) {
  Pts pts(alg, {"w", "w1"});
  pts.add_transition("w", "w1", edge);
  KripkeModel m(std::move(pts), {"p"});
  m.set_valuation("p", "w1", vp);
  return m;
}

/// Three-state chain w -> w1 -> v with diminishing weights; p holds crisply
/// at w1 and v.
inline KripkeModel three_chain_model() {
  Algebra alg = Algebra::godel();
  Pts pts(alg, {"w", "w1", "v"});
  pts.add_transition("w", "w1", wp(alg, "0.1", "0.3"));
  pts.add_transition("w1", "v", wp(alg, "0.4", "0.7"));
  KripkeModel m(std::move(pts), {"p"});
  m.set_valuation("p", "w1", wp(alg, "1", "0"));
  m.set_valuation("p", "v", wp(alg, "1", "0"));
  return m;
}

/// Three-valued fork: w steps to w1 (weakly) and w3 (crisply), w1 steps on
/// to w2. p is crisp at w1 and w2 and entirely unknown at w3.
inline KripkeModel chain3_fork_model() {
  Algebra alg = Algebra::chain3();
  Pts pts(alg, {"w", "w1", "w2", "w3"});
  pts.add_transition("w", "w1", wp(alg, "u", "bot"));
  pts.add_transition("w1", "w2", wp(alg, "top", "bot"));
  pts.add_transition("w", "w3", wp(alg, "top", "bot"));
  KripkeModel m(std::move(pts), {"p"});
  m.set_valuation("p", "w1", wp(alg, "top", "bot"));
  m.set_valuation("p", "w2", wp(alg, "top", "bot"));
  m.set_valuation("p", "w3", wp(alg, "u", "u"));
  return m;
}

} // namespace ptskit::testing
