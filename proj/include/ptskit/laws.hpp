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

#include "ptskit/algebra.hpp"

namespace ptskit {

struct LawCheck {
  std::string law;
  bool passed = false;
  std::string witness; // counterexample, empty when passed
};

struct LawReport {
  std::vector<LawCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Sample space for law checking: exhaustive on finite carriers, a fraction
/// grid on godel. Distributivity laws quantify over families drawn from
/// `values` with sizes 1 .. max_family.
struct LawSampler {
  std::vector<TruthValue> values;
  int max_family = 4;

  static LawSampler exhaustive(const Algebra& alg);
  static LawSampler grid(const Algebra& alg, int max_denominator);
};

/// Checks, over the sampler's space:
///   adjunction            a&b <= c  iff  b <= a->c
///   prelinearity          (a->b) | (b->a) = 1
///   residuum-monotone     a <= b  implies  c->a <= c->b
///   residuum-antitone     a <= b  implies  b->c <= a->c
///   currying              a->(b->c) = (b&a)->c
///   meet-distribution     b -> meet_i(a_i)  =  meet_i(b -> a_i)
///   join-antidistribution join_i(a_i) -> b  =  meet_i(a_i -> b)
///   join-distribution     b -> join_i(a_i)  =  join_i(b -> a_i)
///   meet-antidistribution meet_i(a_i) -> b  =  join_i(a_i -> b)
///   metric-identity, metric-symmetry, metric-triangle
/// Families are nonempty (sizes 1 .. max_family); the two antidistribution
/// laws do not hold for the empty family under the empty-fold conventions.
LawReport check_laws(const Algebra& alg, const LawSampler& sampler);

} // namespace ptskit
