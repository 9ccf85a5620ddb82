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
#include <string_view>

#include "ptskit/algebra.hpp"

namespace ptskit {

/// A pair of degrees over one algebra instance: pos() grades the evidence
/// that something holds, neg() the independent evidence that it fails.
/// The two components are not assumed complementary.
class WPair {
public:
  WPair(TruthValue pos, TruthValue neg);

  const TruthValue& pos() const { return pos_; }
  const TruthValue& neg() const { return neg_; }
  const Algebra& algebra() const { return pos_.algebra(); }

  friend bool operator==(const WPair& a, const WPair& b) {
    return a.pos_ == b.pos_ && a.neg_ == b.neg_;
  }

private:
  TruthValue pos_;
  TruthValue neg_;
};

/// Pair operations. Meet and join act componentwise with the roles of the
/// two components swapped on the negative side; negation swaps the pair.
WPair pmeet(const WPair& x, const WPair& y);    // (a&c, b|d)
WPair pjoin(const WPair& x, const WPair& y);    // (a|c, b&d)
WPair pimplies(const WPair& x, const WPair& y); // (a->c, a&d)
WPair pneg(const WPair& x);                     // (b, a)

/// Truth order: (a,b) <= (c,d) iff a <= c and b >= d. A partial order; pairs
/// such as (1,1) and (0,0) are incomparable even over a chain.
bool pleq(const WPair& x, const WPair& y);

/// Square of the induced metric D((a,b),(c,d)) = sqrt(d(a,c)^2 + d(b,d)^2).
/// Only the square is ever materialized: all uses are comparisons, and for
/// nonnegative distances D1 <= D2 iff D1^2 <= D2^2, so everything stays an
/// exact rational. Squaring and summing are done in arbitrary precision.
WideRational dist2(const WPair& x, const WPair& y);

/// Membership in the inconsistency/vagueness regions:
///   in_delta_p   the pair is at most as far from (1,1) as from (0,0)
///   in_delta_c   the pair is at most as far from (0,0) as from (1,1)
/// Both comparisons are non-strict, so every pair lies in at least one
/// region and the boundary lies in both.
struct Region {
  bool in_delta_p = false;
  bool in_delta_c = false;

  bool strictly_consistent() const { return in_delta_p && in_delta_c; }
};

Region classify(const WPair& x);

/// "inconsistent" (delta_p only), "vague" (delta_c only), "strict" (both).
std::string_view region_name(const Region& r);

/// "(lit, lit)" using the instance's literal syntax.
std::string format_wpair(const WPair& x);

} // namespace ptskit
