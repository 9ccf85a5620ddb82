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

#include "ptskit/twist.hpp"

namespace ptskit {

WPair::WPair(TruthValue pos, TruthValue neg) : pos_(std::move(pos)), neg_(std::move(neg)) {
  if (pos_.algebra() != neg_.algebra())
    throw InstanceMismatch("weight pair mixes " + pos_.algebra().name() + " and " +
                           neg_.algebra().name());
}

WPair pmeet(const WPair& x, const WPair& y) {
  return WPair(meet(x.pos(), y.pos()), join(x.neg(), y.neg()));
}

WPair pjoin(const WPair& x, const WPair& y) {
  return WPair(join(x.pos(), y.pos()), meet(x.neg(), y.neg()));
}

WPair pimplies(const WPair& x, const WPair& y) {
  return WPair(residuum(x.pos(), y.pos()), meet(x.pos(), y.neg()));
}

WPair pneg(const WPair& x) { return WPair(x.neg(), x.pos()); }

bool pleq(const WPair& x, const WPair& y) {
  return leq(x.pos(), y.pos()) && leq(y.neg(), x.neg());
}

WideRational dist2(const WPair& x, const WPair& y) {
  WideRational dp = wide(metric_distance(x.pos(), y.pos()));
  WideRational dn = wide(metric_distance(x.neg(), y.neg()));
  return dp * dp + dn * dn;
}

Region classify(const WPair& x) {
  const Algebra& alg = x.algebra();
  WPair both_hold(alg.top(), alg.top());
  WPair no_evidence(alg.bottom(), alg.bottom());
  WideRational to_top = dist2(x, both_hold);
  WideRational to_bottom = dist2(x, no_evidence);
  return Region{to_top <= to_bottom, to_bottom <= to_top};
}

std::string_view region_name(const Region& r) {
  if (r.in_delta_p && r.in_delta_c) return "strict";
  return r.in_delta_p ? "inconsistent" : "vague";
}

std::string format_wpair(const WPair& x) {
  const Algebra& alg = x.algebra();
  return "(" + alg.format_literal(x.pos()) + ", " + alg.format_literal(x.neg()) + ")";
}

} // namespace ptskit
