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

#include "ptskit/formula.hpp"
#include "ptskit/model.hpp"

namespace ptskit {

/// Value of a formula at a state. Structural recursion over the tree:
///
///   p        V(p, w)
///   bot      (0, 1)
///   !f       swap of f's value
///   &, |, -> the pair operations
///   []f      (bplus(f+),  dplus(f-))
///   <>f      (dplus(f+),  bplus(f-))
///   [~]f     (dminus(f-), bminus(f+))
///   <~>f     (bminus(f-), dminus(f+))
///   @f       (1,0) when f's value is in the vagueness region, else (0,1)
///
/// with the guarded folds over successors w' of w
///
///   bplus(f*)  = meet_{w'} R+(w,w') -> (w' |= f)*
///   bminus(f*) = meet_{w'} R-(w,w') -> (w' |= f)*
///   dplus(f*)  = join_{w'} R+(w,w') &  (w' |= f)*
///   dminus(f*) = join_{w'} R-(w,w') &  (w' |= f)*
///
/// At a state with no successors the empty folds give meet = top and
/// join = bottom, so []f and <~>f read (1,0) and <>f and [~]f read (0,1).
///
/// (state, subformula) values are memoized within one call, making nested
/// modalities linear in |states| * |formula|; the function stays pure.
WPair eval(const KripkeModel& model, std::string_view state, const Formula& f);
WPair eval(const KripkeModel& model, int state, const Formula& f);

enum class Component { Pos, Neg };

/// The four guarded folds, exposed individually: the selected component of
/// the subformula's value at each successor, folded against the positive or
/// negative edge weight.
TruthValue box_plus(const KripkeModel& m, std::string_view state, const Formula& f, Component c);
TruthValue box_minus(const KripkeModel& m, std::string_view state, const Formula& f, Component c);
TruthValue dia_plus(const KripkeModel& m, std::string_view state, const Formula& f, Component c);
TruthValue dia_minus(const KripkeModel& m, std::string_view state, const Formula& f, Component c);

/// True iff the formula evaluates to (top, bottom) at every state.
bool is_valid(const KripkeModel& model, const Formula& f);

/// True iff both formulas evaluate identically at every state of this model.
bool equivalent(const KripkeModel& model, const Formula& f, const Formula& g);

} // namespace ptskit
