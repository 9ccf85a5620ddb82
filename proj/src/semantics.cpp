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

#include "ptskit/semantics.hpp"

#include <map>
#include <vector>

namespace ptskit {

namespace {

struct Evaluator {
  explicit Evaluator(const KripkeModel& model) : m(model) {}

  const KripkeModel& m;
  std::map<std::pair<const Formula*, int>, WPair> memo;

  const Algebra& alg() const { return m.algebra(); }

  WPair at(const Formula& f, int w) {
    auto key = std::make_pair(&f, w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    WPair value = compute(f, w);
    memo.emplace(key, value);
    return value;
  }

  // One guarded fold over the successors of w: `positive` selects which
  // weight component guards, `comp` which component of the successor value
  // is folded, `universal` picks meet-of-residuums versus join-of-meets.
  TruthValue fold(const Formula& f, int w, bool positive, Component comp, bool universal) {
    const Pts& pts = m.pts();
    std::vector<TruthValue> items;
    for (int ti : pts.outgoing(w)) {
      const Transition& t = pts.transitions()[ti];
      const TruthValue& guard = positive ? t.weight.pos() : t.weight.neg();
      WPair succ = at(f, t.to);
      const TruthValue& v = comp == Component::Pos ? succ.pos() : succ.neg();
      items.push_back(universal ? residuum(guard, v) : meet(guard, v));
    }
    return universal ? big_meet(items, alg()) : big_join(items, alg());
  }

  TruthValue bplus(const Formula& f, int w, Component c) { return fold(f, w, true, c, true); }
  TruthValue bminus(const Formula& f, int w, Component c) { return fold(f, w, false, c, true); }
  TruthValue dplus(const Formula& f, int w, Component c) { return fold(f, w, true, c, false); }
  TruthValue dminus(const Formula& f, int w, Component c) { return fold(f, w, false, c, false); }

  WPair compute(const Formula& f, int w) {
    switch (f.conn()) {
      case Conn::Prop:
        return m.valuation_of(f.prop(), w);
      case Conn::Bottom:
        return WPair(alg().bottom(), alg().top());
      case Conn::Neg:
        return pneg(at(*f.child(), w));
      case Conn::And:
        return pmeet(at(*f.left(), w), at(*f.right(), w));
      case Conn::Or:
        return pjoin(at(*f.left(), w), at(*f.right(), w));
      case Conn::Implies:
        return pimplies(at(*f.left(), w), at(*f.right(), w));
      case Conn::Box:
        return WPair(bplus(*f.child(), w, Component::Pos),
                     dplus(*f.child(), w, Component::Neg));
      case Conn::Diamond:
        return WPair(dplus(*f.child(), w, Component::Pos),
                     bplus(*f.child(), w, Component::Neg));
      case Conn::NegBox:
        return WPair(dminus(*f.child(), w, Component::Neg),
                     bminus(*f.child(), w, Component::Pos));
      case Conn::NegDiamond:
        return WPair(bminus(*f.child(), w, Component::Neg),
                     dminus(*f.child(), w, Component::Pos));
      case Conn::Consistency:
        return classify(at(*f.child(), w)).in_delta_c
                   ? WPair(alg().top(), alg().bottom())
                   : WPair(alg().bottom(), alg().top());
    }
    throw Error("unreachable connective");
  }
};

} // namespace

WPair eval(const KripkeModel& model, int state, const Formula& f) {
  if (state < 0 || state >= model.pts().state_count())
    throw UnknownName("state index out of range");
  return Evaluator(model).at(f, state);
}

WPair eval(const KripkeModel& model, std::string_view state, const Formula& f) {
  return eval(model, model.pts().state_index(state), f);
}

TruthValue box_plus(const KripkeModel& m, std::string_view state, const Formula& f,
                    Component c) {
  return Evaluator(m).bplus(f, m.pts().state_index(state), c);
}

TruthValue box_minus(const KripkeModel& m, std::string_view state, const Formula& f,
                     Component c) {
  return Evaluator(m).bminus(f, m.pts().state_index(state), c);
}

TruthValue dia_plus(const KripkeModel& m, std::string_view state, const Formula& f,
                    Component c) {
  return Evaluator(m).dplus(f, m.pts().state_index(state), c);
}

TruthValue dia_minus(const KripkeModel& m, std::string_view state, const Formula& f,
                     Component c) {
  return Evaluator(m).dminus(f, m.pts().state_index(state), c);
}

bool is_valid(const KripkeModel& model, const Formula& f) {
  WPair designated(model.algebra().top(), model.algebra().bottom());
  Evaluator ev(model);
  for (int w = 0; w < model.pts().state_count(); ++w)
    if (!(ev.at(f, w) == designated)) return false;
  return true;
}

bool equivalent(const KripkeModel& model, const Formula& f, const Formula& g) {
  Evaluator ev(model);
  for (int w = 0; w < model.pts().state_count(); ++w)
    if (!(ev.at(f, w) == ev.at(g, w))) return false;
  return true;
}

} // namespace ptskit
