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

#include "ptskit/laws.hpp"

#include <functional>

namespace ptskit {

namespace {

std::string lit(const Algebra& alg, const TruthValue& v) { return alg.format_literal(v); }

std::string family_witness(const Algebra& alg, const std::vector<TruthValue>& family,
                           const TruthValue& b) {
  std::string s = "family = {";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) s += ", ";
    s += lit(alg, family[i]);
  }
  s += "}, b = " + lit(alg, b);
  return s;
}

/// Visits every nonempty multiset of `values` with size <= max_size.
/// Enumeration order is deterministic (nondecreasing index sequences).
void for_each_family(const std::vector<TruthValue>& values, int max_size,
                     const std::function<bool(const std::vector<TruthValue>&)>& visit,
                     bool& keep_going) {
  std::vector<TruthValue> family;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!keep_going) return;
    for (std::size_t i = start; i < values.size() && keep_going; ++i) {
      family.push_back(values[i]);
      if (!visit(family)) keep_going = false;
      if (keep_going && static_cast<int>(family.size()) < max_size) rec(i);
      family.pop_back();
    }
  };
  rec(0);
}

} // namespace

LawSampler LawSampler::exhaustive(const Algebra& alg) { return LawSampler{alg.carrier(), 4}; }

LawSampler LawSampler::grid(const Algebra& alg, int max_denominator) {
  return LawSampler{alg.sample_grid(max_denominator), 4};
}

LawReport check_laws(const Algebra& alg, const LawSampler& sampler) {
  const auto& vs = sampler.values;
  LawReport report;

  auto add = [&](std::string law, bool passed, std::string witness) {
    report.checks.push_back({std::move(law), passed, std::move(witness)});
  };

  auto check_pairs = [&](const char* law, auto&& pred) {
    for (const auto& a : vs)
      for (const auto& b : vs)
        if (!pred(a, b)) {
          add(law, false, "a = " + lit(alg, a) + ", b = " + lit(alg, b));
          return;
        }
    add(law, true, "");
  };

  auto check_triples = [&](const char* law, auto&& pred) {
    for (const auto& a : vs)
      for (const auto& b : vs)
        for (const auto& c : vs)
          if (!pred(a, b, c)) {
            add(law, false,
                "a = " + lit(alg, a) + ", b = " + lit(alg, b) + ", c = " + lit(alg, c));
            return;
          }
    add(law, true, "");
  };

  check_triples("adjunction", [&](const auto& a, const auto& b, const auto& c) {
    return alg.leq(alg.meet(a, b), c) == alg.leq(b, alg.residuum(a, c));
  });

  check_pairs("prelinearity", [&](const auto& a, const auto& b) {
    return alg.join(alg.residuum(a, b), alg.residuum(b, a)) == alg.top();
  });

  check_triples("residuum-monotone", [&](const auto& a, const auto& b, const auto& c) {
    return !alg.leq(a, b) || alg.leq(alg.residuum(c, a), alg.residuum(c, b));
  });

  check_triples("residuum-antitone", [&](const auto& a, const auto& b, const auto& c) {
    return !alg.leq(a, b) || alg.leq(alg.residuum(b, c), alg.residuum(a, c));
  });

  check_triples("currying", [&](const auto& a, const auto& b, const auto& c) {
    return alg.residuum(a, alg.residuum(b, c)) == alg.residuum(alg.meet(b, a), c);
  });

  // The four distribution laws of the residuum over family meets and joins.
  struct FamilyLaw {
    const char* law;
    std::function<bool(const std::vector<TruthValue>&, const TruthValue&)> pred;
  };
  auto fold_meet = [&](const std::vector<TruthValue>& f) { return big_meet(f, alg); };
  auto fold_join = [&](const std::vector<TruthValue>& f) { return big_join(f, alg); };
  auto mapped = [&](const std::vector<TruthValue>& f, auto&& step) {
    std::vector<TruthValue> out;
    out.reserve(f.size());
    for (const auto& a : f) out.push_back(step(a));
    return out;
  };

  const FamilyLaw family_laws[] = {
      {"meet-distribution",
       [&](const auto& f, const auto& b) {
         return alg.residuum(b, fold_meet(f)) ==
                big_meet(mapped(f, [&](const auto& a) { return alg.residuum(b, a); }), alg);
       }},
      {"join-antidistribution",
       [&](const auto& f, const auto& b) {
         return alg.residuum(fold_join(f), b) ==
                big_meet(mapped(f, [&](const auto& a) { return alg.residuum(a, b); }), alg);
       }},
      {"join-distribution",
       [&](const auto& f, const auto& b) {
         return alg.residuum(b, fold_join(f)) ==
                big_join(mapped(f, [&](const auto& a) { return alg.residuum(b, a); }), alg);
       }},
      {"meet-antidistribution",
       [&](const auto& f, const auto& b) {
         return alg.residuum(fold_meet(f), b) ==
                big_join(mapped(f, [&](const auto& a) { return alg.residuum(a, b); }), alg);
       }},
  };

  for (const auto& fl : family_laws) {
    bool keep_going = true;
    bool passed = true;
    std::string witness;
    for_each_family(vs, sampler.max_family,
                    [&](const std::vector<TruthValue>& family) {
                      for (const auto& b : vs) {
                        if (!fl.pred(family, b)) {
                          passed = false;
                          witness = family_witness(alg, family, b);
                          return false;
                        }
                      }
                      return true;
                    },
                    keep_going);
    add(fl.law, passed, witness);
  }

  check_pairs("metric-identity", [&](const auto& a, const auto& b) {
    return (alg.metric(a, b) == Rational(0)) == (a == b);
  });

  check_pairs("metric-symmetry", [&](const auto& a, const auto& b) {
    return alg.metric(a, b) == alg.metric(b, a);
  });

  check_triples("metric-triangle", [&](const auto& a, const auto& b, const auto& c) {
    return alg.metric(a, b) <= alg.metric(a, c) + alg.metric(c, b);
  });

  return report;
}

} // namespace ptskit
