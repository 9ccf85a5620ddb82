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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptskit/errors.hpp"
#include "ptskit/rational.hpp"

namespace ptskit {

class TruthValue;

/// A bounded chain of truth degrees with meet, join, the residuum of meet,
/// and a metric on the carrier.
///
/// Four instances are supported:
///   bool2    the two classical truth values 0, 1
///   chain3   the three-element chain bot < u < top
///   chain:N  the N-element chain with ranks 0 .. N-1
///   godel    exact rationals in [0, 1] under min/max
///
/// On every chain the residuum is forced by the adjunction
/// a meet b <= c  iff  b <= a -> c, which has the unique solution
/// a -> c = top when a <= c, and c otherwise.
///
/// The metric is rank distance on the finite chains (the discrete metric on
/// bool2 is the special case) and |a - b| on godel.
class Algebra {
public:
  enum class Kind { Bool2, Chain3, Chain, Godel };

  static Algebra bool2() { return Algebra(Kind::Bool2, 2); }
  static Algebra chain3() { return Algebra(Kind::Chain3, 3); }
  static Algebra chain(int n); // n >= 2
  static Algebra godel() { return Algebra(Kind::Godel, 0); }

  /// Accepts "bool2", "chain3", "godel", "chain:N".
  static Algebra parse_name(std::string_view name);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ != Kind::Godel; }
  /// Number of carrier elements; finite instances only.
  int carrier_size() const;
  std::string name() const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

  TruthValue bottom() const;
  TruthValue top() const;
  TruthValue from_rank(int rank) const;              // finite instances
  TruthValue from_rational(const Rational& r) const; // godel, r in [0,1]

  bool leq(const TruthValue& a, const TruthValue& b) const;
  TruthValue meet(const TruthValue& a, const TruthValue& b) const;
  TruthValue join(const TruthValue& a, const TruthValue& b) const;
  TruthValue residuum(const TruthValue& a, const TruthValue& b) const;
  Rational metric(const TruthValue& a, const TruthValue& b) const;

  /// All carrier elements in chain order; finite instances only.
  std::vector<TruthValue> carrier() const;

  /// Finite instances: the carrier. godel: all reduced fractions p/q with
  /// q <= max_denominator, in increasing order.
  std::vector<TruthValue> sample_grid(int max_denominator) const;

  /// Per-instance literal syntax:
  ///   bool2   "0", "1"
  ///   chain3  "bot", "u", "top"
  ///   chain:N the rank, "0" .. "N-1"
  ///   godel   decimal ("0.4") or fraction ("2/5"), parsed exactly
  TruthValue parse_literal(std::string_view text) const;
  std::string format_literal(const TruthValue& v) const;

private:
  Algebra(Kind k, int size) : kind_(k), size_(size) {}

  void require_member(const TruthValue& v) const;

  Kind kind_;
  int size_; // carrier size; 0 for godel
};

/// One degree of one algebra instance. Values of distinct instances never
/// mix: binary operations throw InstanceMismatch.
class TruthValue {
public:
  const Algebra& algebra() const { return alg_; }
  int rank() const { return rank_; }               // finite instances
  const Rational& numeric() const { return num_; } // godel

  friend bool operator==(const TruthValue& a, const TruthValue& b) {
    return a.alg_ == b.alg_ && a.rank_ == b.rank_ && a.num_ == b.num_;
  }

private:
  friend class Algebra;
  TruthValue(Algebra alg, int rank, Rational num)
      : alg_(alg), rank_(rank), num_(std::move(num)) {}

  Algebra alg_;
  int rank_;
  Rational num_;
};

/// Operator forms taking the instance from the operands.
bool leq(const TruthValue& a, const TruthValue& b);
TruthValue meet(const TruthValue& a, const TruthValue& b);
TruthValue join(const TruthValue& a, const TruthValue& b);
TruthValue residuum(const TruthValue& a, const TruthValue& b);
Rational metric_distance(const TruthValue& a, const TruthValue& b);

/// Fold of meet/join. The empty family yields top (for big_meet) and bottom
/// (for big_join), which is what fixes modal values at deadlock states.
TruthValue big_meet(std::span<const TruthValue> values, const Algebra& alg);
TruthValue big_join(std::span<const TruthValue> values, const Algebra& alg);

} // namespace ptskit
