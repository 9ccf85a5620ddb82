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

#include <memory>
#include <string>
#include <string_view>

#include "ptskit/errors.hpp"

namespace ptskit {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Connectives. Box/Diamond quantify over the positive transition weights,
/// NegBox/NegDiamond over the negative ones. Consistency is the crisp test
/// that a formula's value lies in the vagueness region.
enum class Conn {
  Prop,
  Bottom,
  Neg,
  And,
  Or,
  Implies,
  Box,
  Diamond,
  NegBox,
  NegDiamond,
  Consistency,
};

/// Immutable formula tree. The sugar forms are expanded at construction and
/// never appear as nodes:
///   top        = !bot
///   ~f         = f -> bot        (strong negation)
///   f <-> g    = (f -> g) & (g -> f)
class Formula {
public:
  Conn conn() const { return conn_; }
  const std::string& prop() const { return prop_; }
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }
  const FormulaPtr& child() const { return left_; } // unary connectives

  static FormulaPtr prop(std::string name);
  static FormulaPtr bottom();
  static FormulaPtr neg(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr implies(FormulaPtr l, FormulaPtr r);
  static FormulaPtr box(FormulaPtr f);
  static FormulaPtr diamond(FormulaPtr f);
  static FormulaPtr neg_box(FormulaPtr f);
  static FormulaPtr neg_diamond(FormulaPtr f);
  static FormulaPtr consistency(FormulaPtr f);

  // Sugar builders.
  static FormulaPtr top() { return neg(bottom()); }
  static FormulaPtr strong_neg(FormulaPtr f) { return implies(std::move(f), bottom()); }
  static FormulaPtr iff(FormulaPtr l, FormulaPtr r);

private:
  Formula(Conn c, std::string p, FormulaPtr l, FormulaPtr r)
      : conn_(c), prop_(std::move(p)), left_(std::move(l)), right_(std::move(r)) {}

  Conn conn_;
  std::string prop_;
  FormulaPtr left_;
  FormulaPtr right_;
};

bool equal(const Formula& a, const Formula& b);

/// Concrete syntax, one-token lookahead throughout:
///
///   atom   := 'bot' | 'top' | identifier | '(' formula ')'
///   unary  := ('!' | '~' | '[]' | '<>' | '[~]' | '<~>' | '@')* atom
///   and    := unary ('&' unary)*            left associative
///   or     := and ('|' and)*                left associative
///   impl   := or ('->' impl)?               right associative
///   iff    := impl ('<->' impl)*            lowest, left associative
///
/// Throws ParseError with the byte offset of the problem.
FormulaPtr parse_formula(std::string_view text);

/// Minimal-parenthesization printer; parse_formula(print_formula(f))
/// reproduces f for every tree.
std::string print_formula(const Formula& f);

/// True iff the formula uses only bot, top (as !bot), propositions,
/// conjunction, disjunction and the positive diamond. This is the fragment
/// whose values only grow along simulations.
bool in_positive_diamond_fragment(const Formula& f);

} // namespace ptskit
