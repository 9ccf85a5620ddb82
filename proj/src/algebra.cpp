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

#include "ptskit/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace ptskit {

namespace {

const Rational kZero(0);
const Rational kOne(1);

[[noreturn]] void mismatch(const Algebra& a, const Algebra& b) {
  throw InstanceMismatch("cannot combine values of " + a.name() + " and " + b.name());
}

} // namespace

Algebra Algebra::chain(int n) {
  if (n < 2) throw Error("chain algebra needs at least 2 elements");
  return Algebra(Kind::Chain, n);
}

Algebra Algebra::parse_name(std::string_view name) {
  if (name == "bool2") return bool2();
  if (name == "chain3") return chain3();
  if (name == "godel") return godel();
  if (name.starts_with("chain:")) {
    auto digits = name.substr(6);
    if (!digits.empty() && digits.size() <= 6 &&
        digits.find_first_not_of("0123456789") == std::string_view::npos)
      return chain(std::atoi(std::string(digits).c_str()));
  }
  throw UnknownName("unknown algebra '" + std::string(name) +
                    "' (expected bool2, chain3, chain:N or godel)");
}

int Algebra::carrier_size() const {
  if (!is_finite()) throw Error("godel carrier is not finite");
  return size_;
}

std::string Algebra::name() const {
  switch (kind_) {
    case Kind::Bool2: return "bool2";
    case Kind::Chain3: return "chain3";
    case Kind::Chain: return "chain:" + std::to_string(size_);
    case Kind::Godel: return "godel";
  }
  return {};
}

TruthValue Algebra::bottom() const {
  return is_finite() ? from_rank(0) : from_rational(kZero);
}

TruthValue Algebra::top() const {
  return is_finite() ? from_rank(size_ - 1) : from_rational(kOne);
}

TruthValue Algebra::from_rank(int rank) const {
  if (!is_finite()) throw Error("godel values are rationals, not ranks");
  if (rank < 0 || rank >= size_)
    throw Error("rank " + std::to_string(rank) + " outside " + name());
  return TruthValue(*this, rank, kZero);
}

TruthValue Algebra::from_rational(const Rational& r) const {
  if (is_finite()) throw Error(name() + " values are ranks, not rationals");
  if (r < kZero || r > kOne)
    throw Error("value " + format_rational(r) + " outside [0,1]");
  // Bounded denominators keep differences of degrees within long long.
  if (r.denominator() > 1'000'000'000)
    throw Error("denominator of " + format_rational(r) + " exceeds 10^9");
  return TruthValue(*this, 0, r);
}

void Algebra::require_member(const TruthValue& v) const {
  if (v.algebra() != *this) mismatch(*this, v.algebra());
}

bool Algebra::leq(const TruthValue& a, const TruthValue& b) const {
  require_member(a);
  require_member(b);
  return is_finite() ? a.rank() <= b.rank() : a.numeric() <= b.numeric();
}

TruthValue Algebra::meet(const TruthValue& a, const TruthValue& b) const {
  return leq(a, b) ? a : b;
}

TruthValue Algebra::join(const TruthValue& a, const TruthValue& b) const {
  return leq(a, b) ? b : a;
}

TruthValue Algebra::residuum(const TruthValue& a, const TruthValue& b) const {
  return leq(a, b) ? top() : b;
}

Rational Algebra::metric(const TruthValue& a, const TruthValue& b) const {
  require_member(a);
  require_member(b);
  if (is_finite()) return Rational(std::abs(a.rank() - b.rank()));
  return a.numeric() >= b.numeric() ? a.numeric() - b.numeric() : b.numeric() - a.numeric();
}

std::vector<TruthValue> Algebra::carrier() const {
  std::vector<TruthValue> out;
  out.reserve(carrier_size());
  for (int r = 0; r < size_; ++r) out.push_back(from_rank(r));
  return out;
}

std::vector<TruthValue> Algebra::sample_grid(int max_denominator) const {
  if (is_finite()) return carrier();
  if (max_denominator < 1) throw Error("grid denominator must be positive");
  std::set<Rational> values;
  for (long long q = 1; q <= max_denominator; ++q)
    for (long long p = 0; p <= q; ++p) values.insert(Rational(p, q));
  std::vector<TruthValue> out;
  out.reserve(values.size());
  for (const auto& r : values) out.push_back(from_rational(r));
  return out;
}

TruthValue Algebra::parse_literal(std::string_view text) const {
  switch (kind_) {
    case Kind::Bool2:
      if (text == "0") return from_rank(0);
      if (text == "1") return from_rank(1);
      throw ParseError("bool2 literal must be 0 or 1, got '" + std::string(text) + "'", 0);
    case Kind::Chain3:
      if (text == "bot") return from_rank(0);
      if (text == "u") return from_rank(1);
      if (text == "top") return from_rank(2);
      throw ParseError("chain3 literal must be bot, u or top, got '" + std::string(text) + "'", 0);
    case Kind::Chain: {
      if (text.empty() || text.size() > 6 ||
          text.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("chain rank literal must be an integer, got '" + std::string(text) + "'",
                         0);
      int rank = std::atoi(std::string(text).c_str());
      if (rank >= size_)
        throw ParseError("rank " + std::string(text) + " outside " + name(), 0);
      return from_rank(rank);
    }
    case Kind::Godel: {
      Rational r = parse_rational(text);
      if (r > kOne)
        throw ParseError("godel literal " + std::string(text) + " outside [0,1]", 0);
      return from_rational(r);
    }
  }
  throw Error("unreachable");
}

std::string Algebra::format_literal(const TruthValue& v) const {
  require_member(v);
  switch (kind_) {
    case Kind::Bool2:
    case Kind::Chain:
      return std::to_string(v.rank());
    case Kind::Chain3:
      return v.rank() == 0 ? "bot" : v.rank() == 1 ? "u" : "top";
    case Kind::Godel:
      return format_rational(v.numeric());
  }
  return {};
}

bool leq(const TruthValue& a, const TruthValue& b) { return a.algebra().leq(a, b); }

TruthValue meet(const TruthValue& a, const TruthValue& b) { return a.algebra().meet(a, b); }

TruthValue join(const TruthValue& a, const TruthValue& b) { return a.algebra().join(a, b); }

TruthValue residuum(const TruthValue& a, const TruthValue& b) {
  return a.algebra().residuum(a, b);
}

Rational metric_distance(const TruthValue& a, const TruthValue& b) {
  return a.algebra().metric(a, b);
}

TruthValue big_meet(std::span<const TruthValue> values, const Algebra& alg) {
  TruthValue acc = alg.top();
  for (const auto& v : values) acc = alg.meet(acc, v);
  return acc;
}

TruthValue big_join(std::span<const TruthValue> values, const Algebra& alg) {
  TruthValue acc = alg.bottom();
  for (const auto& v : values) acc = alg.join(acc, v);
  return acc;
}

} // namespace ptskit
