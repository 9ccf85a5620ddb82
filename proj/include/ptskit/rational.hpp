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

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace ptskit {

/// Exact rational degree. No floating point is used anywhere in the
/// library. Denominators are bounded (carrier values come from literals or
/// grids, both capped at 10^9), which keeps comparisons and lattice
/// operations overflow-free; derived quantities that square or sum
/// distances are computed in WideRational instead.
using Rational = boost::rational<long long>;

/// Arbitrary-precision rational for squared-distance arithmetic.
using WideRational = boost::multiprecision::cpp_rational;

inline WideRational wide(const Rational& r) {
  return WideRational(r.numerator(), r.denominator());
}

/// Parses "0.4", "2/5" or "7" into an exact rational. Throws ParseError on
/// malformed input or when a component exceeds 10^9 (more than 9 fractional
/// digits for decimals).
Rational parse_rational(std::string_view text);

/// Renders a rational canonically: integers as plain digits, denominators of
/// the form 2^a*5^b as exact decimals ("0.3"), everything else as "p/q".
std::string format_rational(const Rational& r);

} // namespace ptskit
