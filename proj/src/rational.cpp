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

#include "ptskit/rational.hpp"

#include <cctype>

#include "ptskit/errors.hpp"

namespace ptskit {

namespace {

constexpr long long kMaxComponent = 1'000'000'000;
constexpr int kMaxFractionDigits = 9;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

long long to_ll(std::string_view s, std::size_t offset) {
  long long v = 0;
  for (char c : s) {
    v = v * 10 + (c - '0');
    if (v > kMaxComponent) throw ParseError("numeric literal too large", offset);
  }
  return v;
}

} // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed fraction literal", 0);
    long long d = to_ll(den, slash + 1);
    if (d == 0) throw ParseError("fraction with zero denominator", slash + 1);
    return Rational(to_ll(num, 0), d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
      throw ParseError("malformed decimal literal", 0);
    if (frac.size() > kMaxFractionDigits)
      throw ParseError("decimal literal too precise", dot + 1);
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational(to_ll(whole, 0) * den + to_ll(frac, dot + 1), den);
  }
  if (!all_digits(text)) throw ParseError("malformed numeric literal", 0);
  return Rational(to_ll(text, 0));
}

std::string format_rational(const Rational& r) {
  long long num = r.numerator();
  long long den = r.denominator();
  if (den == 1) return std::to_string(num);

  // Exact decimal when the denominator divides a power of ten.
  long long rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest == 1) {
    int k = twos > fives ? twos : fives;
    long long scale = 1;
    for (int i = 0; i < k; ++i) scale *= 10;
    long long digits = num * (scale / den);
    std::string frac = std::to_string(digits % scale);
    frac.insert(frac.begin(), static_cast<std::size_t>(k) - frac.size(), '0');
    return std::to_string(digits / scale) + "." + frac;
  }
  return std::to_string(num) + "/" + std::to_string(den);
}

} // namespace ptskit
