// Copyright 2026 The paraspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paraspec/rational.hpp"

#include "paraspec/errors.hpp"

#include <cctype>

namespace paraspec {

namespace {

bool parse_digits(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string shown(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Integer num, den = 1;
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_digits(body, num))
      throw Error(ErrorKind::RationalParse, "not a rational: \"" + shown + "\"");
  } else {
    if (!parse_digits(body.substr(0, slash), num) ||
        !parse_digits(body.substr(slash + 1), den))
      throw Error(ErrorKind::RationalParse, "not a rational: \"" + shown + "\"");
    if (den == 0)
      throw Error(ErrorKind::RationalParse, "zero denominator: \"" + shown + "\"");
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace paraspec
