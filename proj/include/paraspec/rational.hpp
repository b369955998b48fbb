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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace paraspec {

/// Arbitrary-precision exact rational. Weights, degrees and every closed-form
/// invariant are carried in this type; doubles only appear at the numerical
/// boundary.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p/q", "-p/q" or "p" (decimal integers, q > 0). Throws
/// Error(RationalParse) on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

inline int sign(const Rational& r) { return r.sign(); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? Rational(-r) : r; }

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace paraspec
