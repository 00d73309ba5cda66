// Copyright 2026 The protodef Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROTODEF_RATIONAL_HPP_
#define PROTODEF_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace protodef {

// Exact arbitrary-precision rationals; all cardinal and mixed-strategy
// arithmetic goes through this type.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Accepts "p", "-p" or "p/q" (q != 0). Throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);

// Canonical text: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace protodef

#endif  // PROTODEF_RATIONAL_HPP_
