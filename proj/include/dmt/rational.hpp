// Copyright 2026 The dmt-relay Authors
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

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dmt {

/// Exact arbitrary-precision rational used for curve breakpoints.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Best rational approximation of `x` with denominator at most `max_den`
/// (continued-fraction convergents). 0.3 maps to 3/10, not to the binary
/// expansion of the double.
Rational rationalize(double x, std::int64_t max_den = 1'000'000);

/// Parses a decimal literal ("0.3", "-1.25", "2", "1e-3") or a fraction
/// ("2/7") exactly. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace dmt
