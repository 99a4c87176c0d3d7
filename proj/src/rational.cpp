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

#include "dmt/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace dmt {

Rational rationalize(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::domain_error("rationalize: non-finite value");
  if (max_den < 1) throw std::domain_error("rationalize: max_den must be >= 1");
  const bool negative = x < 0;
  double rest = std::fabs(x);

  // Convergents h/k of the continued fraction of |x|.
  BigInt h_prev = 1, h = static_cast<std::int64_t>(std::floor(rest));
  BigInt k_prev = 0, k = 1;
  double frac = rest - std::floor(rest);
  while (frac > 1e-15) {
    rest = 1.0 / frac;
    const double a_f = std::floor(rest);
    if (a_f > 1e15) break;
    const BigInt a = static_cast<std::int64_t>(a_f);
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    if (std::fabs(static_cast<double>(h) / static_cast<double>(k) - std::fabs(x)) <=
        1e-15 * std::fabs(x)) {
      break;
    }
    frac = rest - a_f;
  }
  Rational q(h, k);
  return negative ? Rational(-q) : q;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) return fail();
    return num / den;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt mantissa = 0;
  int decimals = 0;
  bool any_digit = false;
  bool after_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      any_digit = true;
      if (after_point) ++decimals;
    } else if (c == '.' && !after_point) {
      after_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return fail();

  long exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') return fail();
    ++pos;
    const std::string exp_text(text.substr(pos));
    if (exp_text.empty()) return fail();
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != exp_text.size() || exponent > 4000 || exponent < -4000) return fail();
  }

  exponent -= decimals;
  BigInt scale = 1;
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) scale *= 10;
  Rational q = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace dmt
