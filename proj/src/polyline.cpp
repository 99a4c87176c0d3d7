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

#include "dmt/polyline.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace dmt {

namespace {

bool collinear(const Polyline::Breakpoint& a, const Polyline::Breakpoint& b,
               const Polyline::Breakpoint& c) {
  return (b.d - a.d) * (c.r - b.r) == (c.d - b.d) * (b.r - a.r);
}

// Value on segment [p, q] at r, p.r <= r <= q.r.
Rational lerp(const Polyline::Breakpoint& p, const Polyline::Breakpoint& q, const Rational& r) {
  return p.d + (q.d - p.d) * (r - p.r) / (q.r - p.r);
}

}  // namespace

Polyline::Polyline(std::vector<Breakpoint> breakpoints) {
  if (breakpoints.empty()) throw std::invalid_argument("Polyline: no breakpoints");
  if (breakpoints.front().r != 0) throw std::invalid_argument("Polyline: first r must be 0");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i].r <= breakpoints[i - 1].r) {
      throw std::invalid_argument("Polyline: r must be strictly increasing");
    }
    if (breakpoints[i].d > breakpoints[i - 1].d) {
      throw std::invalid_argument("Polyline: d must be nonincreasing");
    }
  }
  if (breakpoints.back().d != 0) throw std::invalid_argument("Polyline: last d must be 0");
  if (breakpoints.front().d < 0) throw std::invalid_argument("Polyline: d must be >= 0");

  // Cut after the first zero; the tail is identically 0.
  auto zero = std::find_if(breakpoints.begin(), breakpoints.end(),
                           [](const Breakpoint& p) { return p.d == 0; });
  breakpoints.erase(zero + 1, breakpoints.end());

  for (auto& p : breakpoints) {
    if (points_.size() >= 2 && collinear(points_[points_.size() - 2], points_.back(), p)) {
      points_.back() = std::move(p);
    } else {
      points_.push_back(std::move(p));
    }
  }

  r_.reserve(points_.size());
  d_.reserve(points_.size());
  for (const auto& p : points_) {
    r_.push_back(to_double(p.r));
    d_.push_back(to_double(p.d));
  }
}

Rational Polyline::eval(const Rational& r) const {
  if (r < 0) throw std::domain_error("Polyline::eval: r must be >= 0");
  if (r >= points_.back().r) return 0;
  auto it = std::upper_bound(points_.begin(), points_.end(), r,
                             [](const Rational& x, const Breakpoint& p) { return x < p.r; });
  return lerp(*(it - 1), *it, r);
}

double Polyline::eval(double r) const {
  if (!(r >= 0)) throw std::domain_error("Polyline::eval: r must be >= 0");
  if (r >= r_.back()) return 0.0;
  const auto hi = static_cast<std::size_t>(std::upper_bound(r_.begin(), r_.end(), r) - r_.begin());
  const std::size_t lo = hi - 1;
  const double t = (r - r_[lo]) / (r_[hi] - r_[lo]);
  return d_[lo] + t * (d_[hi] - d_[lo]);
}

Polyline pp_dmt(int m, int n) {
  if (m < 1 || n < 1) throw std::domain_error("pp_dmt: antenna counts must be >= 1");
  std::vector<Polyline::Breakpoint> pts;
  for (int k = 0; k <= std::min(m, n); ++k) {
    pts.push_back({Rational(k), Rational((m - k) * (n - k))});
  }
  return Polyline(std::move(pts));
}

Polyline pointwise_min(const Polyline& a, const Polyline& b) {
  std::vector<Rational> xs;
  for (const auto& p : a.breakpoints()) xs.push_back(p.r);
  for (const auto& p : b.breakpoints()) xs.push_back(p.r);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Both curves are linear between consecutive xs, so a crossing inside an
  // interval is a sign change of the difference at its ends.
  std::vector<Rational> crossings;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational diff0 = a.eval(xs[i]) - b.eval(xs[i]);
    const Rational diff1 = a.eval(xs[i + 1]) - b.eval(xs[i + 1]);
    if ((diff0 < 0 && diff1 > 0) || (diff0 > 0 && diff1 < 0)) {
      crossings.push_back(xs[i] + (xs[i + 1] - xs[i]) * diff0 / (diff0 - diff1));
    }
  }
  xs.insert(xs.end(), crossings.begin(), crossings.end());
  std::sort(xs.begin(), xs.end());

  std::vector<Polyline::Breakpoint> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) {
    pts.push_back({x, std::min(a.eval(x), b.eval(x))});
  }
  return Polyline(std::move(pts));
}

Polyline scale_arg(const Polyline& curve, const Rational& a) {
  if (a <= 0 || a > 1) throw std::domain_error("scale_arg: a must lie in (0, 1]");
  std::vector<Polyline::Breakpoint> pts = curve.breakpoints();
  for (auto& p : pts) p.r *= a;
  return Polyline(std::move(pts));
}

Polyline scale_arg(const Polyline& curve, double a) {
  if (!(a > 0 && a <= 1)) throw std::domain_error("scale_arg: a must lie in (0, 1]");
  return scale_arg(curve, rationalize(a));
}

namespace {

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("Polyline JSON: breakpoint entries must be integers");
}

}  // namespace

nlohmann::json to_json(const Polyline& curve) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : curve.breakpoints()) {
    rows.push_back({big_to_json(numerator(p.r)), big_to_json(denominator(p.r)),
                    big_to_json(numerator(p.d)), big_to_json(denominator(p.d))});
  }
  return {{"breakpoints", rows}};
}

Polyline polyline_from_json(const nlohmann::json& j) {
  if (!j.contains("breakpoints") || !j.at("breakpoints").is_array()) {
    throw std::invalid_argument("Polyline JSON: missing 'breakpoints' array");
  }
  std::vector<Polyline::Breakpoint> pts;
  for (const auto& row : j.at("breakpoints")) {
    if (!row.is_array() || row.size() != 4) {
      throw std::invalid_argument("Polyline JSON: each breakpoint needs 4 integers");
    }
    const BigInt r_den = big_from_json(row[1]);
    const BigInt d_den = big_from_json(row[3]);
    if (r_den == 0 || d_den == 0) throw std::invalid_argument("Polyline JSON: zero denominator");
    pts.push_back({Rational(big_from_json(row[0]), r_den), Rational(big_from_json(row[2]), d_den)});
  }
  return Polyline(std::move(pts));
}

std::string to_csv(const Polyline& curve, std::span<const double> grid) {
  std::string out = "r,d\n";
  char line[96];
  for (double r : grid) {
    std::snprintf(line, sizeof line, "%.15g,%.15g\n", r, curve.eval(r));
    out += line;
  }
  return out;
}

}  // namespace dmt
