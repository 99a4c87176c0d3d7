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

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "dmt/rational.hpp"

namespace dmt {

/// A nonincreasing piecewise-linear tradeoff curve d(r) on r >= 0.
///
/// Stored as exact rational breakpoints with strictly increasing r, first
/// r = 0, nonincreasing d and last d = 0. Between breakpoints the curve is
/// the linear interpolant; past the last breakpoint it is 0. Construction
/// canonicalizes: interior breakpoints collinear with both neighbours are
/// dropped, and anything after the first zero is cut, so two curves are
/// equal as functions iff their breakpoint lists are equal.
class Polyline {
 public:
  struct Breakpoint {
    Rational r;
    Rational d;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
  };

  /// Throws std::invalid_argument when the invariants above do not hold.
  explicit Polyline(std::vector<Breakpoint> breakpoints);

  const std::vector<Breakpoint>& breakpoints() const { return points_; }

  /// Throws std::domain_error for r < 0.
  Rational eval(const Rational& r) const;
  double eval(double r) const;

  /// Smallest r with d(r) = 0.
  const Rational& first_zero() const { return points_.back().r; }

  friend bool operator==(const Polyline& a, const Polyline& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<Breakpoint> points_;
  // Floating mirror of points_ for the hot evaluation path.
  std::vector<double> r_;
  std::vector<double> d_;
};

/// Optimal point-to-point MIMO tradeoff: breakpoints (k, (m-k)(n-k)) for
/// k = 0..min(m, n). Throws std::domain_error if m or n is below 1.
Polyline pp_dmt(int m, int n);

/// Exact lower envelope of two curves.
Polyline pointwise_min(const Polyline& a, const Polyline& b);

/// curve'(r) = curve(r / a) for a in (0, 1]; throws std::domain_error
/// otherwise.
Polyline scale_arg(const Polyline& curve, const Rational& a);
Polyline scale_arg(const Polyline& curve, double a);

inline Rational eval(const Polyline& curve, const Rational& r) { return curve.eval(r); }
inline double eval(const Polyline& curve, double r) { return curve.eval(r); }
inline Rational first_zero(const Polyline& curve) { return curve.first_zero(); }

// {"breakpoints": [[r_num, r_den, d_num, d_den], ...]}
nlohmann::json to_json(const Polyline& curve);
Polyline polyline_from_json(const nlohmann::json& j);

/// Two-column CSV "r,d" sampled on `grid`, 15 significant digits, LF rows.
std::string to_csv(const Polyline& curve, std::span<const double> grid);

}  // namespace dmt
