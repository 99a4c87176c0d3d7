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

#include "dmt/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dmt {

Polyline full_duplex_dmt(const AntennaConfig& config) {
  return pointwise_min(pp_dmt(config.m1(), config.m2()), pp_dmt(config.m2(), config.m3()));
}

Polyline fdf_dmt(const AntennaConfig& config, const Rational& a) {
  if (a <= 0 || a >= 1) throw std::domain_error("fdf_dmt: a must lie in (0, 1)");
  return pointwise_min(scale_arg(pp_dmt(config.m1(), config.m2()), a),
                       scale_arg(pp_dmt(config.m2(), config.m3()), Rational(1 - a)));
}

Polyline fdf_dmt(const AntennaConfig& config, double a) {
  if (!(a > 0 && a < 1)) throw std::domain_error("fdf_dmt: a must lie in (0, 1)");
  return fdf_dmt(config, rationalize(a));
}

Rational max_multiplexing(const AntennaConfig& config) {
  const int s1 = config.m1_star();
  const int s2 = config.m2_star();
  return Rational(s1 * s2, s1 + s2);
}

int max_diversity(const AntennaConfig& config) {
  return config.m2() * std::min(config.m1(), config.m3());
}

double vdf_allocation(const AntennaConfig& config, double r) {
  const double dof = to_double(max_multiplexing(config));
  if (!(r > 0 && r < dof)) {
    throw std::domain_error("vdf_allocation: r must lie in (0, " + std::to_string(dof) + ")");
  }
  if (config.m1() == config.m3()) return 0.5;

  const Polyline hop1 = pp_dmt(config.m1(), config.m2());
  const Polyline hop2 = pp_dmt(config.m2(), config.m3());
  // Nondecreasing in a: hop 1 gets more time, hop 2 less.
  auto gap = [&](double a) { return hop1.eval(r / a) - hop2.eval(r / (1.0 - a)); };

  double lo = r / config.m1_star();
  double hi = 1.0 - r / config.m2_star();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (gap(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(gap(lo)) <= std::abs(gap(hi)) ? lo : hi;
}

double vdf_allocation_closed_form(int m1, int m3, double r) {
  if (m1 < 1 || m3 < 1) throw std::domain_error("vdf_allocation_closed_form: antennas must be >= 1");
  if (!(r > 0 && r < 0.5)) {
    throw std::domain_error("vdf_allocation_closed_form: r must lie in (0, 1/2)");
  }
  if (m1 == m3) return 0.5;

  const double A = static_cast<double>(m1) / m3;
  const double B = 1.0 - r - A * (1.0 + r);
  const double disc = B * B - 4.0 * A * (A - 1.0) * r;
  if (disc < 0) throw std::domain_error("vdf_allocation_closed_form: no real root");

  // Cancellation-free pair of roots of (A-1)a^2 + Ba + Ar.
  const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
  const double roots[2] = {q / (A - 1.0), A * r / q};

  auto residual = [&](double a) {
    return std::abs(m1 * (1.0 - r / a) - m3 * (1.0 - r / (1.0 - a)));
  };
  double best = -1.0;
  double best_residual = 1e-6;
  for (double a : roots) {
    // Both hops must still carry rate r: a >= r and 1 - a >= r.
    if (!(a > 0 && a < 1) || a < r || 1.0 - a < r) continue;
    const double res = residual(a);
    if (res <= best_residual) {
      best = a;
      best_residual = res;
    }
  }
  if (best < 0) throw std::domain_error("vdf_allocation_closed_form: no equalizing root in (0, 1)");
  return best;
}

double vdf_dmt(const AntennaConfig& config, double r) {
  if (!(r >= 0)) throw std::domain_error("vdf_dmt: r must be >= 0");
  if (r == 0) return max_diversity(config);
  if (r >= to_double(max_multiplexing(config))) return 0.0;
  const double a = vdf_allocation(config, r);
  const double d1 = pp_dmt(config.m1(), config.m2()).eval(r / a);
  const double d2 = pp_dmt(config.m2(), config.m3()).eval(r / (1.0 - a));
  return std::min(d1, d2);
}

}  // namespace dmt
