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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dmt/protocols.hpp"

namespace dmt {

double ExponentVector::capacity_exponent(int hop) const {
  const auto& alpha = hop == 1 ? hop1 : hop2;
  double s = 0.0;
  for (double a : alpha) s += std::max(0.0, 1.0 - a);
  return s;
}

bool ExponentVector::ordered() const {
  auto ok = [](const std::vector<double>& alpha) {
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (alpha[j] < 0) return false;
      if (j > 0 && alpha[j] > alpha[j - 1]) return false;
    }
    return true;
  };
  return ok(hop1) && ok(hop2);
}

std::vector<int> DdfProblem::weights(int hop) const {
  const int gap = std::abs(config.tx(hop) - config.rx(hop));
  std::vector<int> w;
  for (int j = 1; j <= config.rank(hop); ++j) w.push_back(2 * j - 1 + gap);
  return w;
}

double DdfProblem::objective(const ExponentVector& alpha) const {
  double total = 0.0;
  for (int hop = 1; hop <= 2; ++hop) {
    const auto w = weights(hop);
    const auto& a = hop == 1 ? alpha.hop1 : alpha.hop2;
    if (a.size() != w.size()) throw std::invalid_argument("DdfProblem: exponent length mismatch");
    for (std::size_t j = 0; j < w.size(); ++j) total += w[j] * a[j];
  }
  return total;
}

bool DdfProblem::feasible(const ExponentVector& alpha, double slack) const {
  if (alpha.hop1.size() != static_cast<std::size_t>(config.m1_star()) ||
      alpha.hop2.size() != static_cast<std::size_t>(config.m2_star()) || !alpha.ordered()) {
    return false;
  }
  const double s1 = alpha.capacity_exponent(1);
  const double s2 = alpha.capacity_exponent(2);
  return s1 * s2 <= r * (s1 + s2) + slack;
}

// ---------------------------------------------------------------------------
// Reduction. For fixed capacity exponents (s1, s2) each hop costs its
// point-to-point tradeoff d_i(s_i); the constraint s1 s2 / (s1 + s2) <= r is
// active at the optimum, so s2 = r s1 / (s1 - r) (clamped to the hop rank)
// and only s1 in [r, M1*] remains. On each stretch between kinks the cost is
// linear plus concave in s1, so its minima sit at kinks; the dense grid and
// golden-section pass below find the bracket, the explicit kink set pins the
// value.
// ---------------------------------------------------------------------------

namespace {

constexpr double kOuterGridStep = 1e-4;
constexpr double kInvPhi = 0.6180339887498949;

}  // namespace

double ddf_dmt(const AntennaConfig& config, double r) {
  if (!(r >= 0)) throw std::domain_error("ddf_dmt: r must be >= 0");
  if (r >= to_double(max_multiplexing(config))) return 0.0;

  const Polyline hop1 = pp_dmt(config.m1(), config.m2());
  const Polyline hop2 = pp_dmt(config.m2(), config.m3());
  const double s1_max = config.m1_star();
  const double s2_max = config.m2_star();

  auto cost = [&](double s1) {
    const double s2 = s1 <= r ? s2_max : std::min(s2_max, r * s1 / (s1 - r));
    return hop1.eval(s1) + hop2.eval(s2);
  };

  const auto n = static_cast<std::int64_t>(std::ceil((s1_max - r) / kOuterGridStep));
  auto grid_point = [&](std::int64_t k) {
    return k == n ? s1_max : r + (s1_max - r) * static_cast<double>(k) / static_cast<double>(n);
  };
  std::int64_t best_k = 0;
  double best = cost(grid_point(0));
  for (std::int64_t k = 1; k <= n; ++k) {
    const double c = cost(grid_point(k));
    if (c < best) {
      best = c;
      best_k = k;
    }
  }

  double lo = grid_point(std::max<std::int64_t>(best_k - 1, 0));
  double hi = grid_point(std::min(best_k + 1, n));
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = cost(x1);
  double f2 = cost(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = cost(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = cost(x2);
    }
  }
  best = std::min({best, f1, f2});

  // Kinks: integer s1, and s1 whose image s2 is an integer.
  for (int k = 0; k <= config.m1_star(); ++k) {
    if (k >= r) best = std::min(best, cost(k));
  }
  for (int k = 1; k <= config.m2_star(); ++k) {
    if (k > r) {
      const double s1 = r * k / (k - r);
      if (s1 >= r && s1 <= s1_max) best = std::min(best, cost(s1));
    }
  }
  return std::max(0.0, best);
}

// ---------------------------------------------------------------------------
// Grid oracle. Alphas are integer multiples k * step, so S_i and the hop cost
// are integer multiples of step too. Each hop is enumerated on its own and
// collapsed to "least cost for each S value"; the objective and constraint
// couple the hops only through (S1, S2), so the joint minimum over all grid
// points is recovered exactly from the two tables.
// ---------------------------------------------------------------------------

namespace {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();

struct HopWalk {
  const std::vector<int>& w;
  std::int64_t unit;
  std::vector<std::int64_t>& min_cost;

  void operator()(std::size_t j, std::int64_t upper, std::int64_t s, std::int64_t c) const {
    if (j + 1 == w.size()) {
      // Last coordinate: sweep k directly.
      for (std::int64_t k = 0; k <= upper; ++k) {
        auto& slot = min_cost[static_cast<std::size_t>(s + std::max<std::int64_t>(0, unit - k))];
        slot = std::min(slot, c + w[j] * k);
      }
      return;
    }
    for (std::int64_t k = 0; k <= upper; ++k) {
      (*this)(j + 1, k, s + std::max<std::int64_t>(0, unit - k), c + w[j] * k);
    }
  }
};

// min_cost[s] = least sum_j w_j k_j over ordered k_1 >= ... >= k_M in
// [0, k_max] with sum_j (unit - k_j)^+ == s.
std::vector<std::int64_t> hop_cost_table(const std::vector<int>& w, std::int64_t k_max,
                                         std::int64_t unit) {
  std::vector<std::int64_t> min_cost(w.size() * static_cast<std::size_t>(unit) + 1, kUnreached);
  HopWalk{w, unit, min_cost}(0, k_max, 0, 0);
  return min_cost;
}

}  // namespace

double ddf_alpha_grid_oracle(const DdfProblem& problem, double grid_step) {
  if (!(grid_step > 0 && grid_step <= 0.1)) {
    throw std::domain_error("ddf_alpha_grid_oracle: grid_step must lie in (0, 0.1]");
  }
  const auto& config = problem.config;
  if (config.m1_star() + config.m2_star() > 6) {
    throw std::domain_error("ddf_alpha_grid_oracle: M1* + M2* > 6 is beyond brute-force scale");
  }
  if (!(problem.r >= 0)) throw std::domain_error("ddf_alpha_grid_oracle: r must be >= 0");

  const double inv = 1.0 / grid_step;
  const auto unit = static_cast<std::int64_t>(std::llround(inv));
  if (std::abs(inv - static_cast<double>(unit)) > 1e-6) {
    throw std::domain_error("ddf_alpha_grid_oracle: 1 / grid_step must be an integer");
  }
  const auto k_max = static_cast<std::int64_t>(std::floor(1.5 * inv + 1e-9));

  const auto table1 = hop_cost_table(problem.weights(1), k_max, unit);
  const auto table2 = hop_cost_table(problem.weights(2), k_max, unit);

  // prefix2[s] = cheapest hop-2 point with S2 index <= s.
  std::vector<std::int64_t> prefix2(table2.size());
  std::int64_t running = kUnreached;
  for (std::size_t s = 0; s < table2.size(); ++s) {
    running = std::min(running, table2[s]);
    prefix2[s] = running;
  }

  // In index units the constraint is s1 s2 <= rho (s1 + s2), rho = r / step.
  const double rho = problem.r * inv;
  const auto s2_top = static_cast<std::int64_t>(table2.size()) - 1;
  std::int64_t best = kUnreached;
  for (std::size_t s1 = 0; s1 < table1.size(); ++s1) {
    if (table1[s1] == kUnreached) continue;
    const double x = static_cast<double>(s1);
    std::int64_t s2_cap = s2_top;
    if (x > rho) {
      s2_cap = std::min(s2_top, static_cast<std::int64_t>(std::floor(rho * x / (x - rho) + 1e-9)));
    }
    if (s2_cap < 0 || prefix2[static_cast<std::size_t>(s2_cap)] == kUnreached) continue;
    best = std::min(best, table1[s1] + prefix2[static_cast<std::size_t>(s2_cap)]);
  }
  if (best == kUnreached) throw std::logic_error("ddf_alpha_grid_oracle: no feasible grid point");
  return static_cast<double>(best) * grid_step;
}

double ddf_closed_form_miso(int m1, int m3, double r) {
  if (!(r >= 0)) throw std::domain_error("ddf_closed_form_miso: r must be >= 0");
  if (r > 0.5) return 0.0;
  return std::min(m1, m3) * (1.0 - 2.0 * r) / (1.0 - r);
}

double ddf_closed_form_222(double r) {
  if (!(r >= 0)) throw std::domain_error("ddf_closed_form_222: r must be >= 0");
  if (r < 0.5) return 2.0 * (4.0 - 5.0 * r) / (2.0 - r);
  if (r < 2.0 / 3.0) return (3.0 - 4.0 * r) / (1.0 - r);
  if (r <= 1.0) return 4.0 * (1.0 - r) / (2.0 - r);
  return 0.0;
}

}  // namespace dmt
