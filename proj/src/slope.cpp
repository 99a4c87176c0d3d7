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

#include "dmt/slope.hpp"

#include <cmath>
#include <stdexcept>

namespace dmt {

namespace {

void regress(SlopeFit& fit) {
  const std::size_t n = fit.used.size();
  if (n < 3) throw std::domain_error("fit_diversity: need at least 3 reliable points");
  double mx = 0.0, my = 0.0;
  std::vector<double> xs, ys;
  for (std::size_t i : fit.used) {
    xs.push_back(fit.snr_grid_db[i] / 10.0);
    ys.push_back(-std::log10(fit.outage_estimates[i].p_hat));
    mx += xs.back();
    my += ys.back();
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
  }
  if (sxx <= 0) throw std::domain_error("fit_diversity: SNR grid points must differ");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double e = ys[k] - (fit.intercept + fit.slope * xs[k]);
    ssr += e * e;
  }
  fit.slope_stderr = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
}

}  // namespace

SlopeFit fit_diversity(std::span<const OutageEstimate> estimates, std::uint64_t min_events) {
  SlopeFit fit;
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    fit.snr_grid_db.push_back(estimates[i].snr_db);
    fit.outage_estimates.push_back(estimates[i]);
    if (estimates[i].outages >= min_events && estimates[i].outages > 0) fit.used.push_back(i);
  }
  regress(fit);
  return fit;
}

SlopeFit fit_diversity(std::span<const std::pair<double, double>> points) {
  SlopeFit fit;
  for (std::size_t i = 0; i < points.size(); ++i) {
    OutageEstimate e;
    e.snr_db = points[i].first;
    e.p_hat = points[i].second;
    fit.snr_grid_db.push_back(e.snr_db);
    fit.outage_estimates.push_back(e);
    if (e.p_hat > 0 && e.p_hat <= 1) fit.used.push_back(i);
  }
  regress(fit);
  return fit;
}

nlohmann::json to_json(const SlopeFit& fit) {
  return {{"snr_grid_db", fit.snr_grid_db},
          {"used", fit.used},
          {"slope", fit.slope},
          {"intercept", fit.intercept},
          {"stderr", fit.slope_stderr}};
}

}  // namespace dmt
