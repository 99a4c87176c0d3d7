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
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dmt/outage.hpp"

namespace dmt {

/// Least-squares diversity slope of -log10 P against log10 SNR.
struct SlopeFit {
  std::vector<double> snr_grid_db;
  std::vector<OutageEstimate> outage_estimates;
  /// Indices into the grid that entered the regression.
  std::vector<std::size_t> used;
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
};

constexpr std::uint64_t kMinOutageEvents = 100;

/// Fits over estimates with at least `min_events` outages. Throws
/// std::domain_error when fewer than three points qualify.
SlopeFit fit_diversity(std::span<const OutageEstimate> estimates,
                       std::uint64_t min_events = kMinOutageEvents);

/// Fits raw (snr_db, probability) pairs; every point with 0 < p <= 1 is used.
SlopeFit fit_diversity(std::span<const std::pair<double, double>> points);

nlohmann::json to_json(const SlopeFit& fit);

}  // namespace dmt
