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

#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dmt/slope.hpp"

TEST_CASE("fit_diversity on synthetic power laws") {
  std::vector<std::pair<double, double>> pts;
  for (double db = 10; db <= 40; db += 5) pts.emplace_back(db, std::pow(10.0, -2.0 * db / 10.0));
  const auto fit = dmt::fit_diversity(pts);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.slope_stderr == doctest::Approx(0.0).epsilon(1e-9));

  pts.clear();
  for (double db = 0; db <= 30; db += 10) pts.emplace_back(db, 0.37 * std::pow(10.0, -db / 10.0));
  CHECK(dmt::fit_diversity(pts).slope == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit_diversity drops points with few outage events") {
  std::vector<dmt::OutageEstimate> ests;
  for (int i = 0; i < 5; ++i) {
    dmt::OutageEstimate e;
    e.snr_db = 10.0 * i;
    e.n_samples = 100'000'000;
    e.p_hat = std::pow(10.0, -static_cast<double>(i));
    e.outages = static_cast<std::uint64_t>(e.p_hat * 1e8);
    ests.push_back(e);
  }
  ests[4].outages = 99;  // below the event threshold
  ests[4].p_hat = 1e-9;  // would wreck the fit if used
  const auto fit = dmt::fit_diversity(ests);
  CHECK(fit.used.size() == 4);
  CHECK(fit.slope == doctest::Approx(1.0));

  ests[3].outages = 10;
  ests[2].outages = 10;
  CHECK_THROWS_AS(dmt::fit_diversity(ests), std::domain_error);
}
