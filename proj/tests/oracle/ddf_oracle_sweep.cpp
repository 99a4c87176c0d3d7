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

// Reduction check: the 1-D DDF solver against brute-force enumeration of the
// exponent grid, for every chain with antennas <= 4 and M1* + M2* <= 5.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "dmt/protocols.hpp"

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  int points = 0;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = 1; c <= 4; ++c) {
        const dmt::AntennaConfig cfg(a, b, c);
        if (cfg.m1_star() + cfg.m2_star() > 5) continue;
        const double dof = dmt::to_double(dmt::max_multiplexing(cfg));
        double worst = 0.0;
        for (int k = 0; 0.05 * k <= dof + 1e-12; ++k) {
          const double r = std::min(0.05 * k, dof);
          const double solver = dmt::ddf_dmt(cfg, r);
          const double oracle = dmt::ddf_alpha_grid_oracle({cfg, r}, 0.005);
          worst = std::max(worst, std::abs(solver - oracle));
          ++points;
          if (std::abs(solver - oracle) > 0.05 || oracle < solver - 1e-9) {
            ++failures;
            std::printf("MISMATCH %s r=%.2f solver=%.6f oracle=%.6f\n", cfg.to_string().c_str(), r,
                        solver, oracle);
          }
        }
        std::printf("%-10s max |solver - oracle| = %.4f\n", cfg.to_string().c_str(), worst);
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d points, %d mismatches, %.1f s\n", points, failures, secs);
  return failures == 0 ? 0 : 1;
}
