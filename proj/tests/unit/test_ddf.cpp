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
#include <vector>

#include "dmt/protocols.hpp"

using dmt::AntennaConfig;
using dmt::DdfProblem;
using dmt::ExponentVector;

TEST_CASE("DdfProblem weights and feasibility") {
  const DdfProblem p{{4, 1, 3}, 0.25};
  CHECK(p.weights(1) == std::vector<int>{4});
  CHECK(p.weights(2) == std::vector<int>{3});
  const DdfProblem q{{2, 2, 2}, 0.25};
  CHECK(q.weights(1) == std::vector<int>{1, 3});
  CHECK(DdfProblem{{4, 2, 3}, 0.5}.weights(1) == std::vector<int>{3, 5});

  ExponentVector alpha{{1.0, 0.0}, {0.5, 0.5}};
  CHECK(alpha.ordered());
  CHECK(alpha.capacity_exponent(1) == 1.0);
  CHECK(alpha.capacity_exponent(2) == 1.0);
  CHECK(q.objective(alpha) == doctest::Approx(1.0 + 0.5 + 1.5));
  CHECK_FALSE(q.feasible(alpha));  // harmonic term 1/2 > 1/4
  CHECK(DdfProblem{{2, 2, 2}, 0.5}.feasible(alpha));
  CHECK_FALSE(ExponentVector{{0.0, 1.0}, {0.0, 0.0}}.ordered());
}

TEST_CASE("ddf_dmt corollary points") {
  CHECK(dmt::ddf_dmt({2, 2, 2}, 0.25) == doctest::Approx(22.0 / 7.0).epsilon(1e-12));
  CHECK(dmt::ddf_dmt({4, 1, 3}, 0.25) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(dmt::ddf_dmt({2, 2, 2}, 1.0) == 0.0);
  CHECK(dmt::ddf_dmt({1, 1, 1}, 0.25) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(dmt::ddf_dmt({1, 1, 1}, -0.5), std::domain_error);
}

TEST_CASE("ddf closed forms") {
  CHECK(dmt::ddf_closed_form_miso(4, 3, 0.0) == 3.0);
  CHECK(dmt::ddf_closed_form_miso(4, 3, 0.5) == 0.0);
  CHECK(dmt::ddf_closed_form_miso(4, 3, 0.7) == 0.0);
  CHECK(dmt::ddf_closed_form_miso(2, 2, 1.0 / 3.0) == doctest::Approx(1.0));

  CHECK(dmt::ddf_closed_form_222(0.0) == 4.0);
  // Adjacent branches meet at the switch points.
  CHECK(2 * (4 - 5 * 0.5) / (2 - 0.5) == doctest::Approx(2.0));
  CHECK(dmt::ddf_closed_form_222(0.5) == doctest::Approx(2.0));
  CHECK((3 - 4 * (2.0 / 3)) / (1 - 2.0 / 3) == doctest::Approx(1.0));
  CHECK(dmt::ddf_closed_form_222(2.0 / 3.0) == doctest::Approx(1.0));
  CHECK(dmt::ddf_closed_form_222(1.0) == 0.0);
  CHECK(dmt::ddf_closed_form_222(1.5) == 0.0);
}

TEST_CASE("ddf_dmt matches the single-relay-antenna closed form") {
  for (const AntennaConfig c : {AntennaConfig(2, 1, 2), AntennaConfig(4, 1, 3), AntennaConfig(3, 1, 3)}) {
    for (int k = 0; k <= 60; ++k) {
      const double r = 0.01 * k;
      CHECK(std::abs(dmt::ddf_dmt(c, r) - dmt::ddf_closed_form_miso(c.m1(), c.m3(), r)) <= 1e-6);
    }
  }
}

TEST_CASE("(2,2,2): first branch extends to r = 2/3") {
  // Brute force over the exponent grid lands below the printed middle branch
  // (3 - 4r)/(1 - r) on (1/2, 2/3); the exponent program's optimum there is
  // alpha_1 = 0, S2 = 2r/(2 - r), which gives 2(4 - 5r)/(2 - r).
  for (double r : {0.55, 0.6, 0.625, 0.65}) {
    const double first_branch = 2 * (4 - 5 * r) / (2 - r);
    CHECK(dmt::ddf_dmt({2, 2, 2}, r) == doctest::Approx(first_branch).epsilon(1e-9));
    CHECK(dmt::ddf_alpha_grid_oracle({{2, 2, 2}, r}, 0.005) < dmt::ddf_closed_form_222(r));
    CHECK(first_branch < dmt::ddf_closed_form_222(r));
  }
}

TEST_CASE("ddf_alpha_grid_oracle examples") {
  const double o222 = dmt::ddf_alpha_grid_oracle({{2, 2, 2}, 0.25}, 0.005);
  CHECK(std::abs(o222 - 22.0 / 7.0) <= 0.05);
  CHECK(o222 >= 22.0 / 7.0 - 1e-9);  // grid-feasible, so never below the infimum

  const double o111 = dmt::ddf_alpha_grid_oracle({{1, 1, 1}, 0.25}, 0.001);
  CHECK(std::abs(o111 - 2.0 / 3.0) <= 0.01);

  CHECK(dmt::ddf_alpha_grid_oracle({{2, 1, 2}, 0.5}, 0.01) == 0.0);
  CHECK(dmt::ddf_alpha_grid_oracle({{3, 2, 4}, 1.3}, 0.05) == 0.0);

  CHECK_THROWS_AS(dmt::ddf_alpha_grid_oracle({{4, 4, 4}, 0.5}, 0.05), std::domain_error);
  CHECK_THROWS_AS(dmt::ddf_alpha_grid_oracle({{1, 1, 1}, 0.25}, 0.2), std::domain_error);
  CHECK_THROWS_AS(dmt::ddf_alpha_grid_oracle({{1, 1, 1}, 0.25}, 0.0), std::domain_error);
  CHECK_THROWS_AS(dmt::ddf_alpha_grid_oracle({{1, 1, 1}, 0.25}, 0.03), std::domain_error);
}

TEST_CASE("ddf_dmt endpoints and monotonicity") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = 1; c <= 4; ++c) {
        const AntennaConfig cfg(a, b, c);
        const double dof = dmt::to_double(dmt::max_multiplexing(cfg));
        CHECK(std::abs(dmt::ddf_dmt(cfg, 0.0) - dmt::max_diversity(cfg)) <= 1e-9);
        CHECK(dmt::ddf_dmt(cfg, dof) == 0.0);
        double prev = dmt::ddf_dmt(cfg, 0.0);
        for (double r = 0.05; r < dof; r += 0.05) {
          const double d = dmt::ddf_dmt(cfg, r);
          CHECK(d <= prev + 1e-12);
          prev = d;
        }
      }
    }
  }
}
