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

#include <Eigen/LU>

#include "dmt/channel.hpp"

using dmt::AntennaConfig;

TEST_CASE("Philox4x32-10 known-answer vectors") {
  // Random123 kat_vectors: philox4x32 10 rounds.
  const dmt::Philox4x32 zero(dmt::Philox4x32::Key{0u, 0u});
  CHECK(zero({0u, 0u, 0u, 0u}) ==
        dmt::Philox4x32::Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  const dmt::Philox4x32 ones(dmt::Philox4x32::Key{0xffffffffu, 0xffffffffu});
  CHECK(ones({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}) ==
        dmt::Philox4x32::Counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
}

TEST_CASE("sample_channel shapes and determinism") {
  const AntennaConfig c(3, 2, 4);
  const auto s = dmt::sample_channel(c, 42, 7);
  CHECK(s.h1.rows() == 2);
  CHECK(s.h1.cols() == 3);
  CHECK(s.h2.rows() == 4);
  CHECK(s.h2.cols() == 2);
  const auto t = dmt::sample_channel(c, 42, 7);
  CHECK(s.h1 == t.h1);
  CHECK(s.h2 == t.h2);
  CHECK(dmt::sample_channel(c, 42, 8).h1 != s.h1);
  CHECK(dmt::sample_channel(c, 43, 7).h1 != s.h1);
}

TEST_CASE("sample_channel entries are CN(0,1)") {
  const AntennaConfig c(1, 1, 1);
  constexpr int n = 1'000'000;
  double sum_re = 0, sum_im = 0, sum_sq = 0, sum_re2 = 0;
  dmt::ChannelSample<double> s;
  for (int i = 0; i < n; ++i) {
    dmt::sample_channel_into(c, 2026, static_cast<std::uint64_t>(i), s);
    const auto h = s.h1(0, 0);
    sum_re += h.real();
    sum_im += h.imag();
    sum_re2 += h.real() * h.real();
    sum_sq += std::norm(h);
  }
  CHECK(std::abs(sum_re / n) <= 0.005);
  CHECK(std::abs(sum_im / n) <= 0.005);
  CHECK(std::abs(sum_sq / n - 1.0) <= 0.01);
  CHECK(std::abs(sum_re2 / n - 0.5) <= 0.005);
}

TEST_CASE("hop and cut-set capacities") {
  using M = dmt::CMatrix<double>;
  M one(1, 1);
  one(0, 0) = 1.0;
  CHECK(dmt::hop_capacity(one, 1.0, 1) == doctest::Approx(1.0));
  CHECK(dmt::cutset_capacity(one, 1.0) == doctest::Approx(1.0));
  CHECK(dmt::hop_capacity(M::Zero(2, 3), 5.0, 3) == 0.0);
  CHECK(dmt::hop_capacity(M::Identity(2, 2), 2.0, 2) == doctest::Approx(2.0));
  CHECK(dmt::cutset_capacity(M::Identity(2, 2), 1.0) == doctest::Approx(2.0));

  const auto s = dmt::sample_channel(AntennaConfig(1, 3, 2), 5, 0);
  CHECK(dmt::cutset_capacity(s.h1, 17.0) == dmt::hop_capacity(s.h1, 17.0, 1));

  // Tall and wide Gram forms agree with a direct log-det.
  const auto w = dmt::sample_channel(AntennaConfig(4, 2, 3), 9, 3);
  for (const M& h : {w.h1, w.h2, M(w.h2.adjoint())}) {
    const M direct = M::Identity(h.rows(), h.rows()) + 10.0 * h * h.adjoint();
    const double expected = std::log2(direct.determinant().real());
    CHECK(dmt::cutset_capacity(h, 10.0) == doctest::Approx(expected).epsilon(1e-10));
  }

  M bad = M::Identity(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(dmt::hop_capacity(bad, 1.0, 2), std::domain_error);
  CHECK_THROWS_AS(dmt::hop_capacity(one, 0.0, 1), std::domain_error);
}
