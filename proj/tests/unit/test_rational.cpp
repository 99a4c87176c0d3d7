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

#include <stdexcept>

#include "dmt/antenna.hpp"
#include "dmt/rational.hpp"

using dmt::Rational;

TEST_CASE("parse_rational reads decimals and fractions exactly") {
  CHECK(dmt::parse_rational("0.3") == Rational(3, 10));
  CHECK(dmt::parse_rational("-1.25") == Rational(-5, 4));
  CHECK(dmt::parse_rational("2") == Rational(2));
  CHECK(dmt::parse_rational("1e-3") == Rational(1, 1000));
  CHECK(dmt::parse_rational("2.5E1") == Rational(25));
  CHECK(dmt::parse_rational("2/7") == Rational(2, 7));
  CHECK_THROWS_AS(dmt::parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(dmt::parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(dmt::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(dmt::parse_rational("0.3x"), std::invalid_argument);
}

TEST_CASE("rationalize recovers short decimals") {
  CHECK(dmt::rationalize(0.3) == Rational(3, 10));
  CHECK(dmt::rationalize(0.5) == Rational(1, 2));
  CHECK(dmt::rationalize(1.0 / 3.0) == Rational(1, 3));
  CHECK(dmt::rationalize(-0.125) == Rational(-1, 8));
  CHECK(dmt::rationalize(2.0) == Rational(2));
  CHECK(dmt::to_string(Rational(3, 5)) == "3/5");
}

TEST_CASE("AntennaConfig") {
  const dmt::AntennaConfig c(4, 2, 3);
  CHECK(c.m1_star() == 2);
  CHECK(c.m2_star() == 2);
  CHECK(dmt::AntennaConfig::parse("4,1,3") == dmt::AntennaConfig(4, 1, 3));
  CHECK_THROWS_AS(dmt::AntennaConfig(0, 1, 1), std::domain_error);
  CHECK_THROWS_AS(dmt::AntennaConfig::parse("4,1"), std::invalid_argument);
  CHECK_THROWS_AS(dmt::AntennaConfig::parse("4,x,1"), std::invalid_argument);
  CHECK_THROWS_AS(dmt::AntennaConfig::parse("0,1,1"), std::domain_error);
}
