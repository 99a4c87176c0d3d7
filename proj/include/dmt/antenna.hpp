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

#include <algorithm>
#include <string>
#include <string_view>

namespace dmt {

/// Antenna counts of a source -> relay -> destination chain.
///
/// Hop i connects terminal i (transmitter, m_i antennas) to terminal i+1.
/// The per-hop ranks m1_star() = min(m1, m2) and m2_star() = min(m2, m3) are
/// derived on demand and never stored.
class AntennaConfig {
 public:
  /// Throws std::domain_error if any count is below 1.
  AntennaConfig(int m1, int m2, int m3);

  /// Parses "M1,M2,M3".
  static AntennaConfig parse(std::string_view text);

  int m1() const { return m1_; }
  int m2() const { return m2_; }
  int m3() const { return m3_; }
  int m1_star() const { return std::min(m1_, m2_); }
  int m2_star() const { return std::min(m2_, m3_); }

  /// Transmit antennas of hop 1 or 2.
  int tx(int hop) const { return hop == 1 ? m1_ : m2_; }
  /// Receive antennas of hop 1 or 2.
  int rx(int hop) const { return hop == 1 ? m2_ : m3_; }
  int rank(int hop) const { return hop == 1 ? m1_star() : m2_star(); }

  std::string to_string() const;

  friend bool operator==(const AntennaConfig&, const AntennaConfig&) = default;

 private:
  int m1_;
  int m2_;
  int m3_;
};

}  // namespace dmt
