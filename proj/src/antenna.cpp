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

#include "dmt/antenna.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace dmt {

AntennaConfig::AntennaConfig(int m1, int m2, int m3) : m1_(m1), m2_(m2), m3_(m3) {
  if (m1 < 1 || m2 < 1 || m3 < 1) {
    throw std::domain_error("antenna counts must be >= 1, got " + to_string());
  }
}

AntennaConfig AntennaConfig::parse(std::string_view text) {
  std::vector<int> counts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view field = text.substr(start, comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
      throw std::invalid_argument("antenna config must look like M1,M2,M3: '" +
                                  std::string(text) + "'");
    }
    counts.push_back(value);
    start = comma + 1;
  }
  if (counts.size() != 3) {
    throw std::invalid_argument("antenna config must have three entries: '" +
                                std::string(text) + "'");
  }
  return {counts[0], counts[1], counts[2]};
}

std::string AntennaConfig::to_string() const {
  return "(" + std::to_string(m1_) + "," + std::to_string(m2_) + "," + std::to_string(m3_) + ")";
}

}  // namespace dmt
