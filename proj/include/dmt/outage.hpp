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
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "dmt/antenna.hpp"

namespace dmt {

enum class Protocol { full_duplex, fdf, vdf, ddf, cutset };

std::string_view to_string(Protocol p);
/// Accepts the names printed by to_string; throws std::invalid_argument.
Protocol parse_protocol(std::string_view name);

/// A simulatable outage event: protocol, multiplexing gain and, for the
/// static half-duplex protocols, the source time fraction.
///
/// The target rate is r log2(snr) unless `fixed_rate` is set, in which case
/// it is that many bits per channel use at every SNR (r must then be 0).
class OutageSpec {
 public:
  static OutageSpec full_duplex(const AntennaConfig& config, double r);
  static OutageSpec fdf(const AntennaConfig& config, double r, double a);
  /// Uses a = vdf_allocation(config, r); a = 0.5 at r = 0.
  static OutageSpec vdf(const AntennaConfig& config, double r);
  static OutageSpec ddf(const AntennaConfig& config, double r);
  static OutageSpec cutset(const AntennaConfig& config, double r);
  /// Dispatches on `protocol`; `a` is required for fdf and ignored otherwise.
  static OutageSpec make(Protocol protocol, const AntennaConfig& config, double r,
                         std::optional<double> a = std::nullopt);

  /// Switches to a fixed target rate; requires r == 0 and rate > 0.
  OutageSpec with_fixed_rate(double bits) const;

  const AntennaConfig& config() const { return config_; }
  Protocol protocol() const { return protocol_; }
  double r() const { return r_; }
  /// Source time fraction for fdf and vdf; 1 otherwise.
  double allocation() const { return a_; }
  std::optional<double> fixed_rate() const { return fixed_rate_; }

  /// Target rate in bits per channel use at linear SNR.
  double rate(double snr_linear) const;

  nlohmann::json to_json() const;

 private:
  OutageSpec(const AntennaConfig& config, Protocol protocol, double r, double a);

  AntennaConfig config_;
  Protocol protocol_;
  double r_;
  double a_;
  std::optional<double> fixed_rate_;
};

/// Outage decision for one realization given the two hop terms. For cutset
/// the caller passes the unscaled cut-set terms.
///   full_duplex: rate > min(c1, c2)
///   fdf / vdf:   rate > min(a c1, (1 - a) c2)
///   ddf:         rate >= c1 c2 / (c1 + c2)  (a dead hop is an outage)
///   cutset:      rate > c1 c2 / (c1 + c2)
/// Throws std::domain_error for negative capacities.
bool outage_event(const OutageSpec& spec, double c1, double c2, double rate);

struct WilsonInterval {
  double low;
  double high;
};

/// Wilson score interval for k successes out of n (z = 1.96 for 95%).
WilsonInterval wilson_interval(std::uint64_t k, std::uint64_t n, double z = 1.959963984540054);

struct OutageEstimate {
  double snr_db = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t outages = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t seed = 0;
};

/// Monte Carlo outage probability over sample indices 0..n_samples-1.
/// Work is split into contiguous index ranges across `workers` threads
/// (0 = hardware concurrency); outage counts are summed as integers, so the
/// result does not depend on the worker count. Requires n_samples >= 1e4;
/// throws std::domain_error otherwise.
OutageEstimate estimate_outage(const OutageSpec& spec, double snr_db, std::uint64_t n_samples,
                               std::uint64_t seed, unsigned workers = 0);

nlohmann::json to_json(const OutageSpec& spec, const OutageEstimate& estimate);

}  // namespace dmt
