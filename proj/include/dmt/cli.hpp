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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmt/antenna.hpp"

namespace dmt::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kBudgetRefused = 3,
  kIoError = 4,
};

enum class Format { csv, json };

/// Arithmetic grid start:stop:step.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;

  /// Parses "start:stop:step"; step must be > 0 and stop >= start.
  static Grid parse(const std::string& text);
};

/// Points start + k step strictly below stop, plus `extra` when it falls in
/// [start, stop] and is not already on the grid.
std::vector<double> half_open_points(const Grid& g, std::optional<double> extra = std::nullopt);
/// Points start + k step up to and including stop (within 1e-9 step).
std::vector<double> closed_points(const Grid& g);

struct RunConfig {
  std::string command;
  AntennaConfig config{1, 1, 1};
  std::vector<std::string> protocols;
  std::optional<Grid> r_grid;
  std::optional<std::string> a;  // exact decimal or fraction text
  double r = 0.0;                // sim
  std::optional<double> fixed_rate;
  Grid snr_db{25.0, 45.0, 5.0};
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  double max_seconds = 600.0;
  double oracle_step = 0.005;
  std::string figure;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> output_dir;
  Format format = Format::csv;
  std::string command_line;
};

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class BudgetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rows (protocol, M1, M2, M3, r, d) for every requested protocol on the r
/// grid. Protocols: hop1, hop2, full_duplex, fdf (needs a), vdf, ddf.
int run_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Outage estimates per SNR point and a slope fit per protocol, compared to
/// the analytic tradeoff. Refuses with kBudgetRefused before simulating when
/// the estimated wall-clock exceeds cfg.max_seconds.
int run_sim(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Writes the curve set behind one of fig2, fig3, fig4 (one CSV per curve)
/// and a manifest.json with the endpoint checks into the output directory.
int run_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// ddf_dmt against the exponent-grid oracle and, where one exists, the
/// closed form, on the r grid.
int run_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Estimated single-protocol simulation time in seconds.
double estimate_sim_seconds(const AntennaConfig& config, std::uint64_t samples,
                            std::size_t snr_points, unsigned workers);

/// Full command-line entry point; returns the process exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dmt::cli
