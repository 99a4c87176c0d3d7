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

#include "dmt/outage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "dmt/channel.hpp"
#include "dmt/protocols.hpp"

namespace dmt {

std::string_view to_string(Protocol p) {
  switch (p) {
    case Protocol::full_duplex: return "full_duplex";
    case Protocol::fdf: return "fdf";
    case Protocol::vdf: return "vdf";
    case Protocol::ddf: return "ddf";
    case Protocol::cutset: return "cutset";
  }
  return "unknown";
}

Protocol parse_protocol(std::string_view name) {
  for (Protocol p : {Protocol::full_duplex, Protocol::fdf, Protocol::vdf, Protocol::ddf,
                     Protocol::cutset}) {
    if (name == to_string(p)) return p;
  }
  throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

OutageSpec::OutageSpec(const AntennaConfig& config, Protocol protocol, double r, double a)
    : config_(config), protocol_(protocol), r_(r), a_(a) {
  if (!(r >= 0) || !std::isfinite(r)) throw std::domain_error("OutageSpec: r must be >= 0");
}

OutageSpec OutageSpec::full_duplex(const AntennaConfig& config, double r) {
  return {config, Protocol::full_duplex, r, 1.0};
}

OutageSpec OutageSpec::fdf(const AntennaConfig& config, double r, double a) {
  if (!(a > 0 && a < 1)) throw std::domain_error("OutageSpec: fdf allocation must lie in (0, 1)");
  return {config, Protocol::fdf, r, a};
}

OutageSpec OutageSpec::vdf(const AntennaConfig& config, double r) {
  if (r >= to_double(max_multiplexing(config))) {
    throw std::domain_error("OutageSpec: vdf needs r below the degrees of freedom");
  }
  return {config, Protocol::vdf, r, r > 0 ? vdf_allocation(config, r) : 0.5};
}

OutageSpec OutageSpec::ddf(const AntennaConfig& config, double r) {
  return {config, Protocol::ddf, r, 1.0};
}

OutageSpec OutageSpec::cutset(const AntennaConfig& config, double r) {
  return {config, Protocol::cutset, r, 1.0};
}

OutageSpec OutageSpec::make(Protocol protocol, const AntennaConfig& config, double r,
                            std::optional<double> a) {
  switch (protocol) {
    case Protocol::full_duplex: return full_duplex(config, r);
    case Protocol::fdf:
      if (!a) throw std::invalid_argument("OutageSpec: fdf needs an allocation a");
      return fdf(config, r, *a);
    case Protocol::vdf: return vdf(config, r);
    case Protocol::ddf: return ddf(config, r);
    case Protocol::cutset: return cutset(config, r);
  }
  throw std::invalid_argument("OutageSpec: unknown protocol");
}

OutageSpec OutageSpec::with_fixed_rate(double bits) const {
  if (r_ != 0) throw std::domain_error("OutageSpec: a fixed rate requires r = 0");
  if (!(bits > 0) || !std::isfinite(bits)) {
    throw std::domain_error("OutageSpec: fixed rate must be > 0");
  }
  OutageSpec out = *this;
  out.fixed_rate_ = bits;
  return out;
}

double OutageSpec::rate(double snr_linear) const {
  if (fixed_rate_) return *fixed_rate_;
  return r_ * std::log2(snr_linear);
}

nlohmann::json OutageSpec::to_json() const {
  nlohmann::json j = {{"protocol", to_string(protocol_)},
                      {"config", {config_.m1(), config_.m2(), config_.m3()}},
                      {"r", r_}};
  if (protocol_ == Protocol::fdf || protocol_ == Protocol::vdf) j["a"] = a_;
  if (fixed_rate_) j["fixed_rate"] = *fixed_rate_;
  return j;
}

bool outage_event(const OutageSpec& spec, double c1, double c2, double rate) {
  if (c1 < 0 || c2 < 0) throw std::domain_error("outage_event: capacities must be >= 0");
  switch (spec.protocol()) {
    case Protocol::full_duplex:
      return rate > std::min(c1, c2);
    case Protocol::fdf:
    case Protocol::vdf: {
      const double a = spec.allocation();
      return rate > std::min(a * c1, (1.0 - a) * c2);
    }
    case Protocol::ddf:
      if (c1 == 0 || c2 == 0) return rate > 0;
      return rate >= c1 * c2 / (c1 + c2);
    case Protocol::cutset:
      if (c1 == 0 || c2 == 0) return rate > 0;
      return rate > c1 * c2 / (c1 + c2);
  }
  return true;
}

WilsonInterval wilson_interval(std::uint64_t k, std::uint64_t n, double z) {
  if (n == 0) throw std::domain_error("wilson_interval: n must be > 0");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {k == 0 ? 0.0 : std::max(0.0, center - half), k == n ? 1.0 : std::min(1.0, center + half)};
}

namespace {

std::uint64_t count_outages(const OutageSpec& spec, double snr, double rate, std::uint64_t seed,
                            std::uint64_t begin, std::uint64_t end) {
  const auto& config = spec.config();
  const bool cut = spec.protocol() == Protocol::cutset;
  ChannelSample<double> h;
  std::uint64_t outages = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    sample_channel_into(config, seed, i, h);
    const double c1 = cut ? cutset_capacity(h.h1, snr) : hop_capacity(h.h1, snr, config.m1());
    const double c2 = cut ? cutset_capacity(h.h2, snr) : hop_capacity(h.h2, snr, config.m2());
    if (outage_event(spec, c1, c2, rate)) ++outages;
  }
  return outages;
}

}  // namespace

OutageEstimate estimate_outage(const OutageSpec& spec, double snr_db, std::uint64_t n_samples,
                               std::uint64_t seed, unsigned workers) {
  if (n_samples == 0) throw std::domain_error("estimate_outage: zero samples");
  if (n_samples < 10'000) throw std::domain_error("estimate_outage: need at least 1e4 samples");
  if (!std::isfinite(snr_db)) throw std::domain_error("estimate_outage: snr_db must be finite");

  const double snr = std::pow(10.0, snr_db / 10.0);
  const double rate = spec.rate(snr);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_samples));

  std::vector<std::uint64_t> counts(workers, 0);
  auto range_begin = [&](unsigned w) { return n_samples * w / workers; };
  if (workers == 1) {
    counts[0] = count_outages(spec, snr, rate, seed, 0, n_samples);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        counts[w] = count_outages(spec, snr, rate, seed, range_begin(w), range_begin(w + 1));
      });
    }
  }

  OutageEstimate est;
  est.snr_db = snr_db;
  est.n_samples = n_samples;
  for (auto c : counts) est.outages += c;
  est.p_hat = static_cast<double>(est.outages) / static_cast<double>(n_samples);
  const auto ci = wilson_interval(est.outages, n_samples);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  est.seed = seed;
  return est;
}

nlohmann::json to_json(const OutageSpec& spec, const OutageEstimate& e) {
  return {{"spec", spec.to_json()}, {"snr_db", e.snr_db},   {"n_samples", e.n_samples},
          {"outages", e.outages},   {"p_hat", e.p_hat},     {"ci_low", e.ci_low},
          {"ci_high", e.ci_high},   {"seed", e.seed}};
}

}  // namespace dmt
