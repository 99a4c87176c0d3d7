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

#include "dmt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "dmt/outage.hpp"
#include "dmt/polyline.hpp"
#include "dmt/protocols.hpp"
#include "dmt/slope.hpp"

namespace dmt::cli {

namespace {

using nlohmann::json;

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double parse_double(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(std::string("bad ") + what + ": '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw ConfigError(std::string("bad ") + what + ": '" + text + "'");
  }
  return v;
}

// One named curve: exact when it is piecewise linear, pointwise otherwise.
struct Series {
  std::string protocol;
  std::optional<Polyline> exact;
  std::function<double(double)> at;
};

Series make_series(const std::string& name, const AntennaConfig& c,
                   const std::optional<Rational>& a) {
  auto exact = [&](Polyline p) {
    Series s{name, p, {}};
    s.at = [p](double r) { return p.eval(r); };
    return s;
  };
  if (name == "hop1") return exact(pp_dmt(c.m1(), c.m2()));
  if (name == "hop2") return exact(pp_dmt(c.m2(), c.m3()));
  if (name == "full_duplex") return exact(full_duplex_dmt(c));
  if (name == "fdf") {
    if (!a) throw ConfigError("protocol fdf needs --a");
    return exact(fdf_dmt(c, *a));
  }
  if (name == "vdf") return {name, std::nullopt, [c](double r) { return vdf_dmt(c, r); }};
  if (name == "ddf") return {name, std::nullopt, [c](double r) { return ddf_dmt(c, r); }};
  throw ConfigError("unknown curve protocol '" + name + "' (hop1, hop2, full_duplex, fdf, vdf, ddf)");
}

std::optional<Rational> parse_allocation(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  Rational a;
  try {
    a = parse_rational(*text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (a <= 0 || a >= 1) throw ConfigError("--a must lie in (0, 1)");
  return a;
}

const char* kCurveHeader = "protocol,M1,M2,M3,r,d\n";

std::string curve_row(const std::string& protocol, const AntennaConfig& c, double r, double d) {
  return protocol + "," + std::to_string(c.m1()) + "," + std::to_string(c.m2()) + "," +
         std::to_string(c.m3()) + "," + num(r) + "," + num(d) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << body;
  f.flush();
  if (!f) throw IoError("write to '" + path.string() + "' failed");
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& body) {
  if (cfg.output) {
    write_file(*cfg.output, body);
  } else {
    out << body;
  }
}

double analytic_diversity(const OutageSpec& spec) {
  const auto& c = spec.config();
  const double r = spec.r();
  switch (spec.protocol()) {
    case Protocol::full_duplex: return full_duplex_dmt(c).eval(r);
    case Protocol::fdf: return fdf_dmt(c, spec.allocation()).eval(r);
    case Protocol::vdf: return vdf_dmt(c, r);
    case Protocol::ddf:
    case Protocol::cutset: return ddf_dmt(c, r);
  }
  return 0.0;
}

}  // namespace

Grid Grid::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3) throw ConfigError("grid must look like start:stop:step, got '" + text + "'");
  Grid g{parse_double(parts[0], "grid start"), parse_double(parts[1], "grid stop"),
         parse_double(parts[2], "grid step")};
  if (!(g.step > 0)) throw ConfigError("grid step must be > 0");
  if (g.stop < g.start) throw ConfigError("grid stop must be >= start");
  return g;
}

std::vector<double> half_open_points(const Grid& g, std::optional<double> extra) {
  std::vector<double> pts;
  const double eps = 1e-9 * g.step;
  for (std::int64_t k = 0;; ++k) {
    const double x = g.start + static_cast<double>(k) * g.step;
    if (x >= g.stop - eps) break;
    pts.push_back(x);
  }
  if (extra && *extra >= g.start - eps && *extra <= g.stop + eps) {
    const bool present = std::any_of(pts.begin(), pts.end(),
                                     [&](double x) { return std::abs(x - *extra) <= eps; });
    if (!present) {
      pts.insert(std::upper_bound(pts.begin(), pts.end(), *extra), *extra);
    }
  }
  return pts;
}

std::vector<double> closed_points(const Grid& g) {
  std::vector<double> pts;
  const double eps = 1e-9 * g.step;
  for (std::int64_t k = 0;; ++k) {
    const double x = g.start + static_cast<double>(k) * g.step;
    if (x > g.stop + eps) break;
    pts.push_back(x);
  }
  return pts;
}

int run_curve(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto& c = cfg.config;
  const auto a = parse_allocation(cfg.a);
  const std::vector<std::string> protocols =
      cfg.protocols.empty() ? std::vector<std::string>{"ddf"} : cfg.protocols;
  std::vector<Series> series;
  for (const auto& p : protocols) series.push_back(make_series(p, c, a));

  Grid grid;
  if (cfg.r_grid) {
    grid = *cfg.r_grid;
  } else {
    grid = {0.0, std::max(c.m1_star(), c.m2_star()) + 0.005, 0.01};
  }
  if (grid.start < 0) throw ConfigError("r grid must start at r >= 0");
  const auto rs = half_open_points(grid, to_double(max_multiplexing(c)));

  if (cfg.format == Format::csv) {
    std::string body = kCurveHeader;
    for (const auto& s : series) {
      for (double r : rs) body += curve_row(s.protocol, c, r, s.at(r));
    }
    emit(cfg, out, body);
  } else {
    json doc = {{"command", "curve"}, {"config", {c.m1(), c.m2(), c.m3()}}};
    if (a) doc["a"] = to_string(*a);
    json curves = json::array();
    for (const auto& s : series) {
      json entry = {{"protocol", s.protocol}};
      if (s.exact) entry["polyline"] = to_json(*s.exact);
      json points = json::array();
      for (double r : rs) points.push_back({r, s.at(r)});
      entry["points"] = points;
      curves.push_back(entry);
    }
    doc["curves"] = curves;
    emit(cfg, out, doc.dump(2) + "\n");
  }
  return kOk;
}

double estimate_sim_seconds(const AntennaConfig& c, std::uint64_t samples, std::size_t snr_points,
                            unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  // Rough per-sample cost: Gaussian draws per entry plus a factorization per
  // hop whose Gram matrix is larger than 1x1.
  double ns = 80.0 + 30.0 * (c.m1() * c.m2() + c.m2() * c.m3());
  if (c.m1_star() > 1) ns += 400.0;
  if (c.m2_star() > 1) ns += 400.0;
  return ns * 1e-9 * static_cast<double>(samples) * static_cast<double>(snr_points) / workers;
}

int run_sim(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& c = cfg.config;
  if (cfg.samples < 10'000) throw ConfigError("--samples must be >= 1e4");
  const auto snrs = closed_points(cfg.snr_db);
  if (snrs.empty()) throw ConfigError("empty SNR grid");
  if (cfg.fixed_rate && cfg.r != 0) throw ConfigError("--rate requires --r 0");
  if (!cfg.fixed_rate && cfg.r == 0) {
    throw ConfigError("r = 0 gives a zero target rate; pass --rate for a fixed-rate run");
  }
  const auto a = parse_allocation(cfg.a);

  const std::vector<std::string> names =
      cfg.protocols.empty() ? std::vector<std::string>{"ddf"} : cfg.protocols;
  std::vector<OutageSpec> specs;
  for (const auto& name : names) {
    Protocol p;
    try {
      p = parse_protocol(name);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (p == Protocol::fdf && !a) throw ConfigError("protocol fdf needs --a");
    auto spec = OutageSpec::make(p, c, cfg.r, a ? std::optional(to_double(*a)) : std::nullopt);
    if (cfg.fixed_rate) spec = spec.with_fixed_rate(*cfg.fixed_rate);
    specs.push_back(spec);
  }

  const double budget =
      estimate_sim_seconds(c, cfg.samples, snrs.size(), cfg.workers) * static_cast<double>(specs.size());
  if (budget > cfg.max_seconds) {
    throw BudgetError("estimated run time " + num(budget) + " s exceeds the cap of " +
                      num(cfg.max_seconds) + " s (raise --max-seconds or lower --samples)");
  }

  std::string rows =
      "protocol,M1,M2,M3,r,a,fixed_rate,snr_db,n_samples,outages,p_hat,ci_low,ci_high,seed\n";
  std::string summary = "protocol,r,fixed_rate,slope,stderr,points_used,analytic_d\n";
  json runs = json::array();
  for (const auto& spec : specs) {
    std::vector<OutageEstimate> estimates;
    for (double snr : snrs) {
      estimates.push_back(estimate_outage(spec, snr, cfg.samples, cfg.seed, cfg.workers));
    }
    const double analytic = analytic_diversity(spec);
    std::optional<SlopeFit> fit;
    try {
      fit = fit_diversity(estimates);
    } catch (const std::domain_error&) {
      // fewer than three points with enough outage events
    }

    const std::string proto(to_string(spec.protocol()));
    const std::string a_text =
        (spec.protocol() == Protocol::fdf || spec.protocol() == Protocol::vdf) ? num(spec.allocation()) : "";
    const std::string rate_text = spec.fixed_rate() ? num(*spec.fixed_rate()) : "";
    json run = {{"spec", spec.to_json()}, {"analytic_d", analytic}};
    json ests = json::array();
    for (const auto& e : estimates) {
      rows += proto + "," + std::to_string(c.m1()) + "," + std::to_string(c.m2()) + "," +
              std::to_string(c.m3()) + "," + num(spec.r()) + "," + a_text + "," + rate_text + "," +
              num(e.snr_db) + "," + std::to_string(e.n_samples) + "," + std::to_string(e.outages) +
              "," + num(e.p_hat) + "," + num(e.ci_low) + "," + num(e.ci_high) + "," +
              std::to_string(e.seed) + "\n";
      ests.push_back(to_json(spec, e));
    }
    run["estimates"] = ests;
    if (fit) {
      run["fit"] = to_json(*fit);
      summary += proto + "," + num(spec.r()) + "," + rate_text + "," + num(fit->slope) + "," +
                 num(fit->slope_stderr) + "," + std::to_string(fit->used.size()) + "," +
                 num(analytic) + "\n";
    } else {
      run["fit"] = nullptr;
      summary += proto + "," + num(spec.r()) + "," + rate_text + ",,,0," + num(analytic) + "\n";
    }
    runs.push_back(run);
  }

  if (cfg.format == Format::json) {
    emit(cfg, out, json({{"command", "sim"}, {"runs", runs}}).dump(2) + "\n");
  } else {
    emit(cfg, out, rows);
    (cfg.output ? out : err) << summary;
  }
  return kOk;
}

namespace {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass;
};

Check near(const std::string& name, double expected, double actual, double tol = 1e-9) {
  return {name, num(expected), num(actual), std::abs(expected - actual) <= tol};
}

Check exact(const std::string& name, const Rational& expected, const Rational& actual) {
  return {name, to_string(expected), to_string(actual), expected == actual};
}

}  // namespace

int run_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::filesystem::path dir = ".";
  if (cfg.output_dir) {
    dir = *cfg.output_dir;
  } else if (const char* env = std::getenv("DMT_OUTPUT_DIR"); env && *env) {
    dir = env;
  }

  std::optional<AntennaConfig> config;
  std::vector<Series> series;
  std::vector<Check> checks;
  const auto& fig = cfg.figure;
  if (fig == "fig2") {
    config = AntennaConfig(4, 2, 3);
    const Rational a(3, 10);
    series = {make_series("hop1", *config, a), make_series("hop2", *config, a),
              make_series("fdf", *config, a)};
    const Polyline fdf = fdf_dmt(*config, a);
    checks.push_back(exact("fdf(0.3) at r=0", 6, fdf.eval(Rational(0))));
    checks.push_back(exact("fdf(0.3) first zero", Rational(3, 5), fdf.first_zero()));
    checks.push_back({"full_duplex equals d_{2,3}", "true",
                      full_duplex_dmt(*config) == pp_dmt(2, 3) ? "true" : "false",
                      full_duplex_dmt(*config) == pp_dmt(2, 3)});
  } else if (fig == "fig3") {
    config = AntennaConfig(4, 1, 3);
    const Rational a(1, 2);
    series = {make_series("hop1", *config, a), make_series("hop2", *config, a),
              make_series("full_duplex", *config, a), make_series("ddf", *config, a),
              make_series("vdf", *config, a), make_series("fdf", *config, a)};
    checks.push_back(near("ddf at r=0", 3, ddf_dmt(*config, 0)));
    checks.push_back(near("ddf at r=0.5", 0, ddf_dmt(*config, 0.5)));
    checks.push_back(near("vdf at r=0", 3, vdf_dmt(*config, 0)));
    checks.push_back(exact("fdf(0.5) first zero", Rational(1, 2), fdf_dmt(*config, a).first_zero()));
  } else if (fig == "fig4") {
    config = AntennaConfig(2, 2, 2);
    const Rational a(1, 2);
    series = {make_series("full_duplex", *config, a), make_series("ddf", *config, a),
              make_series("vdf", *config, a), make_series("fdf", *config, a)};
    const double rs[] = {0.0, 0.5, 2.0 / 3.0, 1.0};
    const double ds[] = {4, 2, 1, 0};
    for (int i = 0; i < 4; ++i) {
      checks.push_back(near("ddf at r=" + num(rs[i]), ds[i], ddf_dmt(*config, rs[i])));
    }
    checks.push_back({"full_duplex equals d_{2,2}", "true",
                      full_duplex_dmt(*config) == pp_dmt(2, 2) ? "true" : "false",
                      full_duplex_dmt(*config) == pp_dmt(2, 2)});
  } else {
    throw ConfigError("unknown figure '" + fig + "' (fig2, fig3, fig4)");
  }

  double stop = 0.0;
  for (const auto& s : series) {
    if (s.exact) stop = std::max(stop, to_double(s.exact->first_zero()));
  }
  stop = std::max(stop, to_double(max_multiplexing(*config)));
  const Grid grid{0.0, stop + 0.0025, 0.005};
  const auto rs = half_open_points(grid, to_double(max_multiplexing(*config)));

  if (fig == "fig4") {
    double worst = 0.0;
    const Polyline fdf = fdf_dmt(*config, Rational(1, 2));
    for (double r : rs) worst = std::max(worst, std::abs(vdf_dmt(*config, r) - fdf.eval(r)));
    checks.push_back(near("max |vdf - fdf(0.5)| on grid", 0, worst));
  }

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

  json files = json::array();
  for (const auto& s : series) {
    std::string name = fig + "_" + s.protocol;
    if (s.protocol == "hop1" || s.protocol == "hop2") name = fig + "_cutset_" + s.protocol;
    if (s.protocol == "fdf") name += fig == "fig2" ? "_a0.3" : "_a0.5";
    name += ".csv";
    std::string body = kCurveHeader;
    for (double r : rs) body += curve_row(s.protocol, *config, r, s.at(r));
    write_file(dir / name, body);
    files.push_back(name);
  }

  bool all_pass = true;
  json check_list = json::array();
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    check_list.push_back(
        {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    out << (c.pass ? "PASS  " : "FAIL  ") << fig << ": " << c.name << " (expected " << c.expected
        << ", got " << c.actual << ")\n";
  }
  const json manifest = {{"figure", fig},
                         {"command_line", cfg.command_line},
                         {"seed", cfg.seed},
                         {"version", DMT_VERSION},
                         {"config", {config->m1(), config->m2(), config->m3()}},
                         {"r_grid_step", grid.step},
                         {"files", files},
                         {"checks", check_list}};
  write_file(dir / (fig + "_manifest.json"), manifest.dump(2) + "\n");
  if (!all_pass) err << "endpoint checks failed for " << fig << "\n";
  return all_pass ? kOk : kCheckFailed;
}

int run_compare(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto& c = cfg.config;
  const double dof = to_double(max_multiplexing(c));
  const Grid grid = cfg.r_grid ? *cfg.r_grid : Grid{0.0, dof, 0.05};
  const auto rs = half_open_points(grid, dof);
  const bool oracle_ok = c.m1_star() + c.m2_star() <= 6;
  const bool miso = c.m2() == 1;
  const bool sym222 = c == AntennaConfig(2, 2, 2);

  bool agree = true;
  std::string body = "r,ddf,oracle,closed_form,oracle_gap,closed_form_gap\n";
  for (double r : rs) {
    const double d = ddf_dmt(c, r);
    std::string oracle_text, oracle_gap, closed_text, closed_gap;
    if (oracle_ok) {
      const double o = ddf_alpha_grid_oracle({c, r}, cfg.oracle_step);
      oracle_text = num(o);
      oracle_gap = num(std::abs(o - d));
      agree = agree && std::abs(o - d) <= 0.05;
    }
    if (miso || sym222) {
      const double cf = miso ? ddf_closed_form_miso(c.m1(), c.m3(), r) : ddf_closed_form_222(r);
      closed_text = num(cf);
      closed_gap = num(std::abs(cf - d));
      agree = agree && std::abs(cf - d) <= 1e-6;
    }
    body += num(r) + "," + num(d) + "," + oracle_text + "," + closed_text + "," + oracle_gap + "," +
            closed_gap + "\n";
  }
  emit(cfg, out, body);
  return agree ? kOk : kCheckFailed;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diversity-multiplexing tradeoff of MIMO multi-hop relay channels"};
  app.require_subcommand(1);
  app.set_version_flag("--version", DMT_VERSION);

  RunConfig cfg;
  for (int i = 0; i < argc; ++i) cfg.command_line += (i ? " " : "") + std::string(argv[i]);

  std::string config_text = "1,1,1";
  std::string r_text;
  std::string snr_text = "25:45:5";
  std::string samples_text = "1e6";
  std::string format_text = "csv";
  std::string a_text;
  std::string out_text;
  std::string out_dir_text;
  double rate = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_text, "Antenna counts M1,M2,M3")->required();
    sub->add_option("--out,-o", out_text, "Output file (default: stdout)");
    sub->add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* curve = app.add_subcommand("curve", "Tradeoff curves on an r grid");
  add_common(curve);
  curve->add_option("--protocol", cfg.protocols, "hop1,hop2,full_duplex,fdf,vdf,ddf")
      ->delimiter(',');
  curve->add_option("--r", r_text, "r grid start:stop:step (half-open; DoF point added)");
  curve->add_option("--a", a_text, "fDF source time fraction, e.g. 0.3 or 1/3");

  auto* sim = app.add_subcommand("sim", "Monte Carlo outage and diversity slope");
  add_common(sim);
  sim->add_option("--protocol", cfg.protocols, "full_duplex,fdf,vdf,ddf,cutset")->delimiter(',');
  sim->add_option("--r", cfg.r, "Multiplexing gain");
  sim->add_option("--a", a_text, "fDF source time fraction");
  auto* rate_opt = sim->add_option("--rate", rate, "Fixed rate in bits per channel use (with --r 0)");
  sim->add_option("--snr", snr_text, "SNR grid in dB start:stop:step (inclusive)");
  sim->add_option("--samples", samples_text, "Samples per SNR point (>= 1e4)");
  sim->add_option("--seed", cfg.seed, "Random seed");
  sim->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)");
  sim->add_option("--max-seconds", cfg.max_seconds, "Wall-clock cap for the pre-run estimate");

  auto* reproduce = app.add_subcommand("reproduce", "Write the curve data for a figure");
  reproduce->add_option("figure", cfg.figure, "fig2, fig3 or fig4")->required();
  reproduce->add_option("--out-dir", out_dir_text, "Output directory (default: $DMT_OUTPUT_DIR or .)");

  auto* compare = app.add_subcommand("compare", "DDF solver vs exponent-grid oracle and closed forms");
  add_common(compare);
  compare->add_option("--r", r_text, "r grid start:stop:step");
  compare->add_option("--oracle-step", cfg.oracle_step, "Oracle grid step (1/step integral)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    cfg.config = AntennaConfig::parse(config_text);
    if (!r_text.empty()) cfg.r_grid = Grid::parse(r_text);
    if (!a_text.empty()) cfg.a = a_text;
    if (!out_text.empty()) cfg.output = out_text;
    if (!out_dir_text.empty()) cfg.output_dir = out_dir_text;
    cfg.format = format_text == "json" ? Format::json : Format::csv;
    if (*rate_opt) cfg.fixed_rate = rate;
    cfg.snr_db = Grid::parse(snr_text);
    const double samples = parse_double(samples_text, "--samples");
    if (samples < 0 || samples != std::floor(samples)) throw ConfigError("--samples must be a whole number");
    cfg.samples = static_cast<std::uint64_t>(samples);

    if (curve->parsed()) return run_curve(cfg, out, err);
    if (sim->parsed()) return run_sim(cfg, out, err);
    if (reproduce->parsed()) return run_reproduce(cfg, out, err);
    if (compare->parsed()) return run_compare(cfg, out, err);
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetRefused;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace dmt::cli
