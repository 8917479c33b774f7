#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pinchnet/config.hpp"
#include "pinchnet/harness.hpp"
#include "pinchnet/io.hpp"
#include "pinchnet/rng.hpp"

namespace pinchnet {

namespace {

struct CommonOpts {
  std::string config_path;
  std::string map_path;
  std::uint64_t seed = 1;
};

SystemParams desk_scale_defaults() {
  SystemParams p;
  p.n_h = 100;
  p.n_v = 60;
  return p;
}

// Loads scenario/traffic from the config file when given; `desk` picks the
// coarse batch grid as the no-config default.
FileConfig resolve_config(const CommonOpts& opts, bool desk) {
  FileConfig cfg;
  if (!opts.config_path.empty()) {
    cfg = load_config(opts.config_path);
  } else if (desk) {
    cfg.params = desk_scale_defaults();
  }
  if (!opts.map_path.empty()) cfg.traffic = load_traffic(opts.map_path);
  return cfg;
}

TrafficMap resolve_map(const FileConfig& cfg, std::uint64_t seed) {
  if (cfg.traffic) return *cfg.traffic;
  return sample_random_map(seed, cfg.params);
}

void write_or_print(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
  } else {
    write_text_file(out_path, content);
  }
}

int run_validate(const FileConfig& cfg, int pairs, int samples, std::uint64_t seed) {
  const Geometry geom = derive_geometry(cfg.params);
  std::mt19937_64 rng(mix64(seed));
  std::uniform_real_distribution<double> ux(0.0, geom.d_x);
  std::uniform_int_distribution<int> uu(0, cfg.params.n_h - 1);
  const double du = cfg.params.d_x_m / cfg.params.n_h;

  bool all_ok = true;
  std::printf("closed-form vs Monte-Carlo local average SNR (%d samples)\n", samples);
  for (int i = 0; i < pairs; ++i) {
    Deployment dep;
    dep.x.resize(geom.n());
    for (double& x : dep.x) x = ux(rng);
    const double x_grid = (uu(rng) + 0.5) * du;

    double closed = 0.0;
    for (int n = 0; n < geom.n(); ++n) closed += g_term(geom, n, x_grid, dep.x[n]);
    const McEstimate mc = mc_oracle(geom, x_grid, dep, samples, mix64(seed) + i + 1);
    const double z = mc.std_error > 0.0 ? (mc.mean - closed) / mc.std_error : 0.0;
    const bool ok = std::abs(mc.mean - closed) <= 3.0 * mc.std_error;
    all_ok = all_ok && ok;
    std::printf("pair %2d: closed=%.6e mc=%.6e se=%.2e z=%+.2f %s\n", i + 1, closed,
                mc.mean, mc.std_error, z, ok ? "PASS" : "FAIL");
  }
  std::printf("%s\n", all_ok ? "PASS" : "FAIL");
  return all_ok ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"traffic-aware pinching-antenna placement"};
  app.require_subcommand(1);

  CommonOpts common;
  int samples = 100000;
  int pairs = 10;
  std::string out_path;
  std::string out_prefix = "topview";
  std::string init = "hotspot-center";
  std::string var;
  std::string objective = "avg";
  std::string trace_path;
  std::vector<double> values;
  int trials = 20;
  int j_sub = 10;
  int pg_kmax = 30;
  int max_sweeps = 50;
  double step_frac = 5.0;
  bool zero_timings = false;

  auto* validate = app.add_subcommand("validate", "check the closed-form average SNR against channel sampling");
  validate->add_option("--config", common.config_path, "JSON config file");
  validate->add_option("--samples", samples, "samples per pair")->check(CLI::PositiveNumber);
  validate->add_option("--seed", common.seed, "RNG seed");
  validate->add_option("--pairs", pairs, "number of (deployment, cell) pairs")->check(CLI::PositiveNumber);

  std::string snr_csv_path;
  auto* oavg = app.add_subcommand("optimize-avg", "maximize the traffic-weighted network average SNR");
  oavg->add_option("--config", common.config_path, "JSON config file");
  oavg->add_option("--map", common.map_path, "traffic map JSON");
  oavg->add_option("--seed", common.seed, "seed for a sampled map when none is given");
  oavg->add_option("--out", out_path, "report JSON path (default: stdout)");
  oavg->add_option("--j", j_sub, "coarse subintervals per hotspot gap")->check(CLI::PositiveNumber);
  oavg->add_option("--snr-csv", snr_csv_path, "dump the per-cell average SNR at the optimum");

  auto* omm = app.add_subcommand("optimize-maxmin", "maximize the worst active-cell average SNR");
  omm->add_option("--config", common.config_path, "JSON config file");
  omm->add_option("--map", common.map_path, "traffic map JSON");
  omm->add_option("--seed", common.seed, "seed for a sampled map when none is given");
  omm->add_option("--out", out_path, "report JSON path (default: stdout)");
  omm->add_option("--init", init, "initial deployment: hotspot-center | fixed-array")
      ->check(CLI::IsMember({"hotspot-center", "fixed-array"}));
  omm->add_option("--max-sweeps", max_sweeps, "sweep cap")->check(CLI::PositiveNumber);
  omm->add_option("--trace", trace_path, "write the worst-SNR trace CSV here");
  omm->add_option("--snr-csv", snr_csv_path, "dump the per-cell average SNR at the optimum");

  auto* compare = app.add_subcommand("compare", "candidate search vs dense scan vs projected gradient on random maps");
  compare->add_option("--config", common.config_path, "JSON config file");
  compare->add_option("--trials", trials, "traffic realizations")->check(CLI::PositiveNumber);
  compare->add_option("--seed", common.seed, "base RNG seed");
  compare->add_option("--out", out_path, "rows CSV path (default: stdout)");
  compare->add_option("--step-frac", step_frac, "scan step = lambda / this")->check(CLI::PositiveNumber);
  compare->add_option("--j", j_sub, "coarse subintervals per hotspot gap")->check(CLI::PositiveNumber);
  compare->add_option("--kmax", pg_kmax, "projected-gradient iteration cap")->check(CLI::PositiveNumber);
  compare->add_flag("--zero-timings", zero_timings, "write 0 for wall times (reproducible bytes)");
  std::string summary_path;
  compare->add_option("--summary", summary_path, "also write per-method means (both aggregation domains)");
  bool timing_kind = false;
  compare->add_flag("--timing", timing_kind, "label rows as a timing experiment");

  auto* sweep = app.add_subcommand("sweep", "sweep n, dx or tau and compare against the baselines");
  sweep->add_option("--var", var, "sweep variable: n | dx | tau")
      ->required()
      ->check(CLI::IsMember({"n", "dx", "tau"}));
  sweep->add_option("--values", values, "sorted sweep values")->required()->delimiter(',');
  sweep->add_option("--objective", objective, "avg | maxmin")
      ->check(CLI::IsMember({"avg", "maxmin"}));
  sweep->add_option("--config", common.config_path, "JSON config file");
  sweep->add_option("--trials", trials, "traffic realizations")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", common.seed, "base RNG seed");
  sweep->add_option("--out", out_path, "rows CSV path (default: stdout)");
  sweep->add_option("--max-sweeps", max_sweeps, "BCD sweep cap")->check(CLI::PositiveNumber);
  sweep->add_flag("--zero-timings", zero_timings, "write 0 for wall times (reproducible bytes)");
  sweep->add_option("--summary", summary_path, "also write per-method means (both aggregation domains)");

  auto* topview = app.add_subcommand("topview", "single-waveguide objective contrast on the fixed four-hotspot map");
  topview->add_option("--config", common.config_path, "JSON config file");
  topview->add_option("--out-prefix", out_prefix, "writes <prefix>_heatmap.csv and <prefix>_positions.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*validate) {
      return run_validate(resolve_config(common, false), pairs, samples, common.seed);
    }

    if (*oavg) {
      const FileConfig cfg = resolve_config(common, false);
      const TrafficMap map = resolve_map(cfg, common.seed);
      const Geometry geom = derive_geometry(cfg.params);
      const GridField grid = discretize(map, cfg.params);
      const AvgOptReport rep = optimize_average(geom, grid, map, {j_sub, cfg.params.eps_d});
      if (!snr_csv_path.empty()) {
        std::ostringstream os;
        write_snr_csv(os, avg_snr_grid(geom, grid, rep.deployment), grid);
        write_text_file(snr_csv_path, os.str());
      }
      write_or_print(out_path, report_to_json(rep).dump(2) + "\n");
      if (!out_path.empty())
        std::printf("objective_db=%s -> %s\n",
                    format_double(db_from_linear(rep.objective)).c_str(),
                    out_path.c_str());
      return 0;
    }

    if (*omm) {
      const FileConfig cfg = resolve_config(common, false);
      const TrafficMap map = resolve_map(cfg, common.seed);
      const Geometry geom = derive_geometry(cfg.params);
      const GridField grid = discretize(map, cfg.params);
      const ActiveSet act = active_set(grid, cfg.params.tau);
      const Deployment dep0 = init == "fixed-array"
                                  ? fixed_array_deployment(geom)
                                  : hotspot_center_deployment(map, geom);
      const MaxMinReport rep = optimize_maxmin(geom, grid, act, dep0, max_sweeps,
                                               cfg.params.eps_t, cfg.params.eps_d);
      if (!trace_path.empty()) {
        std::ostringstream os;
        write_trace_csv(os, rep.trace, geom.n());
        write_text_file(trace_path, os.str());
      }
      if (!snr_csv_path.empty()) {
        std::ostringstream os;
        write_snr_csv(os, avg_snr_grid(geom, grid, rep.deployment), grid);
        write_text_file(snr_csv_path, os.str());
      }
      write_or_print(out_path, report_to_json(rep).dump(2) + "\n");
      if (!out_path.empty())
        std::printf("worst_db=%s -> %s\n",
                    format_double(db_from_linear(rep.worst_snr)).c_str(),
                    out_path.c_str());
      return 0;
    }

    if (*compare || *sweep) {
      const FileConfig cfg = resolve_config(common, true);
      ExperimentSpec spec;
      spec.params = cfg.params;
      spec.trials = trials;
      spec.seed = common.seed;
      spec.zero_timings = zero_timings;
      spec.j_subintervals = j_sub;
      spec.pg_k_max = pg_kmax;
      spec.exhaustive_step_fraction = step_frac;
      spec.max_sweeps = max_sweeps;

      std::vector<ResultRow> rows;
      if (*compare) {
        spec.kind = timing_kind ? ExperimentSpec::Kind::kTiming
                                : ExperimentSpec::Kind::kAlgCompare;
        rows = run_alg_compare(spec);
      } else {
        spec.objective = objective;
        spec.sweep_values = values;
        spec.kind = var == "n"    ? ExperimentSpec::Kind::kSweepN
                    : var == "dx" ? ExperimentSpec::Kind::kSweepDx
                                  : ExperimentSpec::Kind::kSweepTau;
        rows = run_sweep(spec);
      }
      std::ostringstream os;
      write_rows_csv(os, rows);
      write_or_print(out_path, os.str());
      if (!summary_path.empty()) {
        std::ostringstream ss;
        write_summary_csv(ss, summarize(rows));
        write_text_file(summary_path, ss.str());
      }
      if (!out_path.empty())
        std::printf("%zu rows -> %s\n", rows.size(), out_path.c_str());
      return 0;
    }

    if (*topview) {
      const FileConfig cfg = resolve_config(common, true);
      ExperimentSpec spec;
      spec.kind = ExperimentSpec::Kind::kTopView;
      spec.params = cfg.params;
      spec.seed = common.seed;
      const TopViewResult res = run_topview(spec);
      write_topview(out_prefix, res);
      std::printf("x_avg=%s x_maxmin=%s -> %s_{heatmap.csv,positions.json}\n",
                  format_double(res.x_avg).c_str(),
                  format_double(res.x_maxmin).c_str(), out_prefix.c_str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace pinchnet
