#include "pinchnet/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>
#include <tuple>

#include "pinchnet/io.hpp"
#include "pinchnet/config.hpp"
#include "pinchnet/rng.hpp"

namespace pinchnet {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double objective_db_at(const Geometry& geom, const GridField& grid,
                       const Deployment& dep) {
  return db_from_linear(network_avg(avg_snr_grid(geom, grid, dep), grid));
}

double worst_db_at(const Geometry& geom, const ActiveSet& act,
                   const GridField& grid, const Deployment& dep) {
  return db_from_linear(worst_active_snr(geom, act, grid, dep));
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base_seed, int trial) {
  return mix64(base_seed + 0x51ED270B * static_cast<std::uint64_t>(trial + 1));
}

std::vector<ResultRow> run_alg_compare(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const Geometry geom = derive_geometry(spec.params);
  const double delta_x = geom.lambda / spec.exhaustive_step_fraction;
  const double x0 = spec.pg_x0 < 0.0 ? geom.d_x / 2.0 : spec.pg_x0;
  const std::string experiment =
      spec.kind == ExperimentSpec::Kind::kTiming ? "timing" : "alg-compare";

  std::vector<ResultRow> rows;
  for (int trial = 0; trial < spec.trials; ++trial) {
    const std::uint64_t seed = trial_seed(spec.seed, trial);
    const TrafficMap map = sample_random_map(seed, spec.params);
    const GridField grid = discretize(map, spec.params);
    const ActiveSet act = active_set(grid, spec.params.tau);

    const auto emit = [&](const std::string& method, const Deployment& dep,
                          double wall_s) {
      rows.push_back({experiment, seed, "n",
                      static_cast<double>(spec.params.n_antennas), method,
                      objective_db_at(geom, grid, dep),
                      worst_db_at(geom, act, grid, dep),
                      spec.zero_timings ? 0.0 : wall_s});
    };

    const AvgOptReport proposed = optimize_average(
        geom, grid, map, {spec.j_subintervals, spec.params.eps_d});
    emit("proposed-avg", proposed.deployment, proposed.wall_time_s);

    {
      Deployment dep;
      dep.x.resize(geom.n());
      const auto t0 = Clock::now();
      for (int n = 0; n < geom.n(); ++n)
        dep.x[n] = exhaustive_waveguide(geom, grid, n, delta_x).x;
      emit("exhaustive", dep, seconds_since(t0));
    }
    {
      Deployment dep;
      dep.x.resize(geom.n());
      const auto t0 = Clock::now();
      for (int n = 0; n < geom.n(); ++n)
        dep.x[n] = projected_gradient_waveguide(geom, grid, n, x0, spec.pg_k_max,
                                                spec.params.eps_d)
                       .x;
      emit("pg", dep, seconds_since(t0));
    }
  }
  return rows;
}

std::vector<ResultRow> run_sweep(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (spec.sweep_values.empty()) throw std::invalid_argument("sweep values must be nonempty");
  if (!std::is_sorted(spec.sweep_values.begin(), spec.sweep_values.end()))
    throw std::invalid_argument("sweep values must be sorted");

  std::string var;
  switch (spec.kind) {
    case ExperimentSpec::Kind::kSweepN: var = "n"; break;
    case ExperimentSpec::Kind::kSweepDx: var = "dx"; break;
    case ExperimentSpec::Kind::kSweepTau: var = "tau"; break;
    default: throw std::invalid_argument("run_sweep: spec kind is not a sweep");
  }
  const bool maxmin = spec.objective == "maxmin";
  const std::string proposed_tag = maxmin ? "proposed-maxmin" : "proposed-avg";
  const std::string experiment = "sweep-" + var + "-" + spec.objective;

  std::vector<ResultRow> rows;
  for (double value : spec.sweep_values) {
    SystemParams params = spec.params;
    if (var == "n") params.n_antennas = static_cast<int>(value);
    else if (var == "dx") params.d_x_m = value;
    else params.tau = value;
    const Geometry geom = derive_geometry(params);

    for (int trial = 0; trial < spec.trials; ++trial) {
      const std::uint64_t seed = trial_seed(spec.seed, trial);
      const TrafficMap map = sample_random_map(seed, params);
      const GridField grid = discretize(map, params);
      const ActiveSet act = active_set(grid, params.tau);

      const auto emit = [&](const std::string& method, const Deployment& dep,
                            double wall_s) {
        rows.push_back({experiment, seed, var, value, method,
                        objective_db_at(geom, grid, dep),
                        worst_db_at(geom, act, grid, dep),
                        spec.zero_timings ? 0.0 : wall_s});
      };

      const Deployment heuristic = hotspot_center_deployment(map, geom);
      if (maxmin) {
        const MaxMinReport rep =
            optimize_maxmin(geom, grid, act, heuristic, spec.max_sweeps,
                            params.eps_t, params.eps_d);
        emit(proposed_tag, rep.deployment, rep.wall_time_s);
      } else {
        const AvgOptReport rep = optimize_average(
            geom, grid, map, {spec.j_subintervals, params.eps_d});
        emit(proposed_tag, rep.deployment, rep.wall_time_s);
      }
      emit("hotspot-center", heuristic, 0.0);
      emit("fixed-array", fixed_array_deployment(geom), 0.0);
    }
  }
  return rows;
}

TrafficMap topview_demo_map() {
  // Asymmetric four-hotspot field for the default 60 x 200 m region: three
  // clustered on the left, one lighter hotspot far right.
  TrafficMap map;
  map.hotspots = {{0.38, 12.0, -55.0, 5.0, 18.0},
                  {0.27, 20.0, 35.0, 6.0, 22.0},
                  {0.20, 30.0, -20.0, 5.0, 20.0},
                  {0.15, 50.0, 55.0, 4.0, 16.0}};
  return map;
}

TopViewResult run_topview(const ExperimentSpec& spec) {
  SystemParams params = spec.params;
  params.n_antennas = 1;
  const Geometry geom = derive_geometry(params);

  TopViewResult res;
  res.map = topview_demo_map();
  res.grid = discretize(res.map, params);
  const ActiveSet act = active_set(res.grid, params.tau);

  const AvgOptReport avg = optimize_average(geom, res.grid, res.map,
                                            {spec.j_subintervals, params.eps_d});
  const MaxMinReport mm = optimize_maxmin(
      geom, res.grid, act, hotspot_center_deployment(res.map, geom),
      spec.max_sweeps, params.eps_t, params.eps_d);

  res.x_avg = avg.deployment.x[0];
  res.x_maxmin = mm.deployment.x[0];
  res.avg_db = db_from_linear(avg.objective);
  res.worst_db = db_from_linear(mm.worst_snr);
  res.rows = {
      {"topview", spec.seed, "n", 1.0, "proposed-avg",
       objective_db_at(geom, res.grid, avg.deployment),
       worst_db_at(geom, act, res.grid, avg.deployment),
       spec.zero_timings ? 0.0 : avg.wall_time_s},
      {"topview", spec.seed, "n", 1.0, "proposed-maxmin",
       objective_db_at(geom, res.grid, mm.deployment),
       worst_db_at(geom, act, res.grid, mm.deployment),
       spec.zero_timings ? 0.0 : mm.wall_time_s},
  };
  return res;
}

void write_topview(const std::string& prefix, const TopViewResult& result) {
  std::ostringstream heatmap;
  write_grid_csv(heatmap, result.grid);
  write_text_file(prefix + "_heatmap.csv", heatmap.str());

  nlohmann::json positions = {{"n_antennas", 1},
                              {"x_avg", result.x_avg},
                              {"x_maxmin", result.x_maxmin},
                              {"avg_objective_db", result.avg_db},
                              {"maxmin_worst_db", result.worst_db},
                              {"traffic", traffic_to_json(result.map)}};
  write_text_file(prefix + "_positions.json", positions.dump(2) + "\n");
}

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
  std::map<std::tuple<std::string, std::string, double, std::string>, SummaryRow>
      groups;
  for (const ResultRow& r : rows) {
    SummaryRow& s = groups[{r.experiment, r.sweep_var, r.sweep_value, r.method}];
    if (s.trials == 0) {
      s.experiment = r.experiment;
      s.sweep_var = r.sweep_var;
      s.sweep_value = r.sweep_value;
      s.method = r.method;
    }
    ++s.trials;
    // accumulate sums; finalized below
    s.objective_db_of_mean += linear_from_db(r.objective_db);
    s.objective_mean_db += r.objective_db;
    s.worst_db_of_mean += linear_from_db(r.worst_db);
    s.worst_mean_db += r.worst_db;
    s.wall_time_s_mean += r.wall_time_s;
  }
  std::vector<SummaryRow> out;
  out.reserve(groups.size());
  for (auto& [key, s] : groups) {
    s.objective_db_of_mean = db_from_linear(s.objective_db_of_mean / s.trials);
    s.objective_mean_db /= s.trials;
    s.worst_db_of_mean = db_from_linear(s.worst_db_of_mean / s.trials);
    s.worst_mean_db /= s.trials;
    s.wall_time_s_mean /= s.trials;
    out.push_back(s);
  }
  return out;
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
  os << "experiment,sweep_var,sweep_value,method,trials,objective_db_of_mean,"
        "objective_mean_db,worst_db_of_mean,worst_mean_db,wall_time_s_mean\n";
  for (const SummaryRow& s : rows)
    os << s.experiment << ',' << s.sweep_var << ',' << format_double(s.sweep_value)
       << ',' << s.method << ',' << s.trials << ','
       << format_double(s.objective_db_of_mean) << ','
       << format_double(s.objective_mean_db) << ','
       << format_double(s.worst_db_of_mean) << ',' << format_double(s.worst_mean_db)
       << ',' << format_double(s.wall_time_s_mean) << '\n';
}

void write_rows_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  std::vector<const ResultRow*> sorted;
  sorted.reserve(rows.size());
  for (const ResultRow& r : rows) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ResultRow* a, const ResultRow* b) {
                     return std::tie(a->trial_seed, a->sweep_value, a->method) <
                            std::tie(b->trial_seed, b->sweep_value, b->method);
                   });
  os << "experiment,trial_seed,sweep_var,sweep_value,method,objective_db,"
        "worst_db,wall_time_s\n";
  for (const ResultRow* r : sorted)
    os << r->experiment << ',' << r->trial_seed << ',' << r->sweep_var << ','
       << format_double(r->sweep_value) << ',' << r->method << ','
       << format_double(r->objective_db) << ',' << format_double(r->worst_db)
       << ',' << format_double(r->wall_time_s) << '\n';
}

}  // namespace pinchnet
