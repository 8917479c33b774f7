#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pinchnet/baselines.hpp"
#include "pinchnet/opt_average.hpp"
#include "pinchnet/opt_maxmin.hpp"

namespace pinchnet {

/// One batch experiment. Trials draw isolated per-trial seeds from `seed`,
/// so reruns with the same spec are reproducible row for row.
struct ExperimentSpec {
  enum class Kind { kAlgCompare, kSweepN, kSweepDx, kSweepTau, kTiming, kTopView };

  Kind kind = Kind::kAlgCompare;
  SystemParams params;  // desk-scale grids keep batch runtimes reasonable
  int trials = 20;
  std::uint64_t seed = 1;
  std::vector<double> sweep_values;
  std::string objective = "avg";  // sweeps: "avg" or "maxmin"
  bool zero_timings = false;      // write 0 for wall_time_s columns
  int j_subintervals = 10;
  int pg_k_max = 30;
  double exhaustive_step_fraction = 5.0;  // scan step = lambda / fraction
  int max_sweeps = 50;
  double pg_x0 = -1.0;  // < 0: start from D_x/2
};

struct ResultRow {
  std::string experiment;
  std::uint64_t trial_seed;
  std::string sweep_var;  // "n", "dx", "tau" or "" for compare runs
  double sweep_value;
  std::string method;
  double objective_db;  // network average SNR
  double worst_db;      // worst active-cell SNR
  double wall_time_s;
};

std::uint64_t trial_seed(std::uint64_t base_seed, int trial);

/// Solver comparison on random maps: candidate search vs dense scan vs
/// projected gradient, objectives and solver wall times per trial.
std::vector<ResultRow> run_alg_compare(const ExperimentSpec& spec);

/// Sweeps N, D_x or tau and records {proposed, hotspot-center, fixed-array}
/// under the chosen objective at every sweep point and trial.
std::vector<ResultRow> run_sweep(const ExperimentSpec& spec);

struct TopViewResult {
  TrafficMap map;
  GridField grid;
  double x_avg;     // average-SNR optimal position
  double x_maxmin;  // traffic-restricted max-min optimal position
  double avg_db;    // network average at x_avg
  double worst_db;  // worst active-cell SNR at x_maxmin
  std::vector<ResultRow> rows;
};

/// Single-waveguide contrast of the two objectives on a fixed four-hotspot
/// map; emits the heatmap and both optimized positions.
TopViewResult run_topview(const ExperimentSpec& spec);

/// The fixed asymmetric four-hotspot map used by top-view runs.
TrafficMap topview_demo_map();

/// Writes <prefix>_heatmap.csv and <prefix>_positions.json.
void write_topview(const std::string& prefix, const TopViewResult& result);

/// Header: experiment,trial_seed,sweep_var,sweep_value,method,objective_db,
/// worst_db,wall_time_s. Rows are sorted by (trial, sweep value, method).
void write_rows_csv(std::ostream& os, const std::vector<ResultRow>& rows);

/// Per (sweep value, method) aggregate across trials. Whether figures
/// average in the linear or the dB domain is a plotting convention, so both
/// are carried side by side and labeled.
struct SummaryRow {
  std::string experiment;
  std::string sweep_var;
  double sweep_value;
  std::string method;
  int trials;
  double objective_db_of_mean;  // 10 log10(mean of linear objective)
  double objective_mean_db;     // mean of per-trial dB values
  double worst_db_of_mean;
  double worst_mean_db;
  double wall_time_s_mean;
};

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);

int cli_main(int argc, const char* const* argv);

}  // namespace pinchnet
