#include "pinchnet/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace pinchnet {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_grid_csv(std::ostream& os, const GridField& grid) {
  os << "u,v,x,y,p\n";
  for (int u = 0; u < grid.n_h; ++u)
    for (int v = 0; v < grid.n_v; ++v)
      os << (u + 1) << ',' << (v + 1) << ',' << format_double(grid.x[u]) << ','
         << format_double(grid.y[v]) << ',' << format_double(grid.at(u, v)) << '\n';
}

void write_snr_csv(std::ostream& os, const SnrField& snr, const GridField& grid) {
  if (snr.n_h != grid.n_h || snr.n_v != grid.n_v)
    throw std::invalid_argument("SNR/grid shape mismatch");
  os << "u,v,x,y,gamma_linear,gamma_db\n";
  for (int u = 0; u < snr.n_h; ++u)
    for (int v = 0; v < snr.n_v; ++v) {
      const double g = snr.at(u, v);
      os << (u + 1) << ',' << (v + 1) << ',' << format_double(grid.x[u]) << ','
         << format_double(grid.y[v]) << ',' << format_double(g) << ','
         << format_double(db_from_linear(g)) << '\n';
    }
}

void write_trace_csv(std::ostream& os, const std::vector<double>& trace,
                     int n_antennas) {
  os << "update,sweep,n,worst_db\n";
  for (size_t i = 0; i < trace.size(); ++i) {
    // Entry 0 is the initial deployment; updates then cycle antennas 1..N.
    const long long update = static_cast<long long>(i);
    const long long sweep = i == 0 ? 0 : 1 + (update - 1) / n_antennas;
    const long long n = i == 0 ? 0 : 1 + (update - 1) % n_antennas;
    os << update << ',' << sweep << ',' << n << ','
       << format_double(db_from_linear(trace[i])) << '\n';
  }
}

nlohmann::json report_to_json(const AvgOptReport& report) {
  nlohmann::json per_n = nlohmann::json::array();
  for (const WaveguideResult& w : report.per_n) {
    nlohmann::json stationary = nlohmann::json::array();
    for (const StationaryPoint& sp : w.stationary)
      stationary.push_back({{"x", sp.x},
                            {"kind", to_string(sp.kind)},
                            {"bracket", {sp.bracket_lo, sp.bracket_hi}},
                            {"f", sp.f_value}});
    per_n.push_back({{"n", w.n + 1},
                     {"chosen_x", w.chosen_x},
                     {"chosen_f", w.chosen_f},
                     {"chosen_f_db", db_from_linear(w.chosen_f)},
                     {"stationary", std::move(stationary)},
                     {"candidate_xs", w.candidate_xs}});
  }
  return {{"deployment", report.deployment.x},
          {"objective_linear", report.objective},
          {"objective_db", db_from_linear(report.objective)},
          {"per_waveguide", std::move(per_n)},
          {"wall_time_s", report.wall_time_s}};
}

nlohmann::json report_to_json(const MaxMinReport& report) {
  nlohmann::json trace_db = nlohmann::json::array();
  for (double w : report.trace) trace_db.push_back(db_from_linear(w));
  return {{"deployment", report.deployment.x},
          {"worst_snr_linear", report.worst_snr},
          {"worst_snr_db", db_from_linear(report.worst_snr)},
          {"worst_grid", {report.worst_grid.first + 1, report.worst_grid.second + 1}},
          {"trace_db", std::move(trace_db)},
          {"sweeps", report.sweeps},
          {"wall_time_s", report.wall_time_s}};
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace pinchnet
