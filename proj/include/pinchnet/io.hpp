#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pinchnet/opt_average.hpp"
#include "pinchnet/opt_maxmin.hpp"

namespace pinchnet {

/// Shortest round-trip text form of a double; identical inputs give
/// identical bytes, which keeps emitted artifacts reproducible.
std::string format_double(double v);

/// Header: u,v,x,y,p with 1-based cell indices.
void write_grid_csv(std::ostream& os, const GridField& grid);

/// Header: u,v,x,y,gamma_linear,gamma_db with 1-based cell indices.
void write_snr_csv(std::ostream& os, const SnrField& snr, const GridField& grid);

/// Header: update,sweep,n,worst_db. Entry 0 is the initial deployment.
void write_trace_csv(std::ostream& os, const std::vector<double>& trace,
                     int n_antennas);

nlohmann::json report_to_json(const AvgOptReport& report);
nlohmann::json report_to_json(const MaxMinReport& report);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace pinchnet
