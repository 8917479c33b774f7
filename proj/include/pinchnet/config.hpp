#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pinchnet/scenario.hpp"
#include "pinchnet/traffic.hpp"

namespace pinchnet {

// Scenario keys: f_c_hz, d_x_m, d_y_m, d_v_m, p_dbm, sigma2_dbm, mu2_db,
// n_antennas, n_h, n_v, beta, eps_t, eps_d, n_hotspots, tau. Missing keys
// keep their defaults.
SystemParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const SystemParams& params);

// Traffic maps serialize as {"hotspots": [{alpha, mu_x, mu_y, sigma_x,
// sigma_y}, ...]}.
TrafficMap traffic_from_json(const nlohmann::json& j);
nlohmann::json traffic_to_json(const TrafficMap& map);

struct FileConfig {
  SystemParams params;
  std::optional<TrafficMap> traffic;
  nlohmann::json experiment;  // optional free-form experiment section
};

/// Parses a JSON config with "scenario", optional "traffic" and
/// "experiment" sections. Throws std::runtime_error with file context on
/// parse or validation failure.
FileConfig load_config(const std::string& path);

TrafficMap load_traffic(const std::string& path);

}  // namespace pinchnet
