#include "pinchnet/config.hpp"

#include <fstream>

namespace pinchnet {

using nlohmann::json;

SystemParams params_from_json(const json& j) {
  SystemParams p;
  p.f_c_hz = j.value("f_c_hz", p.f_c_hz);
  p.d_x_m = j.value("d_x_m", p.d_x_m);
  p.d_y_m = j.value("d_y_m", p.d_y_m);
  p.d_v_m = j.value("d_v_m", p.d_v_m);
  p.p_dbm = j.value("p_dbm", p.p_dbm);
  p.sigma2_dbm = j.value("sigma2_dbm", p.sigma2_dbm);
  p.mu2_db = j.value("mu2_db", p.mu2_db);
  p.n_antennas = j.value("n_antennas", p.n_antennas);
  p.n_h = j.value("n_h", p.n_h);
  p.n_v = j.value("n_v", p.n_v);
  p.beta = j.value("beta", p.beta);
  p.eps_t = j.value("eps_t", p.eps_t);
  p.eps_d = j.value("eps_d", p.eps_d);
  p.n_hotspots = j.value("n_hotspots", p.n_hotspots);
  p.tau = j.value("tau", p.tau);
  p.validate();
  return p;
}

json params_to_json(const SystemParams& p) {
  return json{{"f_c_hz", p.f_c_hz},
              {"d_x_m", p.d_x_m},
              {"d_y_m", p.d_y_m},
              {"d_v_m", p.d_v_m},
              {"p_dbm", p.p_dbm},
              {"sigma2_dbm", p.sigma2_dbm},
              {"mu2_db", p.mu2_db},
              {"n_antennas", p.n_antennas},
              {"n_h", p.n_h},
              {"n_v", p.n_v},
              {"beta", p.beta},
              {"eps_t", p.eps_t},
              {"eps_d", p.eps_d},
              {"n_hotspots", p.n_hotspots},
              {"tau", p.tau}};
}

TrafficMap traffic_from_json(const json& j) {
  TrafficMap map;
  for (const json& h : j.at("hotspots")) {
    map.hotspots.push_back({h.at("alpha").get<double>(),
                            h.at("mu_x").get<double>(),
                            h.at("mu_y").get<double>(),
                            h.at("sigma_x").get<double>(),
                            h.at("sigma_y").get<double>()});
  }
  map.validate();
  return map;
}

json traffic_to_json(const TrafficMap& map) {
  json hotspots = json::array();
  for (const Hotspot& h : map.hotspots)
    hotspots.push_back(json{{"alpha", h.alpha},
                            {"mu_x", h.mu_x},
                            {"mu_y", h.mu_y},
                            {"sigma_x", h.sigma_x},
                            {"sigma_y", h.sigma_y}});
  return json{{"hotspots", std::move(hotspots)}};
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error("config parse error in " + path + ": " + e.what());
  }
}

}  // namespace

FileConfig load_config(const std::string& path) {
  const json j = parse_file(path);
  FileConfig cfg;
  try {
    if (j.contains("scenario")) cfg.params = params_from_json(j.at("scenario"));
    if (j.contains("traffic")) cfg.traffic = traffic_from_json(j.at("traffic"));
    if (j.contains("experiment")) cfg.experiment = j.at("experiment");
  } catch (const std::exception& e) {
    throw std::runtime_error("config error in " + path + ": " + e.what());
  }
  return cfg;
}

TrafficMap load_traffic(const std::string& path) {
  const json j = parse_file(path);
  try {
    return traffic_from_json(j.contains("traffic") ? j.at("traffic") : j);
  } catch (const std::exception& e) {
    throw std::runtime_error("traffic map error in " + path + ": " + e.what());
  }
}

}  // namespace pinchnet
