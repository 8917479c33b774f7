#include "pinchnet/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace pinchnet {

void TrafficMap::validate() const {
  if (hotspots.empty())
    throw std::invalid_argument("traffic map needs at least one hotspot");
  double total = 0.0;
  for (const Hotspot& h : hotspots) {
    if (!(h.alpha >= 0.0)) throw std::invalid_argument("hotspot weight must be >= 0");
    if (!(h.sigma_x > 0.0) || !(h.sigma_y > 0.0))
      throw std::invalid_argument("hotspot spreads must be positive");
    total += h.alpha;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("hotspot weights must sum to 1");
}

double pdf(const TrafficMap& map, double x, double y) {
  double dens = 0.0;
  for (const Hotspot& h : map.hotspots) {
    const double zx = (x - h.mu_x) / h.sigma_x;
    const double zy = (y - h.mu_y) / h.sigma_y;
    dens += h.alpha * std::exp(-0.5 * (zx * zx + zy * zy)) /
            (2.0 * std::numbers::pi * h.sigma_x * h.sigma_y);
  }
  return dens;
}

GridField make_grid_field(std::vector<double> x, std::vector<double> y,
                          std::vector<double> raw_p) {
  if (raw_p.size() != x.size() * y.size())
    throw std::invalid_argument("grid weight count does not match dimensions");
  double total = 0.0;
  for (double w : raw_p) {
    if (!(w >= 0.0)) throw std::invalid_argument("grid weights must be >= 0");
    total += w;
  }
  if (!(total > 0.0))
    throw std::invalid_argument("degenerate traffic map: zero total weight on the grid");

  GridField grid;
  grid.n_h = static_cast<int>(x.size());
  grid.n_v = static_cast<int>(y.size());
  grid.x = std::move(x);
  grid.y = std::move(y);
  grid.p = std::move(raw_p);
  for (double& w : grid.p) w /= total;
  grid.px.assign(grid.n_h, 0.0);
  for (int u = 0; u < grid.n_h; ++u)
    for (int v = 0; v < grid.n_v; ++v) grid.px[u] += grid.at(u, v);
  return grid;
}

GridField discretize(const TrafficMap& map, const SystemParams& params) {
  params.validate();
  map.validate();
  const double du = params.d_x_m / params.n_h;
  const double dv = params.d_y_m / params.n_v;
  std::vector<double> x(params.n_h), y(params.n_v);
  for (int u = 0; u < params.n_h; ++u) x[u] = (u + 0.5) * du;
  for (int v = 0; v < params.n_v; ++v) y[v] = -params.d_y_m / 2.0 + (v + 0.5) * dv;

  std::vector<double> raw(static_cast<size_t>(params.n_h) * params.n_v);
  for (int u = 0; u < params.n_h; ++u)
    for (int v = 0; v < params.n_v; ++v)
      raw[static_cast<size_t>(u) * params.n_v + v] = pdf(map, x[u], y[v]) * du * dv;
  return make_grid_field(std::move(x), std::move(y), std::move(raw));
}

ActiveSet active_set(const GridField& grid, double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in (0,1)");
  ActiveSet act;
  act.p_th = tau * *std::max_element(grid.p.begin(), grid.p.end());
  for (int u = 0; u < grid.n_h; ++u)
    for (int v = 0; v < grid.n_v; ++v)
      if (grid.at(u, v) >= act.p_th) act.members.emplace_back(u, v);
  return act;
}

TrafficMap sample_random_map(std::uint64_t seed, const SystemParams& params) {
  params.validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(0.0, params.d_x_m);
  std::uniform_real_distribution<double> uy(-params.d_y_m / 2.0, params.d_y_m / 2.0);
  std::uniform_real_distribution<double> uw(0.0, 1.0);

  TrafficMap map;
  map.hotspots.resize(params.n_hotspots);
  for (Hotspot& h : map.hotspots) {
    h.mu_x = ux(rng);
    h.mu_y = uy(rng);
    h.sigma_x = 0.15 * params.d_x_m;
    h.sigma_y = 0.2 * params.d_y_m;
  }
  double total = 0.0;
  for (Hotspot& h : map.hotspots) {
    h.alpha = 1.0 - uw(rng);  // uniform on (0, 1]
    total += h.alpha;
  }
  for (Hotspot& h : map.hotspots) h.alpha /= total;
  return map;
}

}  // namespace pinchnet
