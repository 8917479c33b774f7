#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pinchnet/scenario.hpp"

namespace pinchnet {

/// One Gaussian mixture component of the traffic map.
struct Hotspot {
  double alpha;    // mixture weight
  double mu_x;     // center, m
  double mu_y;     // center, m
  double sigma_x;  // spread along x, m
  double sigma_y;  // spread along y, m
};

struct TrafficMap {
  std::vector<Hotspot> hotspots;

  void validate() const;  // weights sum to 1, spreads positive
};

/// Discretized region: cell centers and normalized traffic weights.
/// Weights are stored column-major in u: cell (u,v) sits at p[u*n_v + v].
struct GridField {
  std::vector<double> x;   // n_h horizontal centers, m
  std::vector<double> y;   // n_v vertical centers, m
  std::vector<double> p;   // n_h*n_v normalized weights
  std::vector<double> px;  // per-column marginal sum_v p(u,v)
  int n_h = 0;
  int n_v = 0;

  double at(int u, int v) const { return p[static_cast<size_t>(u) * n_v + v]; }
};

/// Normalizes raw weights to sum 1 and fills the column marginals.
/// Throws std::invalid_argument when the total raw weight is zero.
GridField make_grid_field(std::vector<double> x, std::vector<double> y,
                          std::vector<double> raw_p);

/// Traffic-dominant cells: p(u,v) >= p_th with p_th = tau * max p.
struct ActiveSet {
  std::vector<std::pair<int, int>> members;  // (u,v), u-major order
  double p_th = 0.0;
};

double pdf(const TrafficMap& map, double x, double y);
GridField discretize(const TrafficMap& map, const SystemParams& params);
ActiveSet active_set(const GridField& grid, double tau);

/// Random map with centers uniform over the region, weights uniform (0,1]
/// renormalized, and a shared covariance diag((0.15 Dx)^2, (0.2 Dy)^2).
TrafficMap sample_random_map(std::uint64_t seed, const SystemParams& params);

}  // namespace pinchnet
