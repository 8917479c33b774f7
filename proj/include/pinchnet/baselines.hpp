#pragma once

#include "pinchnet/channel.hpp"
#include "pinchnet/traffic.hpp"

namespace pinchnet {

struct ScanResult {
  double x;
  double f;
};

/// Dense linear search of f_n over {0, dx, 2dx, ...} plus the endpoint D_x.
/// Ties break toward smaller x.
ScanResult exhaustive_waveguide(const Geometry& geom, const GridField& grid,
                                int n, double delta_x);

struct PgResult {
  double x;
  double f;
  int iterations = 0;
  int accepted = 0;
};

/// Projected gradient ascent on f_n with backtracking halving: moves by
/// `step` in the gradient sign direction, accepts only improvements,
/// halves on rejection and resets the step to D_x/10 on acceptance.
/// Stops after k_max iterations or once step < eps_d.
PgResult projected_gradient_waveguide(const Geometry& geom, const GridField& grid,
                                      int n, double x0, int k_max, double eps_d);

/// Places antenna n at the x-center of hotspot (n mod L), hotspots taken in
/// descending-weight order, centers clipped to [0, D_x].
Deployment hotspot_center_deployment(const TrafficMap& map, const Geometry& geom);

/// Half-wavelength-spaced array centered at D_x/2. Throws std::domain_error
/// when the array does not fit the region.
Deployment fixed_array_deployment(const Geometry& geom);

}  // namespace pinchnet
