#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pinchnet/channel.hpp"

namespace pinchnet {

/// Contribution of all antennas except n, one entry per active member
/// (aligned with ActiveSet::members). Depends on the member only through
/// its column u, so entries repeat across rows of the same column.
struct ResidualField {
  std::vector<double> a;
};

ResidualField residual(const Geometry& geom, const ActiveSet& active,
                       const GridField& grid, const Deployment& dep, int n);

/// Largest offset d >= 0 such that a_uv + g_term at distance d still meets
/// the level t. nullopt: the level is unreachable for this cell (empty set).
/// +infinity: the residual alone already meets it (whole axis feasible).
/// Otherwise d solves a_uv + g(x_u + d) = t, bracketed by geometric
/// expansion and bisected to width eps_d.
std::optional<double> half_width(const Geometry& geom, int n, double a_uv,
                                 double x_u, double t, double eps_d);

struct FeasInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = true;
};

/// Intersection over active cells of [x_u - d, x_u + d] clipped to [0, D_x];
/// infinite half-widths contribute the whole region.
FeasInterval feasible_set(const Geometry& geom, const ActiveSet& active,
                          const ResidualField& residuals, const GridField& grid,
                          int n, double t, double eps_d);

struct CoordinateStep {
  double x;      // midpoint of the last nonempty feasible interval
  double level;  // worst active-cell SNR achieved at x
};

/// Globally solves the 1-D update for antenna n by bisection over the SNR
/// level t: the current position keeps the lower bound feasible, the
/// smallest per-cell peak bounds t from above, and feasibility of each
/// trial level reduces to an interval-intersection test.
CoordinateStep coordinate_update(const Geometry& geom, const ActiveSet& active,
                                 const GridField& grid, const Deployment& dep,
                                 int n, double eps_t, double eps_d);

/// Minimum local average SNR over the active cells; optionally reports the
/// first cell attaining it.
double worst_active_snr(const Geometry& geom, const ActiveSet& active,
                        const GridField& grid, const Deployment& dep,
                        std::pair<int, int>* argmin = nullptr);

struct MaxMinReport {
  Deployment deployment;
  double worst_snr;  // linear
  std::pair<int, int> worst_grid;
  std::vector<double> trace;  // worst SNR: initial value, then one per update
  int sweeps;
  double wall_time_s;
};

/// Cyclic coordinate descent on the traffic-restricted max-min objective.
/// A coordinate move is kept only when it does not decrease the worst
/// active-cell SNR, so the trace is non-decreasing. Stops after a full
/// sweep improves the worst SNR by less than eps_t relative, or at
/// max_sweeps.
MaxMinReport optimize_maxmin(const Geometry& geom, const GridField& grid,
                             const ActiveSet& active, Deployment dep0,
                             int max_sweeps, double eps_t, double eps_d);

}  // namespace pinchnet
