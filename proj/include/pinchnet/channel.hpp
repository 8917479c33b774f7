#pragma once

#include <cstdint>

#include "pinchnet/scenario.hpp"
#include "pinchnet/traffic.hpp"

namespace pinchnet {

/// Antenna x positions, one per waveguide, each in [0, D_x].
struct Deployment {
  std::vector<double> x;
};

void validate_deployment(const Deployment& dep, const Geometry& geom);

struct SnrField {
  std::vector<double> gamma;  // n_h*n_v linear average SNR, (u,v) at [u*n_v+v]
  int n_h = 0;
  int n_v = 0;

  double at(int u, int v) const { return gamma[static_cast<size_t>(u) * n_v + v]; }
};

/// Average SNR contribution of antenna n to a grid column:
/// rho (eta e^{-beta s} + mu^2) / s with s = (x_grid - x_ant)^2 + C_n.
/// Even in (x_grid - x_ant) and strictly decreasing in its magnitude.
double g_term(const Geometry& geom, int n, double x_grid, double x_ant);

/// Closed-form local average SNR for every cell: sum of g_term over antennas.
SnrField avg_snr_grid(const Geometry& geom, const GridField& grid, const Deployment& dep);

/// Traffic-weighted network average: sum_{u,v} p(u,v) gamma(u,v).
double network_avg(const SnrField& snr, const GridField& grid);

/// Per-waveguide component of the network average as a function of the
/// antenna position, and its analytic derivative.
double f_n(const Geometry& geom, const GridField& grid, int n, double x);
double f_n_prime(const Geometry& geom, const GridField& grid, int n, double x);

struct McEstimate {
  double mean;
  double std_error;
};

/// Samples the random LoS/NLoS channel for a user at grid-column x_grid:
/// per antenna, a Bernoulli(e^{-beta r^2}) LoS indicator times a fixed-gain
/// random-phase LoS term, plus a zero-mean complex Gaussian NLoS term with
/// variance mu^2/r^2. Returns mean and standard error of the sampled SNR.
/// Deterministic given the seed (each sample draws from its own substream).
McEstimate mc_oracle(const Geometry& geom, double x_grid, const Deployment& dep,
                     int n_samples, std::uint64_t seed);

}  // namespace pinchnet
