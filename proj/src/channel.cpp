#include "pinchnet/channel.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "pinchnet/rng.hpp"

namespace pinchnet {

void validate_deployment(const Deployment& dep, const Geometry& geom) {
  if (static_cast<int>(dep.x.size()) != geom.n())
    throw std::invalid_argument("deployment size does not match waveguide count");
  for (double v : dep.x)
    if (!(v >= 0.0 && v <= geom.d_x))
      throw std::invalid_argument("antenna position outside [0, D_x]");
}

double g_term(const Geometry& geom, int n, double x_grid, double x_ant) {
  const double s = distance_sq(geom, n, x_grid, x_ant);
  return geom.rho * (geom.eta * std::exp(-geom.beta * s) + geom.mu2) / s;
}

SnrField avg_snr_grid(const Geometry& geom, const GridField& grid,
                      const Deployment& dep) {
  validate_deployment(dep, geom);
  SnrField snr;
  snr.n_h = grid.n_h;
  snr.n_v = grid.n_v;
  snr.gamma.resize(grid.p.size());
  for (int u = 0; u < grid.n_h; ++u) {
    double g = 0.0;
    for (int n = 0; n < geom.n(); ++n) g += g_term(geom, n, grid.x[u], dep.x[n]);
    // Distances ignore the cell's y offset, so whole columns share one value.
    for (int v = 0; v < grid.n_v; ++v)
      snr.gamma[static_cast<size_t>(u) * grid.n_v + v] = g;
  }
  return snr;
}

double network_avg(const SnrField& snr, const GridField& grid) {
  if (snr.n_h != grid.n_h || snr.n_v != grid.n_v)
    throw std::invalid_argument("SNR/grid shape mismatch");
  double total = 0.0;
  for (size_t i = 0; i < grid.p.size(); ++i) total += grid.p[i] * snr.gamma[i];
  return total;
}

double f_n(const Geometry& geom, const GridField& grid, int n, double x) {
  if (n < 0 || n >= geom.n()) throw std::out_of_range("waveguide index out of range");
  const double cn = geom.c[n];
  double acc = 0.0;
  // The kernel depends on the cell only through x_u, so the v sum collapses
  // onto the column marginal.
  for (int u = 0; u < grid.n_h; ++u) {
    const double d = grid.x[u] - x;
    const double s = d * d + cn;
    acc += grid.px[u] * (geom.eta * std::exp(-geom.beta * s) + geom.mu2) / s;
  }
  return geom.rho * acc;
}

double f_n_prime(const Geometry& geom, const GridField& grid, int n, double x) {
  if (n < 0 || n >= geom.n()) throw std::out_of_range("waveguide index out of range");
  const double cn = geom.c[n];
  double acc = 0.0;
  for (int u = 0; u < grid.n_h; ++u) {
    const double d = grid.x[u] - x;
    const double s = d * d + cn;
    acc += grid.px[u] * 2.0 * d *
           (geom.eta * std::exp(-geom.beta * s) * (geom.beta * s + 1.0) + geom.mu2) /
           (s * s);
  }
  return geom.rho * acc;
}

McEstimate mc_oracle(const Geometry& geom, double x_grid, const Deployment& dep,
                     int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  validate_deployment(dep, geom);

  double mean = 0.0;
  double m2 = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    std::mt19937_64 rng(mix64(seed + static_cast<std::uint64_t>(i)));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    double snr = 0.0;
    for (int n = 0; n < geom.n(); ++n) {
      const double r2 = distance_sq(geom, n, x_grid, dep.x[n]);
      const bool los = unif(rng) < std::exp(-geom.beta * r2);
      const double phase = 2.0 * std::numbers::pi * unif(rng);
      const double nlos_sd = std::sqrt(geom.mu2 / (2.0 * r2));
      double re = normal(rng) * nlos_sd;
      double im = normal(rng) * nlos_sd;
      if (los) {
        const double amp = std::sqrt(geom.eta / r2);
        re += amp * std::cos(phase);
        im += amp * std::sin(phase);
      }
      snr += re * re + im * im;
    }
    snr *= geom.rho;
    const double delta = snr - mean;
    mean += delta / (i + 1);
    m2 += delta * (snr - mean);
  }
  const double var = n_samples > 1 ? m2 / (n_samples - 1) : 0.0;
  return {mean, std::sqrt(var / n_samples)};
}

}  // namespace pinchnet
