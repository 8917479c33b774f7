#include "pinchnet/scenario.hpp"

#include <cmath>
#include <numbers>

namespace pinchnet {

void SystemParams::validate() const {
  auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
  if (!(f_c_hz > 0.0)) fail("f_c_hz must be positive");
  if (!(d_x_m > 0.0) || !(d_y_m > 0.0) || !(d_v_m > 0.0))
    fail("region dimensions must be positive");
  if (n_antennas < 1) fail("n_antennas must be >= 1");
  if (n_h < 1 || n_v < 1) fail("grid counts must be >= 1");
  if (!(beta >= 0.0)) fail("beta must be >= 0");
  if (!(tau > 0.0 && tau < 1.0)) fail("tau must lie in (0,1)");
  if (!(eps_t > 0.0) || !(eps_d > 0.0)) fail("tolerances must be positive");
  if (n_hotspots < 1) fail("n_hotspots must be >= 1");
}

Geometry derive_geometry(const SystemParams& params) {
  params.validate();
  Geometry geom;
  geom.lambda = kSpeedOfLight / params.f_c_hz;
  const double q = kSpeedOfLight / (4.0 * std::numbers::pi * params.f_c_hz);
  geom.eta = q * q;
  geom.rho = std::pow(10.0, (params.p_dbm - params.sigma2_dbm) / 10.0);
  geom.mu2 = std::pow(10.0, params.mu2_db / 10.0);
  geom.beta = params.beta;
  geom.d_x = params.d_x_m;

  const int n = params.n_antennas;
  geom.d_h = n >= 2 ? params.d_y_m / (n - 1) : 0.0;
  geom.y.resize(n);
  geom.c.resize(n);
  for (int i = 0; i < n; ++i) {
    // A single waveguide sits on the region centerline.
    geom.y[i] = n >= 2 ? i * geom.d_h - params.d_y_m / 2.0 : 0.0;
    geom.c[i] = geom.y[i] * geom.y[i] + params.d_v_m * params.d_v_m;
  }
  return geom;
}

double distance_sq(const Geometry& geom, int n, double x_grid, double x_ant) {
  if (n < 0 || n >= geom.n()) throw std::out_of_range("waveguide index out of range");
  const double dx = x_grid - x_ant;
  return dx * dx + geom.c[n];
}

double db_from_linear(double v) { return 10.0 * std::log10(v); }

double linear_from_db(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace pinchnet
