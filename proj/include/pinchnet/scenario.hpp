#pragma once

#include <stdexcept>
#include <vector>

namespace pinchnet {

inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s

/// Physical and numerical system inputs. Defaults match the reference
/// 28 GHz setup: 60 x 200 m region, six waveguides at 10 m height.
struct SystemParams {
  double f_c_hz = 28e9;      // carrier frequency
  double d_x_m = 60.0;       // region length along the waveguides
  double d_y_m = 200.0;      // region width
  double d_v_m = 10.0;       // waveguide height
  double p_dbm = 40.0;       // transmit power
  double sigma2_dbm = -70.0; // noise power
  double mu2_db = -60.0;     // aggregate NLoS gain, converted to linear downstream
  int n_antennas = 6;        // waveguides, one pinching antenna each
  int n_h = 400;             // grid columns
  int n_v = 120;             // grid rows
  double beta = 0.01;        // LoS blockage parameter, 1/m^2
  double eps_t = 1e-3;       // relative tolerance on SNR levels
  double eps_d = 1e-3;       // absolute tolerance on positions, m
  int n_hotspots = 3;
  double tau = 0.02;         // active-set threshold ratio

  void validate() const;  // throws std::invalid_argument
};

/// Constants derived once from SystemParams and consumed by every kernel.
struct Geometry {
  double rho;     // linear transmit SNR, P / sigma^2
  double eta;     // (c / (4 pi f_c))^2, m^2
  double lambda;  // free-space wavelength, m
  double d_h;     // waveguide spacing, m (0 for a single waveguide)
  double mu2;     // aggregate NLoS gain, linear
  double beta;    // LoS blockage parameter, 1/m^2
  double d_x;     // region length, m
  std::vector<double> y;  // per-waveguide y coordinate, m
  std::vector<double> c;  // per-waveguide constant y^2 + d_v^2, m^2

  int n() const { return static_cast<int>(c.size()); }
};

Geometry derive_geometry(const SystemParams& params);

/// Squared distance between antenna n at x_ant and a grid column at x_grid:
/// (x_grid - x_ant)^2 + C_n. The cell's y offset does not enter the model.
double distance_sq(const Geometry& geom, int n, double x_grid, double x_ant);

double db_from_linear(double v);
double linear_from_db(double db);

}  // namespace pinchnet
