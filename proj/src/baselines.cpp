#include "pinchnet/baselines.hpp"

#include <algorithm>
#include <cmath>

namespace pinchnet {

ScanResult exhaustive_waveguide(const Geometry& geom, const GridField& grid,
                                int n, double delta_x) {
  if (!(delta_x > 0.0)) throw std::invalid_argument("delta_x must be positive");
  ScanResult best{0.0, f_n(geom, grid, n, 0.0)};
  const long long steps = static_cast<long long>(std::floor(geom.d_x / delta_x));
  for (long long k = 1; k <= steps; ++k) {
    const double x = static_cast<double>(k) * delta_x;
    const double f = f_n(geom, grid, n, x);
    if (f > best.f) best = {x, f};
  }
  if (static_cast<double>(steps) * delta_x < geom.d_x) {
    const double f = f_n(geom, grid, n, geom.d_x);
    if (f > best.f) best = {geom.d_x, f};
  }
  return best;
}

PgResult projected_gradient_waveguide(const Geometry& geom, const GridField& grid,
                                      int n, double x0, int k_max, double eps_d) {
  if (!(x0 >= 0.0 && x0 <= geom.d_x))
    throw std::invalid_argument("x0 outside [0, D_x]");
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  if (!(eps_d > 0.0)) throw std::invalid_argument("eps_d must be positive");

  const double step0 = geom.d_x / 10.0;
  PgResult res;
  res.x = x0;
  res.f = f_n(geom, grid, n, x0);
  double step = step0;
  for (int k = 0; k < k_max && step >= eps_d; ++k) {
    ++res.iterations;
    const double dir = f_n_prime(geom, grid, n, res.x) >= 0.0 ? 1.0 : -1.0;
    const double cand = std::clamp(res.x + dir * step, 0.0, geom.d_x);
    const double f_cand = f_n(geom, grid, n, cand);
    if (f_cand > res.f) {
      res.x = cand;
      res.f = f_cand;
      ++res.accepted;
      step = step0;
    } else {
      step *= 0.5;
    }
  }
  return res;
}

Deployment hotspot_center_deployment(const TrafficMap& map, const Geometry& geom) {
  map.validate();
  std::vector<const Hotspot*> order;
  order.reserve(map.hotspots.size());
  for (const Hotspot& h : map.hotspots) order.push_back(&h);
  std::stable_sort(order.begin(), order.end(),
                   [](const Hotspot* a, const Hotspot* b) { return a->alpha > b->alpha; });

  Deployment dep;
  dep.x.resize(geom.n());
  for (int n = 0; n < geom.n(); ++n)
    dep.x[n] = std::clamp(order[n % order.size()]->mu_x, 0.0, geom.d_x);
  return dep;
}

Deployment fixed_array_deployment(const Geometry& geom) {
  Deployment dep;
  dep.x.resize(geom.n());
  const double mid = 0.5 * (geom.n() + 1);
  for (int n = 0; n < geom.n(); ++n) {
    dep.x[n] = geom.d_x / 2.0 + ((n + 1) - mid) * geom.lambda / 2.0;
    if (!(dep.x[n] >= 0.0 && dep.x[n] <= geom.d_x))
      throw std::domain_error("fixed array does not fit inside the region");
  }
  return dep;
}

}  // namespace pinchnet
