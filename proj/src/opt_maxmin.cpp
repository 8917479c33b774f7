#include "pinchnet/opt_maxmin.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace pinchnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_waveguide_index(const Geometry& geom, int n) {
  if (n < 0 || n >= geom.n()) throw std::out_of_range("waveguide index out of range");
}

}  // namespace

ResidualField residual(const Geometry& geom, const ActiveSet& active,
                       const GridField& grid, const Deployment& dep, int n) {
  check_waveguide_index(geom, n);
  validate_deployment(dep, geom);
  ResidualField res;
  res.a.reserve(active.members.size());
  int last_u = -1;
  double col = 0.0;
  for (const auto& [u, v] : active.members) {
    if (u != last_u) {
      col = 0.0;
      for (int m = 0; m < geom.n(); ++m)
        if (m != n) col += g_term(geom, m, grid.x[u], dep.x[m]);
      last_u = u;
    }
    res.a.push_back(col);
  }
  return res;
}

std::optional<double> half_width(const Geometry& geom, int n, double a_uv,
                                 double x_u, double t, double eps_d) {
  check_waveguide_index(geom, n);
  if (!(t > 0.0)) throw std::invalid_argument("half_width: level must be positive");
  if (!(eps_d > 0.0)) throw std::invalid_argument("half_width: eps_d must be positive");
  if (a_uv >= t) return kInf;

  const auto value = [&](double d) { return a_uv + g_term(geom, n, x_u, x_u + d); };
  const double peak = value(0.0);
  if (peak < t) return std::nullopt;
  if (peak == t) return 0.0;

  // g is even in d and strictly decreasing in |d|, so the boundary offset is
  // unique; expand geometrically to straddle it, then bisect.
  double lo = 0.0;
  double hi = eps_d;
  while (value(hi) >= t) {
    lo = hi;
    hi *= 2.0;
    if (std::isinf(hi)) return kInf;  // unreachable for t > a_uv, kept as a guard
  }
  while (hi - lo > eps_d) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (value(mid) >= t ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

FeasInterval feasible_set(const Geometry& geom, const ActiveSet& active,
                          const ResidualField& residuals, const GridField& grid,
                          int n, double t, double eps_d) {
  if (residuals.a.size() != active.members.size())
    throw std::invalid_argument("residual entries do not match the active set");
  FeasInterval iv;
  iv.lo = 0.0;
  iv.hi = geom.d_x;
  iv.empty = false;
  int last_u = -1;
  for (size_t i = 0; i < active.members.size(); ++i) {
    const int u = active.members[i].first;
    if (u == last_u) continue;  // same column, same interval
    last_u = u;
    const std::optional<double> d = half_width(geom, n, residuals.a[i], grid.x[u], t, eps_d);
    if (!d) return FeasInterval{};
    if (std::isinf(*d)) continue;
    iv.lo = std::max(iv.lo, grid.x[u] - *d);
    iv.hi = std::min(iv.hi, grid.x[u] + *d);
    if (iv.lo > iv.hi) return FeasInterval{};
  }
  return iv;
}

double worst_active_snr(const Geometry& geom, const ActiveSet& active,
                        const GridField& grid, const Deployment& dep,
                        std::pair<int, int>* argmin) {
  validate_deployment(dep, geom);
  if (active.members.empty()) throw std::invalid_argument("active set is empty");
  double worst = kInf;
  int last_u = -1;
  double col = 0.0;
  for (const auto& member : active.members) {
    if (member.first != last_u) {
      col = 0.0;
      for (int m = 0; m < geom.n(); ++m)
        col += g_term(geom, m, grid.x[member.first], dep.x[m]);
      last_u = member.first;
    }
    if (col < worst) {
      worst = col;
      if (argmin) *argmin = member;
    }
  }
  return worst;
}

CoordinateStep coordinate_update(const Geometry& geom, const ActiveSet& active,
                                 const GridField& grid, const Deployment& dep,
                                 int n, double eps_t, double eps_d) {
  check_waveguide_index(geom, n);
  if (active.members.empty()) throw std::invalid_argument("active set is empty");
  if (!(eps_t > 0.0)) throw std::invalid_argument("coordinate_update: eps_t must be positive");

  const ResidualField res = residual(geom, active, grid, dep, n);
  const auto worst_with = [&](double x) {
    double worst = kInf;
    int last_u = -1;
    for (size_t i = 0; i < active.members.size(); ++i) {
      const int u = active.members[i].first;
      if (u == last_u) continue;
      last_u = u;
      worst = std::min(worst, res.a[i] + g_term(geom, n, grid.x[u], x));
    }
    return worst;
  };

  // The current position keeps t_lo feasible; the smallest per-column peak
  // makes every level above t_hi infeasible.
  double t_lo = worst_with(dep.x[n]);
  const double g_peak = g_term(geom, n, 0.0, 0.0);
  double t_hi = kInf;
  {
    int last_u = -1;
    for (size_t i = 0; i < active.members.size(); ++i) {
      const int u = active.members[i].first;
      if (u == last_u) continue;
      last_u = u;
      t_hi = std::min(t_hi, res.a[i] + g_peak);
    }
  }
  if (!(t_lo > 0.0)) return {dep.x[n], t_lo};

  FeasInterval best = feasible_set(geom, active, res, grid, n, t_lo, eps_d);
  if (best.empty) return {dep.x[n], t_lo};  // guards against half-width slack

  while (t_hi - t_lo > eps_t * t_lo) {
    const double t_mid = 0.5 * (t_lo + t_hi);
    if (t_mid <= t_lo || t_mid >= t_hi) break;
    const FeasInterval iv = feasible_set(geom, active, res, grid, n, t_mid, eps_d);
    if (!iv.empty) {
      t_lo = t_mid;
      best = iv;
    } else {
      t_hi = t_mid;
    }
  }
  const double x_star = 0.5 * (best.lo + best.hi);
  return {x_star, worst_with(x_star)};
}

MaxMinReport optimize_maxmin(const Geometry& geom, const GridField& grid,
                             const ActiveSet& active, Deployment dep0,
                             int max_sweeps, double eps_t, double eps_d) {
  validate_deployment(dep0, geom);
  if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();

  MaxMinReport rep;
  Deployment dep = std::move(dep0);
  double worst = worst_active_snr(geom, active, grid, dep, nullptr);
  rep.trace.push_back(worst);

  int performed = 0;
  while (performed < max_sweeps) {
    const double sweep_start = worst;
    for (int n = 0; n < geom.n(); ++n) {
      const CoordinateStep step = coordinate_update(geom, active, grid, dep, n, eps_t, eps_d);
      const double old_x = dep.x[n];
      dep.x[n] = step.x;
      const double w = worst_active_snr(geom, active, grid, dep, nullptr);
      if (w >= worst) {
        worst = w;
      } else {
        dep.x[n] = old_x;  // keep the trace non-decreasing under solver slack
      }
      rep.trace.push_back(worst);
    }
    ++performed;
    if (worst - sweep_start < eps_t * sweep_start) break;
  }

  rep.sweeps = performed;
  rep.deployment = std::move(dep);
  rep.worst_snr = worst_active_snr(geom, active, grid, rep.deployment, &rep.worst_grid);
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace pinchnet
