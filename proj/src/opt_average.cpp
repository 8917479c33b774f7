#include "pinchnet/opt_average.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace pinchnet {

std::string to_string(StationaryKind kind) {
  switch (kind) {
    case StationaryKind::kLocalMax: return "local-max";
    case StationaryKind::kLocalMin: return "local-min";
    case StationaryKind::kFlat: return "flat-undetermined";
  }
  return "unknown";
}

std::vector<Bracket> bracket_sign_changes(const ScalarFn& f_prime, double a,
                                          double b, int j) {
  if (!(a < b)) throw std::invalid_argument("bracket_sign_changes: need a < b");
  if (j < 1) throw std::invalid_argument("bracket_sign_changes: need j >= 1");
  std::vector<double> xs(j + 1), ys(j + 1);
  for (int i = 0; i <= j; ++i) {
    xs[i] = a + (b - a) * i / j;
    ys[i] = f_prime(xs[i]);
  }
  std::vector<Bracket> out;
  for (int i = 0; i <= j; ++i)
    if (ys[i] == 0.0) out.push_back({xs[i], xs[i]});
  for (int i = 0; i < j; ++i)
    if (ys[i] * ys[i + 1] < 0.0) out.push_back({xs[i], xs[i + 1]});
  std::sort(out.begin(), out.end(),
            [](const Bracket& l, const Bracket& r) { return l.lo < r.lo; });
  return out;
}

Bracket refine_bracket(const ScalarFn& f_prime, Bracket bracket, double eps_d) {
  if (!(eps_d > 0.0)) throw std::invalid_argument("refine_bracket: eps_d must be positive");
  double a = bracket.lo;
  double b = bracket.hi;
  if (a == b) return bracket;
  if (!(a < b)) throw std::invalid_argument("refine_bracket: malformed bracket");
  double fa = f_prime(a);
  if (fa == 0.0) return {a, a};
  const double fb = f_prime(b);
  if (fb == 0.0) return {b, b};
  if (fa * fb > 0.0)
    throw std::invalid_argument("refine_bracket: no sign change across bracket");
  while (b - a > eps_d) {
    const double c = 0.5 * (a + b);
    if (c <= a || c >= b) break;  // interval at floating-point resolution
    const double fc = f_prime(c);
    if (fa * fc <= 0.0) {
      b = c;
    } else {
      a = c;
      fa = fc;
    }
  }
  return {a, b};
}

double bisect_root(const ScalarFn& f_prime, Bracket bracket, double eps_d) {
  const Bracket r = refine_bracket(f_prime, bracket, eps_d);
  return 0.5 * (r.lo + r.hi);
}

StationaryKind classify(const ScalarFn& f_prime, double root, double probe) {
  if (!(probe > 0.0)) throw std::invalid_argument("classify: probe must be positive");
  const double left = f_prime(root - probe);
  const double right = f_prime(root + probe);
  if (left > 0.0 && right < 0.0) return StationaryKind::kLocalMax;
  if (left < 0.0 && right > 0.0) return StationaryKind::kLocalMin;
  return StationaryKind::kFlat;
}

WaveguideResult optimize_waveguide(const Geometry& geom, const GridField& grid,
                                   const TrafficMap& map, int n,
                                   const AvgOptions& opt) {
  map.validate();
  const double d_x = geom.d_x;
  const auto fp = [&](double x) { return f_n_prime(geom, grid, n, x); };

  std::vector<double> centers;
  centers.reserve(map.hotspots.size());
  for (const Hotspot& h : map.hotspots)
    centers.push_back(std::clamp(h.mu_x, 0.0, d_x));
  std::sort(centers.begin(), centers.end());

  // Partition [0, D_x] by the sorted centers. Searching the two outer
  // segments as well covers maps whose mass is truncated at the region
  // boundary; there the peak can drift outside the center hull.
  std::vector<double> knots{0.0};
  knots.insert(knots.end(), centers.begin(), centers.end());
  knots.push_back(d_x);

  WaveguideResult res;
  res.n = n;
  for (size_t k = 0; k + 1 < knots.size(); ++k) {
    const double a = knots[k];
    const double b = knots[k + 1];
    if (!(b - a > opt.eps_d)) continue;  // coincident or clipped-together knots
    for (const Bracket& coarse : bracket_sign_changes(fp, a, b, opt.j_subintervals)) {
      const Bracket fine = refine_bracket(fp, coarse, opt.eps_d);
      const double root = 0.5 * (fine.lo + fine.hi);
      const StationaryKind kind = classify(fp, root, opt.eps_d);
      res.stationary.push_back(
          {root, kind, fine.lo, fine.hi, f_n(geom, grid, n, root)});
    }
  }

  res.candidate_xs = {0.0, d_x};
  res.candidate_xs.insert(res.candidate_xs.end(), centers.begin(), centers.end());
  for (const StationaryPoint& sp : res.stationary)
    if (sp.kind != StationaryKind::kLocalMin) res.candidate_xs.push_back(sp.x);
  std::sort(res.candidate_xs.begin(), res.candidate_xs.end());

  res.chosen_x = res.candidate_xs.front();
  res.chosen_f = f_n(geom, grid, n, res.chosen_x);
  for (size_t i = 1; i < res.candidate_xs.size(); ++i) {
    const double f = f_n(geom, grid, n, res.candidate_xs[i]);
    if (f > res.chosen_f) {
      res.chosen_f = f;
      res.chosen_x = res.candidate_xs[i];
    }
  }
  return res;
}

AvgOptReport optimize_average(const Geometry& geom, const GridField& grid,
                              const TrafficMap& map, const AvgOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  AvgOptReport rep;
  rep.deployment.x.resize(geom.n());
  rep.objective = 0.0;
  rep.per_n.reserve(geom.n());
  for (int n = 0; n < geom.n(); ++n) {
    rep.per_n.push_back(optimize_waveguide(geom, grid, map, n, opt));
    rep.deployment.x[n] = rep.per_n.back().chosen_x;
    rep.objective += rep.per_n.back().chosen_f;
  }
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace pinchnet
