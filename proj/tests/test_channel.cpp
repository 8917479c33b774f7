#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pinchnet/channel.hpp"

using namespace pinchnet;

namespace {

GridField desk_grid(const TrafficMap& map) {
  return discretize(map, oracle::desk_params());
}

Deployment random_deployment(const Geometry& geom, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ux(0.0, geom.d_x);
  Deployment dep;
  dep.x.resize(geom.n());
  for (double& x : dep.x) x = ux(rng);
  return dep;
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("g_term: closed form, evenness, monotone decay") {
  SystemParams p;
  const Geometry g = derive_geometry(p);

  SUBCASE("beta = 0 reduces to an inverse-square law") {
    SystemParams p0 = p;
    p0.beta = 0.0;
    const Geometry g0 = derive_geometry(p0);
    const double s = distance_sq(g0, 1, 17.0, 4.0);
    CHECK(g_term(g0, 1, 17.0, 4.0) ==
          doctest::Approx(g0.rho * (g0.eta + g0.mu2) / s).epsilon(1e-12));
  }

  SUBCASE("zero offset attains the per-antenna peak") {
    const double peak = g_term(g, 2, 25.0, 25.0);
    CHECK(peak == doctest::Approx(g.rho * (g.eta * std::exp(-g.beta * g.c[2]) + g.mu2) /
                                  g.c[2]));
    for (double d : {0.5, 1.0, 5.0, 20.0}) CHECK(g_term(g, 2, 25.0, 25.0 + d) < peak);
  }

  SUBCASE("even in the offset and strictly decreasing in its magnitude") {
    const double xu = 33.0;
    double prev = g_term(g, 0, xu, xu);
    for (double d : {0.25, 1.0, 3.0, 9.0, 27.0}) {
      CHECK(g_term(g, 0, xu, xu + d) ==
            doctest::Approx(g_term(g, 0, xu, xu - d)).epsilon(1e-13));
      const double cur = g_term(g, 0, xu, xu + d);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("avg_snr_grid: single antenna over a single cell") {
  SystemParams p;
  p.n_antennas = 1;
  const Geometry g = derive_geometry(p);
  const GridField cell = make_grid_field({12.0}, {0.0}, {1.0});
  const SnrField snr = avg_snr_grid(g, cell, Deployment{{12.0}});
  const double expected =
      g.rho * (g.eta * std::exp(-g.beta * g.c[0]) + g.mu2) / g.c[0];
  CHECK(snr.at(0, 0) == doctest::Approx(expected).epsilon(1e-12));

  // moving the antenna away strictly lowers the cell's average SNR
  double prev = snr.at(0, 0);
  for (double x : {14.0, 20.0, 35.0, 60.0}) {
    const double cur = avg_snr_grid(g, cell, Deployment{{x}}).at(0, 0);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("avg_snr_grid entries are positive; deployments validated") {
  const Geometry g = derive_geometry(oracle::desk_params());
  const GridField grid = desk_grid(oracle::one_hotspot(20.0, 10.0, 6.0, 30.0));
  std::mt19937_64 rng(11);
  const Deployment dep = random_deployment(g, rng);
  const SnrField snr = avg_snr_grid(g, grid, dep);
  for (double v : snr.gamma) CHECK(v > 0.0);

  CHECK_THROWS_AS(avg_snr_grid(g, grid, Deployment{{1.0}}), std::invalid_argument);
  Deployment out = dep;
  out.x[0] = -0.5;
  CHECK_THROWS_AS(avg_snr_grid(g, grid, out), std::invalid_argument);
}

TEST_CASE("network_avg: weighting and shape checks") {
  const Geometry g = derive_geometry(oracle::desk_params());

  // mass on one cell returns that cell's SNR
  GridField spiky = make_grid_field({10.0, 30.0, 50.0}, {-20.0, 20.0},
                                    {0.0, 0.0, 1.0, 0.0, 0.0, 0.0});
  Deployment dep;
  dep.x.assign(g.n(), 22.0);
  const SnrField snr = avg_snr_grid(g, spiky, dep);
  CHECK(network_avg(snr, spiky) == doctest::Approx(snr.at(1, 0)).epsilon(1e-12));

  // uniform weights give the plain mean
  GridField uniform = make_grid_field({10.0, 30.0, 50.0}, {-20.0, 20.0},
                                      {1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
  const SnrField snr_u = avg_snr_grid(g, uniform, dep);
  double mean = 0.0;
  for (double v : snr_u.gamma) mean += v;
  mean /= snr_u.gamma.size();
  CHECK(network_avg(snr_u, uniform) == doctest::Approx(mean).epsilon(1e-12));

  GridField other = make_grid_field({1.0, 2.0}, {0.0}, {1.0, 1.0});
  CHECK_THROWS_AS(network_avg(snr, other), std::invalid_argument);
}

TEST_CASE("separability: network average equals the sum of per-waveguide terms") {
  const Geometry g = derive_geometry(oracle::desk_params());
  TrafficMap map;
  map.hotspots = {{0.5, 14.0, -40.0, 9.0, 40.0},
                  {0.3, 41.0, 30.0, 9.0, 40.0},
                  {0.2, 28.0, 80.0, 9.0, 40.0}};
  const GridField grid = desk_grid(map);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Deployment dep = random_deployment(g, rng);
    const double net = network_avg(avg_snr_grid(g, grid, dep), grid);
    double split = 0.0;
    for (int n = 0; n < g.n(); ++n) split += f_n(g, grid, n, dep.x[n]);
    CHECK(std::abs(net - split) <= 1e-10 * net);
  }
}

TEST_CASE("f_n: peak location, symmetry") {
  const Geometry g = derive_geometry(oracle::desk_params());

  SUBCASE("single interior hotspot peaks at its center") {
    const GridField grid = desk_grid(oracle::one_hotspot(26.0, 0.0, 4.0, 25.0));
    for (int n : {0, 2}) {
      const auto best = oracle::scan_max(
          [&](double x) { return f_n(g, grid, n, x); }, 0.0, g.d_x, 10001);
      CHECK(std::abs(best.x - 26.0) <= g.d_x / 10000.0 + 1e-9);
    }
  }

  SUBCASE("map symmetric about the region midline gives a symmetric f_n") {
    TrafficMap map;
    map.hotspots = {{0.5, 20.0, -30.0, 5.0, 20.0}, {0.5, 40.0, 30.0, 5.0, 20.0}};
    const GridField grid = desk_grid(map);
    for (double z : {1.0, 7.0, 13.0, 22.0, 29.0}) {
      const double left = f_n(g, grid, 1, g.d_x / 2.0 - z);
      const double right = f_n(g, grid, 1, g.d_x / 2.0 + z);
      CHECK(std::abs(left - right) <= 1e-10 * left);
    }
  }
}

TEST_CASE("f_n_prime: analytic derivative properties") {
  const Geometry g = derive_geometry(oracle::desk_params());

  SUBCASE("zero at the symmetry axis") {
    TrafficMap map;
    map.hotspots = {{0.5, 22.0, 0.0, 5.0, 20.0}, {0.5, 38.0, 0.0, 5.0, 20.0}};
    const GridField grid = desk_grid(map);
    double scale = 0.0;
    for (int i = 0; i <= 100; ++i)
      scale = std::max(scale, std::abs(f_n_prime(g, grid, 2, g.d_x * i / 100.0)));
    CHECK(std::abs(f_n_prime(g, grid, 2, g.d_x / 2.0)) <= 1e-12 * scale);
  }

  SUBCASE("positive left of all grid mass") {
    const GridField grid = desk_grid(oracle::one_hotspot(45.0, 0.0, 5.0, 25.0));
    CHECK(f_n_prime(g, grid, 0, 0.0) > 0.0);
    CHECK(f_n_prime(g, grid, 3, 0.0) > 0.0);
  }

  SUBCASE("matches central finite differences") {
    TrafficMap map;
    map.hotspots = {{0.7, 18.0, -50.0, 7.0, 30.0}, {0.3, 47.0, 40.0, 5.0, 22.0}};
    const GridField grid = desk_grid(map);
    const double h = 1e-4;
    for (int n = 0; n < g.n(); ++n) {
      const auto f = [&](double x) { return f_n(g, grid, n, x); };
      double scale = 0.0;
      for (int i = 0; i <= 100; ++i)
        scale = std::max(scale, std::abs(f_n_prime(g, grid, n, g.d_x * i / 100.0)));
      for (int i = 0; i <= 100; ++i) {
        const double x = g.d_x * i / 100.0;
        const double analytic = f_n_prime(g, grid, n, x);
        if (std::abs(analytic) < 1e-12 * scale) continue;
        const double fd = oracle::central_diff(f, x, h);
        CHECK(std::abs(analytic - fd) <= 1e-6 * std::abs(analytic));
      }
    }
  }
}

TEST_CASE("mc_oracle: limiting regimes and determinism") {
  SystemParams p;
  p.n_antennas = 3;

  SUBCASE("LoS never present: mean matches the NLoS-only closed form") {
    SystemParams q = p;
    q.beta = 10.0;  // e^{-beta r^2} underflows for r^2 >= C_n
    const Geometry g = derive_geometry(q);
    const Deployment dep{{5.0, 30.0, 55.0}};
    const double x_grid = 20.0;
    double expected = 0.0;
    for (int n = 0; n < g.n(); ++n)
      expected += g.rho * g.mu2 / distance_sq(g, n, x_grid, dep.x[n]);
    const McEstimate mc = mc_oracle(g, x_grid, dep, 20000, 5);
    CHECK(std::abs(mc.mean - expected) <= 3.0 * mc.std_error);
  }

  SUBCASE("beta = 0 and mu^2 = 0: every sample equals the LoS power exactly") {
    SystemParams q = p;
    q.beta = 0.0;
    q.mu2_db = -4000.0;  // underflows to zero linear gain
    const Geometry g = derive_geometry(q);
    REQUIRE(g.mu2 == 0.0);
    const Deployment dep{{5.0, 30.0, 55.0}};
    const double x_grid = 41.0;
    double expected = 0.0;
    for (int n = 0; n < g.n(); ++n)
      expected += g.rho * g.eta / distance_sq(g, n, x_grid, dep.x[n]);
    const McEstimate mc = mc_oracle(g, x_grid, dep, 500, 6);
    CHECK(mc.mean == doctest::Approx(expected).epsilon(1e-12));
    CHECK(mc.std_error <= 1e-12 * expected);
  }

  SUBCASE("default parameters agree with the closed form within 3 standard errors") {
    const Geometry g = derive_geometry(SystemParams{});
    const Deployment dep{{10.0, 50.0, 25.0, 33.0, 8.0, 47.0}};
    const double x_grid = 31.0;
    double closed = 0.0;
    for (int n = 0; n < g.n(); ++n) closed += g_term(g, n, x_grid, dep.x[n]);
    const McEstimate mc = mc_oracle(g, x_grid, dep, 100000, 7);
    CHECK(std::abs(mc.mean - closed) <= 3.0 * mc.std_error);
    CHECK(mc.std_error > 0.0);
  }

  SUBCASE("deterministic given the seed") {
    const Geometry g = derive_geometry(SystemParams{});
    const Deployment dep{{10.0, 50.0, 25.0, 33.0, 8.0, 47.0}};
    const McEstimate a = mc_oracle(g, 12.0, dep, 2000, 123);
    const McEstimate b = mc_oracle(g, 12.0, dep, 2000, 123);
    const McEstimate c = mc_oracle(g, 12.0, dep, 2000, 124);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.mean != c.mean);
  }
}

}  // TEST_SUITE
