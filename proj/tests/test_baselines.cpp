#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pinchnet/baselines.hpp"

using namespace pinchnet;

TEST_SUITE("baselines") {

TEST_CASE("exhaustive_waveguide") {
  const SystemParams p = oracle::desk_params();
  const Geometry g = derive_geometry(p);

  SUBCASE("scan-set size for a lambda/5 step") {
    // ~28,000 evaluations across the 60 m region
    const double delta = g.lambda / 5.0;
    const long long count = static_cast<long long>(std::floor(g.d_x / delta)) + 1;
    CHECK(count > 27000);
    CHECK(count < 29000);
  }

  SUBCASE("result is the exact maximum of its scan set") {
    const TrafficMap map = sample_random_map(3, p);
    const GridField grid = discretize(map, p);
    const double delta = g.d_x / 600.0;
    const ScanResult best = exhaustive_waveguide(g, grid, 1, delta);
    for (int k = 0; k <= 600; ++k) {
      const double x = std::min(k * delta, g.d_x);
      CHECK(best.f >= f_n(g, grid, 1, x));
    }
    CHECK(best.f == doctest::Approx(f_n(g, grid, 1, best.x)));
  }

  SUBCASE("nested scan grids can only improve") {
    const TrafficMap map = sample_random_map(4, p);
    const GridField grid = discretize(map, p);
    for (int n : {0, 2, 5}) {
      const ScanResult coarse = exhaustive_waveguide(g, grid, n, g.d_x / 500.0);
      const ScanResult fine = exhaustive_waveguide(g, grid, n, g.d_x / 1000.0);
      CHECK(fine.f >= coarse.f);
    }
  }

  SUBCASE("single-cell traffic pins the optimum to the nearest scan point") {
    SystemParams q = p;
    q.n_antennas = 1;
    const Geometry g1 = derive_geometry(q);
    GridField cell = make_grid_field({23.4}, {0.0}, {1.0});
    const double delta = 1.0;
    const ScanResult best = exhaustive_waveguide(g1, cell, 0, delta);
    CHECK(best.x == doctest::Approx(23.0));
  }

  SUBCASE("argument validation") {
    const GridField cell = make_grid_field({10.0}, {0.0}, {1.0});
    SystemParams q = p;
    q.n_antennas = 1;
    CHECK_THROWS_AS(exhaustive_waveguide(derive_geometry(q), cell, 0, 0.0),
                    std::invalid_argument);
  }
}

TEST_CASE("projected_gradient_waveguide") {
  SystemParams p = oracle::desk_params();
  p.n_antennas = 1;
  const Geometry g = derive_geometry(p);

  SUBCASE("stationary start accepts nothing") {
    const TrafficMap map = oracle::one_hotspot(30.0, 0.0, 4.0, 20.0);
    const GridField grid = discretize(map, p);
    const auto best = oracle::scan_max(
        [&](double x) { return f_n(g, grid, 0, x); }, 0.0, g.d_x, 60001);
    const PgResult res =
        projected_gradient_waveguide(g, grid, 0, best.x, 100, p.eps_d);
    CHECK(res.accepted == 0);
    CHECK(res.x == best.x);
  }

  SUBCASE("single-hotspot objective converges to the center") {
    const TrafficMap map = oracle::one_hotspot(26.0, 0.0, 5.0, 25.0);
    const GridField grid = discretize(map, p);
    const auto best = oracle::scan_max(
        [&](double x) { return f_n(g, grid, 0, x); }, 0.0, g.d_x, 60001);
    const PgResult res = projected_gradient_waveguide(g, grid, 0, 10.0, 200, p.eps_d);
    CHECK(std::abs(res.x - best.x) <= p.eps_d + g.d_x / 60000.0);
    CHECK(res.f >= f_n(g, grid, 0, 10.0));
  }

  SUBCASE("split regime captures the lesser peak near its start") {
    TrafficMap map;
    map.hotspots = {{0.38, 15.0, 0.0, 2.0, 10.0}, {0.62, 45.0, 0.0, 2.0, 10.0}};
    const GridField grid = discretize(map, p);
    const auto fv = [&](double x) { return f_n(g, grid, 0, x); };
    // dense scan identifies the two peaks
    const auto left = oracle::scan_max(fv, 0.0, 30.0, 30001);
    const auto right = oracle::scan_max(fv, 30.0, 60.0, 30001);
    REQUIRE(left.f < right.f);

    const PgResult res = projected_gradient_waveguide(g, grid, 0, 15.0, 200, p.eps_d);
    CHECK(std::abs(res.x - left.x) <= 0.05);
    CHECK(res.f < right.f);
  }

  SUBCASE("accepted iterates never decrease the objective") {
    const TrafficMap map = sample_random_map(9, p);
    const GridField grid = discretize(map, p);
    const double x0 = 31.0;
    PgResult prev = projected_gradient_waveguide(g, grid, 0, x0, 1, p.eps_d);
    for (int k = 2; k <= 40; k += 3) {
      const PgResult cur = projected_gradient_waveguide(g, grid, 0, x0, k, p.eps_d);
      CHECK(cur.f >= prev.f);
      prev = cur;
    }
  }

  SUBCASE("argument validation") {
    const TrafficMap map = oracle::one_hotspot(30.0, 0.0, 4.0, 20.0);
    const GridField grid = discretize(map, p);
    CHECK_THROWS_AS(projected_gradient_waveguide(g, grid, 0, -1.0, 10, p.eps_d),
                    std::invalid_argument);
    CHECK_THROWS_AS(projected_gradient_waveguide(g, grid, 0, 5.0, 0, p.eps_d),
                    std::invalid_argument);
  }
}

TEST_CASE("hotspot_center_deployment") {
  const SystemParams p = oracle::desk_params();
  const Geometry g = derive_geometry(p);

  SUBCASE("weights-descending cycle for L=3, N=6") {
    TrafficMap map;
    map.hotspots = {{0.2, 10.0, 0.0, 3.0, 3.0},
                    {0.5, 25.0, 0.0, 3.0, 3.0},
                    {0.3, 40.0, 0.0, 3.0, 3.0}};
    const Deployment dep = hotspot_center_deployment(map, g);
    // descending weights: 25 (0.5), 40 (0.3), 10 (0.2), then repeat
    CHECK(dep.x == std::vector<double>{25.0, 40.0, 10.0, 25.0, 40.0, 10.0});
  }

  SUBCASE("L = N assigns each antenna its own hotspot") {
    SystemParams q = p;
    q.n_antennas = 3;
    TrafficMap map;
    map.hotspots = {{0.5, 12.0, 0.0, 3.0, 3.0},
                    {0.3, 33.0, 0.0, 3.0, 3.0},
                    {0.2, 51.0, 0.0, 3.0, 3.0}};
    const Deployment dep = hotspot_center_deployment(map, derive_geometry(q));
    CHECK(dep.x == std::vector<double>{12.0, 33.0, 51.0});
  }

  SUBCASE("L = 1 stacks everything on the single center, clipped") {
    const TrafficMap map = oracle::one_hotspot(75.0, 0.0, 4.0, 4.0);  // off-region
    const Deployment dep = hotspot_center_deployment(map, g);
    for (double x : dep.x) CHECK(x == 60.0);
    validate_deployment(dep, g);
  }
}

TEST_CASE("fixed_array_deployment") {
  SUBCASE("odd count centers the middle element") {
    SystemParams p = oracle::desk_params();
    p.n_antennas = 5;
    const Geometry g = derive_geometry(p);
    const Deployment dep = fixed_array_deployment(g);
    CHECK(dep.x[2] == doctest::Approx(g.d_x / 2.0));
    validate_deployment(dep, g);
  }

  SUBCASE("two elements straddle the center by a quarter wavelength") {
    SystemParams p = oracle::desk_params();
    p.n_antennas = 2;
    const Geometry g = derive_geometry(p);
    const Deployment dep = fixed_array_deployment(g);
    CHECK(dep.x[0] == doctest::Approx(g.d_x / 2.0 - g.lambda / 4.0));
    CHECK(dep.x[1] == doctest::Approx(g.d_x / 2.0 + g.lambda / 4.0));
  }

  SUBCASE("six elements span five half-wavelengths, about 2.7 cm") {
    const Geometry g = derive_geometry(oracle::desk_params());
    const Deployment dep = fixed_array_deployment(g);
    CHECK(dep.x.back() - dep.x.front() == doctest::Approx(5.0 * g.lambda / 2.0));
    CHECK(dep.x.back() - dep.x.front() == doctest::Approx(0.0268).epsilon(2e-3));
  }

  SUBCASE("array wider than the region is rejected") {
    SystemParams p = oracle::desk_params();
    p.d_x_m = 0.02;
    p.n_antennas = 6;  // needs ~2.7 cm
    CHECK_THROWS_AS(fixed_array_deployment(derive_geometry(p)), std::domain_error);
  }
}

}  // TEST_SUITE
