#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mvtora/mobility.hpp"

using namespace mvtora;

namespace {
MobilityParams default_params() { return MobilityParams{}; }
}  // namespace

TEST_CASE("placement count follows the spatial Poisson intensity") {
  MobilityParams p = default_params();
  p.vehicle_density_per_km2 = 200.0;
  const int runs = 3000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < runs; ++i) {
    RngStream rng(1000 + i, StreamPurpose::placement);
    const auto vehicles = place_vehicles(2000.0, 2000.0, p, 0.0, 1e9, rng);
    const double k = static_cast<double>(vehicles.size());
    sum += k;
    sum_sq += k * k;
  }
  const double mean = sum / runs;
  const double stddev = std::sqrt(sum_sq / runs - mean * mean);
  CHECK(std::abs(mean - 800.0) < 2.5);     // se of the mean ~ 0.52
  CHECK(std::abs(stddev - 28.2843) < 2.0);  // Poisson std = sqrt(800)
}

TEST_CASE("vanishing intensity places nothing") {
  MobilityParams p = default_params();
  p.vehicle_density_per_km2 = 1e-9;
  RngStream rng(5, StreamPurpose::placement);
  CHECK(place_vehicles(2000.0, 2000.0, p, 0.0, 1e9, rng).empty());
}

TEST_CASE("placed vehicles satisfy the state invariants") {
  MobilityParams p = default_params();
  RngStream rng(17, StreamPurpose::placement);
  const auto vehicles = place_vehicles(2000.0, 2000.0, p, 0.0, 1e9, rng);
  REQUIRE(!vehicles.empty());
  for (const auto& v : vehicles) {
    CHECK(v.position_m.z == 0.0);
    CHECK(std::abs(v.position_m.x) <= 1000.0);
    CHECK(std::abs(v.position_m.y) <= 1000.0);
    CHECK(v.speed_mps >= p.speed_min);
    CHECK(v.speed_mps <= p.speed_max);
    CHECK(v.heading_rad >= p.heading_min);
    CHECK(v.heading_rad <= p.heading_max);
    CHECK(v.idle_freq_hz >= 0.0);
    CHECK(v.idle_freq_hz <= 1e9);
  }
}

TEST_CASE("full memory degree freezes speed and heading") {
  MobilityParams p = default_params();
  p.memory_degree = 1.0;
  VehicleState v{{0, 0, 0}, 7.5, 0.3, 5e8};
  RngStream rng(2, StreamPurpose::mobility);
  const VehicleState next = step_vehicle(v, p, 2000.0, 2000.0, rng);
  CHECK(next.speed_mps == 7.5);
  CHECK(next.heading_rad == 0.3);
}

TEST_CASE("memoryless noiseless step lands on the asymptotic mean") {
  MobilityParams p = default_params();
  p.memory_degree = 0.0;
  p.speed_std = 0.0;
  p.heading_std = 0.0;
  VehicleState v{{0, 0, 0}, 3.0, 1.0, 5e8};
  RngStream rng(2, StreamPurpose::mobility);
  const VehicleState next = step_vehicle(v, p, 2000.0, 2000.0, rng);
  CHECK(next.speed_mps == doctest::Approx(p.mean_speed_mps));
  CHECK(next.heading_rad == doctest::Approx(p.mean_heading_rad));
}

TEST_CASE("position advances with the pre-update kinematics") {
  MobilityParams p = default_params();
  VehicleState v{{0, 0, 0}, 10.0, 0.0, 5e8};
  RngStream rng(2, StreamPurpose::mobility);
  const VehicleState next = step_vehicle(v, p, 2000.0, 2000.0, rng);
  CHECK(next.position_m.x == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(next.position_m.y == doctest::Approx(0.0));
}

TEST_CASE("steps never leave the speed and heading bounds") {
  MobilityParams p = default_params();
  p.speed_std = 50.0;  // violent noise to exercise the clamp
  p.heading_std = 50.0;
  VehicleState v{{0, 0, 0}, 10.0, 0.0, 5e8};
  RngStream rng(23, StreamPurpose::mobility);
  for (int i = 0; i < 2000; ++i) {
    v = step_vehicle(v, p, 2000.0, 2000.0, rng);
    CHECK(v.speed_mps >= p.speed_min);
    CHECK(v.speed_mps <= p.speed_max);
    CHECK(v.heading_rad >= p.heading_min);
    CHECK(v.heading_rad <= p.heading_max);
    CHECK(std::abs(v.position_m.x) <= 1000.0);
    CHECK(std::abs(v.position_m.y) <= 1000.0);
  }
}

TEST_CASE("unclamped process converges to the Gauss-Markov fixed point") {
  MobilityParams p = default_params();
  p.memory_degree = 0.85;
  p.mean_speed_mps = 10.0;
  p.speed_std = 2.0;
  p.speed_min = -1e18;  // clamping disabled
  p.speed_max = 1e18;
  p.heading_min = -1e18;
  p.heading_max = 1e18;
  VehicleState v{{0, 0, 0}, 0.0, 0.0, 5e8};
  RngStream rng(31, StreamPurpose::mobility);
  const int n = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    v = step_vehicle(v, p, 2000.0, 2000.0, rng);
    sum += v.speed_mps;
    sum_sq += v.speed_mps * v.speed_mps;
  }
  const double mean = sum / n;
  const double variance = sum_sq / n - mean * mean;
  CHECK(std::abs(mean - 10.0) / 10.0 < 0.05);
  CHECK(std::abs(variance - 4.0) / 4.0 < 0.05);
}

TEST_CASE("C-UAV trajectory is a circle at fixed altitude") {
  CUavState c;
  c.grid_center_m = {200.0, -200.0, 0.0};
  c.orbit_phase_rad = 0.7;
  c.speed_mps = 20.0;
  for (int t : {0, 1, 5, 17, 113}) {
    const CUavState at = step_cuav(c, t, 100.0, 100.0, 1.0);
    CHECK(ground_distance(at.position_m, c.grid_center_m) == doctest::Approx(100.0));
    CHECK(at.position_m.z == doctest::Approx(100.0));
  }
}

TEST_CASE("C-UAV orbit period equals circumference over speed") {
  CUavState c;
  c.grid_center_m = {0.0, 0.0, 0.0};
  c.orbit_phase_rad = 0.25;
  c.speed_mps = 20.0;
  // slot duration pi/2 makes the 10*pi-second period exactly 20 slots
  const double slot = M_PI / 2;
  const CUavState start = step_cuav(c, 0, 100.0, 100.0, slot);
  const CUavState after = step_cuav(c, 20, 100.0, 100.0, slot);
  CHECK(after.position_m.x == doctest::Approx(start.position_m.x).epsilon(1e-9));
  CHECK(after.position_m.y == doctest::Approx(start.position_m.y).epsilon(1e-9));
  // consecutive slots are one chord of the arc apart
  const CUavState one = step_cuav(c, 1, 100.0, 100.0, 1.0);
  const CUavState zero = step_cuav(c, 0, 100.0, 100.0, 1.0);
  const double chord = distance(one.position_m, zero.position_m);
  CHECK(chord == doctest::Approx(2.0 * 100.0 * std::sin(0.1)).epsilon(1e-9));
}
