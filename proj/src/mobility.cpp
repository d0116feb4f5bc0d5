#include "mvtora/mobility.hpp"

#include <algorithm>
#include <cmath>

namespace mvtora {

namespace {

double wrap(double value, double lo, double hi) {
  const double span = hi - lo;
  double r = std::fmod(value - lo, span);
  if (r < 0.0) r += span;
  return lo + r;
}

}  // namespace

std::vector<VehicleState> place_vehicles(double area_width_m, double area_height_m,
                                         const MobilityParams& params,
                                         double freq_lo_hz, double freq_hi_hz,
                                         RngStream& rng) {
  const double area_km2 = (area_width_m / 1000.0) * (area_height_m / 1000.0);
  const long count = rng.poisson(params.vehicle_density_per_km2 * area_km2);
  std::vector<VehicleState> vehicles(static_cast<std::size_t>(count));
  for (auto& v : vehicles) {
    v.position_m = {rng.uniform(-area_width_m / 2, area_width_m / 2),
                    rng.uniform(-area_height_m / 2, area_height_m / 2), 0.0};
    v.speed_mps = rng.uniform(params.speed_min, params.speed_max);
    v.heading_rad = rng.uniform(params.heading_min, params.heading_max);
    v.idle_freq_hz = rng.uniform(freq_lo_hz, freq_hi_hz);
  }
  return vehicles;
}

VehicleState step_vehicle(const VehicleState& v, const MobilityParams& params,
                          double area_width_m, double area_height_m, RngStream& rng) {
  const double a = params.memory_degree;
  const double noise = std::sqrt(std::max(0.0, 1.0 - a * a));
  VehicleState next = v;

  const double speed =
      a * v.speed_mps + (1.0 - a) * params.mean_speed_mps + noise * rng.normal(0.0, params.speed_std);
  const double heading = a * v.heading_rad + (1.0 - a) * params.mean_heading_rad +
                         noise * rng.normal(0.0, params.heading_std);
  next.speed_mps = std::clamp(speed, params.speed_min, params.speed_max);
  next.heading_rad = std::clamp(heading, params.heading_min, params.heading_max);

  // position advances with the pre-update speed and heading
  next.position_m.x = v.position_m.x + v.speed_mps * std::cos(v.heading_rad) * params.slot_duration_s;
  next.position_m.y = v.position_m.y + v.speed_mps * std::sin(v.heading_rad) * params.slot_duration_s;
  next.position_m.x = wrap(next.position_m.x, -area_width_m / 2, area_width_m / 2);
  next.position_m.y = wrap(next.position_m.y, -area_height_m / 2, area_height_m / 2);
  return next;
}

CUavState step_cuav(const CUavState& c, int slot, double orbit_radius_m,
                    double altitude_m, double slot_duration_s) {
  CUavState next = c;
  const double angular_speed = c.speed_mps / orbit_radius_m;
  const double angle = c.orbit_phase_rad + angular_speed * slot_duration_s * slot;
  next.position_m = {c.grid_center_m.x + orbit_radius_m * std::cos(angle),
                     c.grid_center_m.y + orbit_radius_m * std::sin(angle), altitude_m};
  next.heading_rad = angle + 1.5707963267948966;
  return next;
}

}  // namespace mvtora
