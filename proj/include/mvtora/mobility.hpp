#pragma once

#include <vector>

#include "mvtora/rng.hpp"
#include "mvtora/scenario.hpp"
#include "mvtora/types.hpp"

namespace mvtora {

// Spatial Poisson placement over the centered rectangle: the vehicle count is
// Poisson(density * area_km2), positions are i.i.d. uniform, initial speed and
// heading are drawn within bounds, idle frequencies from the configured range.
std::vector<VehicleState> place_vehicles(double area_width_m, double area_height_m,
                                         const MobilityParams& params,
                                         double freq_lo_hz, double freq_hi_hz,
                                         RngStream& rng);

// One Gauss-Markov step: speed and heading relax toward their asymptotic means
// with memory degree alpha, position advances with the pre-update kinematics,
// new speed/heading are clamped to bounds, positions wrap toroidally.
VehicleState step_vehicle(const VehicleState& v, const MobilityParams& params,
                          double area_width_m, double area_height_m, RngStream& rng);

// Deterministic circular trajectory around the assigned grid center at fixed
// speed and altitude; slot_duration * t gives the elapsed time.
CUavState step_cuav(const CUavState& c, int slot, double orbit_radius_m,
                    double altitude_m, double slot_duration_s);

}  // namespace mvtora
