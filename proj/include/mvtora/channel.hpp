#pragma once

#include <optional>

#include "mvtora/types.hpp"

namespace mvtora {

// Directional antenna gain: G_0/Psi^2 inside the beam, 0 outside.
double antenna_gain(bool within_beam, const ChannelParams& params);

// A vehicle is reachable when its ground-plane offset from the C-UAV's nadir
// lies inside the beam footprint of radius H*tan(Psi).
bool in_range(const Vec3& cuav_pos, const Vec3& vehicle_pos, double altitude_m,
              double beamwidth_half_rad);

// Logistic LoS probability as a function of the elevation angle in degrees.
double los_probability(double elevation_deg, double a, double b);

// LoS/NLoS mixture of the distance-dependent path loss, using the elevation
// implied by altitude and 3-D distance.
double expected_u2v_gain(double distance_m, double altitude_m,
                         const ChannelParams& params);

// Achievable U2V rate on one sub-channel (bit/s); nullopt when the vehicle is
// outside the beam footprint, which is distinct from a zero rate.
std::optional<double> u2v_rate(const CUavState& cuav, const VehicleState& vehicle,
                               const ChannelParams& params);

// Achievable U2U rate over the C-UAV's K_n sub-channels (bit/s), free-space
// exponent 2.
double u2u_rate(const CUavState& cuav, const EUavState& euav,
                const ChannelParams& params);

}  // namespace mvtora
