#include "mvtora/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace mvtora {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kDegPerRad = 180.0 / kPi;
}  // namespace

double antenna_gain(bool within_beam, const ChannelParams& params) {
  if (!within_beam) return params.out_of_beam_gain;
  return params.main_lobe_gain / (params.beamwidth_half_rad * params.beamwidth_half_rad);
}

bool in_range(const Vec3& cuav_pos, const Vec3& vehicle_pos, double altitude_m,
              double beamwidth_half_rad) {
  if (altitude_m <= 0.0) throw std::invalid_argument("in_range: altitude must be positive");
  const double footprint = altitude_m * std::tan(beamwidth_half_rad);
  return ground_distance(cuav_pos, vehicle_pos) <= footprint;
}

double los_probability(double elevation_deg, double a, double b) {
  return 1.0 / (1.0 + a * std::exp(-b * (elevation_deg - a)));
}

double expected_u2v_gain(double distance_m, double altitude_m,
                         const ChannelParams& params) {
  if (distance_m < altitude_m)
    throw std::invalid_argument("expected_u2v_gain: distance below altitude");
  const double elevation_deg = kDegPerRad * std::asin(altitude_m / distance_m);
  const double p_los = los_probability(elevation_deg, params.los_a, params.los_b);
  const double pathloss = params.ref_gain_u2v * std::pow(distance_m, -params.pathloss_exp);
  return p_los * pathloss + (1.0 - p_los) * params.nlos_factor * pathloss;
}

std::optional<double> u2v_rate(const CUavState& cuav, const VehicleState& vehicle,
                               const ChannelParams& params) {
  const double altitude = cuav.position_m.z;
  if (!in_range(cuav.position_m, vehicle.position_m, altitude, params.beamwidth_half_rad))
    return std::nullopt;
  const double d = distance(cuav.position_m, vehicle.position_m);
  const double gain = expected_u2v_gain(d, altitude, params);
  const double psi2 = params.beamwidth_half_rad * params.beamwidth_half_rad;
  const double noise_w = params.noise_psd_w_per_hz * params.bandwidth_hz;
  const double snr = params.tx_power_u2v_w * gain * params.main_lobe_gain / (psi2 * noise_w);
  return params.bandwidth_hz * std::log2(1.0 + snr);
}

double u2u_rate(const CUavState& cuav, const EUavState& euav,
                const ChannelParams& params) {
  const double d = distance(cuav.position_m, euav.position_m);
  if (d <= 0.0) throw std::invalid_argument("u2u_rate: positions coincide");
  const double k_n = static_cast<double>(cuav.subchannels);
  const double psi2 = params.beamwidth_half_rad * params.beamwidth_half_rad;
  const double noise_w = params.noise_psd_w_per_hz * k_n * params.bandwidth_hz;
  const double snr =
      params.tx_power_u2u_w * params.ref_gain_u2u * params.main_lobe_gain / (d * d * psi2 * noise_w);
  return k_n * params.bandwidth_hz * std::log2(1.0 + snr);
}

}  // namespace mvtora
