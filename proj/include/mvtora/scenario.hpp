#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvtora/rng.hpp"
#include "mvtora/types.hpp"

namespace mvtora {

// Uniform draw ranges for per-task attributes.
struct TaskConfig {
  double data_bits_lo = 1e6, data_bits_hi = 3e6;          // D_n
  double intensity_lo = 100.0, intensity_hi = 1000.0;     // eta_n
  double deadline_lo = 0.5, deadline_hi = 1.0;            // T_n_max
};

// Fully materialized scenario: every parameter in linear SI units plus the
// C-UAV fleet with grid assignments, orbit phases, and per-UAV attributes.
struct Scenario {
  std::uint64_t seed = 1;

  double area_width_m = 2000.0;
  double area_height_m = 2000.0;
  double grid_m = 400.0;

  int n_cuavs = 15;
  double cuav_altitude_m = 100.0;   // H
  double cuav_speed_mps = 20.0;     // V
  double orbit_radius_m = 100.0;
  double cuav_freq_lo_hz = 1e9, cuav_freq_hi_hz = 2e9;  // f_n_uav
  int subchannels = 5;                                  // K_n
  double task_prob_lo = 0.8, task_prob_hi = 1.0;        // rho_n

  EUavState euav{{0.0, 0.0, 300.0}, 30e9};  // H_u, F_u_max
  double vehicle_freq_lo_hz = 0.0, vehicle_freq_hi_hz = 1e9;  // f_m_veh

  TaskConfig task;
  ChannelParams channel;
  UtilityParams utility;
  MobilityParams mobility;
  GaParams ga;

  double bisect_epsilon = 1e-9;  // multiplier search accuracy

  std::vector<CUavState> cuavs;
};

// Parses a JSON scenario document (empty input means all defaults), validates
// every invariant, converts dBm/dB and per-GHz quantities to linear SI, and
// materializes the C-UAV fleet deterministically from the master seed.
// Throws std::runtime_error with line context on parse failure and
// std::invalid_argument naming the offending field on invariant violations.
Scenario load_scenario(const std::string& config_text);

// Replaces the master seed and re-draws everything derived from it (grid
// assignment, orbit phases, per-UAV attributes). Used by sweeps so that each
// seed names a complete world realization.
void reseed(Scenario& scenario, std::uint64_t seed);

// Bernoulli task arrival: with probability task_prob returns a task whose
// attributes are drawn uniformly from the configured ranges.
std::optional<Task> spawn_task(const TaskConfig& config, const CUavState& cuav,
                               RngStream& rng);

// Asserts every structural constraint on a profile: one mode per C-UAV (by
// construction), divisions on the simplex, pairwise-disjoint fog sets, fog set
// sizes within the sub-channel budget, and total MEC shares within F_u_max.
// Throws std::runtime_error naming the first violated constraint.
void validate_profile(const OffloadProfile& profile, double f_u_max_hz,
                      int max_fog_nodes);

}  // namespace mvtora
