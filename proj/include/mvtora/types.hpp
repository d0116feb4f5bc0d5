#pragma once

#include <cmath>
#include <optional>
#include <vector>

namespace mvtora {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double distance(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

inline double ground_distance(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

// One computing job: input size, computation intensity, completion deadline.
struct Task {
  double data_size_bits = 0.0;            // D_n
  double intensity_cycles_per_bit = 0.0;  // eta_n
  double deadline_s = 0.0;                // T_n_max
};

struct VehicleState {
  Vec3 position_m;     // z stays 0
  double speed_mps = 0.0;
  double heading_rad = 0.0;
  double idle_freq_hz = 0.0;
};

struct CUavState {
  Vec3 position_m;     // z stays at the configured altitude
  double speed_mps = 0.0;
  double heading_rad = 0.0;
  double task_prob = 0.0;     // rho_n
  double local_freq_hz = 0.0; // f_n_uav
  int subchannels = 1;        // K_n
  std::optional<Task> current_task;
  // circular-trajectory bookkeeping
  Vec3 grid_center_m;
  double orbit_phase_rad = 0.0;
};

struct EUavState {
  Vec3 position_m;        // hovers at fixed position
  double max_freq_hz = 0; // F_u_max
};

// All radio constants, already converted to linear SI at config load.
struct ChannelParams {
  double bandwidth_hz = 200e3;        // B, per sub-channel
  double beamwidth_half_rad = 0.7853981633974483;  // Psi
  double main_lobe_gain = 2.2846;     // G_0
  double out_of_beam_gain = 0.0;      // g, fixed 0
  double ref_gain_u2v = 1.42e-4;      // beta_0
  double ref_gain_u2u = 1.42e-4;      // beta_0 for the U2U link
  double nlos_factor = 0.2;           // kappa
  double pathloss_exp = 2.3;          // mu
  double los_a = 10.0;                // a
  double los_b = 0.6;                 // b
  double noise_psd_w_per_hz = 3.9810717055349565e-21;  // sigma2 (-174 dBm/Hz)
  double tx_power_u2v_w = 0.1;        // P_n_m (20 dBm)
  double tx_power_u2u_w = 0.1;        // P_n_u (20 dBm)
};

struct UtilityParams {
  double delay_weight = 0.9;          // alpha_n
  double energy_weight = 0.1;         // beta_n
  double log_offset = 1.0;            // beta inside the log
  double mec_price_per_hz = 1e-12;    // rho_0, per Hz
  double switched_capacitance = 1e-28;  // k
};

struct MobilityParams {
  double memory_degree = 0.85;        // alpha
  double mean_speed_mps = 10.0;       // v_bar
  double speed_std = 2.0;             // sigma_v
  double mean_heading_rad = 0.0;      // theta_bar
  double heading_std = 0.5;           // sigma_d
  double speed_min = 0.0;
  double speed_max = 20.0;
  double heading_min = -3.14159265358979323846;
  double heading_max = 3.14159265358979323846;
  double vehicle_density_per_km2 = 200.0;  // rho_v
  double slot_duration_s = 1.0;       // delta_t
};

struct GaParams {
  int generations = 200;   // G
  int population = 50;     // L
  double crossover_prob = 0.8;  // pc
  double mutation_prob = 0.1;   // pm
};

enum class Mode { local = 0, mec = 1, veh = 2 };

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::local: return "local";
    case Mode::mec: return "mec";
    default: return "veh";
  }
}

// Joint strategy plus allocation artifacts, one entry per C-UAV.
struct OffloadProfile {
  std::vector<bool> has_task;
  std::vector<Mode> mode;
  std::vector<double> mec_freq_hz;            // 0 unless mode == mec
  std::vector<std::vector<int>> fog_set;      // vehicle ids, ordered
  std::vector<std::vector<double>> division;  // lambda, aligned to fog_set
};

struct SlotMetrics {
  double system_utility = 0.0;
  std::vector<double> utility;   // per C-UAV, 0 when idle or dropped
  std::vector<double> delay_s;   // per C-UAV, deadline for dropped tasks
  std::vector<double> energy_j;
  std::vector<Mode> mode;
  std::vector<bool> had_task;
  std::vector<bool> dropped;
  int dropped_count = 0;
  int n_local = 0, n_mec = 0, n_veh = 0;
  int game_rounds = 0;
};

}  // namespace mvtora
