#include "mvtora/scenario.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mvtora {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

double dbm_to_watt(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

double get_num(const json& section, const char* key, double fallback) {
  if (!section.is_object() || !section.contains(key)) return fallback;
  const json& v = section.at(key);
  require(v.is_number(), std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::pair<double, double> get_range(const json& section, const char* key, double lo,
                                    double hi) {
  if (!section.is_object() || !section.contains(key)) return {lo, hi};
  const json& v = section.at(key);
  require(v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number(),
          std::string("field '") + key + "' must be a [lo, hi] pair");
  return {v[0].get<double>(), v[1].get<double>()};
}

json get_section(const json& doc, const char* key) {
  if (doc.contains(key)) {
    require(doc.at(key).is_object(), std::string("section '") + key + "' must be an object");
    return doc.at(key);
  }
  return json::object();
}

int line_of_offset(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

void materialize_fleet(Scenario& sc) {
  const int cells_x = static_cast<int>(sc.area_width_m / sc.grid_m);
  const int cells_y = static_cast<int>(sc.area_height_m / sc.grid_m);
  require(cells_x >= 1 && cells_y >= 1, "grid_m larger than the area");
  require(sc.n_cuavs <= cells_x * cells_y,
          "N exceeds the number of grid cells (service areas must not overlap)");

  RngStream assign(sc.seed, StreamPurpose::assignment);
  std::vector<int> cells(static_cast<std::size_t>(cells_x) * cells_y);
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<int>(i);
  for (std::size_t i = cells.size() - 1; i > 0; --i)
    std::swap(cells[i], cells[assign.below(i + 1)]);

  sc.cuavs.assign(sc.n_cuavs, CUavState{});
  for (int n = 0; n < sc.n_cuavs; ++n) {
    CUavState& c = sc.cuavs[n];
    const int cell = cells[n];
    const int cx = cell % cells_x;
    const int cy = cell / cells_x;
    c.grid_center_m = {-sc.area_width_m / 2 + (cx + 0.5) * sc.grid_m,
                       -sc.area_height_m / 2 + (cy + 0.5) * sc.grid_m, 0.0};
    c.orbit_phase_rad = assign.uniform(0.0, 2.0 * kPi);
    c.local_freq_hz = assign.uniform(sc.cuav_freq_lo_hz, sc.cuav_freq_hi_hz);
    c.task_prob = assign.uniform(sc.task_prob_lo, sc.task_prob_hi);
    c.subchannels = sc.subchannels;
    c.speed_mps = sc.cuav_speed_mps;
    c.position_m = {c.grid_center_m.x + sc.orbit_radius_m * std::cos(c.orbit_phase_rad),
                    c.grid_center_m.y + sc.orbit_radius_m * std::sin(c.orbit_phase_rad),
                    sc.cuav_altitude_m};
  }
}

}  // namespace

Scenario load_scenario(const std::string& config_text) {
  json doc;
  std::string trimmed = config_text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  if (trimmed.empty()) {
    doc = json::object();
  } else {
    try {
      doc = json::parse(config_text);
    } catch (const json::parse_error& e) {
      std::ostringstream msg;
      msg << "scenario parse error at line " << line_of_offset(config_text, e.byte)
          << ": " << e.what();
      throw std::runtime_error(msg.str());
    }
    require(doc.is_object(), "scenario document must be a JSON object");
  }

  Scenario sc;
  sc.seed = static_cast<std::uint64_t>(get_num(doc, "seed", 1.0));

  const json area = get_section(doc, "area");
  sc.area_width_m = get_num(area, "width_m", sc.area_width_m);
  sc.area_height_m = get_num(area, "height_m", sc.area_height_m);
  sc.grid_m = get_num(area, "grid_m", sc.grid_m);
  require(sc.area_width_m > 0 && sc.area_height_m > 0, "area dimensions must be positive");
  require(sc.grid_m > 0, "grid_m must be positive");

  const json cuav = get_section(doc, "cuav");
  sc.n_cuavs = static_cast<int>(get_num(cuav, "N", sc.n_cuavs));
  sc.cuav_altitude_m = get_num(cuav, "H", sc.cuav_altitude_m);
  sc.cuav_speed_mps = get_num(cuav, "V", sc.cuav_speed_mps);
  sc.orbit_radius_m = get_num(cuav, "orbit_radius_m", sc.orbit_radius_m);
  std::tie(sc.cuav_freq_lo_hz, sc.cuav_freq_hi_hz) =
      get_range(cuav, "f_n_uav", sc.cuav_freq_lo_hz, sc.cuav_freq_hi_hz);
  sc.subchannels = static_cast<int>(get_num(cuav, "K_n", sc.subchannels));
  std::tie(sc.task_prob_lo, sc.task_prob_hi) =
      get_range(cuav, "rho_n", sc.task_prob_lo, sc.task_prob_hi);
  require(sc.n_cuavs >= 1, "N must be at least 1");
  require(sc.cuav_altitude_m > 0, "H must be positive");
  require(sc.subchannels >= 1, "K_n must be at least 1");
  require(sc.cuav_freq_lo_hz > 0 && sc.cuav_freq_hi_hz >= sc.cuav_freq_lo_hz,
          "f_n_uav range must be positive and ordered");
  require(sc.task_prob_lo >= 0 && sc.task_prob_hi <= 1 && sc.task_prob_lo <= sc.task_prob_hi,
          "rho_n range must lie in [0,1]");

  const json euav = get_section(doc, "euav");
  const double h_u = get_num(euav, "H_u", sc.euav.position_m.z);
  sc.euav.position_m = {get_num(euav, "x_m", 0.0), get_num(euav, "y_m", 0.0), h_u};
  sc.euav.max_freq_hz = get_num(euav, "F_u_max", sc.euav.max_freq_hz);
  require(sc.euav.max_freq_hz > 0, "F_u_max must be positive");

  const json task = get_section(doc, "task");
  std::tie(sc.task.data_bits_lo, sc.task.data_bits_hi) =
      get_range(task, "D_n", sc.task.data_bits_lo, sc.task.data_bits_hi);
  std::tie(sc.task.intensity_lo, sc.task.intensity_hi) =
      get_range(task, "eta_n", sc.task.intensity_lo, sc.task.intensity_hi);
  std::tie(sc.task.deadline_lo, sc.task.deadline_hi) =
      get_range(task, "T_n_max", sc.task.deadline_lo, sc.task.deadline_hi);
  require(sc.task.data_bits_lo > 0 && sc.task.data_bits_hi >= sc.task.data_bits_lo,
          "D_n range must be positive and ordered");
  require(sc.task.intensity_lo > 0 && sc.task.intensity_hi >= sc.task.intensity_lo,
          "eta_n range must be positive and ordered");
  require(sc.task.deadline_lo > 0 && sc.task.deadline_hi >= sc.task.deadline_lo,
          "T_n_max range must be positive and ordered");

  const json channel = get_section(doc, "channel");
  sc.channel.bandwidth_hz = get_num(channel, "B", sc.channel.bandwidth_hz);
  sc.channel.beamwidth_half_rad = get_num(channel, "Psi", sc.channel.beamwidth_half_rad);
  sc.channel.main_lobe_gain = get_num(channel, "G_0", sc.channel.main_lobe_gain);
  sc.channel.ref_gain_u2v = get_num(channel, "beta_0", sc.channel.ref_gain_u2v);
  sc.channel.ref_gain_u2u = get_num(channel, "beta_0_u2u", sc.channel.ref_gain_u2v);
  sc.channel.nlos_factor = get_num(channel, "kappa", sc.channel.nlos_factor);
  sc.channel.pathloss_exp = get_num(channel, "mu", sc.channel.pathloss_exp);
  sc.channel.los_a = get_num(channel, "a", sc.channel.los_a);
  sc.channel.los_b = get_num(channel, "b", sc.channel.los_b);
  if (channel.contains("sigma2"))
    sc.channel.noise_psd_w_per_hz = dbm_to_watt(get_num(channel, "sigma2", -174.0));
  if (channel.contains("P_n_m"))
    sc.channel.tx_power_u2v_w = dbm_to_watt(get_num(channel, "P_n_m", 20.0));
  if (channel.contains("P_n_u"))
    sc.channel.tx_power_u2u_w = dbm_to_watt(get_num(channel, "P_n_u", 20.0));
  require(sc.channel.bandwidth_hz > 0, "B must be positive");
  require(sc.channel.beamwidth_half_rad > 0 && sc.channel.beamwidth_half_rad < kPi / 2,
          "Psi must lie in (0, pi/2)");
  require(sc.channel.main_lobe_gain > 0, "G_0 must be positive");
  require(sc.channel.ref_gain_u2v > 0 && sc.channel.ref_gain_u2u > 0,
          "beta_0 must be positive");
  require(sc.channel.nlos_factor > 0 && sc.channel.nlos_factor < 1,
          "kappa must lie in (0,1)");

  const json utility = get_section(doc, "utility");
  sc.utility.delay_weight = get_num(utility, "alpha_n", sc.utility.delay_weight);
  sc.utility.energy_weight = get_num(utility, "beta_n", sc.utility.energy_weight);
  sc.utility.log_offset = get_num(utility, "beta", sc.utility.log_offset);
  if (utility.contains("rho_0"))
    sc.utility.mec_price_per_hz = get_num(utility, "rho_0", 0.001) * 1e-9;  // $/GHz -> $/Hz
  sc.utility.switched_capacitance = get_num(utility, "k", sc.utility.switched_capacitance);
  require(std::abs(sc.utility.delay_weight + sc.utility.energy_weight - 1.0) <= 1e-12,
          "delay_weight + energy_weight != 1 (alpha_n + beta_n must sum to 1)");
  require(sc.utility.log_offset > 0, "beta (log offset) must be positive");
  require(sc.utility.mec_price_per_hz >= 0, "rho_0 must be non-negative");

  const json mobility = get_section(doc, "mobility");
  sc.mobility.slot_duration_s = get_num(mobility, "delta_t", sc.mobility.slot_duration_s);
  sc.mobility.vehicle_density_per_km2 =
      get_num(mobility, "rho_v", sc.mobility.vehicle_density_per_km2);
  sc.mobility.memory_degree = get_num(mobility, "alpha", sc.mobility.memory_degree);
  sc.mobility.mean_speed_mps = get_num(mobility, "v_bar", sc.mobility.mean_speed_mps);
  sc.mobility.speed_std = get_num(mobility, "sigma_v", sc.mobility.speed_std);
  sc.mobility.mean_heading_rad = get_num(mobility, "theta_bar", sc.mobility.mean_heading_rad);
  sc.mobility.heading_std = get_num(mobility, "sigma_d", sc.mobility.heading_std);
  std::tie(sc.mobility.speed_min, sc.mobility.speed_max) =
      get_range(mobility, "v_bounds", sc.mobility.speed_min, sc.mobility.speed_max);
  std::tie(sc.mobility.heading_min, sc.mobility.heading_max) =
      get_range(mobility, "theta_bounds", sc.mobility.heading_min, sc.mobility.heading_max);
  std::tie(sc.vehicle_freq_lo_hz, sc.vehicle_freq_hi_hz) =
      get_range(mobility, "f_m_veh", sc.vehicle_freq_lo_hz, sc.vehicle_freq_hi_hz);
  require(sc.mobility.memory_degree >= 0 && sc.mobility.memory_degree <= 1,
          "alpha (memory degree) must lie in [0,1]");
  require(sc.mobility.speed_min <= sc.mobility.speed_max, "v_bounds must be ordered");
  require(sc.mobility.heading_min <= sc.mobility.heading_max, "theta_bounds must be ordered");
  require(sc.mobility.vehicle_density_per_km2 > 0, "rho_v must be positive");
  require(sc.mobility.slot_duration_s > 0, "delta_t must be positive");
  require(sc.vehicle_freq_lo_hz >= 0 && sc.vehicle_freq_hi_hz >= sc.vehicle_freq_lo_hz,
          "f_m_veh range must be non-negative and ordered");
  require(sc.task.deadline_hi <= sc.mobility.slot_duration_s,
          "T_n_max must not exceed delta_t (per-slot completion)");

  const json ga = get_section(doc, "ga");
  sc.ga.generations = static_cast<int>(get_num(ga, "G", sc.ga.generations));
  sc.ga.population = static_cast<int>(get_num(ga, "L", sc.ga.population));
  sc.ga.crossover_prob = get_num(ga, "pc", sc.ga.crossover_prob);
  sc.ga.mutation_prob = get_num(ga, "pm", sc.ga.mutation_prob);
  require(sc.ga.generations >= 1, "G must be at least 1");
  require(sc.ga.population >= 2, "L must be at least 2");
  require(sc.ga.crossover_prob >= 0 && sc.ga.crossover_prob <= 1, "pc must lie in [0,1]");
  require(sc.ga.mutation_prob >= 0 && sc.ga.mutation_prob <= 1, "pm must lie in [0,1]");

  const json solver = get_section(doc, "solver");
  sc.bisect_epsilon = get_num(solver, "epsilon", sc.bisect_epsilon);
  require(sc.bisect_epsilon > 0, "solver epsilon must be positive");

  materialize_fleet(sc);
  return sc;
}

void reseed(Scenario& scenario, std::uint64_t seed) {
  scenario.seed = seed;
  materialize_fleet(scenario);
}

std::optional<Task> spawn_task(const TaskConfig& config, const CUavState& cuav,
                               RngStream& rng) {
  if (!rng.bernoulli(cuav.task_prob)) return std::nullopt;
  Task t;
  t.data_size_bits = rng.uniform(config.data_bits_lo, config.data_bits_hi);
  t.intensity_cycles_per_bit = rng.uniform(config.intensity_lo, config.intensity_hi);
  t.deadline_s = rng.uniform(config.deadline_lo, config.deadline_hi);
  return t;
}

void validate_profile(const OffloadProfile& profile, double f_u_max_hz,
                      int max_fog_nodes) {
  const std::size_t n = profile.mode.size();
  if (profile.has_task.size() != n || profile.mec_freq_hz.size() != n ||
      profile.fog_set.size() != n || profile.division.size() != n)
    throw std::runtime_error("profile: inconsistent per-UAV array lengths");

  double total_share = 0.0;
  std::set<int> claimed;
  for (std::size_t i = 0; i < n; ++i) {
    if (!profile.has_task[i]) continue;
    switch (profile.mode[i]) {
      case Mode::mec: {
        // a zero share marks an unserved (dropped) MEC decision
        if (profile.mec_freq_hz[i] < 0.0 || profile.mec_freq_hz[i] > f_u_max_hz * (1 + 1e-9))
          throw std::runtime_error("profile: MEC share outside [0, F_u_max]");
        total_share += profile.mec_freq_hz[i];
        break;
      }
      case Mode::veh: {
        const auto& fog = profile.fog_set[i];
        const auto& div = profile.division[i];
        if (fog.empty() || fog.size() != div.size())
          throw std::runtime_error("profile: VFC mode without a matching fog set/division");
        if (static_cast<int>(fog.size()) > max_fog_nodes)
          throw std::runtime_error("profile: fog set exceeds sub-channel budget K_n");
        double sum = 0.0;
        for (double lam : div) {
          if (lam < 0.0 || lam > 1.0)
            throw std::runtime_error("profile: division entry outside [0,1]");
          sum += lam;
        }
        if (std::abs(sum - 1.0) > 1e-9)
          throw std::runtime_error("profile: division does not sum to 1");
        for (int vid : fog)
          if (!claimed.insert(vid).second)
            throw std::runtime_error("profile: fog sets are not pairwise disjoint");
        break;
      }
      case Mode::local:
        break;
    }
  }
  if (total_share > f_u_max_hz * (1 + 1e-9))
    throw std::runtime_error("profile: total MEC shares exceed F_u_max");
}

}  // namespace mvtora
