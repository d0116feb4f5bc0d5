#include "mvtora/sim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mvtora/channel.hpp"
#include "mvtora/cost_model.hpp"
#include "mvtora/mobility.hpp"
#include "mvtora/vfc_alloc.hpp"

namespace mvtora {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double realized(double utility_value) {
  return std::isinf(utility_value) ? 0.0 : utility_value;
}

bool policy_runs_ga(Policy p) { return p == Policy::mvtora || p == Policy::vto; }

}  // namespace

Policy policy_from_name(const std::string& name) {
  if (name == "mvtora") return Policy::mvtora;
  if (name == "elc") return Policy::elc;
  if (name == "emc") return Policy::emc;
  if (name == "vto") return Policy::vto;
  if (name == "mto") return Policy::mto;
  if (name == "todo") return Policy::todo;
  throw std::invalid_argument("unknown policy '" + name +
                              "' (expected mvtora|elc|emc|vto|mto|todo)");
}

const char* policy_name(Policy policy) {
  switch (policy) {
    case Policy::mvtora: return "mvtora";
    case Policy::elc: return "elc";
    case Policy::emc: return "emc";
    case Policy::vto: return "vto";
    case Policy::mto: return "mto";
    default: return "todo";
  }
}

Simulation::Simulation(const Scenario& scenario) : scenario_(scenario) {
  RngStream place(scenario_.seed, StreamPurpose::placement);
  vehicles_ = place_vehicles(scenario_.area_width_m, scenario_.area_height_m,
                             scenario_.mobility, scenario_.vehicle_freq_lo_hz,
                             scenario_.vehicle_freq_hi_hz, place);
}

void Simulation::advance() {
  for (std::size_t m = 0; m < vehicles_.size(); ++m) {
    RngStream rng(scenario_.seed, StreamPurpose::mobility, m, current_slot_);
    vehicles_[m] = step_vehicle(vehicles_[m], scenario_.mobility, scenario_.area_width_m,
                                scenario_.area_height_m, rng);
  }
  ++current_slot_;
}

SlotContext Simulation::build_slot_context(int t, Policy policy) {
  if (t != current_slot_)
    throw std::logic_error("build_slot_context: world state is not at the requested slot");
  const Scenario& sc = scenario_;

  SlotContext ctx;
  ctx.f_max_hz = sc.euav.max_freq_hz;
  ctx.price_per_hz = sc.utility.mec_price_per_hz;
  ctx.epsilon = sc.bisect_epsilon;
  ctx.tx_power_u2u_w = sc.channel.tx_power_u2u_w;
  ctx.uparams = sc.utility;

  std::vector<CUavState> cuavs(sc.n_cuavs);
  for (int n = 0; n < sc.n_cuavs; ++n) {
    cuavs[n] = step_cuav(sc.cuavs[n], t, sc.orbit_radius_m, sc.cuav_altitude_m,
                         sc.mobility.slot_duration_s);
    RngStream task_rng(sc.seed, StreamPurpose::tasks, static_cast<std::uint64_t>(n), t);
    cuavs[n].current_task = spawn_task(sc.task, cuavs[n], task_rng);
  }

  // Service areas do not overlap by construction; boundary tangencies resolve
  // to the lowest C-UAV id.
  std::vector<int> claimed_by(vehicles_.size(), -1);
  for (std::size_t m = 0; m < vehicles_.size(); ++m) {
    for (int n = 0; n < sc.n_cuavs; ++n) {
      if (in_range(cuavs[n].position_m, vehicles_[m].position_m, sc.cuav_altitude_m,
                   sc.channel.beamwidth_half_rad)) {
        claimed_by[m] = n;
        break;
      }
    }
  }

  for (int n = 0; n < sc.n_cuavs; ++n) {
    if (!cuavs[n].current_task) continue;
    const Task& task = *cuavs[n].current_task;

    PlayerContext p;
    p.cuav_id = n;
    p.task = task;

    const ModeOutcome local = local_outcome(task, cuavs[n], sc.utility);
    p.u_local = local.utility;
    p.local_delay_s = local.delay_s;
    p.local_energy_j = local.energy_j;

    std::vector<FogCandidate> candidates;
    for (std::size_t m = 0; m < vehicles_.size(); ++m) {
      if (claimed_by[m] != n) continue;
      const auto rate = u2v_rate(cuavs[n], vehicles_[m], sc.channel);
      if (rate)
        candidates.push_back({static_cast<int>(m), *rate, vehicles_[m].idle_freq_hz});
    }

    p.u_vfc = kNegInf;
    if (policy_runs_ga(policy)) {
      const auto fog = select_fog_nodes(task, candidates, sc.subchannels);
      if (!fog.empty()) {
        RngStream ga_rng(sc.seed, StreamPurpose::ga, static_cast<std::uint64_t>(n), t);
        const DivisionResult div =
            ga_divide(task, fog, sc.ga, sc.utility, sc.channel.tx_power_u2v_w, ga_rng);
        std::vector<double> rates, freqs;
        for (const auto& f : fog) {
          p.fog_set.push_back(f.vehicle_id);
          rates.push_back(f.rate_bps);
          freqs.push_back(f.freq_hz);
        }
        p.division = div.division;
        const ModeOutcome out =
            vfc_outcome(task, p.division, rates, freqs, sc.channel.tx_power_u2v_w, sc.utility);
        p.u_vfc = out.utility;
        p.vfc_delay_s = out.delay_s;
        p.vfc_energy_j = out.energy_j;
      }
    } else if (policy == Policy::todo && !candidates.empty()) {
      // uniform random selection, evenly divided sub-tasks
      RngStream sel_rng(sc.seed, StreamPurpose::random_select, static_cast<std::uint64_t>(n), t);
      std::vector<int> order(candidates.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      for (std::size_t i = order.size() - 1; i > 0; --i)
        std::swap(order[i], order[sel_rng.below(i + 1)]);
      const int k = std::min<int>(sc.subchannels, static_cast<int>(candidates.size()));
      std::vector<double> rates, freqs;
      for (int i = 0; i < k; ++i) {
        const FogCandidate& f = candidates[order[i]];
        p.fog_set.push_back(f.vehicle_id);
        rates.push_back(f.rate_bps);
        freqs.push_back(f.freq_hz);
      }
      p.division.assign(k, 1.0 / k);
      const ModeOutcome out =
          vfc_outcome(task, p.division, rates, freqs, sc.channel.tx_power_u2v_w, sc.utility);
      p.u_vfc = out.utility;
      p.vfc_delay_s = out.delay_s;
      p.vfc_energy_j = out.energy_j;
    }

    p.rate_u2u_bps = u2u_rate(cuavs[n], sc.euav, sc.channel);
    const double slack =
        sc.utility.log_offset + task.deadline_s - task.data_size_bits / p.rate_u2u_bps;
    p.mec_possible = slack > 0.0;
    p.u_mec_max = kNegInf;
    if (p.mec_possible) {
      p.demand = MecDemand{n, task.intensity_cycles_per_bit * task.data_size_bits, slack,
                           sc.utility.delay_weight};
      p.f_hat_hz =
          std::min(closed_form_share(p.demand, ctx.price_per_hz, 0.0), ctx.f_max_hz);
      p.u_mec_max =
          mec_outcome(task, p.f_hat_hz, p.rate_u2u_bps, ctx.tx_power_u2u_w, sc.utility)
              .utility;
    }

    switch (policy) {
      case Policy::mvtora:
      case Policy::vto:
      case Policy::todo:
        p.initial_mode = (p.u_vfc > p.u_local) ? Mode::veh : Mode::local;
        break;
      case Policy::elc:
      case Policy::emc:
      case Policy::mto:
        p.initial_mode = Mode::local;
        break;
    }
    p.u_initial = realized(p.initial_mode == Mode::veh ? p.u_vfc : p.u_local);

    ctx.players.push_back(std::move(p));
  }
  return ctx;
}

SlotMetrics Simulation::run_slot(int t, Policy policy) {
  const Scenario& sc = scenario_;
  SlotContext ctx = build_slot_context(t, policy);

  SlotMetrics met;
  met.utility.assign(sc.n_cuavs, 0.0);
  met.delay_s.assign(sc.n_cuavs, 0.0);
  met.energy_j.assign(sc.n_cuavs, 0.0);
  met.mode.assign(sc.n_cuavs, Mode::local);
  met.had_task.assign(sc.n_cuavs, false);
  met.dropped.assign(sc.n_cuavs, false);

  const std::size_t players = ctx.players.size();
  std::vector<Mode> modes(players, Mode::local);
  std::vector<double> shares(players, 0.0);

  switch (policy) {
    case Policy::elc:
      break;  // everyone local
    case Policy::vto:
      for (std::size_t i = 0; i < players; ++i) modes[i] = ctx.players[i].initial_mode;
      break;
    case Policy::emc: {
      std::vector<MecDemand> demands;
      for (std::size_t i = 0; i < players; ++i) {
        modes[i] = Mode::mec;
        if (ctx.players[i].mec_possible) demands.push_back(ctx.players[i].demand);
      }
      const MecAllocation alloc =
          bisect_allocate(demands, ctx.f_max_hz, ctx.price_per_hz, ctx.epsilon);
      for (std::size_t i = 0; i < players; ++i)
        shares[i] = alloc.share_of(ctx.players[i].cuav_id);
      break;
    }
    case Policy::mvtora:
    case Policy::mto:
    case Policy::todo: {
      const MecAllocRule rule =
          policy == Policy::todo ? MecAllocRule::even_split : MecAllocRule::kkt_bisection;
      const GameResult game = run_game(ctx, rule);
      modes = game.modes;
      shares = game.shares_hz;
      met.game_rounds = game.rounds;
      break;
    }
  }

  OffloadProfile profile;
  profile.has_task.assign(sc.n_cuavs, false);
  profile.mode.assign(sc.n_cuavs, Mode::local);
  profile.mec_freq_hz.assign(sc.n_cuavs, 0.0);
  profile.fog_set.resize(sc.n_cuavs);
  profile.division.resize(sc.n_cuavs);

  for (std::size_t i = 0; i < players; ++i) {
    const PlayerContext& p = ctx.players[i];
    const int n = p.cuav_id;
    met.had_task[n] = true;
    met.mode[n] = modes[i];
    profile.has_task[n] = true;
    profile.mode[n] = modes[i];

    double utility_value = kNegInf;
    double delay = 0.0, energy = 0.0;
    switch (modes[i]) {
      case Mode::local:
        utility_value = p.u_local;
        delay = p.local_delay_s;
        energy = p.local_energy_j;
        break;
      case Mode::veh:
        utility_value = p.u_vfc;
        delay = p.vfc_delay_s;
        energy = p.vfc_energy_j;
        profile.fog_set[n] = p.fog_set;
        profile.division[n] = p.division;
        break;
      case Mode::mec: {
        profile.mec_freq_hz[n] = shares[i];
        if (shares[i] > 0.0 && p.mec_possible) {
          const ModeOutcome out =
              mec_outcome(p.task, shares[i], p.rate_u2u_bps, ctx.tx_power_u2u_w, sc.utility);
          utility_value = out.utility;
          delay = out.delay_s;
          energy = out.energy_j;
        }
        break;
      }
    }

    if (std::isinf(utility_value)) {
      met.dropped[n] = true;
      ++met.dropped_count;
      met.delay_s[n] = p.task.deadline_s;  // pessimistic drop accounting
      met.energy_j[n] = 0.0;
      met.utility[n] = 0.0;
    } else {
      met.utility[n] = utility_value;
      met.delay_s[n] = delay;
      met.energy_j[n] = energy;
      met.system_utility += utility_value;
      switch (modes[i]) {
        case Mode::local: ++met.n_local; break;
        case Mode::mec: ++met.n_mec; break;
        case Mode::veh: ++met.n_veh; break;
      }
    }
  }

  validate_profile(profile, sc.euav.max_freq_hz, sc.subchannels);
  return met;
}

RunResult run_horizon(const Scenario& scenario, int slots, Policy policy) {
  if (slots < 1) throw std::invalid_argument("run_horizon: slots must be at least 1");
  Simulation sim(scenario);
  RunResult result;
  result.slots.reserve(slots);
  double delay_sum = 0.0;
  double utility_sum = 0.0;
  for (int t = 0; t < slots; ++t) {
    SlotMetrics met = sim.run_slot(t, policy);
    utility_sum += met.system_utility;
    for (int n = 0; n < static_cast<int>(met.had_task.size()); ++n) {
      if (!met.had_task[n]) continue;
      ++result.total_tasks;
      delay_sum += met.delay_s[n];
      result.total_energy_j += met.energy_j[n];
    }
    result.drops += met.dropped_count;
    result.slots.push_back(std::move(met));
    sim.advance();
  }
  result.time_avg_system_utility = utility_sum / slots;
  result.avg_completion_delay_s = result.total_tasks ? delay_sum / result.total_tasks : 0.0;
  return result;
}

SweepParam sweep_param_from_name(const std::string& name) {
  if (name == "euav-freq") return SweepParam::euav_freq;
  if (name == "task-density") return SweepParam::task_density;
  if (name == "veh-density") return SweepParam::veh_density;
  throw std::invalid_argument("unknown sweep parameter '" + name +
                              "' (expected euav-freq|task-density|veh-density)");
}

std::vector<SweepRow> sweep(const Scenario& base, SweepParam param,
                            const std::vector<double>& grid,
                            const std::vector<Policy>& policies,
                            const std::vector<std::uint64_t>& seeds, int slots) {
  if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
  std::vector<SweepRow> rows;
  rows.reserve(grid.size() * policies.size() * seeds.size());
  for (double value : grid) {
    Scenario sc = base;
    switch (param) {
      case SweepParam::euav_freq:
        sc.euav.max_freq_hz = value;
        break;
      case SweepParam::task_density:
        // grid value is the top of the density range; the Table-1 default run
        // is the right endpoint of this sweep
        sc.task.intensity_lo = std::min(base.task.intensity_lo, value);
        sc.task.intensity_hi = value;
        break;
      case SweepParam::veh_density:
        sc.mobility.vehicle_density_per_km2 = value;
        break;
    }
    for (Policy policy : policies) {
      for (std::uint64_t seed : seeds) {
        reseed(sc, seed);
        const RunResult r = run_horizon(sc, slots, policy);
        rows.push_back({value, policy, seed, r.time_avg_system_utility,
                        r.avg_completion_delay_s, r.total_energy_j, r.drops});
      }
    }
  }
  return rows;
}

}  // namespace mvtora
