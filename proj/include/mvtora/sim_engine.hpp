#pragma once

#include <string>
#include <vector>

#include "mvtora/offload_game.hpp"
#include "mvtora/scenario.hpp"
#include "mvtora/types.hpp"

namespace mvtora {

enum class Policy { mvtora, elc, emc, vto, mto, todo };

Policy policy_from_name(const std::string& name);  // throws on unknown names
const char* policy_name(Policy policy);

struct RunResult {
  std::vector<SlotMetrics> slots;
  double time_avg_system_utility = 0.0;  // (1/T) * sum of slot utilities
  double avg_completion_delay_s = 0.0;   // over tasks; drops count their deadline
  double total_energy_j = 0.0;
  int drops = 0;
  int total_tasks = 0;
};

// One scenario instance stepped slot by slot. Vehicle placement and all draws
// derive from the scenario seed through named streams, so two simulations of
// the same scenario are bit-identical and policies consume identical
// mobility/task streams.
class Simulation {
 public:
  explicit Simulation(const Scenario& scenario);

  // World state must be at slot t: run_slot(t) then advance() moves to t+1.
  SlotMetrics run_slot(int t, Policy policy);
  void advance();

  // Game/PoA view of slot t under a policy's initial-decision rule; exposed
  // for the solver test batteries.
  SlotContext build_slot_context(int t, Policy policy);

  int current_slot() const { return current_slot_; }
  const std::vector<VehicleState>& vehicles() const { return vehicles_; }
  const Scenario& scenario() const { return scenario_; }

 private:
  Scenario scenario_;
  std::vector<VehicleState> vehicles_;
  int current_slot_ = 0;
};

RunResult run_horizon(const Scenario& scenario, int slots, Policy policy);

enum class SweepParam { euav_freq, task_density, veh_density };

SweepParam sweep_param_from_name(const std::string& name);  // throws on unknown

struct SweepRow {
  double param_value = 0.0;
  Policy policy = Policy::elc;
  std::uint64_t seed = 0;
  double tsu = 0.0;
  double avg_delay_s = 0.0;
  double energy_j = 0.0;
  int drops = 0;
};

// One run per (grid value x policy x seed) with the swept parameter replaced
// in the base scenario: E-UAV capacity in Hz, task computation density as a
// degenerate eta range, or vehicle density per km^2. Seeds are shared across
// policies at each grid value.
std::vector<SweepRow> sweep(const Scenario& base, SweepParam param,
                            const std::vector<double>& grid,
                            const std::vector<Policy>& policies,
                            const std::vector<std::uint64_t>& seeds, int slots);

}  // namespace mvtora
