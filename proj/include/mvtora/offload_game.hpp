#pragma once

#include <vector>

#include "mvtora/mec_alloc.hpp"
#include "mvtora/types.hpp"

namespace mvtora {

// Everything the game needs to know about one task-bearing C-UAV in one slot.
// u_local / u_vfc / u_mec_max are the per-player mode utilities of the game of
// the exact-potential identity: each player's MEC value is taken at its own best
// feasible share f_hat = min(unconstrained optimum, F_u_max), so a unilateral
// deviation changes no other player's term.
struct PlayerContext {
  int cuav_id = 0;
  Task task;

  double u_local = 0.0;
  double local_delay_s = 0.0, local_energy_j = 0.0;

  double u_vfc = 0.0;  // -inf when no fog nodes are reachable
  std::vector<int> fog_set;
  std::vector<double> division;
  double vfc_delay_s = 0.0, vfc_energy_j = 0.0;

  double rate_u2u_bps = 0.0;
  bool mec_possible = false;  // transmission slack positive
  MecDemand demand;           // valid when mec_possible
  double f_hat_hz = 0.0;      // min(closed_form at gamma=0, F_u_max)
  double u_mec_max = 0.0;     // utility at f_hat; -inf when MEC can never serve

  Mode initial_mode = Mode::local;
  double u_initial = 0.0;  // realized value of the initial decision (0 on drop)
};

struct SlotContext {
  std::vector<PlayerContext> players;
  double f_max_hz = 0.0;
  double price_per_hz = 0.0;
  double epsilon = 1e-9;
  double tx_power_u2u_w = 0.1;
  UtilityParams uparams;
};

enum class MecAllocRule {
  kkt_bisection,  // optimal shares for the offloader set
  even_split      // F_u_max / |offloaders| each (TODO baseline)
};

// Exact potential of the offloading game: the sum over players of the utility
// of each player's chosen mode, with MEC utilities evaluated at the supplied
// per-player shares. A unilateral deviation changes exactly the deviator's
// term, so F(b, a_-n) - F(a, a_-n) = U_n(b) - U_n(a) identically.
double potential(const SlotContext& ctx, const std::vector<Mode>& modes,
                 const std::vector<double>& mec_shares_hz);

struct UpdateEvent {
  int round = 0;
  int player = 0;
  Mode from = Mode::local;
  Mode to = Mode::local;
  bool accepted = false;  // true: kept MEC on strict improvement; false: reverted
  double potential_before = 0.0;
  double potential_after = 0.0;
};

struct GameResult {
  std::vector<Mode> modes;  // aligned to ctx.players
  MecAllocation allocation;
  std::vector<double> shares_hz;  // aligned to ctx.players, 0 for non-MEC
  int rounds = 0;
  bool converged = false;
  std::vector<UpdateEvent> updates;  // profile-changing steps only
};

// One full better-response round over all players in ascending index order;
// returns the updated modes and whether anything changed.
bool better_response_round(const SlotContext& ctx, MecAllocRule rule, int round,
                           std::vector<Mode>& modes, double& potential_value,
                           std::vector<UpdateEvent>& updates);

// Runs rounds until a full round changes no decision. Each player compares the
// tentative MEC utility (shares re-solved for the tentative offloader set)
// against its initial-decision value and keeps MEC only on strict improvement.
// Under kkt_bisection the finite improvement property holds and the 10*N round
// safety cap throws as a diagnostic; under even_split improvement cycles are
// possible and the cap stops the rounds with converged = false.
GameResult run_game(const SlotContext& ctx, MecAllocRule rule = MecAllocRule::kkt_bisection);

struct PoaResult {
  double poa = 1.0;
  double lower_bound = 0.0;
  double optimum_welfare = 0.0;
  double worst_nash_welfare = 0.0;
  int nash_count = 0;
  int profile_count = 0;
};

// Exhaustive enumeration of all 3^N profiles (N <= 4): identifies the Nash set
// under unilateral deviations with MEC shares re-solved per profile, the
// centralized optimum, the worst-equilibrium ratio, and the closed-form lower
// bound built from per-player best-share MEC utilities.
PoaResult poa_eval(const SlotContext& ctx);

}  // namespace mvtora
