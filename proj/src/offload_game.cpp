#include "mvtora/offload_game.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mvtora/cost_model.hpp"

namespace mvtora {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double realized(double utility_value) {
  return std::isinf(utility_value) ? 0.0 : utility_value;  // infeasible tasks drop
}

double mec_utility_at(const SlotContext& ctx, const PlayerContext& p, double share_hz) {
  if (!p.mec_possible || share_hz <= 0.0) return kNegInf;
  return mec_outcome(p.task, share_hz, p.rate_u2u_bps, ctx.tx_power_u2u_w, ctx.uparams)
      .utility;
}

// Shares for the tentative offloader set under the active allocation rule.
MecAllocation allocate(const SlotContext& ctx, MecAllocRule rule,
                       const std::vector<int>& offloaders) {
  if (rule == MecAllocRule::even_split) {
    MecAllocation alloc;
    if (offloaders.empty()) return alloc;
    const double share = ctx.f_max_hz / static_cast<double>(offloaders.size());
    for (int i : offloaders) {
      alloc.ids.push_back(ctx.players[i].cuav_id);
      alloc.shares_hz.push_back(share);
      alloc.total_hz += share;
    }
    return alloc;
  }
  std::vector<MecDemand> demands;
  demands.reserve(offloaders.size());
  for (int i : offloaders) demands.push_back(ctx.players[i].demand);
  return bisect_allocate(demands, ctx.f_max_hz, ctx.price_per_hz, ctx.epsilon);
}

std::vector<int> mec_members(const std::vector<Mode>& modes) {
  std::vector<int> set;
  for (std::size_t i = 0; i < modes.size(); ++i)
    if (modes[i] == Mode::mec) set.push_back(static_cast<int>(i));
  return set;
}

// Potential of the reduced two-strategy game the rounds actually play:
// MEC players at their decoupled best-share utility, everyone else at the
// realized value of its initial decision.
double game_potential(const SlotContext& ctx, const std::vector<Mode>& modes) {
  double value = 0.0;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const PlayerContext& p = ctx.players[i];
    value += (modes[i] == Mode::mec) ? p.u_mec_max : p.u_initial;
  }
  return value;
}

}  // namespace

double potential(const SlotContext& ctx, const std::vector<Mode>& modes,
                 const std::vector<double>& mec_shares_hz) {
  if (modes.size() != ctx.players.size() || mec_shares_hz.size() != ctx.players.size())
    throw std::invalid_argument("potential: modes/shares misaligned with players");
  double value = 0.0;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const PlayerContext& p = ctx.players[i];
    switch (modes[i]) {
      case Mode::local: value += p.u_local; break;
      case Mode::veh: value += p.u_vfc; break;
      case Mode::mec: value += mec_utility_at(ctx, p, mec_shares_hz[i]); break;
    }
  }
  return value;
}

bool better_response_round(const SlotContext& ctx, MecAllocRule rule, int round,
                           std::vector<Mode>& modes, double& potential_value,
                           std::vector<UpdateEvent>& updates) {
  bool changed = false;
  for (std::size_t i = 0; i < ctx.players.size(); ++i) {
    const PlayerContext& p = ctx.players[i];
    if (!p.mec_possible) continue;  // tentative MEC can never serve this player

    std::vector<int> tentative = mec_members(modes);
    if (modes[i] != Mode::mec) tentative.push_back(static_cast<int>(i));

    const MecAllocation alloc = allocate(ctx, rule, tentative);
    double u_mec = kNegInf;
    if (alloc.feasible) u_mec = mec_utility_at(ctx, p, alloc.share_of(p.cuav_id));

    if (u_mec > p.u_initial) {
      if (modes[i] != Mode::mec) {
        UpdateEvent ev{round, static_cast<int>(i), modes[i], Mode::mec, true,
                       potential_value, 0.0};
        modes[i] = Mode::mec;
        potential_value += p.u_mec_max - p.u_initial;
        ev.potential_after = potential_value;
        updates.push_back(ev);
        changed = true;
      }
    } else if (modes[i] == Mode::mec) {
      UpdateEvent ev{round, static_cast<int>(i), Mode::mec, p.initial_mode, false,
                     potential_value, 0.0};
      modes[i] = p.initial_mode;
      potential_value -= p.u_mec_max - p.u_initial;
      ev.potential_after = potential_value;
      updates.push_back(ev);
      changed = true;
    }
  }
  return changed;
}

GameResult run_game(const SlotContext& ctx, MecAllocRule rule) {
  GameResult result;
  result.modes.reserve(ctx.players.size());
  for (const auto& p : ctx.players) result.modes.push_back(p.initial_mode);

  double phi = game_potential(ctx, result.modes);
  const int round_cap = 10 * std::max<int>(1, static_cast<int>(ctx.players.size()));

  // The bisection-backed game has the finite improvement property (acceptance
  // is a threshold in the capacity multiplier, monotone under set inclusion),
  // so its cap is a diagnostic. The even-split rule lacks that structure: the
  // per-member share can overshoot a player's interior optimum, join/leave
  // cycles are possible, and the cap is a real stop.
  bool changed = true;
  result.converged = false;
  while (changed) {
    if (result.rounds >= round_cap) {
      if (rule == MecAllocRule::kkt_bisection)
        throw std::runtime_error(
            "run_game: round cap reached (finite improvement violated)");
      break;
    }
    ++result.rounds;
    changed = better_response_round(ctx, rule, result.rounds, result.modes, phi,
                                    result.updates);
  }
  result.converged = !changed;

  result.allocation = allocate(ctx, rule, mec_members(result.modes));
  result.shares_hz.assign(ctx.players.size(), 0.0);
  for (std::size_t i = 0; i < ctx.players.size(); ++i)
    if (result.modes[i] == Mode::mec)
      result.shares_hz[i] = result.allocation.share_of(ctx.players[i].cuav_id);
  return result;
}

PoaResult poa_eval(const SlotContext& ctx) {
  const int n = static_cast<int>(ctx.players.size());
  if (n < 1 || n > 4)
    throw std::invalid_argument("poa_eval: strategy space enumerable only for N <= 4");

  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;

  std::vector<Mode> modes(n);
  std::vector<double> shares(n);

  // Welfare and per-player utilities of one profile, shares re-solved for its
  // offloader set.
  auto evaluate = [&](const std::vector<Mode>& m, std::vector<double>& out_utils) {
    const std::vector<int> set = mec_members(m);
    const MecAllocation alloc = allocate(ctx, MecAllocRule::kkt_bisection, set);
    double welfare = 0.0;
    out_utils.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
      const PlayerContext& p = ctx.players[i];
      double u = kNegInf;
      switch (m[i]) {
        case Mode::local: u = p.u_local; break;
        case Mode::veh: u = p.u_vfc; break;
        case Mode::mec:
          u = alloc.feasible ? mec_utility_at(ctx, p, alloc.share_of(p.cuav_id)) : kNegInf;
          break;
      }
      out_utils[i] = u;
      welfare += u;
    }
    return welfare;
  };

  PoaResult result;
  result.profile_count = total;
  double best_welfare = kNegInf;
  double worst_nash = std::numeric_limits<double>::infinity();

  std::vector<double> utils(n), alt_utils(n);
  for (int code = 0; code < total; ++code) {
    int rem = code;
    for (int i = 0; i < n; ++i) {
      modes[i] = static_cast<Mode>(rem % 3);
      rem /= 3;
    }
    const double welfare = evaluate(modes, utils);
    if (welfare > best_welfare) best_welfare = welfare;

    bool nash = true;
    for (int i = 0; i < n && nash; ++i) {
      const Mode original = modes[i];
      for (int alt = 0; alt < 3 && nash; ++alt) {
        const Mode candidate = static_cast<Mode>(alt);
        if (candidate == original) continue;
        modes[i] = candidate;
        evaluate(modes, alt_utils);
        if (alt_utils[i] > utils[i]) nash = false;
        modes[i] = original;
      }
    }
    if (nash) {
      ++result.nash_count;
      if (welfare < worst_nash) worst_nash = welfare;
    }
  }

  if (result.nash_count == 0)
    throw std::runtime_error("poa_eval: no Nash equilibrium found (potential game violated)");

  result.optimum_welfare = best_welfare;
  result.worst_nash_welfare = worst_nash;
  result.poa = worst_nash / best_welfare;

  double numer = 0.0, denom = 0.0;
  for (const auto& p : ctx.players) {
    numer += std::max(p.u_local, p.u_vfc);
    denom += std::max(std::max(p.u_local, p.u_vfc), p.u_mec_max);
  }
  result.lower_bound = numer / denom;
  return result;
}

}  // namespace mvtora
