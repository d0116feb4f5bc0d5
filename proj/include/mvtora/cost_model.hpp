#pragma once

#include <span>

#include "mvtora/types.hpp"

namespace mvtora {

// Delay, energy, and utility of executing one task under one offloading mode.
// Infeasible outcomes (deadline missed or log domain violated) carry a -inf
// utility sentinel so downstream argmax logic excludes them uniformly.
struct ModeOutcome {
  double delay_s = 0.0;
  double energy_j = 0.0;
  double utility = 0.0;
  bool feasible = false;
};

// Mode utility: delay_weight * ln(log_offset + deadline - delay)
//             - energy_weight * energy  [- price * mec_share for MEC].
// Returns -inf when the task misses its deadline or the log argument is
// non-positive.
double utility(Mode mode, double delay_s, double energy_j, double deadline_s,
               double mec_share_hz, const UtilityParams& params);

ModeOutcome local_outcome(const Task& task, const CUavState& cuav,
                          const UtilityParams& params);

ModeOutcome mec_outcome(const Task& task, double allocated_hz, double rate_u2u_bps,
                        double tx_power_w, const UtilityParams& params);

// division, fog_rates, fog_freqs are aligned; division lies on the simplex.
ModeOutcome vfc_outcome(const Task& task, std::span<const double> division,
                        std::span<const double> fog_rates_bps,
                        std::span<const double> fog_freqs_hz, double tx_power_w,
                        const UtilityParams& params);

}  // namespace mvtora
