#include "mvtora/cost_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mvtora {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double utility(Mode mode, double delay_s, double energy_j, double deadline_s,
               double mec_share_hz, const UtilityParams& params) {
  if (delay_s > deadline_s) return kNegInf;
  const double log_arg = params.log_offset + deadline_s - delay_s;
  if (log_arg <= 0.0) return kNegInf;
  double value = params.delay_weight * std::log(log_arg) - params.energy_weight * energy_j;
  if (mode == Mode::mec) value -= params.mec_price_per_hz * mec_share_hz;
  return value;
}

ModeOutcome local_outcome(const Task& task, const CUavState& cuav,
                          const UtilityParams& params) {
  if (cuav.local_freq_hz <= 0.0)
    throw std::invalid_argument("local_outcome: local frequency must be positive");
  ModeOutcome out;
  out.delay_s = task.intensity_cycles_per_bit * task.data_size_bits / cuav.local_freq_hz;
  const double f = cuav.local_freq_hz;
  out.energy_j = params.switched_capacitance * f * f * f * out.delay_s;
  out.feasible = out.delay_s <= task.deadline_s;
  out.utility = utility(Mode::local, out.delay_s, out.energy_j, task.deadline_s, 0.0, params);
  return out;
}

ModeOutcome mec_outcome(const Task& task, double allocated_hz, double rate_u2u_bps,
                        double tx_power_w, const UtilityParams& params) {
  if (allocated_hz <= 0.0 || rate_u2u_bps <= 0.0)
    throw std::invalid_argument("mec_outcome: allocation and rate must be positive");
  ModeOutcome out;
  const double tx_delay = task.data_size_bits / rate_u2u_bps;
  out.delay_s = tx_delay + task.intensity_cycles_per_bit * task.data_size_bits / allocated_hz;
  out.energy_j = tx_power_w * tx_delay;
  out.feasible = out.delay_s <= task.deadline_s;
  out.utility =
      utility(Mode::mec, out.delay_s, out.energy_j, task.deadline_s, allocated_hz, params);
  return out;
}

ModeOutcome vfc_outcome(const Task& task, std::span<const double> division,
                        std::span<const double> fog_rates_bps,
                        std::span<const double> fog_freqs_hz, double tx_power_w,
                        const UtilityParams& params) {
  if (division.empty() || division.size() != fog_rates_bps.size() ||
      division.size() != fog_freqs_hz.size())
    throw std::invalid_argument("vfc_outcome: mismatched division/rates/freqs");
  ModeOutcome out;
  double max_delay = 0.0;
  double energy = 0.0;
  bool dead_share = false;
  for (std::size_t j = 0; j < division.size(); ++j) {
    const double share = division[j];
    if (share == 0.0) continue;  // zero share contributes no delay and no energy
    if (fog_freqs_hz[j] <= 0.0 || fog_rates_bps[j] <= 0.0) {
      dead_share = true;
      break;
    }
    const double tx = share * task.data_size_bits / fog_rates_bps[j];
    const double exec = share * task.intensity_cycles_per_bit * task.data_size_bits / fog_freqs_hz[j];
    max_delay = std::max(max_delay, tx + exec);
    energy += tx_power_w * tx;
  }
  if (dead_share) {
    out.delay_s = std::numeric_limits<double>::infinity();
    out.energy_j = 0.0;
    out.feasible = false;
    out.utility = kNegInf;
    return out;
  }
  out.delay_s = max_delay;
  out.energy_j = energy;
  out.feasible = out.delay_s <= task.deadline_s;
  out.utility = utility(Mode::veh, out.delay_s, out.energy_j, task.deadline_s, 0.0, params);
  return out;
}

}  // namespace mvtora
