#pragma once

#include <vector>

#include "mvtora/types.hpp"

namespace mvtora {

// What the edge allocator needs to know about one offloader. slack_s is
// log_offset + deadline - transmission_delay and must be positive: an
// offloader whose transmission alone exhausts deadline-plus-offset can never
// be served and is rejected upstream.
struct MecDemand {
  int id = 0;
  double work_cycles = 0.0;   // eta_n * D_n
  double slack_s = 0.0;       // log_offset + T_n_max - D_n / R_n_u
  double delay_weight = 0.0;  // alpha_n
};

struct MecAllocation {
  std::vector<int> ids;
  std::vector<double> shares_hz;  // aligned to ids
  double multiplier = 0.0;        // gamma, >= 0
  double total_hz = 0.0;
  bool feasible = true;  // false when even the log-domain floors exceed F_u_max
  int iterations = 0;

  double share_of(int id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return shares_hz[i];
    return 0.0;
  }
};

// Positive root of the per-offloader first-order condition at multiplier
// gamma. Requires slack_s > 0; the result always exceeds the log-domain floor
// work_cycles / slack_s.
double closed_form_share(const MecDemand& demand, double price_per_hz, double gamma);

// Frequency shares for the offloader set: unconstrained closed forms when they
// fit, otherwise bisection on the multiplier until the clamped shares sum to
// f_max_hz within tolerance. epsilon is the relative accuracy of the
// multiplier search (the multiplier lives on the scale of the price). An empty
// set yields an empty allocation. A set whose log-domain floors already exceed
// f_max_hz is marked infeasible and given floor-proportional shares (every
// outcome then misses its log domain).
MecAllocation bisect_allocate(const std::vector<MecDemand>& demands, double f_max_hz,
                              double price_per_hz, double epsilon);

}  // namespace mvtora
