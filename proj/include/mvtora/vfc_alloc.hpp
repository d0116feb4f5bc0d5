#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mvtora/rng.hpp"
#include "mvtora/types.hpp"

namespace mvtora {

struct FogCandidate {
  int vehicle_id = 0;
  double rate_bps = 0.0;
  double freq_hz = 0.0;
};

// Full-task transfer plus full-task execution time on one vehicle; the sort
// key for fog node selection. Infinite when the vehicle has no idle compute,
// so such vehicles are never selected.
double preference(const Task& task, double rate_bps, double freq_hz);

// The K smallest-preference candidates (all of them when fewer than K), ties
// broken by vehicle id. An empty result is the no-VFC signal for this slot.
std::vector<FogCandidate> select_fog_nodes(const Task& task,
                                           const std::vector<FogCandidate>& candidates,
                                           int max_nodes);

// Projects genes onto the simplex by dividing by their sum; an all-zero vector
// is resampled uniformly first.
void normalize(std::span<double> genes, RngStream& rng);

struct DivisionResult {
  std::vector<double> division;
  double objective = 0.0;  // utility of the returned division
};

// Observer invoked once per generation with the freshly formed population
// (row-major L x K) and its fitness values; used by property tests.
using GaObserver =
    std::function<void(int generation, std::span<const double> population,
                       std::span<const double> fitness)>;

// Elite-preserving genetic search for the task division vector: 2-tournament
// selection, arithmetic crossover with a shared per-pair weight, per-gene
// uniform-resample mutation, post-operator simplex normalization, elite
// replacing the worst offspring. A singleton fog set short-circuits to
// division {1}.
DivisionResult ga_divide(const Task& task, std::span<const FogCandidate> fog_set,
                         const GaParams& ga, const UtilityParams& uparams,
                         double tx_power_w, RngStream& rng,
                         const GaObserver& observer = {});

}  // namespace mvtora
