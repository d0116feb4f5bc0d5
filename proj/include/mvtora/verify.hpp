#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mvtora/mec_alloc.hpp"
#include "mvtora/rng.hpp"
#include "mvtora/types.hpp"
#include "mvtora/vfc_alloc.hpp"

namespace mvtora {

// ---- independent oracles -------------------------------------------------
// These deliberately avoid the closed forms and search structures of the
// solvers they check: numerical gradients, exhaustive grids, and brute-force
// enumeration only.

// Allocation objective restricted to its share-dependent terms:
// sum of alpha_n * ln(slack_n - work_n / F_n) - price * F_n.
double mec_objective(const std::vector<MecDemand>& demands,
                     std::span<const double> shares_hz, double price_per_hz);

// Multistart projected gradient ascent with finite-difference gradients plus
// pairwise-transfer polish on the capacity surface.
double mec_gradient_oracle(const std::vector<MecDemand>& demands, double f_max_hz,
                           double price_per_hz, RngStream& rng, int restarts = 5);

// Minimal equalized completion delay over a vehicle subset: 1 / sum(1/Pr_j).
double equalized_delay(std::span<const double> preferences);

// Exhaustive simplex grid at the given resolution followed by shrinking
// pairwise-transfer refinement. Returns (division, objective).
std::pair<std::vector<double>, double> simplex_grid_oracle(
    const Task& task, std::span<const FogCandidate> fog_set,
    const UtilityParams& uparams, double tx_power_w, double resolution);

// ---- check batteries -------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_error = 0.0;
  int trials = 0;
  std::string detail;  // names the failing instance seed when pass is false
};

std::vector<CheckResult> verify_mec(int trials, std::uint64_t seed);
std::vector<CheckResult> verify_vfc(int trials, std::uint64_t seed);
// potential-identity enumeration over 3-player instances
std::vector<CheckResult> verify_game_identity(int trials, std::uint64_t seed);
// round-robin convergence, per-update potential increase, Nash certificate;
// trials counts seeds per fleet size in {5, 10, 15, 20}
std::vector<CheckResult> verify_game_dynamics(int trials, std::uint64_t seed);
std::vector<CheckResult> verify_game(int trials, std::uint64_t seed);
std::vector<CheckResult> verify_poa(int trials, std::uint64_t seed);

// suite in {mec, vfc, game, poa, all}; throws on unknown suite names.
std::vector<CheckResult> verify_suite(const std::string& suite, int trials,
                                      std::uint64_t seed);

}  // namespace mvtora
