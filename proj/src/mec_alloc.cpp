#include "mvtora/mec_alloc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mvtora {

namespace {

// Sum of per-offloader shares at a given multiplier, each clamped to f_max.
double clamped_total(const std::vector<MecDemand>& demands, double price_per_hz,
                     double gamma, double f_max_hz, std::vector<double>& shares) {
  double total = 0.0;
  for (std::size_t i = 0; i < demands.size(); ++i) {
    shares[i] = std::min(closed_form_share(demands[i], price_per_hz, gamma), f_max_hz);
    total += shares[i];
  }
  return total;
}

}  // namespace

double closed_form_share(const MecDemand& demand, double price_per_hz, double gamma) {
  if (demand.slack_s <= 0.0)
    throw std::invalid_argument("closed_form_share: non-positive slack (infeasible for MEC)");
  const double work = demand.work_cycles;
  const double c = demand.slack_s;
  const double disc = work * work + 4.0 * c * work * demand.delay_weight / (price_per_hz + gamma);
  return (work + std::sqrt(disc)) / (2.0 * c);
}

MecAllocation bisect_allocate(const std::vector<MecDemand>& demands, double f_max_hz,
                              double price_per_hz, double epsilon) {
  if (epsilon <= 0.0) throw std::invalid_argument("bisect_allocate: epsilon must be positive");
  MecAllocation alloc;
  if (demands.empty()) return alloc;

  alloc.ids.reserve(demands.size());
  double floor_total = 0.0;
  for (const auto& d : demands) {
    if (d.slack_s <= 0.0)
      throw std::invalid_argument("bisect_allocate: demand with non-positive slack");
    alloc.ids.push_back(d.id);
    floor_total += d.work_cycles / d.slack_s;
  }
  alloc.shares_hz.assign(demands.size(), 0.0);

  if (floor_total >= f_max_hz) {
    // No multiplier can fit this set: hand out floor-proportional shares so
    // every outcome lands outside its log domain and gets rejected downstream.
    alloc.feasible = false;
    for (std::size_t i = 0; i < demands.size(); ++i)
      alloc.shares_hz[i] = f_max_hz * (demands[i].work_cycles / demands[i].slack_s) / floor_total;
    for (double s : alloc.shares_hz) alloc.total_hz += s;
    return alloc;
  }

  double total = clamped_total(demands, price_per_hz, 0.0, f_max_hz, alloc.shares_hz);
  if (total <= f_max_hz) {
    alloc.multiplier = 0.0;
    alloc.total_hz = total;
    return alloc;
  }

  // Grow the upper bracket until the demand curve drops below capacity, then
  // bisect. The clamped total is continuous and strictly decreasing wherever
  // shares are unclamped, so the bracket always closes.
  double gamma_lo = 0.0;
  double gamma_hi = 1.0;
  int iterations = 0;
  while (clamped_total(demands, price_per_hz, gamma_hi, f_max_hz, alloc.shares_hz) > f_max_hz) {
    gamma_hi *= 2.0;
    if (++iterations > 200)
      throw std::runtime_error("bisect_allocate: multiplier bracket failed to close");
  }

  // The multiplier lives on the scale of the resource price, so the search
  // accuracy is relative: stop once the bracket shrinks below
  // epsilon * (price + gamma).
  const int kMaxBisections = 200;
  auto bracket_open = [&] {
    return (gamma_hi - gamma_lo) >= epsilon * (price_per_hz + gamma_hi);
  };
  for (int it = 0; it < kMaxBisections && bracket_open(); ++it) {
    const double gamma = 0.5 * (gamma_lo + gamma_hi);
    total = clamped_total(demands, price_per_hz, gamma, f_max_hz, alloc.shares_hz);
    if (total >= f_max_hz)
      gamma_lo = gamma;
    else
      gamma_hi = gamma;
    ++iterations;
  }
  if (bracket_open())
    throw std::runtime_error("bisect_allocate: bisection did not converge within the cap");

  alloc.multiplier = 0.5 * (gamma_lo + gamma_hi);
  alloc.total_hz = clamped_total(demands, price_per_hz, alloc.multiplier, f_max_hz, alloc.shares_hz);
  alloc.iterations = iterations;
  return alloc;
}

}  // namespace mvtora
