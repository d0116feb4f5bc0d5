#pragma once

#include <cstdint>
#include <cmath>

namespace mvtora {

// Deterministic counter-based RNG. One master seed derives independent named
// streams keyed by (purpose, entity, slot), so concurrent consumers and
// re-ordered evaluation cannot perturb each other's draws.
enum class StreamPurpose : std::uint64_t {
  assignment = 0x1,  // C-UAV grid assignment, phases, per-UAV attribute draws
  placement = 0x2,   // vehicle spatial Poisson placement
  mobility = 0x3,    // per-vehicle Gauss-Markov noise
  tasks = 0x4,       // per-C-UAV Bernoulli arrivals and task attributes
  ga = 0x5,          // per-C-UAV task-division GA
  random_select = 0x6,  // TODO policy's random fog selection
  verify = 0x7          // oracle instance generation
};

class RngStream {
 public:
  RngStream() : state_(0x853c49e6748fea9bULL) {}

  RngStream(std::uint64_t master, StreamPurpose purpose, std::uint64_t entity = 0,
            std::uint64_t slot = 0) {
    std::uint64_t s = mix(master ^ 0x6a09e667f3bcc909ULL);
    s = mix(s ^ (static_cast<std::uint64_t>(purpose) * 0x9e3779b97f4a7c15ULL));
    s = mix(s ^ (entity * 0xbf58476d1ce4e5b9ULL));
    s = mix(s ^ (slot * 0x94d049bb133111ebULL));
    state_ = s;
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  // standard normal via Box-Muller; always consumes exactly two uniforms
  double normal() {
    double u1 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Poisson by additivity: split large means into Knuth-sized chunks
  long poisson(double mean) {
    long count = 0;
    while (mean > 30.0) {
      count += poisson_knuth(30.0);
      mean -= 30.0;
    }
    if (mean > 0.0) count += poisson_knuth(mean);
    return count;
  }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

 private:
  long poisson_knuth(double mean) {
    const double limit = std::exp(-mean);
    long k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform();
    } while (p > limit);
    return k - 1;
  }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace mvtora
