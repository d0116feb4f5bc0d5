#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "mvtora/cost_model.hpp"

using namespace mvtora;

namespace {
UtilityParams defaults() { return UtilityParams{}; }
const double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("local computing delay and energy") {
  const UtilityParams up = defaults();
  Task task{2e6, 500.0, 1.0};
  CUavState cuav;
  cuav.local_freq_hz = 1e9;
  const ModeOutcome out = local_outcome(task, cuav, up);
  CHECK(out.delay_s == doctest::Approx(1.0));
  CHECK(out.energy_j == doctest::Approx(0.1));
  CHECK(out.feasible);

  SUBCASE("empty task limit") {
    task.data_size_bits = 1e-300;
    const ModeOutcome empty = local_outcome(task, cuav, up);
    CHECK(empty.delay_s == doctest::Approx(0.0));
    CHECK(empty.energy_j == doctest::Approx(0.0));
    CHECK(empty.utility ==
          doctest::Approx(up.delay_weight * std::log(up.log_offset + task.deadline_s)));
  }
}

TEST_CASE("MEC offloading delay and transmission energy") {
  const UtilityParams up = defaults();
  const Task task{2e6, 500.0, 1.0};
  const ModeOutcome out = mec_outcome(task, 1e10, 4e6, 0.1, up);
  CHECK(out.delay_s == doctest::Approx(0.6));
  CHECK(out.energy_j == doctest::Approx(0.05));
  CHECK(out.feasible);
}

TEST_CASE("VFC max-of-branches delay and summed transmission energy") {
  const UtilityParams up = defaults();
  const Task task{2e6, 500.0, 1.0};
  const std::vector<double> rates{2e6, 2e6}, freqs{1e9, 1e9};

  SUBCASE("symmetric split") {
    const std::vector<double> lambda{0.5, 0.5};
    const ModeOutcome out = vfc_outcome(task, lambda, rates, freqs, 0.1, up);
    CHECK(out.delay_s == doctest::Approx(1.0));
    CHECK(out.feasible);
  }
  SUBCASE("singleton reduces to the single-link formula") {
    const std::vector<double> one{1.0};
    const std::vector<double> r1{2e6}, f1{1e9};
    const ModeOutcome out = vfc_outcome(task, one, r1, f1, 0.1, up);
    CHECK(out.delay_s == doctest::Approx(2e6 / 2e6 + 500.0 * 2e6 / 1e9));
    CHECK(out.energy_j == doctest::Approx(0.1 * 2e6 / 2e6));
  }
  SUBCASE("zero share contributes nothing, even on a dead vehicle") {
    const std::vector<double> lambda{1.0, 0.0};
    const std::vector<double> f_dead{1e9, 0.0};
    const ModeOutcome out = vfc_outcome(task, lambda, rates, f_dead, 0.1, up);
    CHECK(out.delay_s == doctest::Approx(2e6 / 2e6 + 500.0 * 2e6 / 1e9));  // vehicle 1 alone
    CHECK(out.energy_j == doctest::Approx(0.1 * 2e6 / 2e6));
  }
  SUBCASE("positive share on a dead vehicle is infeasible") {
    const std::vector<double> lambda{0.5, 0.5};
    const std::vector<double> f_dead{1e9, 0.0};
    const ModeOutcome out = vfc_outcome(task, lambda, rates, f_dead, 0.1, up);
    CHECK_FALSE(out.feasible);
    CHECK(out.utility == -kInf);
  }
}

TEST_CASE("utility values") {
  UtilityParams up = defaults();
  // 0.9 * ln(1 + 1.0 - 0.5) - 0.1 * 0.05
  CHECK(utility(Mode::local, 0.5, 0.05, 1.0, 0.0, up) ==
        doctest::Approx(0.3599186).epsilon(1e-6));
  // deadline-exact completion with unit offset: revenue vanishes
  CHECK(utility(Mode::local, 1.0, 0.0, 1.0, 0.0, up) == doctest::Approx(0.0));
  // MEC price enters only the MEC case
  const double base = utility(Mode::local, 0.5, 0.05, 1.0, 0.0, up);
  CHECK(utility(Mode::mec, 0.5, 0.05, 1.0, 10e9, up) ==
        doctest::Approx(base - up.mec_price_per_hz * 10e9));
}

TEST_CASE("deadline misses and log-domain violations are -inf sentinels") {
  const UtilityParams up = defaults();
  CHECK(utility(Mode::local, 1.2, 0.0, 1.0, 0.0, up) == -kInf);
  UtilityParams tight = up;
  tight.log_offset = 0.1;
  CHECK(utility(Mode::veh, 0.95, 0.0, 1.0, 0.0, tight) ==
        doctest::Approx(tight.delay_weight * std::log(0.15)));
}

TEST_CASE("utility decreases in delay and in energy") {
  const UtilityParams up = defaults();
  double prev = kInf;
  for (double delay = 0.1; delay <= 1.0; delay += 0.1) {
    const double u = utility(Mode::local, delay, 0.05, 1.0, 0.0, up);
    CHECK(u < prev);
    prev = u;
  }
  prev = kInf;
  for (double energy = 0.0; energy <= 1.0; energy += 0.1) {
    const double u = utility(Mode::local, 0.5, energy, 1.0, 0.0, up);
    CHECK(u < prev);
    prev = u;
  }
}

TEST_CASE("MEC utility is concave in the allocated frequency") {
  const UtilityParams up = defaults();
  const Task task{2e6, 500.0, 1.0};
  std::vector<double> values;
  for (double f = 2e9; f <= 60e9; f += 1e9)
    values.push_back(mec_outcome(task, f, 4e6, 0.1, up).utility);
  for (std::size_t i = 2; i < values.size(); ++i) {
    const double second_diff = values[i] - 2.0 * values[i - 1] + values[i - 2];
    CHECK(second_diff < 0.0);
  }
}
