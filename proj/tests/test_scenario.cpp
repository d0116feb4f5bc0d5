#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mvtora/rng.hpp"
#include "mvtora/scenario.hpp"

using namespace mvtora;

TEST_CASE("named streams are deterministic and independent") {
  RngStream a(42, StreamPurpose::tasks, 3, 5);
  RngStream b(42, StreamPurpose::tasks, 3, 5);
  RngStream c(42, StreamPurpose::tasks, 3, 6);
  bool all_equal = true, any_equal_cross = false;
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    all_equal = all_equal && (va == b.next_u64());
    any_equal_cross = any_equal_cross || (va == c.next_u64());
  }
  CHECK(all_equal);
  CHECK_FALSE(any_equal_cross);
}

TEST_CASE("poisson sampler matches analytic moments") {
  RngStream rng(7, StreamPurpose::placement);
  const double mean = 800.0;  // 200 per km^2 over 4 km^2
  const int n = 10000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double k = static_cast<double>(rng.poisson(mean));
    sum += k;
    sum_sq += k * k;
  }
  const double sample_mean = sum / n;
  const double sample_std = std::sqrt(sum_sq / n - sample_mean * sample_mean);
  CHECK(std::abs(sample_mean - 800.0) < 1.5);
  CHECK(std::abs(sample_std - 28.2842712) < 1.5);
}

TEST_CASE("task arrivals follow the Bernoulli probability") {
  TaskConfig cfg;
  CUavState cuav;
  RngStream rng(11, StreamPurpose::tasks);

  cuav.task_prob = 1.0;
  for (int i = 0; i < 100; ++i) CHECK(spawn_task(cfg, cuav, rng).has_value());

  cuav.task_prob = 0.0;
  for (int i = 0; i < 100; ++i) CHECK_FALSE(spawn_task(cfg, cuav, rng).has_value());

  cuav.task_prob = 0.9;
  int hits = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i)
    if (spawn_task(cfg, cuav, rng)) ++hits;
  CHECK(std::abs(static_cast<double>(hits) / n - 0.9) < 0.01);
}

TEST_CASE("spawned task attributes respect the configured ranges") {
  TaskConfig cfg;
  CUavState cuav;
  cuav.task_prob = 1.0;
  RngStream rng(3, StreamPurpose::tasks);
  for (int i = 0; i < 1000; ++i) {
    const auto task = spawn_task(cfg, cuav, rng);
    REQUIRE(task.has_value());
    CHECK(task->data_size_bits >= cfg.data_bits_lo);
    CHECK(task->data_size_bits <= cfg.data_bits_hi);
    CHECK(task->intensity_cycles_per_bit >= cfg.intensity_lo);
    CHECK(task->intensity_cycles_per_bit <= cfg.intensity_hi);
    CHECK(task->deadline_s >= cfg.deadline_lo);
    CHECK(task->deadline_s <= cfg.deadline_hi);
  }
}

TEST_CASE("empty document yields the default scenario") {
  const Scenario sc = load_scenario("");
  CHECK(sc.n_cuavs == 15);
  CHECK(sc.area_width_m == doctest::Approx(2000.0));
  CHECK(sc.area_height_m == doctest::Approx(2000.0));
  CHECK(sc.euav.max_freq_hz == doctest::Approx(30e9));
  CHECK(sc.euav.position_m.z == doctest::Approx(300.0));
  CHECK(sc.cuav_altitude_m == doctest::Approx(100.0));
  CHECK(sc.subchannels == 5);
  CHECK(sc.channel.bandwidth_hz == doctest::Approx(200e3));
  CHECK(sc.channel.beamwidth_half_rad == doctest::Approx(M_PI / 4));
  CHECK(sc.channel.los_a == doctest::Approx(10.0));
  CHECK(sc.channel.los_b == doctest::Approx(0.6));
  CHECK(sc.channel.pathloss_exp == doctest::Approx(2.3));
  CHECK(sc.channel.nlos_factor == doctest::Approx(0.2));
  CHECK(sc.channel.ref_gain_u2v == doctest::Approx(1.42e-4));
  CHECK(sc.channel.tx_power_u2u_w == doctest::Approx(0.1));
  CHECK(sc.utility.switched_capacitance == doctest::Approx(1e-28));
  CHECK(sc.utility.delay_weight == doctest::Approx(0.9));
  CHECK(sc.utility.energy_weight == doctest::Approx(0.1));
  CHECK(sc.ga.generations == 200);
  CHECK(sc.ga.population == 50);
  CHECK(sc.ga.crossover_prob == doctest::Approx(0.8));
  CHECK(sc.ga.mutation_prob == doctest::Approx(0.1));
  CHECK(sc.mobility.vehicle_density_per_km2 == doctest::Approx(200.0));
  CHECK(sc.cuavs.size() == 15);
}

TEST_CASE("config values are echoed and converted to linear SI") {
  const Scenario sc = load_scenario(R"({
    "euav": {"F_u_max": 30e9},
    "cuav": {"K_n": 5},
    "channel": {"Psi": 0.7853981633974483, "P_n_m": 20.0, "sigma2": -174.0},
    "utility": {"rho_0": 0.001}
  })");
  CHECK(sc.euav.max_freq_hz == doctest::Approx(30e9));
  CHECK(sc.subchannels == 5);
  CHECK(sc.channel.beamwidth_half_rad == doctest::Approx(M_PI / 4));
  CHECK(sc.channel.tx_power_u2v_w == doctest::Approx(0.1));  // 20 dBm
  CHECK(sc.channel.noise_psd_w_per_hz == doctest::Approx(3.98107e-21).epsilon(1e-5));
  CHECK(sc.utility.mec_price_per_hz == doctest::Approx(1e-12));  // 0.001 $/GHz
}

TEST_CASE("weight invariant violations name the field") {
  CHECK_THROWS_WITH_AS(load_scenario(R"({"utility": {"alpha_n": 0.7, "beta_n": 0.1}})"),
                       doctest::Contains("delay_weight + energy_weight"),
                       std::invalid_argument);
}

TEST_CASE("parse errors carry line context") {
  try {
    load_scenario("{\n  \"cuav\": {\n  oops\n}");
    FAIL("expected parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
}

TEST_CASE("deadline beyond the slot duration is rejected") {
  CHECK_THROWS_AS(load_scenario(R"({"task": {"T_n_max": [0.5, 2.0]}})"),
                  std::invalid_argument);
}

TEST_CASE("fleet materialization is deterministic and grid cells are distinct") {
  const Scenario a = load_scenario(R"({"seed": 9})");
  const Scenario b = load_scenario(R"({"seed": 9})");
  REQUIRE(a.cuavs.size() == b.cuavs.size());
  for (std::size_t i = 0; i < a.cuavs.size(); ++i) {
    CHECK(a.cuavs[i].grid_center_m.x == b.cuavs[i].grid_center_m.x);
    CHECK(a.cuavs[i].local_freq_hz == b.cuavs[i].local_freq_hz);
    CHECK(a.cuavs[i].task_prob == b.cuavs[i].task_prob);
  }
  for (std::size_t i = 0; i < a.cuavs.size(); ++i)
    for (std::size_t j = i + 1; j < a.cuavs.size(); ++j) {
      const bool same = a.cuavs[i].grid_center_m.x == a.cuavs[j].grid_center_m.x &&
                        a.cuavs[i].grid_center_m.y == a.cuavs[j].grid_center_m.y;
      CHECK_FALSE(same);
    }
  for (const auto& c : a.cuavs) {
    CHECK(c.local_freq_hz >= 1e9);
    CHECK(c.local_freq_hz <= 2e9);
    CHECK(c.task_prob >= 0.8);
    CHECK(c.task_prob <= 1.0);
  }
}

TEST_CASE("profile validator enforces the joint constraints") {
  OffloadProfile p;
  p.has_task = {true, true, true};
  p.mode = {Mode::local, Mode::mec, Mode::veh};
  p.mec_freq_hz = {0.0, 10e9, 0.0};
  p.fog_set = {{}, {}, {4, 7}};
  p.division = {{}, {}, {0.25, 0.75}};
  CHECK_NOTHROW(validate_profile(p, 30e9, 5));

  SUBCASE("division off the simplex") {
    p.division[2] = {0.3, 0.75};
    CHECK_THROWS_WITH_AS(validate_profile(p, 30e9, 5), doctest::Contains("sum to 1"),
                         std::runtime_error);
  }
  SUBCASE("overlapping fog sets") {
    p.mode[0] = Mode::veh;
    p.fog_set[0] = {7};
    p.division[0] = {1.0};
    CHECK_THROWS_WITH_AS(validate_profile(p, 30e9, 5), doctest::Contains("disjoint"),
                         std::runtime_error);
  }
  SUBCASE("fog set beyond the sub-channel budget") {
    p.fog_set[2] = {1, 2, 3, 4, 5, 6};
    p.division[2] = std::vector<double>(6, 1.0 / 6);
    CHECK_THROWS_WITH_AS(validate_profile(p, 30e9, 5), doctest::Contains("K_n"),
                         std::runtime_error);
  }
  SUBCASE("total MEC share beyond capacity") {
    p.mec_freq_hz[1] = 40e9;
    CHECK_THROWS_AS(validate_profile(p, 30e9, 5), std::runtime_error);
  }
}
