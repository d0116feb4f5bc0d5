#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mvtora/scenario.hpp"
#include "mvtora/sim_engine.hpp"
#include "mvtora/verify.hpp"

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

mvtora::Scenario load_config_or_exit(const std::string& path) {
  std::string text;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open config file '" << path << "'\n";
      std::exit(2);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return mvtora::load_scenario(text);
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write to '" << out_path << "'\n";
    std::exit(2);
  }
  out << content;
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> grid;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(std::stod(item));
  return grid;
}

std::string run_csv(const mvtora::RunResult& result, const std::string& policy) {
  std::ostringstream csv;
  csv << "slot,policy,system_utility,avg_delay_s,total_energy_j,n_local,n_mec,n_veh,drops\n";
  for (std::size_t t = 0; t < result.slots.size(); ++t) {
    const auto& m = result.slots[t];
    double delay_sum = 0.0, energy = 0.0;
    int tasks = 0;
    for (std::size_t n = 0; n < m.had_task.size(); ++n) {
      if (!m.had_task[n]) continue;
      ++tasks;
      delay_sum += m.delay_s[n];
      energy += m.energy_j[n];
    }
    csv << t << ',' << policy << ',' << format_double(m.system_utility) << ','
        << format_double(tasks ? delay_sum / tasks : 0.0) << ',' << format_double(energy)
        << ',' << m.n_local << ',' << m.n_mec << ',' << m.n_veh << ',' << m.dropped_count
        << '\n';
  }
  int n_local = 0, n_mec = 0, n_veh = 0;
  for (const auto& m : result.slots) {
    n_local += m.n_local;
    n_mec += m.n_mec;
    n_veh += m.n_veh;
  }
  csv << "summary," << policy << ',' << format_double(result.time_avg_system_utility) << ','
      << format_double(result.avg_completion_delay_s) << ','
      << format_double(result.total_energy_j) << ',' << n_local << ',' << n_mec << ','
      << n_veh << ',' << result.drops << '\n';
  return csv.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint task offloading and resource allocation simulator for a "
               "three-layer UAV/vehicle edge network"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Simulate one policy over a horizon, emit per-slot CSV");
  std::string run_config, run_policy = "mvtora", run_out;
  int run_slots = 100;
  std::uint64_t run_seed = 0;
  bool run_seed_set = false;
  run->add_option("--config", run_config, "Scenario config file (JSON)");
  run->add_option("--policy", run_policy, "mvtora|elc|emc|vto|mto|todo");
  run->add_option("--slots", run_slots, "Horizon length in slots")->check(CLI::PositiveNumber);
  run->add_option("--seed", run_seed, "Master seed override")->each([&](const std::string&) {
    run_seed_set = true;
  });
  run->add_option("--out", run_out, "Output CSV path (default stdout)");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep, long-format CSV");
  std::string sweep_config, sweep_param, sweep_grid, sweep_policies = "mvtora,elc,emc,vto,mto,todo",
              sweep_out;
  int sweep_slots = 100, sweep_seeds = 1;
  sweep_cmd->add_option("--config", sweep_config, "Scenario config file (JSON)");
  sweep_cmd->add_option("--param", sweep_param, "euav-freq|task-density|veh-density")->required();
  sweep_cmd->add_option("--grid", sweep_grid, "Comma-separated grid values")->required();
  sweep_cmd->add_option("--policies", sweep_policies, "Comma-separated policy list");
  sweep_cmd->add_option("--seeds", sweep_seeds, "Number of paired seeds")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--slots", sweep_slots, "Horizon length in slots")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sweep_out, "Output CSV path (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run solver oracle suites");
  std::string verify_suite_name = "all";
  int verify_trials = 50;
  std::uint64_t verify_seed = 20240901;
  verify_cmd->add_option("--suite", verify_suite_name, "mec|vfc|game|poa|all");
  verify_cmd->add_option("--trials", verify_trials, "Trials per check")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify_seed, "Battery seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      mvtora::Scenario sc = load_config_or_exit(run_config);
      if (run_seed_set) mvtora::reseed(sc, run_seed);
      const mvtora::Policy policy = mvtora::policy_from_name(run_policy);
      const mvtora::RunResult result = mvtora::run_horizon(sc, run_slots, policy);
      write_output(run_out, run_csv(result, run_policy));
      return 0;
    }

    if (sweep_cmd->parsed()) {
      mvtora::Scenario sc = load_config_or_exit(sweep_config);
      const mvtora::SweepParam param = mvtora::sweep_param_from_name(sweep_param);
      const std::vector<double> grid = parse_grid(sweep_grid);
      std::vector<mvtora::Policy> policies;
      std::stringstream ss(sweep_policies);
      std::string name;
      while (std::getline(ss, name, ',')) policies.push_back(mvtora::policy_from_name(name));
      std::vector<std::uint64_t> seeds;
      for (int i = 0; i < sweep_seeds; ++i) seeds.push_back(sc.seed + i);
      const auto rows = mvtora::sweep(sc, param, grid, policies, seeds, sweep_slots);
      std::ostringstream csv;
      csv << "param_value,policy,seed,tsu,avg_delay_s,total_energy_j\n";
      for (const auto& row : rows)
        csv << format_double(row.param_value) << ',' << mvtora::policy_name(row.policy) << ','
            << row.seed << ',' << format_double(row.tsu) << ','
            << format_double(row.avg_delay_s) << ',' << format_double(row.energy_j) << '\n';
      write_output(sweep_out, csv.str());
      return 0;
    }

    if (verify_cmd->parsed()) {
      const auto results = mvtora::verify_suite(verify_suite_name, verify_trials, verify_seed);
      bool all_pass = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
                  << "  max_error=" << format_double(r.max_error) << "  trials=" << r.trials;
        if (!r.pass && !r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << '\n';
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
