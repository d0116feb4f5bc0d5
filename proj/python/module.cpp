#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvtora/channel.hpp"
#include "mvtora/cost_model.hpp"
#include "mvtora/mec_alloc.hpp"
#include "mvtora/scenario.hpp"
#include "mvtora/sim_engine.hpp"
#include "mvtora/verify.hpp"
#include "mvtora/vfc_alloc.hpp"

namespace py = pybind11;
using namespace mvtora;

namespace {

py::dict run_result_to_dict(const RunResult& r) {
  py::dict d;
  d["tsu"] = r.time_avg_system_utility;
  d["avg_delay_s"] = r.avg_completion_delay_s;
  d["total_energy_j"] = r.total_energy_j;
  d["drops"] = r.drops;
  d["total_tasks"] = r.total_tasks;
  py::list slot_utilities;
  for (const auto& m : r.slots) slot_utilities.append(m.system_utility);
  d["slot_utilities"] = slot_utilities;
  return d;
}

}  // namespace

PYBIND11_MODULE(mvtora_py, m) {
  m.doc() = "Task offloading and resource allocation simulator for a three-layer "
            "UAV/vehicle edge network";

  py::class_<Task>(m, "Task")
      .def(py::init([](double bits, double intensity, double deadline) {
             return Task{bits, intensity, deadline};
           }),
           py::arg("data_size_bits"), py::arg("intensity_cycles_per_bit"),
           py::arg("deadline_s"))
      .def_readwrite("data_size_bits", &Task::data_size_bits)
      .def_readwrite("intensity_cycles_per_bit", &Task::intensity_cycles_per_bit)
      .def_readwrite("deadline_s", &Task::deadline_s);

  py::class_<ChannelParams>(m, "ChannelParams")
      .def(py::init<>())
      .def_readwrite("bandwidth_hz", &ChannelParams::bandwidth_hz)
      .def_readwrite("beamwidth_half_rad", &ChannelParams::beamwidth_half_rad)
      .def_readwrite("main_lobe_gain", &ChannelParams::main_lobe_gain)
      .def_readwrite("ref_gain_u2v", &ChannelParams::ref_gain_u2v)
      .def_readwrite("ref_gain_u2u", &ChannelParams::ref_gain_u2u)
      .def_readwrite("nlos_factor", &ChannelParams::nlos_factor)
      .def_readwrite("pathloss_exp", &ChannelParams::pathloss_exp)
      .def_readwrite("los_a", &ChannelParams::los_a)
      .def_readwrite("los_b", &ChannelParams::los_b)
      .def_readwrite("noise_psd_w_per_hz", &ChannelParams::noise_psd_w_per_hz)
      .def_readwrite("tx_power_u2v_w", &ChannelParams::tx_power_u2v_w)
      .def_readwrite("tx_power_u2u_w", &ChannelParams::tx_power_u2u_w);

  py::class_<UtilityParams>(m, "UtilityParams")
      .def(py::init<>())
      .def_readwrite("delay_weight", &UtilityParams::delay_weight)
      .def_readwrite("energy_weight", &UtilityParams::energy_weight)
      .def_readwrite("log_offset", &UtilityParams::log_offset)
      .def_readwrite("mec_price_per_hz", &UtilityParams::mec_price_per_hz)
      .def_readwrite("switched_capacitance", &UtilityParams::switched_capacitance);

  py::class_<GaParams>(m, "GaParams")
      .def(py::init<>())
      .def_readwrite("generations", &GaParams::generations)
      .def_readwrite("population", &GaParams::population)
      .def_readwrite("crossover_prob", &GaParams::crossover_prob)
      .def_readwrite("mutation_prob", &GaParams::mutation_prob);

  py::class_<ModeOutcome>(m, "ModeOutcome")
      .def_readonly("delay_s", &ModeOutcome::delay_s)
      .def_readonly("energy_j", &ModeOutcome::energy_j)
      .def_readonly("utility", &ModeOutcome::utility)
      .def_readonly("feasible", &ModeOutcome::feasible);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("seed", &Scenario::seed)
      .def_readonly("n_cuavs", &Scenario::n_cuavs)
      .def_property_readonly("f_u_max_hz",
                             [](const Scenario& s) { return s.euav.max_freq_hz; })
      .def_readonly("subchannels", &Scenario::subchannels);

  m.def("load_scenario", &load_scenario, py::arg("config_text") = std::string(),
        "Parse a JSON scenario document; empty text yields all defaults");
  m.def("reseed", &reseed, py::arg("scenario"), py::arg("seed"));

  m.def(
      "run",
      [](const Scenario& sc, int slots, const std::string& policy) {
        return run_result_to_dict(run_horizon(sc, slots, policy_from_name(policy)));
      },
      py::arg("scenario"), py::arg("slots") = 100, py::arg("policy") = "mvtora");

  m.def(
      "sweep",
      [](const Scenario& sc, const std::string& param, const std::vector<double>& grid,
         const std::vector<std::string>& policies, int n_seeds, int slots) {
        std::vector<Policy> pols;
        for (const auto& p : policies) pols.push_back(policy_from_name(p));
        std::vector<std::uint64_t> seeds;
        for (int i = 0; i < n_seeds; ++i) seeds.push_back(sc.seed + i);
        py::list out;
        for (const auto& row :
             sweep(sc, sweep_param_from_name(param), grid, pols, seeds, slots)) {
          py::dict d;
          d["param_value"] = row.param_value;
          d["policy"] = policy_name(row.policy);
          d["seed"] = row.seed;
          d["tsu"] = row.tsu;
          d["avg_delay_s"] = row.avg_delay_s;
          d["total_energy_j"] = row.energy_j;
          out.append(d);
        }
        return out;
      },
      py::arg("scenario"), py::arg("param"), py::arg("grid"), py::arg("policies"),
      py::arg("n_seeds") = 1, py::arg("slots") = 100);

  // channel and cost primitives
  m.def("antenna_gain", &antenna_gain, py::arg("within_beam"), py::arg("params"));
  m.def("los_probability", &los_probability, py::arg("elevation_deg"), py::arg("a"),
        py::arg("b"));
  m.def("expected_u2v_gain", &expected_u2v_gain, py::arg("distance_m"),
        py::arg("altitude_m"), py::arg("params"));
  m.def(
      "local_outcome",
      [](const Task& t, double freq_hz, const UtilityParams& up) {
        CUavState c;
        c.local_freq_hz = freq_hz;
        return local_outcome(t, c, up);
      },
      py::arg("task"), py::arg("local_freq_hz"), py::arg("uparams"));
  m.def("mec_outcome", &mec_outcome, py::arg("task"), py::arg("allocated_hz"),
        py::arg("rate_u2u_bps"), py::arg("tx_power_w"), py::arg("uparams"));
  m.def(
      "vfc_outcome",
      [](const Task& t, const std::vector<double>& division,
         const std::vector<double>& rates, const std::vector<double>& freqs,
         double tx_power_w, const UtilityParams& up) {
        return vfc_outcome(t, division, rates, freqs, tx_power_w, up);
      },
      py::arg("task"), py::arg("division"), py::arg("rates_bps"), py::arg("freqs_hz"),
      py::arg("tx_power_w"), py::arg("uparams"));

  // allocation solvers
  m.def(
      "closed_form_share",
      [](double work_cycles, double slack_s, double delay_weight, double price_per_hz,
         double gamma) {
        return closed_form_share(MecDemand{0, work_cycles, slack_s, delay_weight},
                                 price_per_hz, gamma);
      },
      py::arg("work_cycles"), py::arg("slack_s"), py::arg("delay_weight"),
      py::arg("price_per_hz"), py::arg("gamma") = 0.0);
  m.def(
      "bisect_allocate",
      [](const std::vector<std::tuple<double, double, double>>& demands, double f_max,
         double price, double epsilon) {
        std::vector<MecDemand> ds;
        int id = 0;
        for (const auto& [work, slack, alpha] : demands)
          ds.push_back(MecDemand{id++, work, slack, alpha});
        const MecAllocation a = bisect_allocate(ds, f_max, price, epsilon);
        py::dict d;
        d["shares_hz"] = a.shares_hz;
        d["multiplier"] = a.multiplier;
        d["total_hz"] = a.total_hz;
        d["feasible"] = a.feasible;
        return d;
      },
      py::arg("demands"), py::arg("f_max_hz"), py::arg("price_per_hz"),
      py::arg("epsilon") = 1e-9);
  m.def("preference", &preference, py::arg("task"), py::arg("rate_bps"),
        py::arg("freq_hz"));
  m.def(
      "ga_divide",
      [](const Task& task, const std::vector<std::tuple<double, double>>& fog,
         const GaParams& ga, const UtilityParams& up, double tx_power_w,
         std::uint64_t seed) {
        std::vector<FogCandidate> fs;
        int id = 0;
        for (const auto& [rate, freq] : fog) fs.push_back({id++, rate, freq});
        RngStream rng(seed, StreamPurpose::ga);
        const DivisionResult r = ga_divide(task, fs, ga, up, tx_power_w, rng);
        return py::make_tuple(r.division, r.objective);
      },
      py::arg("task"), py::arg("fog"), py::arg("ga"), py::arg("uparams"),
      py::arg("tx_power_w") = 0.1, py::arg("seed") = 1);

  m.def(
      "verify",
      [](const std::string& suite, int trials, std::uint64_t seed) {
        py::list out;
        for (const auto& r : verify_suite(suite, trials, seed)) {
          py::dict d;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["max_error"] = r.max_error;
          d["trials"] = r.trials;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("trials") = 20, py::arg("seed") = 20240901);
}
