#include "mvtora/vfc_alloc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mvtora/cost_model.hpp"

namespace mvtora {

double preference(const Task& task, double rate_bps, double freq_hz) {
  if (freq_hz <= 0.0 || rate_bps <= 0.0) return std::numeric_limits<double>::infinity();
  return task.data_size_bits / rate_bps +
         task.intensity_cycles_per_bit * task.data_size_bits / freq_hz;
}

std::vector<FogCandidate> select_fog_nodes(const Task& task,
                                           const std::vector<FogCandidate>& candidates,
                                           int max_nodes) {
  std::vector<std::pair<double, int>> ranked;  // (preference, index)
  ranked.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double pr = preference(task, candidates[i].rate_bps, candidates[i].freq_hz);
    if (std::isinf(pr)) continue;  // never selected
    ranked.emplace_back(pr, static_cast<int>(i));
  }
  std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return candidates[a.second].vehicle_id < candidates[b.second].vehicle_id;
  });
  if (static_cast<int>(ranked.size()) > max_nodes) ranked.resize(max_nodes);
  std::vector<FogCandidate> selected;
  selected.reserve(ranked.size());
  for (const auto& [pr, idx] : ranked) selected.push_back(candidates[idx]);
  return selected;
}

void normalize(std::span<double> genes, RngStream& rng) {
  for (double g : genes)
    if (g < 0.0) throw std::invalid_argument("normalize: negative gene");
  double sum = 0.0;
  for (double g : genes) sum += g;
  if (sum <= 0.0) {
    for (double& g : genes) g = rng.uniform();
    sum = 0.0;
    for (double g : genes) sum += g;
  }
  for (double& g : genes) g /= sum;
}

namespace {

double division_objective(const Task& task, std::span<const FogCandidate> fog_set,
                          std::span<const double> division, double tx_power_w,
                          const UtilityParams& uparams, std::vector<double>& rates,
                          std::vector<double>& freqs) {
  for (std::size_t j = 0; j < fog_set.size(); ++j) {
    rates[j] = fog_set[j].rate_bps;
    freqs[j] = fog_set[j].freq_hz;
  }
  return vfc_outcome(task, division, rates, freqs, tx_power_w, uparams).utility;
}

}  // namespace

DivisionResult ga_divide(const Task& task, std::span<const FogCandidate> fog_set,
                         const GaParams& ga, const UtilityParams& uparams,
                         double tx_power_w, RngStream& rng, const GaObserver& observer) {
  if (fog_set.empty()) throw std::invalid_argument("ga_divide: empty fog set");
  const int k = static_cast<int>(fog_set.size());

  std::vector<double> rates(k), freqs(k);
  if (k == 1) {
    DivisionResult r;
    r.division = {1.0};
    r.objective = division_objective(task, fog_set, r.division, tx_power_w, uparams, rates, freqs);
    return r;
  }

  const int pop = ga.population;
  std::vector<double> population(static_cast<std::size_t>(pop) * k);
  std::vector<double> offspring(population.size());
  std::vector<double> fitness(pop), offspring_fitness(pop);
  std::vector<int> parents(pop);

  auto row = [&](std::vector<double>& buf, int l) {
    return std::span<double>(buf.data() + static_cast<std::size_t>(l) * k, k);
  };
  auto eval = [&](std::span<const double> genes) {
    return division_objective(task, fog_set, genes, tx_power_w, uparams, rates, freqs);
  };

  for (int l = 0; l < pop; ++l) {
    auto genes = row(population, l);
    for (double& g : genes) g = rng.uniform();
    normalize(genes, rng);
  }

  int best_index = 0;
  for (int g = 0; g < ga.generations; ++g) {
    for (int l = 0; l < pop; ++l) fitness[l] = eval(row(population, l));

    best_index = 0;
    for (int l = 1; l < pop; ++l)
      if (fitness[l] > fitness[best_index]) best_index = l;

    if (observer)
      observer(g, std::span<const double>(population.data(), population.size()),
               std::span<const double>(fitness.data(), fitness.size()));

    // 2-tournament selection, lower index wins exact ties
    for (int l = 0; l < pop; ++l) {
      const int i = static_cast<int>(rng.below(pop));
      const int j = static_cast<int>(rng.below(pop));
      if (fitness[i] > fitness[j])
        parents[l] = i;
      else if (fitness[j] > fitness[i])
        parents[l] = j;
      else
        parents[l] = std::min(i, j);
    }

    // arithmetic crossover over consecutive parent pairs, one tau per pair
    for (int p = 0; p + 1 < pop; p += 2) {
      auto pa = row(population, parents[p]);
      auto pb = row(population, parents[p + 1]);
      auto oa = row(offspring, p);
      auto ob = row(offspring, p + 1);
      if (rng.uniform() < ga.crossover_prob) {
        const double tau = rng.uniform();
        for (int c = 0; c < k; ++c) {
          oa[c] = tau * pa[c] + (1.0 - tau) * pb[c];
          ob[c] = tau * pb[c] + (1.0 - tau) * pa[c];
        }
      } else {
        std::copy(pa.begin(), pa.end(), oa.begin());
        std::copy(pb.begin(), pb.end(), ob.begin());
      }
    }
    if (pop % 2 == 1) {
      auto pa = row(population, parents[pop - 1]);
      auto oa = row(offspring, pop - 1);
      std::copy(pa.begin(), pa.end(), oa.begin());
    }

    // per-gene uniform-resample mutation, then back onto the simplex
    for (int l = 0; l < pop; ++l) {
      auto genes = row(offspring, l);
      for (double& gene : genes)
        if (rng.uniform() < ga.mutation_prob) gene = rng.uniform();
      normalize(genes, rng);
    }

    // elite replaces the worst offspring
    for (int l = 0; l < pop; ++l) offspring_fitness[l] = eval(row(offspring, l));
    int worst = 0;
    for (int l = 1; l < pop; ++l)
      if (offspring_fitness[l] < offspring_fitness[worst]) worst = l;
    auto elite = row(population, best_index);
    std::copy(elite.begin(), elite.end(), row(offspring, worst).begin());

    population.swap(offspring);
  }

  for (int l = 0; l < pop; ++l) fitness[l] = eval(row(population, l));
  best_index = 0;
  for (int l = 1; l < pop; ++l)
    if (fitness[l] > fitness[best_index]) best_index = l;

  DivisionResult r;
  auto best = row(population, best_index);
  r.division.assign(best.begin(), best.end());
  r.objective = fitness[best_index];
  return r;
}

}  // namespace mvtora
