#include "oig/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "oig/timer.hpp"

namespace oig {
namespace {

/// k distinct values from [0, n) by a partial Fisher-Yates shuffle.
std::vector<int> sample_distinct(int n, int k, Rng& rng) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  k = std::min(k, n);
  for (int i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.below(n - i)]);
  idx.resize(k);
  return idx;
}

std::int64_t estimate_value(const Instance& inst, const Interdiction& z, SolutionPool& pool, std::int64_t& counter) {
  ++counter;
  return estimate_objective(inst, z, pool).value;
}

}  // namespace

void GaParams::validate() const {
  if (k0 <= 0 || p0 <= 0 || tournament <= 0 || p_max == 0 || pool_cap == 0 || max_iter < 0 ||
      reeval_period <= 0 || reeval_k < 0)
    throw std::invalid_argument("GaParams: counts must be positive");
  if (p_s < 0.0 || p_s > 1.0) throw std::invalid_argument("GaParams: p_s must lie in [0, 1]");
  if (static_cast<std::size_t>(p0) > p_max) throw std::invalid_argument("GaParams: p0 exceeds p_max");
}

Estimate estimate_objective(const Instance& inst, const Interdiction& z, SolutionPool& pool) {
  if (pool.empty()) throw std::domain_error("estimate_objective: empty solution pool");
  const std::vector<double> w = collectible_prizes(inst, z);
  const std::vector<double> zd = z.as_doubles();
  const std::vector<std::uint8_t> mask = interdicted_mask(zd);
  const std::size_t size = pool.size();
  Improved best;
  best.prize = -1.0;
  for (std::size_t k = 0; k < size; ++k) {
    Improved r = improve_pooled(pool.tours()[k], inst, w, mask);
    if (r.prize > best.prize + 1e-9) best = std::move(r);
  }
  pool.add(best.tour, inst.depot);
  return {static_cast<std::int64_t>(std::llround(best.prize)), std::move(best.tour)};
}

SolutionPool init_pool(const Instance& inst, const FollowerContext& ctx, int k0, std::size_t pool_cap, Rng& rng) {
  SolutionPool pool(pool_cap);
  const int n = inst.n;
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != inst.depot) others.push_back(i);
  const int q = std::min<int>(inst.interdiction_budget, static_cast<int>(others.size()));
  for (int run = 0; run < k0; ++run) {
    Interdiction z(n);
    for (int k : sample_distinct(static_cast<int>(others.size()), q, rng)) z.set(others[k]);
    const std::vector<double> w = collectible_prizes(inst, z);
    const FollowerPoint pt = follower_root_point(ctx, z);
    std::optional<Tour> tour = primal_heuristic(ctx, pt, w);
    if (!tour) continue;
    pool.add(*tour, inst.depot);
    for (std::size_t pos = 1; pos < tour->nodes.size(); ++pos) {
      const int v = tour->nodes[pos];
      Tour t = *tour;
      t.nodes.erase(t.nodes.begin() + static_cast<std::ptrdiff_t>(pos));
      t.length = tour_length(inst, t.nodes);
      // Keep the removed node out so the variant does not collapse back.
      std::vector<double> wv = w;
      wv[v] = 0.0;
      improve_tour(t, inst, wv);
      if (is_follower_feasible(t, inst)) pool.add(t, inst.depot);
    }
  }
  if (pool.empty()) {
    // Every LP-based attempt failed; fall back to the cheapest feasible triangle.
    std::optional<Tour> best;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (a == inst.depot || b == inst.depot) continue;
        Tour t = make_tour(inst, {inst.depot, a, b});
        if (t.length <= inst.distance_budget && (!best || t.length < best->length)) best = t;
      }
    if (best) pool.add(*best, inst.depot);
  }
  return pool;
}

Interdiction greedy(const Instance& inst, SolutionPool& pool, double p_s, Rng& rng) {
  const int n = inst.n;
  Interdiction z(n);
  if (inst.interdiction_budget <= 0) return z;
  std::int64_t counter = 0;
  std::int64_t current = estimate_value(inst, z, pool, counter);

  struct Entry {
    int node;
    std::int64_t gain;
    bool fresh;
  };
  std::vector<Entry> list;
  for (int i = 0; i < n; ++i) {
    if (i == inst.depot) continue;
    Interdiction zi = z;
    zi.set(i);
    list.push_back({i, current - estimate_value(inst, zi, pool, counter), true});
  }
  auto by_gain = [](const Entry& a, const Entry& b) { return a.gain > b.gain; };
  std::stable_sort(list.begin(), list.end(), by_gain);

  while (z.count() < inst.interdiction_budget && !list.empty()) {
    Entry& head = list.front();
    if (head.fresh) {
      z.set(head.node);
      list.erase(list.begin());
      for (auto& e : list) e.fresh = false;
      current = estimate_value(inst, z, pool, counter);
    } else if (rng.bernoulli(p_s)) {
      list.erase(list.begin());
    } else {
      Interdiction zi = z;
      zi.set(head.node);
      head.gain = current - estimate_value(inst, zi, pool, counter);
      head.fresh = true;
      std::stable_sort(list.begin(), list.end(), by_gain);
    }
  }
  return z;
}

Interdiction crossover(const Interdiction& a, const Interdiction& b, Rng& rng) {
  const int n = a.size();
  if (b.size() != n) throw std::invalid_argument("crossover: size mismatch");
  if (n < 2) return a;
  const int cut = 1 + rng.below(n - 1);
  Interdiction child(n);
  for (int i = 0; i < n; ++i) child.set(i, i < cut ? a[i] : b[i]);
  return child;
}

void mutate(Interdiction& z, Rng& rng) {
  const int flips = rng.below(3);
  for (int i : sample_distinct(z.size(), flips, rng)) z.flip(i);
}

void repair_budget(Interdiction& z, const Instance& inst) {
  int excess = z.count() - inst.interdiction_budget;
  if (excess <= 0) return;
  std::vector<int> set = z.nodes();
  std::stable_sort(set.begin(), set.end(),
                   [&](int a, int b) { return inst.collectible(a) < inst.collectible(b); });
  for (int i = 0; i < excess; ++i) z.set(set[i], false);
}

GaResult evolve(const Instance& inst, const GaParams& params) {
  params.validate();
  inst.validate();
  Stopwatch watch;
  Rng rng(params.seed);
  FollowerContext ctx(inst);
  GaResult res;
  res.seed = params.seed;

  SolutionPool pool = init_pool(inst, ctx, params.k0, params.pool_cap, rng);
  if (pool.empty()) {
    // No tour fits the budget at all: every interdiction is optimal with value 0.
    res.z = Interdiction(inst.n);
    res.time = watch.seconds();
    return res;
  }

  std::vector<Individual> pop;
  for (int m = 0; m < params.p0; ++m) {
    Interdiction z = greedy(inst, pool, params.p_s, rng);
    const std::int64_t f = estimate_value(inst, z, pool, res.estimates);
    pop.push_back({std::move(z), f});
  }

  auto fittest_order = [&] {
    std::vector<int> idx(pop.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return pop[a].fitness < pop[b].fitness; });
    return idx;
  };
  auto tournament = [&] {
    int best = -1;
    for (int i : sample_distinct(static_cast<int>(pop.size()), params.tournament, rng))
      if (best < 0 || pop[i].fitness < pop[best].fitness || (pop[i].fitness == pop[best].fitness && i < best))
        best = i;
    return best;
  };

  for (int it = 1; it <= params.max_iter; ++it) {
    if (it % params.reeval_period == 0) {
      const std::vector<int> order = fittest_order();
      for (int k = 0; k < params.reeval_k && k < static_cast<int>(order.size()); ++k)
        pop[order[k]].fitness = estimate_value(inst, pop[order[k]].z, pool, res.estimates);
    }
    const int a = tournament();
    const int b = tournament();
    Interdiction child = crossover(pop[a].z, pop[b].z, rng);
    mutate(child, rng);
    repair_budget(child, inst);
    const std::int64_t f = estimate_value(inst, child, pool, res.estimates);
    if (pop.size() == params.p_max) {
      std::size_t worst = 0;
      for (std::size_t i = 1; i < pop.size(); ++i)
        if (pop[i].fitness > pop[worst].fitness) worst = i;
      pop[worst] = {std::move(child), f};
    } else {
      pop.push_back({std::move(child), f});
    }
  }

  for (auto& ind : pop) ind.fitness = estimate_value(inst, ind.z, pool, res.estimates);
  const Individual& best = pop[fittest_order().front()];
  res.z = best.z;
  res.estimate = best.fitness;

  FollowerOptions fo;
  fo.deadline = Deadline::after(params.time_limit);
  const FollowerResult fr = solve_follower(ctx, res.z, fo);
  res.final_status = fr.status;
  res.value = fr.value;
  res.tour = fr.tour;
  res.pool_size = pool.size();
  res.time = watch.seconds();
  return res;
}

double ga_delta(std::int64_t ga_value, std::int64_t exact_value) {
  if (exact_value == 0) return ga_value == 0 ? 0.0 : 100.0;
  return 100.0 * static_cast<double>(ga_value - exact_value) / static_cast<double>(exact_value);
}

}  // namespace oig
