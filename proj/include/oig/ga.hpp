#pragma once

#include <cstdint>
#include <vector>

#include "oig/follower.hpp"
#include "oig/heuristics.hpp"
#include "oig/instance.hpp"
#include "oig/rng.hpp"
#include "oig/tour.hpp"

namespace oig {

struct GaParams {
  int k0 = 10;                 // pool-seeding runs
  int p0 = 20;                 // initial individuals
  double p_s = 0.4;            // skipping probability in greedy
  int tournament = 3;
  std::size_t p_max = 100;
  std::size_t pool_cap = 2000;
  int max_iter = 5000;
  int reeval_period = 10;
  int reeval_k = 5;
  std::uint64_t seed = 0;
  double time_limit = 0.0;     // for the final exact follower solve, <= 0 means none
  void validate() const;
};

struct Individual {
  Interdiction z;
  std::int64_t fitness = 0;  // estimated follower value, lower is fitter
};

struct Estimate {
  std::int64_t value = 0;
  Tour tour;
};

/// Best tour obtained by repairing and improving every pooled tour under z.
/// The best tour is added to the pool while it holds fewer than pool_cap tours.
Estimate estimate_objective(const Instance& inst, const Interdiction& z, SolutionPool& pool);

/// k0 random interdictions of min(Q, n-1) non-depot nodes; for each, a tour
/// from the follower LP relaxation, then leave-one-out variants of it.
SolutionPool init_pool(const Instance& inst, const FollowerContext& ctx, int k0, std::size_t pool_cap, Rng& rng);

/// Randomized lazy greedy interdiction.
Interdiction greedy(const Instance& inst, SolutionPool& pool, double p_s, Rng& rng);

Interdiction crossover(const Interdiction& a, const Interdiction& b, Rng& rng);
void mutate(Interdiction& z, Rng& rng);
/// Clears set bits in increasing collectible-prize order until |z| <= Q.
void repair_budget(Interdiction& z, const Instance& inst);

struct GaResult {
  Interdiction z;
  std::int64_t estimate = 0;  // final fitness of z
  std::int64_t value = 0;     // exact follower optimum under z
  Tour tour;
  FollowerStatus final_status = FollowerStatus::Optimal;
  std::size_t pool_size = 0;
  std::int64_t estimates = 0;
  double time = 0.0;
  std::uint64_t seed = 0;
};

GaResult evolve(const Instance& inst, const GaParams& params = {});

/// 100 (z_ga - z_exact) / z_exact, 0 when both are 0.
double ga_delta(std::int64_t ga_value, std::int64_t exact_value);

}  // namespace oig
