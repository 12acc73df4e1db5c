#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gmqaoa/subspace.hpp"

namespace gmqaoa {

struct TraceEntry {
  AngleSchedule angles;
  double expectation = 0.0;
  double opt_prob = 0.0;
};

struct OptimizationReport {
  AngleSchedule best_schedule;
  double best_expectation = 0.0;
  double optimum_prob = 0.0;        // of the best schedule's final state
  double approximation_ratio = 0.0; // best expectation / brute-force optimum
  std::size_t evaluations = 0;
  std::vector<TraceEntry> trace;    // one entry per evaluation, in order
};

inline constexpr std::size_t default_eval_budget = 1'000'000;

// run_schedule then expectation; a pure function of its arguments.
double evaluate(const FeasibleSet& set, const CostTable& costs,
                const AngleSchedule& schedule);

// Exhaustive search over the product grid {2*pi*k/resolution}^(2p), odometer
// order with gamma_1 the most significant digit; ties keep the first-found
// schedule. resolution >= 2; resolution^(2p) must fit in budget. p = 0
// evaluates the single empty schedule.
OptimizationReport grid_search(const FeasibleSet& set, const CostTable& costs,
                               std::size_t p, std::size_t resolution,
                               Sense sense,
                               std::size_t budget = default_eval_budget);

// Nelder-Mead simplex over the 2p angles (initial step 0.25 per coordinate,
// standard reflection/expansion/contraction/shrink coefficients). Stops at
// max_iters, when the simplex diameter drops below tol, or when another
// iteration would exceed eval_budget. The result is never worse than start.
OptimizationReport simplex_refine(const FeasibleSet& set,
                                  const CostTable& costs,
                                  const AngleSchedule& start, Sense sense,
                                  std::size_t max_iters = 200,
                                  double tol = 1e-6,
                                  std::size_t eval_budget = default_eval_budget);

// Independent optimization per p in {1..p_max}: grid over at most half the
// per-p budget (auto resolution, at least 2), then simplex refinement with
// the remainder. Since a (0,0) round embeds a p-round schedule into p+1
// rounds, best values should weakly improve with p; use
// monotonicity_violations to flag exceptions.
std::vector<OptimizationReport> p_sweep(const FeasibleSet& set,
                                        const CostTable& costs,
                                        std::size_t p_max,
                                        std::size_t per_p_budget, Sense sense);

// Indices p (1-based) where reports[p-1] is worse than reports[p-2] by more
// than 1e-9 in the given sense.
std::vector<std::size_t> monotonicity_violations(
    const std::vector<OptimizationReport>& reports, Sense sense);

}  // namespace gmqaoa
