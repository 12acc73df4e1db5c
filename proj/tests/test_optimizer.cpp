#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "gmqaoa/errors.hpp"
#include "gmqaoa/optimizer.hpp"

namespace {

using namespace gmqaoa;

constexpr double pi = std::numbers::pi;

// Path 0-1-2-3, choose 2 of 4 vertices; covered-edge counts frozen by hand.
FeasibleSet path4_set() {
  return FeasibleSet::from_members(4, {3, 5, 6, 9, 10, 12});
}
const std::vector<double> path4_costs = {2, 3, 3, 2, 3, 2};

CostTable table(const FeasibleSet& set, const std::vector<double>& v) {
  CostTable t;
  t.set = &set;
  t.value = v;
  return t;
}

}  // namespace

TEST_SUITE("optimizer") {

TEST_CASE("grid enumerates schedules in odometer order") {
  const FeasibleSet set = path4_set();
  // All-zero costs make every evaluation exactly 0.0 (a true tie, free of
  // rounding): the report must keep the first schedule enumerated.
  const CostTable flat = table(set, {0, 0, 0, 0, 0, 0});
  const OptimizationReport r =
      grid_search(set, flat, 1, 2, Sense::Maximize);
  CHECK(r.evaluations == 4);
  REQUIRE(r.trace.size() == 4);
  const std::vector<std::pair<double, double>> want = {
      {0, 0}, {0, pi}, {pi, 0}, {pi, pi}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(r.trace[i].angles.gamma[0] == want[i].first);
    CHECK(r.trace[i].angles.beta[0] == want[i].second);
    CHECK(r.trace[i].expectation == 0.0);
  }
  CHECK(r.best_schedule.gamma[0] == 0.0);
  CHECK(r.best_schedule.beta[0] == 0.0);
}

TEST_CASE("zero-round grid is a single uniform-state evaluation") {
  const FeasibleSet set = path4_set();
  const CostTable costs = table(set, path4_costs);
  const OptimizationReport r =
      grid_search(set, costs, 0, 8, Sense::Maximize);
  CHECK(r.evaluations == 1);
  CHECK(r.best_schedule.rounds() == 0);
  // Mean of the frozen costs: (2+3+3+2+3+2)/6.
  CHECK(r.best_expectation == doctest::Approx(15.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("grid rejects degenerate resolutions and oversized products") {
  const FeasibleSet set = path4_set();
  const CostTable costs = table(set, path4_costs);
  CHECK_THROWS_AS(grid_search(set, costs, 1, 1, Sense::Maximize), InputError);
  CHECK_THROWS_AS(grid_search(set, costs, 2, 4, Sense::Maximize, 255),
                  CapExceeded);  // 4^4 = 256 > 255
  CHECK_NOTHROW(grid_search(set, costs, 2, 4, Sense::Maximize, 256));
}

TEST_CASE("single-round grid amplifies the best cover") {
  const FeasibleSet set = path4_set();
  const CostTable costs = table(set, path4_costs);
  const OptimizationReport r =
      grid_search(set, costs, 1, 16, Sense::Maximize);
  CHECK(r.evaluations == 256);
  CHECK(r.trace.size() == 256);
  CHECK(r.best_expectation > 2.5);  // beats the uniform-state mean
  CHECK(r.optimum_prob > 0.9);
  CHECK(r.approximation_ratio ==
        doctest::Approx(r.best_expectation / 3.0).epsilon(1e-12));
}

TEST_CASE("simplex never returns worse than its start") {
  const FeasibleSet set = path4_set();
  const CostTable costs = table(set, path4_costs);
  const AngleSchedule start{{1.1, 0.4}, {2.0, 5.3}};
  for (const Sense sense : {Sense::Maximize, Sense::Minimize}) {
    const double at_start = evaluate(set, costs, start);
    const OptimizationReport r =
        simplex_refine(set, costs, start, sense, 200, 1e-6, 300);
    CHECK(r.evaluations <= 300);
    CHECK(r.trace.size() == r.evaluations);
    if (sense == Sense::Maximize) {
      CHECK(r.best_expectation >= at_start);
    } else {
      CHECK(r.best_expectation <= at_start);
    }
  }
  CHECK_THROWS_AS(
      simplex_refine(set, costs, start, Sense::Maximize, 200, 1e-6, 0),
      InputError);
}

TEST_CASE("grid seed plus simplex polish solves the path cover") {
  const FeasibleSet set = path4_set();
  const CostTable costs = table(set, path4_costs);
  const OptimizationReport coarse =
      grid_search(set, costs, 1, 8, Sense::Maximize);
  const OptimizationReport fine = simplex_refine(
      set, costs, coarse.best_schedule, Sense::Maximize, 400, 1e-10);
  CHECK(fine.best_expectation >= coarse.best_expectation);
  CHECK(fine.best_expectation > 2.99);
  CHECK(fine.optimum_prob > 0.99);
}

TEST_CASE("zero-round simplex evaluates the empty schedule once") {
  const FeasibleSet set = path4_set();
  const CostTable costs = table(set, path4_costs);
  const OptimizationReport r = simplex_refine(
      set, costs, AngleSchedule::zeros(0), Sense::Maximize);
  CHECK(r.evaluations == 1);
  CHECK(r.best_expectation == doctest::Approx(15.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("round sweep improves weakly with depth") {
  const FeasibleSet set = path4_set();
  const CostTable costs = table(set, path4_costs);
  const std::vector<OptimizationReport> reports =
      p_sweep(set, costs, 3, 600, Sense::Maximize);
  REQUIRE(reports.size() == 3);
  for (std::size_t p = 1; p <= 3; ++p) {
    const auto& r = reports[p - 1];
    CHECK(r.best_schedule.rounds() == p);
    CHECK(r.evaluations <= 600);
    CHECK(r.trace.size() == r.evaluations);
  }
  CHECK(monotonicity_violations(reports, Sense::Maximize).empty());
}

TEST_CASE("monotonicity check flags genuine regressions only") {
  auto fake = [](double v) {
    OptimizationReport r;
    r.best_expectation = v;
    return r;
  };
  const std::vector<OptimizationReport> maximizing = {fake(2.0), fake(1.0),
                                                      fake(3.0)};
  CHECK(monotonicity_violations(maximizing, Sense::Maximize) ==
        std::vector<std::size_t>{2});
  // The same trajectory read as minimization: 3.0 after 1.0 is the offence.
  CHECK(monotonicity_violations(maximizing, Sense::Minimize) ==
        std::vector<std::size_t>{3});
  const std::vector<OptimizationReport> jitter = {fake(1.0),
                                                  fake(1.0 - 5e-10)};
  CHECK(monotonicity_violations(jitter, Sense::Maximize).empty());
}

}  // TEST_SUITE
