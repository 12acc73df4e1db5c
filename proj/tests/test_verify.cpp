#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "gmqaoa/errors.hpp"
#include "gmqaoa/verify.hpp"

namespace {

using namespace gmqaoa;

double u01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

AngleSchedule random_angles(std::size_t p, std::mt19937_64& rng) {
  AngleSchedule s;
  for (std::size_t r = 0; r < p; ++r) {
    s.gamma.push_back(u01(rng) * 2 * 3.141592653589793);
    s.beta.push_back(u01(rng) * 2 * 3.141592653589793);
  }
  return s;
}

struct Bench {
  FeasibleSet set;
  CostTable costs;
  Sense sense{};

  explicit Bench(const Problem& problem)
      : set(feasible_set(problem)), sense(natural_sense(problem)) {
    costs = CostTable::from_function(
        set, [&](Bitstring x) { return problem_cost(problem, x); });
  }
};

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("cost partition groups the path cover into two classes") {
  const Bench b{Problem(fixtures::path4_cover())};
  const CostClassPartition part = partition_by_cost(b.costs);
  REQUIRE(part.classes.size() == 2);
  CHECK(part.set == &b.set);
  CHECK(part.classes[0].value == 2.0);
  CHECK(part.classes[0].members == std::vector<int>{0, 3, 5});
  CHECK(part.classes[1].value == 3.0);
  CHECK(part.classes[1].members == std::vector<int>{1, 2, 4});

  // A tolerance wider than the gap merges everything into one class.
  const CostClassPartition merged = partition_by_cost(b.costs, 2.0);
  CHECK(merged.classes.size() == 1);
  CHECK(merged.classes[0].members.size() == 6);
}

TEST_CASE("brute-force optimum respects the sense") {
  const Bench b{Problem(fixtures::path4_cover())};
  const OptimumResult best = brute_force_optimum(b.set, b.costs,
                                                 Sense::Maximize);
  CHECK(best.value == 3.0);
  CHECK(best.members == std::vector<int>{1, 2, 4});
  const OptimumResult worst = brute_force_optimum(b.set, b.costs,
                                                  Sense::Minimize);
  CHECK(worst.value == 2.0);
  CHECK(worst.members == std::vector<int>{0, 3, 5});
}

TEST_CASE("subspace evolution matches the dense matrix reference") {
  // Dual route again: the production rank-1 update versus literal matrix
  // products. Neither replaces the other.
  std::mt19937_64 rng(99);
  for (const Problem& problem :
       {Problem(fixtures::triangle_cover()),
        Problem(fixtures::four_asset_rebalance())}) {
    const Bench b{problem};
    for (int trial = 0; trial < 5; ++trial) {
      const AngleSchedule schedule = random_angles(2, rng);
      const SubspaceState fast = run_schedule(b.set, b.costs, schedule);
      const SubspaceState slow =
          dense_reference_evolution(b.set, b.costs, schedule);
      REQUIRE(fast.amp.size() == slow.amp.size());
      for (std::size_t i = 0; i < fast.amp.size(); ++i) {
        CHECK(std::abs(fast.amp[i] - slow.amp[i]) < 1e-12);
      }
    }
  }
}

TEST_CASE("equal-cost members keep equal amplitudes on every fixture") {
  std::mt19937_64 rng(1234);
  for (const Problem& problem : fixtures::all()) {
    const Bench b{problem};
    for (std::size_t p = 1; p <= 2; ++p) {
      const EqualAmplitudeReport report =
          check_equal_amplitudes(b.set, b.costs, random_angles(p, rng));
      CAPTURE(report.max_class_spread);
      CHECK(report.passed);
      CHECK(report.max_class_spread < equal_amplitude_threshold);
      CHECK(report.reference_deviation < 1e-10);
      CHECK(report.num_classes >= 1);
    }
  }
}

TEST_CASE("gate pipeline reproduces the subspace engine") {
  std::mt19937_64 rng(4242);
  for (const Problem& problem :
       {Problem(fixtures::triangle_cover()),
        Problem(fixtures::four_asset_rebalance())}) {
    const PrepSpec prep = make_prep(problem);
    const Encoding enc = make_encoding(problem);
    const AngleSchedule schedule = random_angles(2, rng);
    CHECK(cross_check_engines(prep, enc, schedule) < 1e-11);
    const FullState full = run_circuit_pipeline(prep, enc, schedule);
    CHECK(support_check(full, prep.set) < 1e-20);
  }
}

TEST_CASE("fixture bench facts stay frozen") {
  const KvcInstance r6 = fixtures::random6_cover();
  CHECK(r6.n == 6);
  CHECK(r6.k == 3);
  const std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {1, 5},
      {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}};
  CHECK(r6.edges == edges);

  const Bench tsp4{Problem(fixtures::four_city_tour())};
  const OptimumResult opt =
      brute_force_optimum(tsp4.set, tsp4.costs, Sense::Minimize);
  CHECK(opt.value == 10.0);
  CHECK(opt.members.size() == 1);  // unique optimal tour

  const Bench triangle{Problem(fixtures::triangle_cover())};
  for (const double v : triangle.costs.value) CHECK(v == 2.0);

  // All 3-city round trips traverse the same three links.
  const Bench tsp3{Problem(fixtures::three_city_tour())};
  CHECK(partition_by_cost(tsp3.costs).classes.size() == 1);
}

TEST_CASE("named suites are deterministic in the seed") {
  CHECK(available_suites().size() == 7);
  const SuiteReport a = run_suite("equal_amplitude", 11, 2);
  const SuiteReport b = run_suite("equal_amplitude", 11, 2);
  REQUIRE(a.checks.size() == b.checks.size());
  CHECK(!a.checks.empty());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].value == b.checks[i].value);  // bitwise reproducible
  }
  CHECK(a.passed());

  CHECK_THROWS_AS(run_suite("nope", 1, 1), InputError);
  CHECK_THROWS_AS(run_suite("optimizer", 1, 0), InputError);
}

TEST_CASE("decomposition and optimizer suites pass end to end") {
  CHECK(run_suite("phase_decomposition", 3, 2).passed());
  CHECK(run_suite("optimizer", 3, 1).passed());
}

}  // TEST_SUITE
