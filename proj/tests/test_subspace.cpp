#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "gmqaoa/errors.hpp"
#include "gmqaoa/subspace.hpp"

namespace {

using namespace gmqaoa;

constexpr double pi = std::numbers::pi;

// Path 0-1-2-3, choose 2 of 4 vertices. Members ascending; costs frozen by
// hand (number of path edges with a chosen endpoint).
FeasibleSet path4_set() {
  return FeasibleSet::from_members(4, {3, 5, 6, 9, 10, 12});
}
const std::vector<double> path4_costs = {2, 3, 3, 2, 3, 2};

CostTable table_for(const FeasibleSet& set, const std::vector<double>& v) {
  CostTable t;
  t.set = &set;
  t.value = v;
  return t;
}

double u01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

AngleSchedule random_schedule(std::mt19937_64& rng, std::size_t p) {
  AngleSchedule s = AngleSchedule::zeros(p);
  for (std::size_t r = 0; r < p; ++r) {
    s.gamma[r] = 2 * pi * u01(rng);
    s.beta[r] = 2 * pi * u01(rng);
  }
  return s;
}

}  // namespace

TEST_SUITE("subspace") {

TEST_CASE("from_members sorts, deduplicates-checks, and validates") {
  const FeasibleSet set = FeasibleSet::from_members(4, {12, 3, 9, 5, 10, 6});
  CHECK(set.num_qubits == 4);
  REQUIRE(set.size() == 6);
  CHECK(set.members == std::vector<Bitstring>{3, 5, 6, 9, 10, 12});
  CHECK(set.index_of(6) == 2);
  CHECK(set.index_of(12) == 5);
  CHECK(set.index_of(7) == -1);
  CHECK(set.contains(9));
  CHECK(!set.contains(0));

  CHECK_THROWS_AS(FeasibleSet::from_members(4, {}), InputError);
  CHECK_THROWS_AS(FeasibleSet::from_members(4, {3, 3}), InputError);
  CHECK_THROWS_AS(FeasibleSet::from_members(2, {4}), InputError);
  CHECK_THROWS_AS(FeasibleSet::from_members(0, {1}), InputError);
  // The zero-width register is degenerate but well-defined: one member.
  CHECK(FeasibleSet::from_members(0, {0}).size() == 1);
}

TEST_CASE("uniform state has amplitude 1/sqrt(|F|)") {
  const FeasibleSet set = path4_set();
  const SubspaceState state = uniform_state(set);
  const double want = 1.0 / std::sqrt(6.0);
  for (const cdouble a : state.amp) {
    CHECK(std::abs(a - cdouble(want, 0)) < 1e-15);
  }
  CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("phase separator multiplies exp(-i*gamma*cost)") {
  const FeasibleSet set = path4_set();
  const CostTable costs = table_for(set, path4_costs);
  const double gamma = 0.7;
  const SubspaceState out =
      apply_phase_separator(uniform_state(set), costs, gamma);
  for (std::size_t i = 0; i < set.size(); ++i) {
    const cdouble want =
        std::polar(1.0 / std::sqrt(6.0), -gamma * path4_costs[i]);
    CHECK(std::abs(out.amp[i] - want) < 1e-15);
  }
}

TEST_CASE("mixer at beta=pi reflects a two-member basis state") {
  // Id - 2|F><F| on (1, 0): overlap s = 1/sqrt(2), so the image is
  // (1,0) - 2 * (1/sqrt 2) * (1,1)/sqrt(2) = (0, -1). Frozen by hand.
  const FeasibleSet set = FeasibleSet::from_members(1, {0, 1});
  SubspaceState state;
  state.set = &set;
  state.amp = {cdouble(1, 0), cdouble(0, 0)};
  const SubspaceState out = apply_grover_mixer(state, pi);
  CHECK(std::abs(out.amp[0] - cdouble(0, 0)) < 1e-15);
  CHECK(std::abs(out.amp[1] - cdouble(-1, 0)) < 1e-15);
}

TEST_CASE("mixer equals the dense rank-1 matrix on random states") {
  const FeasibleSet set = path4_set();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    SubspaceState state;
    state.set = &set;
    state.amp.resize(6);
    double n2 = 0;
    for (auto& a : state.amp) {
      a = cdouble(2 * u01(rng) - 1, 2 * u01(rng) - 1);
      n2 += std::norm(a);
    }
    for (auto& a : state.amp) a /= std::sqrt(n2);
    const double beta = 2 * pi * u01(rng);

    const SubspaceState fast = apply_grover_mixer(state, beta);
    // Dense multiply written out longhand.
    const cdouble coeff = (cdouble(1, 0) - std::polar(1.0, -beta)) / 6.0;
    cdouble total = 0;
    for (const cdouble a : state.amp) total += a;
    for (std::size_t i = 0; i < 6; ++i) {
      const cdouble want = state.amp[i] - coeff * total;
      CHECK(std::abs(fast.amp[i] - want) < 1e-14);
    }
    CHECK(fast.norm() == doctest::Approx(1.0).epsilon(1e-12));

    // 2*pi periodicity in beta.
    const SubspaceState wrapped = apply_grover_mixer(state, beta + 2 * pi);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(std::abs(fast.amp[i] - wrapped.amp[i]) < 1e-12);
    }
  }
}

TEST_CASE("mixer at beta=0 is the exact identity") {
  const FeasibleSet set = path4_set();
  const SubspaceState state = uniform_state(set);
  const SubspaceState out = apply_grover_mixer(state, 0.0);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(std::abs(out.amp[i] - state.amp[i]) == 0.0);
  }
}

TEST_CASE("run_schedule composes separator then mixer per round") {
  const FeasibleSet set = path4_set();
  const CostTable costs = table_for(set, path4_costs);
  std::mt19937_64 rng(5);
  const AngleSchedule sched = random_schedule(rng, 3);

  SubspaceState manual = uniform_state(set);
  for (std::size_t r = 0; r < 3; ++r) {
    manual = apply_phase_separator(manual, costs, sched.gamma[r]);
    manual = apply_grover_mixer(manual, sched.beta[r]);
  }
  const SubspaceState composed = run_schedule(set, costs, sched);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(std::abs(manual.amp[i] - composed.amp[i]) < 1e-15);
  }
}

TEST_CASE("expectation and optimum probability of the uniform state") {
  const FeasibleSet set = path4_set();
  const CostTable costs = table_for(set, path4_costs);
  const SubspaceState state = uniform_state(set);
  CHECK(expectation(state, costs) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(optimum_probability(state, costs, Sense::Maximize) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(optimum_probability(state, costs, Sense::Minimize) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("equal-cost members keep equal amplitudes under any schedule") {
  const FeasibleSet set = path4_set();
  const CostTable costs = table_for(set, path4_costs);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t p = 1 + trial % 3;
    const SubspaceState out =
        run_schedule(set, costs, random_schedule(rng, p));
    // Grouped by exact cost value, independent of any partition helper.
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) {
        if (path4_costs[i] == path4_costs[j]) {
          CHECK(std::abs(out.amp[i] - out.amp[j]) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("sampling is deterministic and mass-consistent") {
  const FeasibleSet set = path4_set();
  const SubspaceState state = uniform_state(set);
  const auto counts1 = sample(state, 99, 6000);
  const auto counts2 = sample(state, 99, 6000);
  CHECK(counts1 == counts2);
  std::uint64_t total = 0;
  for (const auto c : counts1) total += c;
  CHECK(total == 6000);
  for (const auto c : counts1) CHECK(c > 0);

  SubspaceState point;
  point.set = &set;
  point.amp = {cdouble(1, 0), 0, 0, 0, 0, 0};
  const auto concentrated = sample(point, 7, 500);
  CHECK(concentrated[0] == 500);
  for (std::size_t i = 1; i < 6; ++i) CHECK(concentrated[i] == 0);
}

}  // TEST_SUITE
