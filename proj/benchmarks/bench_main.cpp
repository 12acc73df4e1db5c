// Microbenchmarks for the hot paths: subspace evolution on large feasible
// sets, dense statevector gate kernels, full-circuit pipelines, and the
// outer optimization loop. Run ./gmqaoa_bench --benchmark_filter=<regex>.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "gmqaoa/fullsim.hpp"
#include "gmqaoa/optimizer.hpp"
#include "gmqaoa/stateprep.hpp"
#include "gmqaoa/verify.hpp"

namespace {

using namespace gmqaoa;

FeasibleSet weight_set(int n, int k) {
  std::vector<Bitstring> members;
  for (std::uint64_t x = 0; x < (std::uint64_t(1) << n); ++x) {
    if (std::popcount(x) == k) members.push_back(Bitstring(x));
  }
  return FeasibleSet::from_members(n, std::move(members));
}

AngleSchedule schedule_of(std::size_t p) {
  AngleSchedule s;
  for (std::size_t r = 0; r < p; ++r) {
    s.gamma.push_back(0.31 + 0.11 * double(r));
    s.beta.push_back(1.07 - 0.09 * double(r));
  }
  return s;
}

// Three phase/mixer rounds over the 48620-member weight-9 class of 18 bits:
// throughput of the rank-1 mixer update and the diagonal phase separator.
void subspace_evolution_large(benchmark::State& state) {
  const FeasibleSet set = weight_set(18, 9);
  const CostTable costs = CostTable::from_function(
      set, [](Bitstring x) { return double(popcount(x & 0x155)); });
  const AngleSchedule angles = schedule_of(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_schedule(set, costs, angles));
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(set.size()) * 3);
}
BENCHMARK(subspace_evolution_large)->Unit(benchmark::kMillisecond);

// Single-qubit kernel on a million-amplitude register.
void gate_hadamard_20q(benchmark::State& state) {
  FullState psi = FullState::zero(20);
  const Gate h = Gate::h(7);
  for (auto _ : state) {
    apply_in_place(psi, h);
    benchmark::DoNotOptimize(psi.amp.data());
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * (int64_t(1) << 20));
}
BENCHMARK(gate_hadamard_20q)->Unit(benchmark::kMillisecond);

// The widest shipped multi-qubit kernel: symmetric-subspace spreading over a
// 20-wire register.
void gate_unary_to_dicke_20q(benchmark::State& state) {
  std::vector<int> reg(20);
  for (int i = 0; i < 20; ++i) reg[i] = i;
  const Gate spread = Gate::unary_to_dicke(reg);
  const Gate unspread = spread.inverse();
  FullState psi = FullState::zero(20);
  psi.amp[0] = 0;
  psi.amp[(1u << 10) - 1] = 1;  // |1^10 0^10>
  for (auto _ : state) {
    apply_in_place(psi, spread);
    apply_in_place(psi, unspread);
    benchmark::DoNotOptimize(psi.amp.data());
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * 2 * (int64_t(1) << 20));
}
BENCHMARK(gate_unary_to_dicke_20q)->Unit(benchmark::kMillisecond);

// Building and running the 16-qubit four-city preparation circuit.
void permutation_prep_n4(benchmark::State& state) {
  const Circuit circuit = permutation_circuit(4, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(circuit));
  }
}
BENCHMARK(permutation_prep_n4)->Unit(benchmark::kMillisecond);

// Full gate-level round trip (prep + 2 rounds) against the 16-qubit tour.
void pipeline_tsp4_p2(benchmark::State& state) {
  const Problem problem{fixtures::four_city_tour()};
  const PrepSpec prep = make_prep(problem);
  const Encoding enc = make_encoding(problem);
  const AngleSchedule angles = schedule_of(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_circuit_pipeline(prep, enc, angles));
  }
}
BENCHMARK(pipeline_tsp4_p2)->Unit(benchmark::kMillisecond);

// Outer loop: 256-point grid over one round of the path cover.
void grid_search_path4(benchmark::State& state) {
  const Problem problem{fixtures::path4_cover()};
  const FeasibleSet set = feasible_set(problem);
  const CostTable costs = CostTable::from_function(
      set, [&](Bitstring x) { return problem_cost(problem, x); });
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        grid_search(set, costs, 1, 16, Sense::Maximize));
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * 256);
}
BENCHMARK(grid_search_path4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
