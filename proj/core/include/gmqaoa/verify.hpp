#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmqaoa/fullsim.hpp"
#include "gmqaoa/problems.hpp"
#include "gmqaoa/stateprep.hpp"
#include "gmqaoa/subspace.hpp"

namespace gmqaoa {

// Members grouped by objective value; within a class the cost spread is at
// most the grouping tolerance.
struct CostClass {
  double value = 0.0;
  std::vector<int> members;  // indices into the feasible set
};

struct CostClassPartition {
  const FeasibleSet* set = nullptr;
  std::vector<CostClass> classes;  // ascending by value, covering all indices
};

CostClassPartition partition_by_cost(const CostTable& costs,
                                     double tol = 1e-12);

struct OptimumResult {
  double value = 0.0;
  std::vector<int> members;  // every index attaining the optimum
};

// Exact extremum by linear scan.
OptimumResult brute_force_optimum(const FeasibleSet& set,
                                  const CostTable& costs, Sense sense);

// Independent reference for the subspace engine: builds each round as an
// explicit |F| x |F| matrix (diagonal phase times the dense
// Id - (1 - e^{-i beta}) * ones/|F| mixer) and multiplies, sharing no code
// with the subspace operations.
SubspaceState dense_reference_evolution(const FeasibleSet& set,
                                        const CostTable& costs,
                                        const AngleSchedule& schedule);

struct EqualAmplitudeReport {
  double max_class_spread = 0.0;     // max |amp_i - amp_j| within a cost class
  double reference_deviation = 0.0;  // vs dense_reference_evolution
  int num_classes = 0;
  bool passed = false;               // max_class_spread < threshold
};

inline constexpr double equal_amplitude_threshold = 1e-10;

// Runs the subspace evolution and checks that equal-cost members end with
// equal amplitudes (and that the independent dense reference agrees).
EqualAmplitudeReport check_equal_amplitudes(const FeasibleSet& set,
                                    const CostTable& costs,
                                    const AngleSchedule& schedule);

// Full-circuit pipeline: prep circuit, then per round the diagonal phase
// from the encoding's term table followed by the Grover mixer circuit.
FullState run_circuit_pipeline(const PrepSpec& prep, const Encoding& enc,
                               const AngleSchedule& schedule);

// Max componentwise amplitude deviation between the full-circuit pipeline
// and the subspace evolution embedded into the full register. The two
// engines are independent implementations; each is the other's oracle.
double cross_check_engines(const PrepSpec& prep, const Encoding& enc,
                           const AngleSchedule& schedule);

// Probability mass outside the feasible set.
double support_check(const FullState& state, const FeasibleSet& set);

// --- Named verification suites over the shipped fixtures ---

struct CheckResult {
  std::string name;
  double value = 0.0;      // measured quantity (deviation, spread, ...)
  double threshold = 0.0;  // pass iff value < threshold
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Suites: equal_amplitude, mixer_identity, preparation, mixer_catalogue,
// cross_check, phase_decomposition, optimizer. `trials` scales the number
// of random schedules where applicable.
std::vector<std::string> available_suites();
SuiteReport run_suite(const std::string& name, std::uint64_t seed,
                      int trials);

// The standard bench of instances used by suites, tests, and shipped JSON.
namespace fixtures {
KvcInstance triangle_cover();        // K3, k = 1
KvcInstance path4_cover();           // P4, k = 2
KvcInstance random6_cover();         // 6 vertices, frozen edge sample, k = 3
TspInstance three_city_tour();       // asymmetric-free 3-city metric
TspInstance four_city_tour();        // asymmetric, fixed first city
PortfolioInstance four_asset_rebalance();  // n = 4, d = 2
std::vector<Problem> all();
}  // namespace fixtures

}  // namespace gmqaoa
