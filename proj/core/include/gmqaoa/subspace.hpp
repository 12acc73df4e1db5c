#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gmqaoa/bitstring.hpp"

namespace gmqaoa {

using cdouble = std::complex<double>;

enum class Sense { Minimize, Maximize };

// The classical image of |F>: every bitstring satisfying a problem's hard
// constraints, in strictly increasing order (qubit 0 least significant).
// The canonical order makes cross-engine comparisons bit-exact.
struct FeasibleSet {
  int num_qubits = 0;
  std::vector<Bitstring> members;

  // Sorts, validates distinctness and qubit range.
  static FeasibleSet from_members(int num_qubits, std::vector<Bitstring> members);

  std::size_t size() const noexcept { return members.size(); }
  // Position of x in members, or -1 when absent. O(log |F|).
  std::ptrdiff_t index_of(Bitstring x) const noexcept;
  bool contains(Bitstring x) const noexcept { return index_of(x) >= 0; }
};

// A quantum state confined to span(F): one complex amplitude per member.
// Amplitudes for non-members are identically zero by construction.
struct SubspaceState {
  const FeasibleSet* set = nullptr;
  std::vector<cdouble> amp;

  double norm() const noexcept;
};

// Objective value per feasible member, in problem units.
struct CostTable {
  const FeasibleSet* set = nullptr;
  std::vector<double> value;

  template <typename F>
  static CostTable from_function(const FeasibleSet& set, F&& cost) {
    CostTable t;
    t.set = &set;
    t.value.reserve(set.size());
    for (const Bitstring x : set.members) t.value.push_back(cost(x));
    return t;
  }
};

// The 2p variational parameters, round-major: gamma[r], beta[r] for round r.
struct AngleSchedule {
  std::vector<double> gamma;
  std::vector<double> beta;

  std::size_t rounds() const noexcept { return gamma.size(); }
  static AngleSchedule zeros(std::size_t p) {
    return AngleSchedule{std::vector<double>(p, 0.0), std::vector<double>(p, 0.0)};
  }
};

// |F> itself: every amplitude exactly 1/sqrt(|F|).
SubspaceState uniform_state(const FeasibleSet& set);

// Diagonal phase separation: amp_i <- exp(-i * gamma * value_i) * amp_i.
SubspaceState apply_phase_separator(const SubspaceState& state,
                                    const CostTable& costs, double gamma);

// Grover mixer exp(-i * beta * |F><F|) = Id - (1 - e^{-i beta}) |F><F|,
// applied as the exact rank-1 update with s = <F|state>:
//   amp_i <- amp_i - (1 - e^{-i beta}) * s / sqrt(|F|).
SubspaceState apply_grover_mixer(const SubspaceState& state, double beta);

// Uniform state, then alternating phase separator / Grover mixer rounds.
SubspaceState run_schedule(const FeasibleSet& set, const CostTable& costs,
                           const AngleSchedule& angles);

// <state| H_C |state> = sum_i |amp_i|^2 * value_i.
double expectation(const SubspaceState& state, const CostTable& costs);

// Total probability on members attaining the optimal cost.
double optimum_probability(const SubspaceState& state, const CostTable& costs,
                           Sense sense);

// Multinomial draw from |amp|^2; returns per-member counts. Deterministic
// for a fixed seed (portable bit-exact uniform generation from mt19937_64).
std::vector<std::uint64_t> sample(const SubspaceState& state,
                                  std::uint64_t seed, std::size_t shots);

}  // namespace gmqaoa
