#include "gmqaoa/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "gmqaoa/errors.hpp"
#include "gmqaoa/limits.hpp"

namespace gmqaoa {

namespace {

void require_same_set(const SubspaceState& state, const CostTable& costs) {
  if (state.set == nullptr || costs.set == nullptr || state.set != costs.set) {
    throw InputError("state and cost table refer to different feasible sets");
  }
  if (state.amp.size() != state.set->size() ||
      costs.value.size() != costs.set->size()) {
    throw InputError("amplitude or cost vector length does not match set size");
  }
}

}  // namespace

FeasibleSet FeasibleSet::from_members(int num_qubits,
                                      std::vector<Bitstring> members) {
  if (num_qubits < 0 || num_qubits > limits::max_bitstring_bits) {
    throw InputError("qubit count out of range");
  }
  if (members.empty()) throw InputError("feasible set must not be empty");
  if (members.size() > limits::max_feasible_members) {
    throw CapExceeded("feasible set exceeds the member cap of " +
                      std::to_string(limits::max_feasible_members));
  }
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw InputError("feasible set members must be distinct");
  }
  if (num_qubits < limits::max_bitstring_bits) {
    const Bitstring limit = Bitstring{1} << num_qubits;
    if (members.back() >= limit) {
      throw InputError("feasible member does not fit in the qubit count");
    }
  }
  FeasibleSet set;
  set.num_qubits = num_qubits;
  set.members = std::move(members);
  return set;
}

std::ptrdiff_t FeasibleSet::index_of(Bitstring x) const noexcept {
  const auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) return -1;
  return it - members.begin();
}

double SubspaceState::norm() const noexcept {
  double sum = 0.0;
  for (const cdouble a : amp) sum += std::norm(a);
  return std::sqrt(sum);
}

SubspaceState uniform_state(const FeasibleSet& set) {
  if (set.members.empty()) throw InputError("feasible set must not be empty");
  SubspaceState state;
  state.set = &set;
  state.amp.assign(set.size(), cdouble(1.0 / std::sqrt(double(set.size())), 0.0));
  return state;
}

SubspaceState apply_phase_separator(const SubspaceState& state,
                                    const CostTable& costs, double gamma) {
  require_same_set(state, costs);
  SubspaceState out = state;
  for (std::size_t i = 0; i < out.amp.size(); ++i) {
    out.amp[i] *= std::polar(1.0, -gamma * costs.value[i]);
  }
  return out;
}

SubspaceState apply_grover_mixer(const SubspaceState& state, double beta) {
  if (state.set == nullptr || state.amp.size() != state.set->size()) {
    throw InputError("state does not match its feasible set");
  }
  const double inv_sqrt = 1.0 / std::sqrt(double(state.amp.size()));
  cdouble overlap(0.0, 0.0);  // <F|state>
  for (const cdouble a : state.amp) overlap += a;
  overlap *= inv_sqrt;

  const cdouble shift = (1.0 - std::polar(1.0, -beta)) * overlap * inv_sqrt;
  SubspaceState out = state;
  for (cdouble& a : out.amp) a -= shift;

  const double drift = std::abs(out.norm() - 1.0);
  if (drift > 1e-6) {
    throw InputError("mixer input was not normalized (post-norm drift " +
                     std::to_string(drift) + ")");
  }
  return out;
}

SubspaceState run_schedule(const FeasibleSet& set, const CostTable& costs,
                           const AngleSchedule& angles) {
  if (angles.gamma.size() != angles.beta.size()) {
    throw InputError("schedule gamma/beta length mismatch");
  }
  SubspaceState state = uniform_state(set);
  for (std::size_t r = 0; r < angles.rounds(); ++r) {
    state = apply_phase_separator(state, costs, angles.gamma[r]);
    state = apply_grover_mixer(state, angles.beta[r]);
  }
  return state;
}

double expectation(const SubspaceState& state, const CostTable& costs) {
  require_same_set(state, costs);
  double sum = 0.0;
  for (std::size_t i = 0; i < state.amp.size(); ++i) {
    sum += std::norm(state.amp[i]) * costs.value[i];
  }
  return sum;
}

double optimum_probability(const SubspaceState& state, const CostTable& costs,
                           Sense sense) {
  require_same_set(state, costs);
  const double opt =
      sense == Sense::Minimize
          ? *std::min_element(costs.value.begin(), costs.value.end())
          : *std::max_element(costs.value.begin(), costs.value.end());
  const double tol = 1e-12 * std::max(1.0, std::abs(opt));
  double prob = 0.0;
  for (std::size_t i = 0; i < state.amp.size(); ++i) {
    if (std::abs(costs.value[i] - opt) <= tol) prob += std::norm(state.amp[i]);
  }
  return prob;
}

std::vector<std::uint64_t> sample(const SubspaceState& state,
                                  std::uint64_t seed, std::size_t shots) {
  if (state.set == nullptr || state.amp.size() != state.set->size()) {
    throw InputError("state does not match its feasible set");
  }
  if (shots < 1) throw InputError("shot count must be at least 1");

  std::vector<double> cdf(state.amp.size());
  double total = 0.0;
  for (std::size_t i = 0; i < state.amp.size(); ++i) {
    total += std::norm(state.amp[i]);
    cdf[i] = total;
  }

  std::vector<std::uint64_t> counts(state.amp.size(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < shots; ++s) {
    // 53-bit mantissa draw in [0,1): bit-exact across platforms.
    const double u = double(rng() >> 11) * 0x1.0p-53 * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t idx =
        std::min<std::size_t>(it - cdf.begin(), counts.size() - 1);
    ++counts[idx];
  }
  return counts;
}

}  // namespace gmqaoa
