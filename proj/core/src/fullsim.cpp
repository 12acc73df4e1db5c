#include "gmqaoa/fullsim.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gmqaoa/errors.hpp"
#include "gmqaoa/limits.hpp"

namespace gmqaoa {

namespace limits {

std::size_t max_statevector_amps() {
  static const std::size_t cap = [] {
    constexpr std::size_t fallback = std::size_t{1} << 22;
    const char* env = std::getenv("GMQAOA_MAX_AMPS");
    if (env == nullptr || *env == '\0') return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || v == 0) return fallback;
    return std::size_t(v);
  }();
  return cap;
}

}  // namespace limits

namespace {

constexpr double pi = std::numbers::pi;

using Amps = std::vector<cdouble>;

std::size_t qubit_bit(int q) { return std::size_t{1} << q; }

// Dense 2x2 applied over the pairs split by qubit q, optionally gated on a
// control mask (all control bits must be 1).
void apply_two_by_two(Amps& amp, int q, std::size_t cmask, cdouble u00,
                      cdouble u01, cdouble u10, cdouble u11) {
  const std::size_t b = qubit_bit(q);
  const std::size_t dim = amp.size();
  for (std::size_t base = 0; base < dim; base += 2 * b) {
    for (std::size_t off = 0; off < b; ++off) {
      const std::size_t i0 = base + off;
      if ((i0 & cmask) != cmask) continue;
      const std::size_t i1 = i0 + b;
      const cdouble a0 = amp[i0];
      const cdouble a1 = amp[i1];
      amp[i0] = u00 * a0 + u01 * a1;
      amp[i1] = u10 * a0 + u11 * a1;
    }
  }
}

void apply_bit_flip(Amps& amp, int q, std::size_t cmask) {
  const std::size_t b = qubit_bit(q);
  const std::size_t dim = amp.size();
  for (std::size_t base = 0; base < dim; base += 2 * b) {
    for (std::size_t off = 0; off < b; ++off) {
      const std::size_t i0 = base + off;
      if ((i0 & cmask) != cmask) continue;
      std::swap(amp[i0], amp[i0 + b]);
    }
  }
}

std::size_t control_mask(const std::vector<int>& controls) {
  std::size_t mask = 0;
  for (const int q : controls) mask |= qubit_bit(q);
  return mask;
}

void validate_gate(const Gate& gate, int num_qubits) {
  if (gate.targets.empty()) throw InputError("gate needs at least one target");
  std::unordered_set<int> seen;
  const auto check = [&](int q) {
    if (q < 0 || q >= num_qubits) {
      throw InputError("gate qubit " + std::to_string(q) +
                       " outside register of width " +
                       std::to_string(num_qubits));
    }
    if (!seen.insert(q).second) {
      throw InputError("gate qubit " + std::to_string(q) + " listed twice");
    }
  };
  for (const int q : gate.controls) check(q);
  for (const int q : gate.targets) check(q);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * std::uint64_t(n - k + i) / i;
  return c;
}

// All size-k index subsets of {0..m-1}, emitted as bitmasks over the listed
// register wires.
std::vector<std::size_t> weight_class_patterns(const std::vector<int>& reg,
                                               int w) {
  const int m = int(reg.size());
  std::vector<int> pick(w);
  for (int i = 0; i < w; ++i) pick[i] = i;
  std::vector<std::size_t> patterns;
  patterns.reserve(binomial(m, w));
  while (true) {
    std::size_t mask = 0;
    for (const int idx : pick) mask |= qubit_bit(reg[idx]);
    patterns.push_back(mask);
    int i = w - 1;
    while (i >= 0 && pick[i] == m - w + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < w; ++j) pick[j] = pick[j - 1] + 1;
  }
  return patterns;
}

// Product over Hamming-weight classes of the reflection swapping the unary
// seed |1^w 0...> with the uniform weight-w superposition; identity on the
// orthogonal complement of each (seed, uniform) plane.
void apply_unary_to_dicke(Amps& amp, const std::vector<int>& reg) {
  const int m = int(reg.size());
  const std::size_t reg_mask = control_mask(reg);
  const std::size_t outer = (amp.size() - 1) & ~reg_mask;

  for (int w = 1; w < m; ++w) {
    const std::uint64_t count = binomial(m, w);
    const std::vector<std::size_t> patterns = weight_class_patterns(reg, w);
    std::size_t seed = 0;
    for (int i = 0; i < w; ++i) seed |= qubit_bit(reg[i]);
    const double inv_sqrt = 1.0 / std::sqrt(double(count));
    const double denom = 1.0 - inv_sqrt;

    std::size_t o = 0;
    do {
      cdouble sum(0.0, 0.0);
      for (const std::size_t p : patterns) sum += amp[o | p];
      const cdouble f = (amp[o | seed] - sum * inv_sqrt) / denom;
      amp[o | seed] -= f;
      const cdouble add = f * inv_sqrt;
      for (const std::size_t p : patterns) amp[o | p] += add;
      o = (o - outer) & outer;
    } while (o != 0);
  }
}

// Basis permutation: gathers the register bits into an integer, maps it, and
// scatters the result back, leaving all other bits in place.
template <typename MapValue>
void apply_register_permutation(Amps& amp, const std::vector<int>& reg,
                                std::size_t cmask, MapValue&& map_value) {
  const std::size_t dim = amp.size();
  Amps out(dim);
  const int m = int(reg.size());
  std::size_t reg_mask = control_mask(reg);
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cmask) != cmask) {
      out[i] = amp[i];
      continue;
    }
    std::size_t v = 0;
    for (int k = 0; k < m; ++k) v |= std::size_t((i >> reg[k]) & 1u) << k;
    const std::size_t v2 = map_value(v) & ((std::size_t{1} << m) - 1);
    std::size_t j = i & ~reg_mask;
    for (int k = 0; k < m; ++k) {
      if ((v2 >> k) & 1u) j |= qubit_bit(reg[k]);
    }
    out[j] = amp[i];
  }
  amp.swap(out);
}

}  // namespace

FullState FullState::zero(int num_qubits) {
  if (num_qubits < 0 || num_qubits > 48) {
    throw InputError("statevector qubit count out of range");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (dim > limits::max_statevector_amps()) {
    throw CapExceeded("statevector of 2^" + std::to_string(num_qubits) +
                      " amplitudes exceeds the cap of " +
                      std::to_string(limits::max_statevector_amps()) +
                      " (override with GMQAOA_MAX_AMPS)");
  }
  FullState state;
  state.num_qubits = num_qubits;
  state.amp.assign(dim, cdouble(0.0, 0.0));
  state.amp[0] = cdouble(1.0, 0.0);
  return state;
}

double FullState::norm() const {
  double sum = 0.0;
  for (const cdouble a : amp) sum += std::norm(a);
  return std::sqrt(sum);
}

void apply_in_place(FullState& state, const Gate& gate) {
  validate_gate(gate, state.num_qubits);
  Amps& amp = state.amp;
  const std::size_t dim = amp.size();

  switch (gate.kind) {
    case GateKind::PauliX:
      apply_bit_flip(amp, gate.targets[0], 0);
      return;
    case GateKind::Hadamard: {
      const double s = 1.0 / std::sqrt(2.0);
      apply_two_by_two(amp, gate.targets[0], 0, s, s, s, -s);
      return;
    }
    case GateKind::RotY: {
      const double c = std::cos(gate.param / 2);
      const double s = std::sin(gate.param / 2);
      apply_two_by_two(amp, gate.targets[0], 0, c, -s, s, c);
      return;
    }
    case GateKind::RotZ: {
      const cdouble f0 = std::polar(1.0, -gate.param / 2);
      const cdouble f1 = std::polar(1.0, gate.param / 2);
      const std::size_t b = qubit_bit(gate.targets[0]);
      for (std::size_t i = 0; i < dim; ++i) amp[i] *= (i & b) ? f1 : f0;
      return;
    }
    case GateKind::PhaseShift: {
      const cdouble f = std::polar(1.0, pi * gate.param);
      const std::size_t b = qubit_bit(gate.targets[0]);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & b) amp[i] *= f;
      }
      return;
    }
    case GateKind::ControlledNot:
      apply_bit_flip(amp, gate.targets[0], qubit_bit(gate.controls[0]));
      return;
    case GateKind::ControlledSwap: {
      const std::size_t cbit = qubit_bit(gate.controls[0]);
      const std::size_t abit = qubit_bit(gate.targets[0]);
      const std::size_t bbit = qubit_bit(gate.targets[1]);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cbit) && (i & abit) && !(i & bbit)) {
          std::swap(amp[i], amp[i ^ abit ^ bbit]);
        }
      }
      return;
    }
    case GateKind::ControlledRotY: {
      const double c = std::cos(gate.param / 2);
      const double s = std::sin(gate.param / 2);
      apply_two_by_two(amp, gate.targets[0], qubit_bit(gate.controls[0]), c,
                       -s, s, c);
      return;
    }
    case GateKind::MultiControlledPhase: {
      const std::size_t mask =
          control_mask(gate.controls) | qubit_bit(gate.targets[0]);
      const cdouble f = std::polar(1.0, pi * gate.param);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & mask) == mask) amp[i] *= f;
      }
      return;
    }
    case GateKind::MultiToffoli:
      apply_bit_flip(amp, gate.targets[0], control_mask(gate.controls));
      return;
    case GateKind::Increment:
      apply_register_permutation(amp, gate.targets, 0,
                                 [](std::size_t v) { return v + 1; });
      return;
    case GateKind::Decrement:
      apply_register_permutation(amp, gate.targets, 0,
                                 [](std::size_t v) { return v - 1; });
      return;
    case GateKind::CyclicShift: {
      const int m = int(gate.targets.size());
      const int step = gate.param > 0 ? 1 : m - 1;
      const std::size_t cmask = control_mask(gate.controls);
      // Move the bit on wire targets[k] to wire targets[(k + step) mod m].
      const std::vector<int>& reg = gate.targets;
      Amps out(dim);
      const std::size_t reg_mask = control_mask(reg);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cmask) != cmask) {
          out[i] = amp[i];
          continue;
        }
        std::size_t j = i & ~reg_mask;
        for (int k = 0; k < m; ++k) {
          if ((i >> reg[k]) & 1u) j |= qubit_bit(reg[(k + step) % m]);
        }
        out[j] = amp[i];
      }
      amp.swap(out);
      return;
    }
    case GateKind::UnaryToDicke:
      apply_unary_to_dicke(amp, gate.targets);
      return;
  }
  throw InputError("unknown gate kind");
}

FullState apply(const FullState& state, const Gate& gate) {
  FullState out = state;
  apply_in_place(out, gate);
  return out;
}

FullState run(const Circuit& circuit, const FullState& initial) {
  if (circuit.num_qubits != initial.num_qubits) {
    throw InputError("circuit width does not match state width");
  }
  FullState state = initial;
  for (const Gate& gate : circuit.gates) apply_in_place(state, gate);
  return state;
}

FullState run(const Circuit& circuit) {
  return run(circuit, FullState::zero(circuit.num_qubits));
}

Circuit grover_mixer_circuit(const Circuit& prep, double beta) {
  const int n = prep.num_qubits;
  if (n < 1) throw InputError("preparation circuit must have qubits");
  Circuit mixer = prep.inverse();
  for (int q = 0; q < n; ++q) mixer.append(Gate::x(q));
  const double t = -beta / pi;
  if (n == 1) {
    mixer.append(Gate::phase(0, t));
  } else {
    std::vector<int> controls(n - 1);
    for (int q = 0; q < n - 1; ++q) controls[q] = q;
    mixer.append(Gate::mcphase(std::move(controls), n - 1, t));
  }
  for (int q = 0; q < n; ++q) mixer.append(Gate::x(q));
  for (const Gate& gate : prep.gates) mixer.append(gate);
  return mixer;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
  if (circuit.num_qubits > limits::max_unitary_qubits) {
    throw CapExceeded("dense unitary capped at " +
                      std::to_string(limits::max_unitary_qubits) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << circuit.num_qubits;
  Eigen::MatrixXcd u(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    FullState state = FullState::zero(circuit.num_qubits);
    state.amp[0] = cdouble(0.0, 0.0);
    state.amp[j] = cdouble(1.0, 0.0);
    state = run(circuit, state);
    for (std::size_t i = 0; i < dim; ++i) u(i, j) = state.amp[i];
  }
  return u;
}

Circuit decompose_mcz(double t, int num_controls) {
  if (num_controls < 1) throw InputError("need at least one control");
  const int m = num_controls;
  const int target = m;
  Circuit circuit(m + 1);

  // Half phases on the target, gated on alternating halves of the controls:
  // together they imprint e^{+-i pi t/2} on the target's value exactly when
  // every control is 1, and cancel otherwise.
  std::vector<int> even_half;
  std::vector<int> odd_half;
  for (int q = 0; q < m; ++q) (q % 2 == 0 ? even_half : odd_half).push_back(q);
  for (int rep = 0; rep < 2; ++rep) {
    circuit.append(Gate::mtoffoli(even_half, target));
    circuit.append(Gate::phase(target, -t / 4));
    circuit.append(Gate::mtoffoli(odd_half, target));
    circuit.append(Gate::phase(target, t / 4));
  }

  // Residual half phase on the controls alone. The increment/decrement pair
  // telescopes bit-weighted phases so that everything cancels unless the
  // control register holds 2^m - 1 (wrapping to 0 under the increment).
  const double s = t / 2;
  if (m == 1) {
    circuit.append(Gate::phase(0, s));
    return circuit;
  }
  std::vector<int> reg(m);
  for (int q = 0; q < m; ++q) reg[q] = q;
  circuit.append(Gate::increment(reg));
  for (int k = 1; k < m; ++k) {
    circuit.append(Gate::phase(k, -s * std::ldexp(1.0, k - m)));
  }
  circuit.append(Gate::decrement(reg));
  circuit.append(Gate::phase(0, s * std::ldexp(1.0, 1 - m)));
  for (int k = 1; k < m; ++k) {
    circuit.append(Gate::phase(k, s * std::ldexp(1.0, k - m)));
  }
  return circuit;
}

FullState embed(const SubspaceState& state) {
  if (state.set == nullptr || state.amp.size() != state.set->size()) {
    throw InputError("state does not match its feasible set");
  }
  FullState full = FullState::zero(state.set->num_qubits);
  full.amp[0] = cdouble(0.0, 0.0);
  for (std::size_t i = 0; i < state.amp.size(); ++i) {
    full.amp[std::size_t(state.set->members[i])] = state.amp[i];
  }
  return full;
}

SubspaceState extract(const FullState& state, const FeasibleSet& set) {
  if (state.num_qubits != set.num_qubits) {
    throw InputError("state width does not match the feasible set");
  }
  SubspaceState sub;
  sub.set = &set;
  sub.amp.reserve(set.size());
  for (const Bitstring member : set.members) {
    sub.amp.push_back(state.amp[std::size_t(member)]);
  }
  return sub;
}

void apply_diagonal_phase(FullState& state, const std::vector<double>& energy,
                          double gamma) {
  if (energy.size() != state.amp.size()) {
    throw InputError("energy table size does not match the statevector");
  }
  for (std::size_t i = 0; i < state.amp.size(); ++i) {
    state.amp[i] *= std::polar(1.0, -gamma * energy[i]);
  }
}

}  // namespace gmqaoa
