#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gmqaoa/circuit.hpp"
#include "gmqaoa/subspace.hpp"

namespace gmqaoa {

// Dense statevector over all 2^n basis states, qubit 0 = least significant
// bit of the basis index.
struct FullState {
  int num_qubits = 0;
  std::vector<cdouble> amp;

  // |0...0>; throws CapExceeded when 2^n exceeds the amplitude cap.
  static FullState zero(int num_qubits);

  std::size_t dim() const noexcept { return amp.size(); }
  double norm() const;
};

// Applies a single gate. The in-place form mutates `state`; `apply` is the
// pure wrapper.
void apply_in_place(FullState& state, const Gate& gate);
FullState apply(const FullState& state, const Gate& gate);

// Runs a whole circuit from an initial state (defaults to |0...0>).
FullState run(const Circuit& circuit, const FullState& initial);
FullState run(const Circuit& circuit);

// Grover mixer built from a state-preparation circuit P with P|0> = |F>:
//   P (Id - (1 - e^{-i beta}) |0><0|) P^-1
// realised as P^-1, X on every qubit, MultiControlledPhase(t = -beta/pi)
// with qubits 0..n-2 as controls and qubit n-1 as target, X on every qubit,
// P. For n = 1 the phase gate acts on qubit 0 with no controls.
Circuit grover_mixer_circuit(const Circuit& prep, double beta);

// Dense unitary of a circuit, column j = circuit applied to basis state |j>.
// Capped at max_unitary_qubits.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

// Circuit on num_controls + 1 qubits (controls 0..num_controls-1, target =
// qubit num_controls) whose unitary is the diagonal multi-controlled phase
// diag(1, ..., 1, e^{i pi t}), built only from MultiToffoli, Increment,
// Decrement, and single-qubit PhaseShift gates: two alternating
// multi-Toffoli/phase blocks split the control set in half and imprint
// +-t/4 phases on the target, then an increment/decrement ladder with
// phases t/2 * 2^k / 2^m on the controls supplies the residual half phase.
// Exactly the identity when t == 0.
Circuit decompose_mcz(double t, int num_controls);

// Embeds a subspace state into the full register / projects a full state
// back onto the feasible members (amplitudes off the set are dropped;
// `embed` requires set.num_qubits == state dimension's qubit count).
FullState embed(const SubspaceState& state);
SubspaceState extract(const FullState& state, const FeasibleSet& set);

// Weight of e^{-i gamma H} per basis state for a diagonal H given as an
// energy table over all 2^n basis states; used by full-circuit pipelines.
void apply_diagonal_phase(FullState& state,
                          const std::vector<double>& energy,
                          double gamma);

}  // namespace gmqaoa
